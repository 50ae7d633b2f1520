#!/usr/bin/env python3
"""Regenerate src/losslin/tables.py from a fresh solver run.

The CLI ships precomputed partitions for the common segment counts so the
default path never waits on a solve; this script re-derives them from
solve_minimax and rewrites the module, keeping the constants honest.
Run from the repository root:

    python scripts/regen_embedded.py
"""

import math
from pathlib import Path

from losslin.partition import solve_minimax

HEADER = '''"""Precomputed minimax partitions for segment counts 2..11.

Generated by scripts/regen_embedded.py from solve_minimax at tolerance
1e-10; regenerate after any solver change.  Keys are region counts.
"""

from __future__ import annotations

import math

from .partition import Partition

inf = math.inf

_ROWS: dict[int, tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...], float]] = {
'''

FOOTER = '''}


def precomputed_partition(n_regions: int) -> Partition | None:
    """Embedded solve_minimax result, or None when not tabulated."""
    row = _ROWS.get(n_regions)
    if row is None:
        return None
    upper_limits, masses, cond_means, max_error = row
    return Partition(upper_limits=upper_limits, masses=masses,
                     cond_means=cond_means, max_error=max_error)
'''


def _tup(values) -> str:
    parts = ["inf" if v == math.inf else format(v, ".17g") for v in values]
    return "(" + ", ".join(parts) + ("," if len(parts) == 1 else "") + ")"


def main() -> None:
    out = [HEADER]
    for n in range(1, 11):
        p = solve_minimax(n)
        out.append(
            f"    {n}: ({_tup(p.upper_limits)},\n"
            f"        {_tup(p.masses)},\n"
            f"        {_tup(p.cond_means)},\n"
            f"        {format(p.max_error, '.17g')}),\n"
        )
    out.append(FOOTER)
    target = Path(__file__).resolve().parents[1] / "src" / "losslin" / "tables.py"
    target.write_text("".join(out))
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
