"""Minimax support partitions of the standard normal.

A partition splits the real line into N adjacent regions.  Replacing the
standard normal by its conditional mean within each region turns the
complementary loss function into a piecewise-linear under-estimator whose
worst error sits at the region conditional means.  The partition is
minimax-optimal exactly when those breakpoint errors are all equal, which
yields a small nonlinear system in the interior region boundaries.  This
module assembles and solves that system.

Region bookkeeping for boundaries a_i < b_i (a_1 = -inf, b_N = +inf):

    mass        p_i = Phi(b_i) - Phi(a_i)
    cond. mean  m_i = (phi(a_i) - phi(b_i)) / p_i
    error       e_i = closs_std(m_i) - (Phi(b_i) * m_i + phi(b_i))

The solver exploits the symmetry of the optimum: only the strictly
negative interior boundaries are unknowns, the rest are mirrored (with an
exact zero in the middle when the interior count is odd).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gaussian
from .errors import InvalidParameterError, SolverError
from .loss_core import closs_std

__all__ = [
    "Partition",
    "BreakpointErrors",
    "breakpoint_error",
    "breakpoint_errors",
    "solve_minimax",
    "parameter_table",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-10

_MAX_ITER = 200
_FD_STEP = 1e-7
_MAX_HALVINGS = 60


def _phi_ext(x: np.ndarray) -> np.ndarray:
    """phi extended by its limits at +-infinity."""
    out = np.zeros_like(x)
    finite = np.isfinite(x)
    out[finite] = gaussian.phi(x[finite])
    return out


def _region_stats(upper: np.ndarray):
    """masses, conditional means and breakpoint errors for boundaries b_1..b_N.

    Tolerant of malformed boundaries (returns NaN entries) so the solver
    line search can reject bad steps instead of crashing.
    """
    lower = np.concatenate(([-np.inf], upper[:-1]))
    big_phi_hi = gaussian._cdf_unchecked(upper)
    big_phi_lo = gaussian._cdf_unchecked(lower)
    small_phi_hi = _phi_ext(upper)
    small_phi_lo = _phi_ext(lower)
    p = big_phi_hi - big_phi_lo
    with np.errstate(divide="ignore", invalid="ignore"):
        m = (small_phi_lo - small_phi_hi) / p
    bad = ~(p > 0.0)
    if np.any(bad):
        m = np.where(bad, np.nan, m)
    e = np.where(np.isfinite(m),
                 closs_std(np.nan_to_num(m)) - (big_phi_hi * m + small_phi_hi),
                 np.nan)
    return p, m, e


@dataclass(frozen=True)
class Partition:
    """N adjacent regions of the standard normal support.

    upper_limits are b_1 < ... < b_N with b_N = +inf; masses and
    cond_means follow the formulas in the module docstring; max_error is
    the largest breakpoint error.  Construction validates internal
    consistency, so instances can be trusted downstream.
    """

    upper_limits: tuple[float, ...]
    masses: tuple[float, ...]
    cond_means: tuple[float, ...]
    max_error: float

    def __post_init__(self):
        n = len(self.upper_limits)
        if n < 1:
            raise InvalidParameterError("a partition needs at least one region")
        if len(self.masses) != n or len(self.cond_means) != n:
            raise InvalidParameterError("field lengths disagree")
        b = np.asarray(self.upper_limits, dtype=float)
        if not math.isinf(b[-1]) or b[-1] < 0:
            raise InvalidParameterError("the last upper limit must be +inf")
        if n > 1 and (not np.all(np.isfinite(b[:-1])) or np.any(np.diff(b) <= 0)):
            raise InvalidParameterError("upper limits must be finite and strictly increasing")

        p, m, e = _region_stats(b)
        if np.any(~(p > 0.0)):
            raise InvalidParameterError("every region must carry positive mass")
        if abs(p.sum() - 1.0) > 1e-12:
            raise InvalidParameterError("region masses must sum to one")
        if np.max(np.abs(np.asarray(self.masses) - p)) > 1e-12:
            raise InvalidParameterError("stored masses disagree with the boundaries")
        if np.max(np.abs(np.asarray(self.cond_means) - m)) > 1e-10:
            raise InvalidParameterError("stored conditional means disagree with the boundaries")
        if np.any(np.diff(m) <= 0):
            raise InvalidParameterError("conditional means must be strictly increasing")
        lower = np.concatenate(([-np.inf], b[:-1]))
        if np.any(m <= lower) or np.any(m >= b):
            raise InvalidParameterError("each conditional mean must lie inside its region")
        if abs(float(np.dot(p, m))) > 1e-10:
            raise InvalidParameterError("the discretisation must preserve the zero mean")
        if not (self.max_error >= 0.0) or abs(self.max_error - float(np.max(e))) > 1e-9:
            raise InvalidParameterError("max_error disagrees with the breakpoint errors")

    @property
    def n_regions(self) -> int:
        return len(self.upper_limits)

    @property
    def lower_limits(self) -> tuple[float, ...]:
        return (-math.inf,) + self.upper_limits[:-1]

    @classmethod
    def from_boundaries(cls, interior) -> "Partition":
        """Build a partition from its finite interior boundaries (may be empty)."""
        interior = tuple(float(v) for v in interior)
        b = np.array(interior + (np.inf,))
        p, m, e = _region_stats(b)
        if np.any(~np.isfinite(e)):
            raise InvalidParameterError("boundaries produce an empty or degenerate region")
        return cls(
            upper_limits=tuple(b.tolist()),
            masses=tuple(p.tolist()),
            cond_means=tuple(m.tolist()),
            max_error=float(np.max(e)),
        )


@dataclass(frozen=True)
class BreakpointErrors:
    """Per-breakpoint approximation errors of a partition's lower bound."""

    values: tuple[float, ...]

    @property
    def spread(self) -> float:
        return max(self.values) - min(self.values)

    @property
    def max_value(self) -> float:
        return max(self.values)


def breakpoint_errors(partition: Partition) -> BreakpointErrors:
    """Errors at all N breakpoints (the region conditional means)."""
    _, _, e = _region_stats(np.asarray(partition.upper_limits, dtype=float))
    return BreakpointErrors(values=tuple(e.tolist()))


def breakpoint_error(i: int, partition: Partition) -> float:
    """Error at breakpoint i (1-indexed): closs_std(m_i) - (Phi(b_i) m_i + phi(b_i))."""
    if not 1 <= i <= partition.n_regions:
        raise IndexError(f"breakpoint index {i} out of range 1..{partition.n_regions}")
    return breakpoint_errors(partition).values[i - 1]


# ---------------------------------------------------------------------------
# Equal-error solve
# ---------------------------------------------------------------------------

def _expand_symmetric(neg: np.ndarray, n_regions: int) -> np.ndarray:
    """Full interior boundary vector from the strictly negative unknowns."""
    k = n_regions - 1
    parts = [neg]
    if k % 2 == 1:
        parts.append(np.zeros(1))
    parts.append(-neg[::-1])
    return np.concatenate(parts)


def _distinct_residuals(neg: np.ndarray, n_regions: int) -> np.ndarray:
    """e_1 - e_k over the first ceil(N/2) (symmetry-distinct) breakpoints."""
    interior = _expand_symmetric(neg, n_regions)
    upper = np.concatenate((interior, [np.inf]))
    _, _, e = _region_stats(upper)
    half = (n_regions + 1) // 2
    return e[0] - e[1:half]


def solve_minimax(n_regions: int, tol: float = DEFAULT_TOL) -> Partition:
    """Solve the equal-error system for an N-region minimax partition.

    Unknowns are the strictly negative interior boundaries; the zero
    middle boundary (when the interior count is odd) and the positive
    half are generated by symmetry, which enforces the symmetric-optimum
    property exactly.  A finite-difference Gauss-Newton iteration with
    step halving drives the residuals e_1 - e_k below tol (measured over
    all breakpoints).  N = 1 and N = 2 are returned analytically.
    """
    if not isinstance(n_regions, int) or n_regions < 1:
        raise InvalidParameterError(f"n_regions must be a positive integer, got {n_regions!r}")
    if not (tol > 0.0):
        raise InvalidParameterError("tol must be positive")

    if n_regions == 1:
        return Partition.from_boundaries(())
    if n_regions == 2:
        return Partition.from_boundaries((0.0,))

    n_free = (n_regions - 1) // 2
    # equal-probability quantiles start inside the basin of attraction
    neg = gaussian.inv_cdf(np.arange(1, n_free + 1) / n_regions)
    neg = np.atleast_1d(np.asarray(neg, dtype=float))

    r = _distinct_residuals(neg, n_regions)
    norm2 = float(r @ r)
    best_neg, best_norm2 = neg.copy(), norm2

    for _ in range(_MAX_ITER):
        if _full_residual_norm(neg, n_regions) <= tol:
            return _finalize(neg, n_regions)

        jac = np.empty((r.size, neg.size))
        for j in range(neg.size):
            bumped = neg.copy()
            bumped[j] += _FD_STEP
            jac[:, j] = (_distinct_residuals(bumped, n_regions) - r) / _FD_STEP

        delta, *_ = np.linalg.lstsq(jac, -r, rcond=None)

        step = 1.0
        for _ in range(_MAX_HALVINGS):
            trial = neg + step * delta
            r_trial = _distinct_residuals(trial, n_regions)
            trial_norm2 = float(r_trial @ r_trial)
            if math.isfinite(trial_norm2) and trial_norm2 < norm2:
                neg, r, norm2 = trial, r_trial, trial_norm2
                break
            step *= 0.5
        else:
            raise SolverError(
                f"line search stalled for {n_regions} regions",
                best=_expand_symmetric(best_neg, n_regions),
                residual=math.sqrt(best_norm2),
            )
        if norm2 < best_norm2:
            best_neg, best_norm2 = neg.copy(), norm2

    if _full_residual_norm(neg, n_regions) <= tol:
        return _finalize(neg, n_regions)
    raise SolverError(
        f"no convergence within {_MAX_ITER} iterations for {n_regions} regions",
        best=_expand_symmetric(best_neg, n_regions),
        residual=_full_residual_norm(best_neg, n_regions),
    )


def _full_residual_norm(neg: np.ndarray, n_regions: int) -> float:
    interior = _expand_symmetric(neg, n_regions)
    _, _, e = _region_stats(np.concatenate((interior, [np.inf])))
    return float(np.linalg.norm(e[0] - e[1:]))


def _finalize(neg: np.ndarray, n_regions: int) -> Partition:
    interior = _expand_symmetric(neg, n_regions)
    if np.any(np.diff(interior) <= 0):
        raise SolverError(
            f"solution for {n_regions} regions lost boundary ordering",
            best=interior,
            residual=_full_residual_norm(neg, n_regions),
        )
    return Partition.from_boundaries(interior)


def parameter_table(max_segments: int, tol: float = DEFAULT_TOL) -> list[Partition]:
    """Minimax partitions for every segment count 2..max_segments.

    Segment count refers to the piecewise-linear lower bound, which has
    one segment more than the partition has regions.
    """
    if not isinstance(max_segments, int) or max_segments < 2:
        raise InvalidParameterError("max_segments must be an integer >= 2")
    rows = []
    for segments in range(2, max_segments + 1):
        try:
            rows.append(solve_minimax(segments - 1, tol=tol))
        except SolverError as exc:
            raise SolverError(
                f"segment count {segments}: {exc}",
                best=exc.best,
                residual=exc.residual,
            ) from exc
    return rows
