"""Precomputed minimax partitions for segment counts 2..11.

Generated by scripts/regen_embedded.py from solve_minimax at tolerance
1e-10; regenerate after any solver change.  Keys are region counts.
"""

from __future__ import annotations

import math

from .partition import Partition

inf = math.inf

_ROWS: dict[int, tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...], float]] = {
    1: ((inf,),
        (1,),
        (0,),
        0.3989422804014327),
    2: ((0, inf),
        (0.5, 0.5),
        (-0.79788456080286541, 0.79788456080286541),
        0.12065604967149612),
    3: ((-0.5597253704307581, 0.5597253704307581, inf),
        (0.28783338730844443, 0.42433322538311113, 0.28783338730844443),
        (-1.1850544278232353, 0, 1.1850544278232353),
        0.057844050296200378),
    4: ((-0.88694161421104811, 0, 0.88694161421104811, inf),
        (0.18755516775165432, 0.31244483224834568, 0.31244483224834574, 0.18755516775165426),
        (-1.4353532729086862, -0.41522324304291619, 0.41522324304291608, 1.4353532729086866),
        0.033905164963283607),
    5: ((-1.1150661227092515, -0.3389503999848561, 0.3389503999848561, 1.1150661227092515, inf),
        (0.13241104373508999, 0.23491250409416947, 0.26535290434148107, 0.23491250409416942, 0.13241104373509005),
        (-1.61804635023726, -0.69142400686502981, 0, 0.69142400686503003, 1.6180463502372593),
        0.022270929511275961),
    6: ((-1.2885519651692954, -0.57983363743264482, 0, 0.57983363743264482, 1.2885519651692954, inf),
        (0.09877694599487441, 0.18223645973090219, 0.2189865942742234, 0.2189865942742234, 0.18223645973090219, 0.09877694599487441),
        (-1.7608020666232878, -0.89601073744784809, -0.28188851144125188, 0.28188851144125188, 0.89601073744784809, 1.7608020666232878),
        0.015746074635672389),
    7: ((-1.427631916450586, -0.76518484678486165, -0.24422292933296197, 0.24422292933296197, 0.76518484678486165, 1.427631916450586, inf),
        (0.076698916028327416, 0.14538182479492123, 0.18144834397643939, 0.19294183040062401, 0.18144834397643939, 0.14538182479492112, 0.076698916028327457),
        (-1.8773528492508726, -1.057230445078891, -0.49340483902176502, 0, 0.49340483902176502, 1.0572304450788919, 1.8773528492508718),
        0.011721769577012806),
    8: ((-1.5431717609207256, -0.914924471675304, -0.43393898111360563, 0, 0.43393898111360563, 0.914924471675304, 1.5431717609207256, inf),
        (0.061394553507340591, 0.11872108749784958, 0.15205073489625726, 0.16783362409855257, 0.16783362409855251, 0.15205073489625731, 0.1187210874978496, 0.061394553507340577),
        (-1.9754694726964315, -1.1895340793446383, -0.66155165279192329, -0.21358663888715126, 0.21358663888715132, 0.66155165279192296, 1.1895340793446383, 1.9754694726964319),
        0.0090652879027954825),
    9: ((-1.6416564064652848, -1.0399781069056513, -0.58825988231196824, -0.191119920705206, 0.191119920705206, 0.58825988231196824, 1.0399781069056513, 1.6416564064652848, inf),
        (0.050330615404304536, 0.098844420684816442, 0.12900389832341641, 0.14603688600563791, 0.15156835916364941, 0.14603688600563791, 0.12900389832341641, 0.09884442068481647, 0.050330615404304502),
        (-2.0599574334914736, -1.3012709028059475, -0.80040005604662767, -0.38459696178115521, 0, 0.38459696178115521, 0.80040005604662767, 1.301270902805947, 2.0599574334914754),
        0.007219916411227989),
    10: ((-1.7272533769965044, -1.1469713367299366, -0.71780073617025808, -0.3474617488867266, 0, 0.3474617488867266, 0.71780073617025808, 1.1469713367299366, 1.7272533769965044, inf),
        (0.042061084207633985, 0.083635649530842571, 0.11074334596059304, 0.12768214552991869, 0.13587777477101171, 0.13587777477101171, 0.12768214552991874, 0.11074334596059299, 0.083635649530842571, 0.042061084207633992),
        (-2.1339861954982631, -1.397682297266897, -0.91819994643114622, -0.52657534627274838, -0.17199013069261379, 0.17199013069261379, 0.52657534627274816, 0.91819994643114666, 1.397682297266897, 2.1339861954982626),
        0.005885974956458373),
}


def precomputed_partition(n_regions: int) -> Partition | None:
    """Embedded solve_minimax result, or None when not tabulated."""
    row = _ROWS.get(n_regions)
    if row is None:
        return None
    upper_limits, masses, cond_means, max_error = row
    return Partition(upper_limits=upper_limits, masses=masses,
                     cond_means=cond_means, max_error=max_error)
