"""Reference optimal partition parameters, six significant figures.

Regression fixtures for the equal-error solver, keyed by segment count of
the piecewise-linear lower bound (regions + 1).  The values can be
regenerated independently by high-precision root finding on the
equal-error conditions; test_partition.py spot-checks that route with
mpmath.
"""

INF = float("inf")

REFERENCE = {
    2: {
        "error": 0.398942,
        "b": [INF],
        "p": [1.0],
        "m": [0.0],
    },
    3: {
        "error": 0.120656,
        "b": [0.0, INF],
        "p": [0.5, 0.5],
        "m": [-0.797885, 0.797885],
    },
    4: {
        "error": 0.0578441,
        "b": [-0.559725, 0.559725, INF],
        "p": [0.287833, 0.424333, 0.287833],
        "m": [-1.18505, 0.0, 1.18505],
    },
    5: {
        "error": 0.0339052,
        "b": [-0.886942, 0.0, 0.886942, INF],
        "p": [0.187555, 0.312445, 0.312445, 0.187555],
        "m": [-1.43535, -0.415223, 0.415223, 1.43535],
    },
    6: {
        "error": 0.0222709,
        "b": [-1.11507, -0.33895, 0.33895, 1.11507, INF],
        "p": [0.132411, 0.234913, 0.265353, 0.234913, 0.132411],
        "m": [-1.61805, -0.691424, 0.0, 0.691424, 1.61805],
    },
    7: {
        "error": 0.0157461,
        "b": [-1.28855, -0.579834, 0.0, 0.579834, 1.28855, INF],
        "p": [0.0987769, 0.182236, 0.218987, 0.218987, 0.182236, 0.0987769],
        "m": [-1.7608, -0.896011, -0.281889, 0.281889, 0.896011, 1.7608],
    },
    8: {
        "error": 0.0117218,
        "b": [-1.42763, -0.765185, -0.244223, 0.244223, 0.765185, 1.42763, INF],
        "p": [0.0766989, 0.145382, 0.181448, 0.192942, 0.181448, 0.145382,
              0.0766989],
        "m": [-1.87735, -1.05723, -0.493405, 0.0, 0.493405, 1.05723, 1.87735],
    },
    9: {
        "error": 0.00906529,
        "b": [-1.54317, -0.914924, -0.433939, 0.0, 0.433939, 0.914924, 1.54317,
              INF],
        "p": [0.0613946, 0.118721, 0.152051, 0.167834, 0.167834, 0.152051,
              0.118721, 0.0613946],
        "m": [-1.97547, -1.18953, -0.661552, -0.213587, 0.213587, 0.661552,
              1.18953, 1.97547],
    },
    10: {
        "error": 0.00721992,
        "b": [-1.64166, -1.03998, -0.58826, -0.19112, 0.19112, 0.58826,
              1.03998, 1.64166, INF],
        "p": [0.0503306, 0.0988444, 0.129004, 0.146037, 0.151568, 0.146037,
              0.129004, 0.0988444, 0.0503306],
        "m": [-2.05996, -1.30127, -0.8004, -0.384597, 0.0, 0.384597, 0.8004,
              1.30127, 2.05996],
    },
    11: {
        "error": 0.00588597,
        "b": [-1.72725, -1.14697, -0.717801, -0.347462, 0.0, 0.347462,
              0.717801, 1.14697, 1.72725, INF],
        "p": [0.0420611, 0.0836356, 0.110743, 0.127682, 0.135878, 0.135878,
              0.127682, 0.110743, 0.0836356, 0.0420611],
        "m": [-2.13399, -1.39768, -0.9182, -0.526575, -0.17199, 0.17199,
              0.526575, 0.9182, 1.39768, 2.13399],
    },
}
