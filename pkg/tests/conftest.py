"""Shared desk-scale example systems used across the test modules."""

import numpy as np

# Consistent 3x3 max-min system: greatest solution [0.7, 0.4, 0.4].
A_CONS = np.array([[0.06, 0.87, 0.95], [0.75, 0.13, 0.88], [0.82, 0.06, 0.19]])
B_CONS = np.array([0.4, 0.7, 0.7])

# Inconsistent right-hand side for the same matrix.
B_OFF = np.array([0.36, 0.57, 0.24])

# Inconsistent 3x3 system at Chebyshev distance 0.16.
A_GAP = np.array([[0.03, 0.38, 0.26], [0.98, 0.10, 0.03], [0.77, 0.15, 0.85]])
B_GAP = np.array([0.54, 0.13, 0.87])

# Scalar-output training data (3 pairs, 3 features): exactly learnable.
X_SCALAR = np.array([[0.7, 0.4, 0.4], [1.0, 0.2, 0.5], [0.2, 0.3, 0.8]])
Y_SCALAR = np.array([[0.7], [1.0], [0.3]])

# Two-pair training data with 3-dimensional outputs: least error 0.3.
X_PAIRS = np.array([[0.7, 0.4, 0.4], [1.0, 0.2, 0.5]])
Y_PAIRS = np.array([[0.7, 0.1, 0.3], [1.0, 0.7, 0.0]])

# Four-pair benchmark training data: exactly learnable (least error 0).
X_BENCH = np.array(
    [[0.3, 1.0, 0.5, 0.2], [0.1, 1.0, 1.0, 0.5], [0.5, 0.7, 0.2, 1.0], [1.0, 0.7, 0.5, 0.3]]
)
Y_BENCH = np.array([[0.7, 0.5, 0.6], [0.7, 1.0, 0.6], [0.7, 0.7, 0.6], [1.0, 0.5, 0.6]])

# 8x6 premise-degree matrix for a min-max rule system.
PREMISES = np.array(
    [
        [0.1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
        [0.1, 1, 1, 0.8, 1, 1],
        [1, 1, 1, 0.8, 1, 1],
        [0.1, 1, 1, 1, 1, 0.3],
        [1, 1, 1, 1, 1, 0.3],
        [0.1, 1, 1, 0.8, 1, 0.3],
        [1, 1, 1, 0.8, 1, 0.3],
    ],
    dtype=float,
)
TARGET_OK = np.array([0.3, 1, 0.3, 0.8, 0.3, 0.7, 0.3, 0.7])
TARGET_OFF = np.array([0.3, 1, 0.3, 0.8, 0.7, 0.7, 0.3, 0.7])

# Two 4x4 rule-instance blocks whose stack is inconsistent (distance 0.1).
GAMMA_1 = np.array([[0.4, 1, 1, 1], [1, 1, 1, 1], [0.4, 1, 1, 0.8], [1, 1, 1, 0.8]], dtype=float)
TARGET_1 = np.array([0.3, 1, 0.3, 0.8])
GAMMA_2 = np.array([[1, 1, 1, 1], [1, 0.7, 1, 1], [1, 1, 1, 0.1], [1, 0.7, 1, 0.1]], dtype=float)
TARGET_2 = np.array([1, 0.8, 0.3, 0.3])

TOL = 1e-9


def vecs_equal(got, expected, tol=TOL) -> bool:
    got = list(got)
    expected = [np.asarray(e, dtype=float) for e in expected]
    if len(got) != len(expected):
        return False
    return all(np.allclose(g, e, atol=tol, rtol=0.0) for g, e in zip(got, expected))
