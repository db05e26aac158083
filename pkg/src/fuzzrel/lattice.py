"""Unit-interval vectors/matrices and the four lattice matrix compositions.

Everything operates on dense float64 numpy arrays whose entries live in
[0, 1].  The four compositions only ever select among their input entries
(max/min never interpolate):

* max-min:    (A @ x)_i = max_j min(a_ij, x_j)
* min-max:    (G @ x)_i = min_j max(g_ij, x_j)
* min-Godel:  (M @ c)_i = min_j (m_ij -> c_j)   with x -> y = 1 if x <= y else y
* max-eps:    (M @ c)_i = max_j (m_ij eps c_j)  with x eps y = y if x < y else 0

The Godel implication is the residuum of min; the eps-product is its
complement dual, so `complement` switches max-min with min-max and
min-Godel with max-eps exactly.

Order comparisons are tolerant: x <= y is evaluated as x <= y + eps with a
default eps of 1e-9 (inputs are short decimals; arithmetic error stays
orders of magnitude below that).
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, DomainError

DEFAULT_EPS = 1e-9

#: Cap on cartesian-product sizes in covering enumerations.
DEFAULT_CAP = 10**6


def unit_vector(values) -> np.ndarray:
    """Validate and return a 1-D float64 array with entries in [0, 1].

    Entries within DEFAULT_EPS outside the interval are clamped (decimal
    parsing noise); anything farther out raises DomainError.  The returned
    array is read-only.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 1:
        raise DimensionMismatch(f"expected a non-empty vector, got shape {arr.shape}")
    return _validated(arr)


def unit_matrix(values) -> np.ndarray:
    """Validate and return a 2-D float64 array with entries in [0, 1]."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionMismatch(f"expected a non-empty matrix, got shape {arr.shape}")
    return _validated(arr)


def unit_scalar(value) -> float:
    """Validate a single number in [0, 1] (same clamping rule as vectors)."""
    arr = _validated(np.asarray([value], dtype=np.float64))
    return float(arr[0])


def _validated(arr: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(arr)):
        raise DomainError("entries must be finite")
    if arr.min() < -DEFAULT_EPS or arr.max() > 1.0 + DEFAULT_EPS:
        bad = arr.flat[int(np.argmax((arr < -DEFAULT_EPS) | (arr > 1 + DEFAULT_EPS)))]
        raise DomainError(f"entry {bad!r} outside [0, 1]")
    arr = np.clip(arr, 0.0, 1.0)
    arr.flags.writeable = False
    return arr


def _check_prod(M: np.ndarray, x: np.ndarray) -> None:
    if M.ndim != 2 or x.ndim != 1:
        raise DimensionMismatch(f"expected matrix and vector, got shapes {M.shape} and {x.shape}")
    if M.shape[1] != x.shape[0]:
        raise DimensionMismatch(f"matrix has {M.shape[1]} columns but vector has {x.shape[0]} entries")


def maxmin_prod(A: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Max-min composition: result_i = max_j min(a_ij, x_j)."""
    A = np.asarray(A, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    _check_prod(A, x)
    return np.minimum(A, x).max(axis=1)


def minmax_prod(G: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Min-max composition: result_i = min_j max(g_ij, x_j)."""
    G = np.asarray(G, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    _check_prod(G, x)
    return np.maximum(G, x).min(axis=1)


def godel_min_prod(M: np.ndarray, c: np.ndarray, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Min-Godel composition: result_i = min_j (m_ij -> c_j)."""
    M = np.asarray(M, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    _check_prod(M, c)
    return np.where(M <= c + eps, 1.0, np.broadcast_to(c, M.shape)).min(axis=1)


def eps_max_prod(M: np.ndarray, c: np.ndarray, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Max-eps composition: result_i = max_j (m_ij eps c_j).

    The strict branch (c_j must clear m_ij by more than eps) mirrors the
    tolerant Godel branch, keeping the complement duality with
    godel_min_prod exact up to float re-complementation noise.
    """
    M = np.asarray(M, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    _check_prod(M, c)
    return np.where(np.broadcast_to(c, M.shape) > M + eps, c, 0.0).max(axis=1)


def complement(a: np.ndarray) -> np.ndarray:
    """Entrywise 1 - a (involutive)."""
    return 1.0 - np.asarray(a, dtype=np.float64)


def linf_dist(a: np.ndarray, b: np.ndarray) -> float:
    """Chebyshev (L-infinity) distance: max componentwise |a_i - b_i|."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"length {a.shape} vs {b.shape}")
    return float(np.abs(a - b).max())


def leq(a: np.ndarray, b: np.ndarray, eps: float = DEFAULT_EPS) -> bool:
    """Componentwise a_i <= b_i + eps."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"length {a.shape} vs {b.shape}")
    return bool(np.all(a <= b + eps))


def veq(a: np.ndarray, b: np.ndarray, eps: float = DEFAULT_EPS) -> bool:
    """Componentwise |a_i - b_i| <= eps."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"length {a.shape} vs {b.shape}")
    return bool(np.all(np.abs(a - b) <= eps))


def pos(x):
    """Positive part max(x, 0), elementwise."""
    return np.maximum(x, 0.0)
