"""Extremal solutions of max-min / min-max relational inequality systems.

`minimal_solutions` enumerates the complete antichain of minimal vectors x
with  threshold <= A (max-min) x  and  x <= bound.  The construction is the
standard covering argument: row i with a positive threshold t_i is satisfied
iff some column j with a_ij >= t_i carries x_j >= t_i, so every minimal
solution assigns to each such row one covering column and takes, per column,
the largest threshold assigned to it (0 elsewhere).  Enumerating one
candidate per element of the cartesian product of the per-row column sets,
then pruning dominated candidates, yields exactly the minimal antichain.

`maximal_solutions` handles the order-dual system  G (min-max) x <= threshold,
x >= bound  through complementation.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import DimensionMismatch, EnumerationBudgetExceeded
from .lattice import DEFAULT_CAP, DEFAULT_EPS, complement, leq, unit_matrix, unit_vector


def minimal_solutions(
    matrix,
    threshold,
    bound=None,
    *,
    eps: float = DEFAULT_EPS,
    cap: int = DEFAULT_CAP,
) -> tuple[np.ndarray, ...]:
    """All minimal x with threshold <= maxmin_prod(matrix, x) and x <= bound.

    Returns a lexicographically sorted antichain (empty when no solution
    fits under the bound).  Raises EnumerationBudgetExceeded if the covering
    product would exceed `cap` candidates; never returns partial results.
    """
    A = unit_matrix(matrix)
    t = unit_vector(threshold)
    n, m = A.shape
    if t.shape[0] != n:
        raise _dim_error(A, t)
    if bound is None:
        ub = np.ones(m)
    else:
        ub = unit_vector(bound)
        if ub.shape[0] != m:
            raise _dim_error(A, ub, cols=True)

    # Per constrained row, the columns able to carry its threshold.
    rows = [i for i in range(n) if t[i] > eps]
    if not rows:
        return (np.zeros(m),)
    column_choices = []
    for i in rows:
        cols = [j for j in range(m) if A[i, j] >= t[i] - eps and ub[j] >= t[i] - eps]
        if not cols:
            return ()
        column_choices.append(cols)

    size = math.prod(len(c) for c in column_choices)
    if size > cap:
        raise EnumerationBudgetExceeded(
            f"covering enumeration needs {size} candidates (cap {cap})"
        )

    candidates = set()
    for assignment in itertools.product(*column_choices):
        x = np.zeros(m)
        for i, j in zip(rows, assignment):
            if t[i] > x[j]:
                x[j] = t[i]
        candidates.add(tuple(x))

    vectors = []
    for c in candidates:
        v = np.array(c)
        if leq(v, ub, eps):
            vectors.append(v)
    return tuple(sorted(_minimal_antichain(vectors, eps), key=tuple))


def maximal_solutions(
    matrix,
    threshold,
    bound=None,
    *,
    eps: float = DEFAULT_EPS,
    cap: int = DEFAULT_CAP,
) -> tuple[np.ndarray, ...]:
    """All maximal x with minmax_prod(matrix, x) <= threshold and x >= bound.

    Complement-image of `minimal_solutions` on the complemented system.
    """
    G = unit_matrix(matrix)
    lb = np.zeros(G.shape[1]) if bound is None else unit_vector(bound)
    mins = minimal_solutions(
        complement(G), complement(unit_vector(threshold)), complement(lb), eps=eps, cap=cap
    )
    return tuple(sorted((complement(v) for v in mins), key=tuple))


def _minimal_antichain(vectors: list[np.ndarray], eps: float) -> list[np.ndarray]:
    keep = []
    for v in vectors:
        dominated = False
        for w in vectors:
            if w is not v and leq(w, v, eps) and not leq(v, w, eps):
                dominated = True
                break
        if not dominated:
            keep.append(v)
    # Equal-within-eps duplicates survive the loop above; the exact-tuple
    # dedupe in the caller already removed exact copies.
    return keep


def _dim_error(A, v, cols=False):
    side = "columns" if cols else "rows"
    want = A.shape[1] if cols else A.shape[0]
    return DimensionMismatch(f"matrix has {want} {side} but vector has {v.shape[0]} entries")
