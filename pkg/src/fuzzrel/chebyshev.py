"""Chebyshev distance, extremal approximations and approximate solutions.

For a (possibly inconsistent) max-min system  A x = b, the Chebyshev
distance is the least L-infinity distance from b to a right-hand side whose
system is consistent.  It is computed here in closed form:

    per_row_i = min_j max( (b_i - a_ij)^+ , max_k godel_gap(b_i, a_kj, b_k) )
    distance  = max_i per_row_i

where godel_gap(x, y, z) = min((x - z)^+ / 2, (y - z)^+) is the least shift
delta making (x - delta)^+ <= (y -> min(z + delta, 1)) true under the Godel
implication.  Equivalently, the distance is the least delta at which the
shifted window closes: lower(delta) <= consistent_floor(A, upper(delta)).
That threshold form is what the brute-force oracle re-checks.

From the distance the extremal objects follow:

* greatest Chebyshev approximation: consistent_floor(A, upper(distance));
* greatest approximate solution: the potential greatest solution of the
  system whose right-hand side is that approximation;
* minimal Chebyshev approximations: images of the minimal solutions of
  lower(distance) <= A x  bounded by the greatest approximate solution,
  pruned to the minimal antichain.

Membership in the approximate-solution set has two equivalent
characterizations (window + upper bound, and the all-subsets cover
condition); both are exposed and cross-checked in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .consistency import Composition, SystemProblem, consistent_floor, potential_greatest, solve
from .errors import DimensionMismatch, SubsetCapExceeded
from .inequalities import minimal_solutions
from .lattice import (
    DEFAULT_CAP,
    DEFAULT_EPS,
    godel_min_prod,
    leq,
    maxmin_prod,
    pos,
    unit_matrix,
    unit_vector,
    veq,
)

#: Largest column count the 2^m subset characterization will enumerate.
DEFAULT_SUBSET_CAP = 16


def godel_gap(x: float, y: float, z: float) -> float:
    """min((x - z)^+ / 2, (y - z)^+): least shift opening the Godel window."""
    return min(max(x - z, 0.0) / 2.0, max(y - z, 0.0))


def cheb_distance(A, b) -> tuple[float, np.ndarray]:
    """Chebyshev distance of b for the max-min system, with per-row values.

    Zero exactly when the system is consistent.
    """
    A = unit_matrix(A)
    b = unit_vector(b)
    if A.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"matrix has {A.shape[0]} rows but vector has {b.shape[0]} entries")
    direct = pos(b[:, None] - A)                        # (n, m): (b_i - a_ij)^+
    half = pos(b[:, None] - b[None, :]) / 2.0           # (n, n): (b_i - b_k)^+ / 2
    over = pos(A - b[:, None])                          # (n, m): (a_kj - b_k)^+
    gaps = np.minimum(half[:, :, None], over[None, :, :]).max(axis=1)   # (n, m)
    per_row = np.maximum(direct, gaps).min(axis=1)
    return float(per_row.max()), per_row


@dataclass(frozen=True)
class ShiftedBounds:
    """The delta-window around a right-hand side: ((b_i - d)^+, min(b_i + d, 1))."""

    lower: np.ndarray
    upper: np.ndarray
    delta: float


def shifted_bounds(b, delta: float) -> ShiftedBounds:
    b = unit_vector(b)
    return ShiftedBounds(lower=pos(b - delta), upper=np.minimum(b + delta, 1.0), delta=float(delta))


def greatest_cheb_approx(A, b, delta: float, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Greatest consistent right-hand side at L-inf distance `delta` from b."""
    return consistent_floor(A, shifted_bounds(b, delta).upper, eps)


def greatest_approx_solution(A, b, delta: float, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Greatest vector whose image is a Chebyshev approximation of b."""
    return godel_min_prod(unit_matrix(A).T, greatest_cheb_approx(A, b, delta, eps), eps)


def minimal_cheb_approximations(
    A, b, delta: float, eps: float = DEFAULT_EPS, cap: int = DEFAULT_CAP
) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
    """(minimal Chebyshev approximations, the solutions producing them).

    The returned approximation antichain is non-empty, finite and
    lexicographically sorted; each element sits at distance exactly `delta`
    from b.  When delta is zero the system is consistent and b is its own
    unique minimal (and greatest) approximation.
    """
    A = unit_matrix(A)
    b = unit_vector(b)
    if delta <= eps:
        sols = solve(SystemProblem(A, b), eps, cap)
        return (b,), sols.extremal_opposite

    window = shifted_bounds(b, delta)
    top = greatest_approx_solution(A, b, delta, eps)
    vs = minimal_solutions(A, window.lower, top, eps=eps, cap=cap)
    images = [maxmin_prod(A, v) for v in vs]
    keep = []
    for idx, c in enumerate(images):
        dominated = any(
            k != idx and leq(images[k], c, eps) and not leq(c, images[k], eps)
            for k in range(len(images))
        )
        if not dominated:
            keep.append(idx)
    # Several minimal solutions may map to the same approximation.
    seen: dict[tuple, int] = {}
    chebs, sols = [], []
    for idx in keep:
        key = tuple(images[idx])
        if key not in seen:
            seen[key] = idx
            chebs.append(images[idx])
        sols.append(vs[idx])
    chebs = sorted(chebs, key=tuple)
    sols = sorted(sols, key=tuple)
    return tuple(chebs), tuple(sols)


@dataclass(frozen=True)
class ChebyshevReport:
    """Everything the distance pipeline produces for one max-min system.

    `minimal_chebs`/`minimal_approx` are None when minimal-set enumeration
    was skipped.
    """

    distance: float
    per_row: np.ndarray
    greatest_cheb: np.ndarray
    greatest_approx: np.ndarray
    minimal_chebs: tuple[np.ndarray, ...] | None
    minimal_approx: tuple[np.ndarray, ...] | None


def cheb_report(
    A,
    b,
    *,
    eps: float = DEFAULT_EPS,
    cap: int = DEFAULT_CAP,
    include_minimal: bool = True,
) -> ChebyshevReport:
    """Run the whole pipeline for the max-min system A x = b."""
    A = unit_matrix(A)
    b = unit_vector(b)
    delta, per_row = cheb_distance(A, b)
    gc = greatest_cheb_approx(A, b, delta, eps)
    ga = godel_min_prod(A.T, gc, eps)
    if include_minimal:
        chebs, sols = minimal_cheb_approximations(A, b, delta, eps, cap)
    else:
        chebs, sols = None, None
    return ChebyshevReport(
        distance=delta,
        per_row=per_row,
        greatest_cheb=gc,
        greatest_approx=ga,
        minimal_chebs=chebs,
        minimal_approx=sols,
    )


def is_approx_solution(A, b, report: ChebyshevReport, x, eps: float = DEFAULT_EPS) -> bool:
    """Window characterization: lower(distance) <= A x and x <= greatest_approx."""
    A = unit_matrix(A)
    x = unit_vector(x)
    lower = shifted_bounds(b, report.distance).lower
    return leq(lower, maxmin_prod(A, x), eps) and leq(x, report.greatest_approx, eps)


@dataclass(frozen=True)
class SubsetCharacterization:
    """Per-column deficiency rows and the level map of the subset test.

    Column j is deficient for row i when a_ij < b_i - distance - eps: such a
    column can never lift row i into the window.  For a column subset T,
    `required_level(T)` is the largest (b_i - distance)^+ over rows for
    which every column of T is deficient (0 when no row is); some column
    outside T must reach that level.
    """

    needs: np.ndarray                  # (b_i - distance)^+ per row
    deficient: tuple[int, ...]         # per column, bitmask of rows it cannot serve
    ncols: int

    @classmethod
    def from_system(cls, A, b, distance: float, eps: float = DEFAULT_EPS):
        A = unit_matrix(A)
        b = unit_vector(b)
        n, m = A.shape
        needs = pos(b - distance)
        masks = []
        for j in range(m):
            mask = 0
            for i in range(n):
                if A[i, j] < b[i] - distance - eps:
                    mask |= 1 << i
            masks.append(mask)
        return cls(needs=needs, deficient=tuple(masks), ncols=m)

    def required_level(self, subset: int) -> float:
        """Level forced outside the column subset encoded as a bitmask."""
        rows = (1 << self.needs.shape[0]) - 1
        for j in range(self.ncols):
            if subset >> j & 1:
                rows &= self.deficient[j]
        level = 0.0
        i = 0
        while rows:
            if rows & 1 and self.needs[i] > level:
                level = self.needs[i]
            rows >>= 1
            i += 1
        return level


def is_approx_solution_subsets(
    A,
    b,
    report: ChebyshevReport,
    x,
    eps: float = DEFAULT_EPS,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> bool:
    """Subset-cover characterization; agrees with `is_approx_solution`.

    x belongs to the approximate-solution set iff x <= greatest_approx and,
    for every column subset T, some column outside T carries at least the
    level forced by T.  Enumerates all 2^m subsets; refuses m > subset_cap.
    """
    A = unit_matrix(A)
    x = unit_vector(x)
    m = A.shape[1]
    if m > subset_cap:
        raise SubsetCapExceeded(f"{m} columns exceed the subset cap of {subset_cap}")
    if not leq(x, report.greatest_approx, eps):
        return False
    char = SubsetCharacterization.from_system(A, b, report.distance, eps)
    for subset in range(1 << m):
        outside = max((x[j] for j in range(m) if not subset >> j & 1), default=0.0)
        if char.required_level(subset) > outside + eps:
            return False
    return True


def is_cheb_approximation(A, b, report: ChebyshevReport, c, eps: float = DEFAULT_EPS) -> bool:
    """Structure test: c is a Chebyshev approximation of b.

    Holds iff c is a fixed point of the floor map and lies between some
    minimal approximation and the greatest one.  Requires the report to
    include minimal approximations.
    """
    if report.minimal_chebs is None:
        raise ValueError("report was built without minimal approximations")
    A = unit_matrix(A)
    c = unit_vector(c)
    if not veq(consistent_floor(A, c, eps), c, eps):
        return False
    if not leq(c, report.greatest_cheb, eps):
        return False
    return any(leq(low, c, eps) for low in report.minimal_chebs)
