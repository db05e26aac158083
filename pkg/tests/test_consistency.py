import numpy as np
import pytest

from conftest import A_CONS, A_GAP, B_CONS, B_GAP, B_OFF, PREMISES, TARGET_OK, X_SCALAR, vecs_equal
from fuzzrel import (
    Composition,
    DimensionMismatch,
    EnumerationBudgetExceeded,
    SystemProblem,
    complement,
    consistent_ceil,
    consistent_ceil_direct,
    consistent_floor,
    extremal_candidate,
    is_consistent,
    leq,
    maxmin_prod,
    minmax_prod,
    potential_greatest,
    solve,
    veq,
)
from fuzzrel.oracle import random_grid_matrix, random_grid_vector


class TestCandidates:
    def test_consistent_candidate(self):
        p = SystemProblem(A_CONS, B_CONS)
        assert np.allclose(extremal_candidate(p), [0.7, 0.4, 0.4])

    def test_inconsistent_candidate_still_computed(self):
        p = SystemProblem(A_CONS, B_OFF)
        assert np.allclose(extremal_candidate(p), [0.24, 0.36, 0.36])

    def test_minmax_candidate_is_complement_image(self):
        p = SystemProblem(complement(A_CONS), complement(B_CONS), Composition.MINMAX)
        assert np.allclose(extremal_candidate(p), complement(np.array([0.7, 0.4, 0.4])))


class TestFloorCeil:
    def test_floor_of_inconsistent_rhs(self):
        assert np.allclose(consistent_floor(A_CONS, B_OFF), [0.36, 0.36, 0.24])

    def test_fixed_point_on_consistent_rhs(self):
        assert np.allclose(consistent_floor(A_CONS, B_CONS), B_CONS)

    def test_idempotent_on_all_ones(self):
        c = np.ones(3)
        once = consistent_floor(A_CONS, c)
        assert np.allclose(consistent_floor(A_CONS, once), once)

    def test_ceil_matches_complement_identity(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            G = random_grid_matrix(rng, 3, 4)
            c = random_grid_vector(rng, 3)
            expected = complement(consistent_floor(complement(G), complement(c)))
            assert np.allclose(consistent_ceil(G, c), expected)
            assert np.allclose(consistent_ceil_direct(G, c), expected)

    def test_ceil_is_increasing_and_idempotent(self):
        c = np.array([0.3, 1, 0.3, 0.8, 0.7, 0.7, 0.3, 0.7])
        up = consistent_ceil(PREMISES, c)
        assert leq(c, up)
        assert np.allclose(consistent_ceil(PREMISES, up), up)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            consistent_floor(A_CONS, np.array([0.1, 0.2]))


class TestIsConsistent:
    def test_consistent(self):
        assert is_consistent(SystemProblem(A_CONS, B_CONS))

    def test_inconsistent(self):
        assert not is_consistent(SystemProblem(A_CONS, B_OFF))

    def test_trivial_one_by_one(self):
        assert is_consistent(SystemProblem([[1.0]], [0.5]))

    def test_minmax_consistent(self):
        assert is_consistent(SystemProblem(PREMISES, TARGET_OK, Composition.MINMAX))

    def test_agrees_with_candidate_check(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            A = random_grid_matrix(rng, 3, 3)
            b = random_grid_vector(rng, 3)
            p = SystemProblem(A, b)
            via_fixed_point = is_consistent(p)
            via_candidate = veq(maxmin_prod(A, extremal_candidate(p)), b)
            assert via_fixed_point == via_candidate


class TestSolve:
    def test_scalar_training_system(self):
        sols = solve(SystemProblem(X_SCALAR, np.array([0.7, 1.0, 0.3])))
        assert sols.consistent
        assert np.allclose(sols.greatest, [1.0, 1.0, 0.3])
        assert vecs_equal(sols.extremal_opposite, [[1.0, 0.0, 0.3], [1.0, 0.3, 0.0]])

    def test_unique_minimal_solution(self):
        X = np.array(
            [[0.3, 1, 0.5, 0.2], [0.1, 1, 1, 0.5], [0.5, 0.7, 0.2, 1], [1, 0.7, 0.5, 0.3]]
        )
        sols = solve(SystemProblem(X, np.array([0.7, 0.7, 0.7, 1.0])))
        assert np.allclose(sols.greatest, [1.0, 0.7, 0.7, 0.7])
        assert vecs_equal(sols.extremal_opposite, [[1.0, 0.7, 0.0, 0.0]])

    def test_inconsistent_system_is_empty(self):
        sols = solve(SystemProblem(A_CONS, B_OFF))
        assert not sols.consistent
        assert sols.greatest is None and sols.extremal_opposite == ()

    def test_minmax_interval(self):
        sols = solve(SystemProblem(PREMISES, TARGET_OK, Composition.MINMAX))
        assert sols.consistent
        assert np.allclose(sols.lowest, [0.3, 0, 0, 0, 0, 0.7])
        assert vecs_equal(sols.extremal_opposite, [[0.3, 1, 1, 0.8, 1, 0.7]])

    def test_every_extremal_vector_solves(self):
        rng = np.random.default_rng(23)
        seen = 0
        while seen < 50:
            A = random_grid_matrix(rng, 3, 3)
            x0 = random_grid_vector(rng, 3)
            b = maxmin_prod(A, x0)  # consistent by construction
            sols = solve(SystemProblem(A, b))
            assert sols.consistent
            assert veq(maxmin_prod(A, sols.greatest), b)
            for v in sols.extremal_opposite:
                assert veq(maxmin_prod(A, v), b)
                assert leq(v, sols.greatest)
            seen += 1

    def test_below_greatest_solves_iff_image_reaches_rhs(self):
        rng = np.random.default_rng(37)
        for _ in range(50):
            A = random_grid_matrix(rng, 3, 3)
            b = maxmin_prod(A, random_grid_vector(rng, 3))
            e = potential_greatest(A, b)
            w = np.minimum(random_grid_vector(rng, 3), e)
            assert veq(maxmin_prod(A, w), b) == leq(b, maxmin_prod(A, w))

    def test_budget_guard(self):
        with pytest.raises(EnumerationBudgetExceeded):
            solve(SystemProblem(np.ones((2, 2)), [0.5, 0.5]), cap=1)

    def test_rhs_length_checked(self):
        with pytest.raises(DimensionMismatch):
            SystemProblem(A_CONS, [0.5, 0.5])


def test_floor_properties_on_random_instances():
    rng = np.random.default_rng(3)
    for _ in range(100):
        A = random_grid_matrix(rng, 4, 3)
        c = random_grid_vector(rng, 4)
        fc = consistent_floor(A, c)
        assert leq(fc, c)
        assert np.allclose(consistent_floor(A, fc), fc)
        d = np.minimum(c + 0.1, 1.0)
        assert leq(fc, consistent_floor(A, d))
