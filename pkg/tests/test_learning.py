import numpy as np
import pytest

from conftest import TOL, X_BENCH, X_PAIRS, X_SCALAR, Y_BENCH, Y_PAIRS, Y_SCALAR, vecs_equal
from fuzzrel import (
    DimensionMismatch,
    TrainingSet,
    build_approximate_weights,
    build_systems,
    learning_error,
    linf_dist,
    maxmin_prod,
    minimal_learning_error,
)
from fuzzrel.oracle import random_grid_matrix, random_grid_vector


class TestBuildSystems:
    def test_scalar_outputs(self):
        L, rhs = build_systems(TrainingSet(X_SCALAR, Y_SCALAR))
        assert np.allclose(L, X_SCALAR)
        assert len(rhs) == 1 and np.allclose(rhs[0], [0.7, 1.0, 0.3])

    def test_vector_outputs(self):
        _, rhs = build_systems(TrainingSet(X_PAIRS, Y_PAIRS))
        assert np.allclose(rhs[1], [0.1, 0.7])

    def test_single_pair(self):
        L, rhs = build_systems(TrainingSet([[0.2, 0.9]], [[0.5]]))
        assert L.shape == (1, 2) and rhs[0].shape == (1,)

    def test_ragged_data_rejected(self):
        with pytest.raises(DimensionMismatch):
            TrainingSet([[0.1, 0.2]], [[0.5], [0.6]])


class TestLearningError:
    def test_exact_benchmark_weights(self):
        W = [[1, 0.7, 0.3, 0.3], [0.4, 0.4, 1, 0.7], [0.1, 0.6, 0.2, 0.2]]
        assert learning_error(TrainingSet(X_BENCH, Y_BENCH), W) == 0.0

    def test_two_pair_sample_weights(self):
        W = [[1, 0, 0.2], [0.2, 1, 0.5], [0.15, 0.15, 0]]
        assert learning_error(TrainingSet(X_PAIRS, Y_PAIRS), W) == pytest.approx(0.3)

    def test_zero_weights(self):
        assert learning_error(TrainingSet(X_SCALAR, Y_SCALAR), np.zeros((1, 3))) == pytest.approx(1.0)

    def test_shape_checked(self):
        with pytest.raises(DimensionMismatch):
            learning_error(TrainingSet(X_SCALAR, Y_SCALAR), np.zeros((2, 3)))

    def test_row_system_identity(self):
        # worst pair residual == worst per-output system residual
        rng = np.random.default_rng(6)
        ts = TrainingSet(X_PAIRS, Y_PAIRS)
        L, rhs = build_systems(ts)
        for _ in range(200):
            W = random_grid_matrix(rng, 3, 3)
            direct = learning_error(ts, W)
            via_rows = max(linf_dist(rhs[k], maxmin_prod(L, W[k])) for k in range(3))
            assert direct == pytest.approx(via_rows, abs=1e-12)


class TestMinimalError:
    def test_two_pair_data(self):
        mu, per = minimal_learning_error(TrainingSet(X_PAIRS, Y_PAIRS))
        assert mu == pytest.approx(0.3)
        assert np.allclose(per, [0.0, 0.3, 0.15], atol=TOL)

    def test_benchmark_data(self):
        mu, per = minimal_learning_error(TrainingSet(X_BENCH, Y_BENCH))
        assert mu == pytest.approx(0.0, abs=TOL)
        assert np.allclose(per, 0.0, atol=TOL)

    def test_scalar_data(self):
        mu, _ = minimal_learning_error(TrainingSet(X_SCALAR, Y_SCALAR))
        assert mu == pytest.approx(0.0, abs=TOL)


class TestBuildWeights:
    def test_exact_reconstruction_on_benchmark(self):
        ts = TrainingSet(X_BENCH, Y_BENCH)
        report = build_approximate_weights(ts)
        assert report.min_error == pytest.approx(0.0, abs=TOL)
        assert report.achieved_error == pytest.approx(0.0, abs=TOL)
        for i in range(ts.pair_count):
            assert np.allclose(maxmin_prod(report.weights, ts.inputs[i]), ts.outputs[i], atol=TOL)

    def test_attains_min_error_when_positive(self):
        report = build_approximate_weights(TrainingSet(X_PAIRS, Y_PAIRS))
        assert report.min_error == pytest.approx(0.3)
        assert report.achieved_error == pytest.approx(report.min_error, abs=TOL)

    def test_minimal_policy_also_attains(self):
        ts = TrainingSet(X_PAIRS, Y_PAIRS)
        report = build_approximate_weights(ts, "minimal")
        assert report.achieved_error == pytest.approx(report.min_error, abs=TOL)
        greatest = build_approximate_weights(ts, "greatest")
        assert not np.allclose(report.weights, greatest.weights)

    def test_unknown_policy(self):
        with pytest.raises(ValueError):
            build_approximate_weights(TrainingSet(X_SCALAR, Y_SCALAR), "median")

    def test_trivial_single_cell(self):
        report = build_approximate_weights(TrainingSet([[1.0]], [[0.5]]))
        assert report.weights[0, 0] == pytest.approx(0.5)
        assert report.min_error == pytest.approx(0.0, abs=TOL)

    def test_error_floor_on_random_weights(self):
        rng = np.random.default_rng(8)
        ts = TrainingSet(X_PAIRS, Y_PAIRS)
        mu, _ = minimal_learning_error(ts)
        for _ in range(300):
            W = random_grid_matrix(rng, 3, 3)
            assert learning_error(ts, W) >= mu - TOL

    def test_generated_data_is_exactly_learnable(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            m, n, N = rng.integers(1, 5), rng.integers(1, 5), rng.integers(1, 6)
            W0 = random_grid_matrix(rng, n, m)
            X = random_grid_matrix(rng, N, m)
            Y = np.vstack([maxmin_prod(W0, X[i]) for i in range(N)])
            ts = TrainingSet(X, Y)
            mu, _ = minimal_learning_error(ts)
            assert mu == pytest.approx(0.0, abs=TOL)
            report = build_approximate_weights(ts)
            assert report.achieved_error == pytest.approx(0.0, abs=TOL)

    def test_weight_rows_round_trip(self):
        # weights decompose into per-output row vectors and reassemble exactly
        report = build_approximate_weights(TrainingSet(X_PAIRS, Y_PAIRS))
        rows = [report.weights[k] for k in range(report.weights.shape[0])]
        assert np.array_equal(np.vstack(rows), report.weights)
