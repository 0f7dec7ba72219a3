import json

import numpy as np
import pytest

from qrough import measures, states
from qrough.errors import DegenerateInputError, DimensionError, ValidationError


class TestValidation:
    def test_maximally_mixed_rank4(self):
        st = states.validate_density(np.eye(4) / 4)
        assert isinstance(st, states.TwoQubitState)
        assert st.rank_hint == 4

    def test_not_psd_rejected(self):
        with pytest.raises(ValidationError, match="positivity"):
            states.validate_density(np.diag([1.1, -0.1, 0.0, 0.0]))

    def test_bell_projector_rank1(self):
        st = states.validate_density(states.bell("phi+").rho)
        assert st.rank_hint == 1

    def test_trace_violation_named(self):
        with pytest.raises(ValidationError, match="trace"):
            states.validate_density(np.eye(2))

    def test_hermiticity_violation_named(self):
        m = np.diag([0.5, 0.5]).astype(complex)
        m[0, 1] = 0.3
        with pytest.raises(ValidationError, match="hermiticity"):
            states.validate_density(m)

    def test_wrong_dimension(self):
        with pytest.raises(DimensionError):
            states.validate_density(np.eye(3) / 3)


class TestBell:
    def test_phi_plus_entries(self):
        rho = states.bell("phi+").rho
        expected = np.zeros((4, 4))
        expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
        assert np.allclose(rho, expected)

    def test_psi_plus_support(self):
        rho = states.bell("psi+").rho
        assert abs(rho[0, 0]) == 0 and abs(rho[3, 3]) == 0
        assert abs(rho[1, 1] - 0.5) <= 1e-15 and abs(rho[2, 2] - 0.5) <= 1e-15

    @pytest.mark.parametrize("kind", states.BELL_KINDS)
    def test_all_kinds_pure(self, kind):
        assert abs(states.bell(kind).purity - 1.0) <= 1e-12

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            states.bell("sigma+")


class TestPureFromAmplitudes:
    def test_basis_state(self):
        rho = states.pure_from_amplitudes(1, 0, 0, 0).rho
        assert np.allclose(rho, np.diag([1.0, 0, 0, 0]))

    def test_normalization_forced(self):
        assert np.allclose(
            states.pure_from_amplitudes(1, 0, 0, 1).rho, states.bell("phi+").rho
        )

    def test_zw_of_weighted_state(self):
        st = states.pure_from_amplitudes(0.6, 0, 0, 0.8)
        z, w = states.extract_zw(st)
        assert abs(z - 0.36) <= 1e-12 and abs(w - 0.36) <= 1e-12

    def test_zero_amplitudes(self):
        with pytest.raises(DegenerateInputError):
            states.pure_from_amplitudes(0, 0, 0, 0)


class TestSampling:
    def test_haar_deterministic(self):
        a = states.haar_random_pure(42)
        b = states.haar_random_pure(42)
        assert np.array_equal(a.rho, b.rho)

    def test_haar_purity(self):
        for i in range(50):
            assert abs(states.haar_random_pure((1, i)).purity - 1.0) <= 1e-12

    def test_haar_mean_reduced_purity(self):
        # frozen from an independent brute-force sampler; analytic value
        # (d1 + d2)/(d1 d2 + 1) = 4/5 for two qubits
        total = 0.0
        n = 10_000
        for i in range(n):
            st = states.haar_random_pure(states.derive_seed(101, i))
            total += states.reduce(st, 1).purity
        assert abs(total / n - 0.8) <= 0.01

    def test_ginibre_rank1_is_pure(self):
        for i in range(20):
            assert abs(states.ginibre_random(1, (2, i)).purity - 1.0) <= 1e-12

    def test_ginibre_rank2_eigenvalue_count(self):
        for i in range(50):
            st = states.ginibre_random(2, (3, i))
            w = np.linalg.eigvalsh(st.rho)
            assert int(np.sum(w > 1e-9)) == 2

    def test_ginibre_rank4_mean_purity(self):
        # frozen from an independent brute-force sampler; analytic value
        # (N + K)/(N K + 1) = 8/17 ~= 0.4706 for N = K = 4
        total = 0.0
        n = 10_000
        for i in range(n):
            total += states.ginibre_random(4, states.derive_seed(202, i)).purity
        assert abs(total / n - 8.0 / 17.0) <= 0.02

    def test_ginibre_deterministic(self):
        a = states.ginibre_random(2, (5, 5))
        b = states.ginibre_random(2, (5, 5))
        assert np.array_equal(a.rho, b.rho)

    def test_sampled_states_validate(self):
        for i in range(100):
            states.validate_density(states.haar_random_pure((6, i)).rho)
            for rank in (1, 2, 3, 4):
                states.validate_density(states.ginibre_random(rank, (rank, i)).rho)


class TestReduceAndViews:
    def test_bell_reduction(self):
        red = states.reduce(states.bell("phi+"), 1)
        assert abs(red.a(0, 0) - 0.5) <= 1e-15
        assert abs(red.a(0, 1)) <= 1e-15

    def test_basis_state_reductions(self):
        st = states.pure_from_amplitudes(0, 1, 0, 0)  # |01>
        assert np.allclose(states.reduce(st, 1).rho, np.diag([1.0, 0.0]))
        assert np.allclose(states.reduce(st, 2).rho, np.diag([0.0, 1.0]))

    def test_weighted_reduction(self):
        st = states.pure_from_amplitudes(0.6, 0, 0, 0.8)
        assert np.allclose(states.reduce(st, 1).rho, np.diag([0.36, 0.64]))

    def test_zw_bounds_and_extremes(self):
        assert states.extract_zw(states.pure_from_amplitudes(1, 0, 0, 0)) == (1.0, 1.0)
        assert states.extract_zw(states.pure_from_amplitudes(0, 0, 0, 1)) == (0.0, 0.0)
        z, w = states.extract_zw(states.bell("phi+"))
        assert abs(z - 0.5) <= 1e-15 and abs(w - 0.5) <= 1e-15

    def test_zw_matches_reduced_a00(self):
        for i in range(200):
            st = states.ginibre_random(4, (8, i))
            z, w = states.extract_zw(st)
            assert abs(z - states.reduce(st, 1).a00) <= 1e-12
            assert abs(w - states.reduce(st, 2).a00) <= 1e-12

    def test_v_vector_norm_is_purity(self):
        for i in range(1000):
            g = states.ginibre_random(2, (9, i))
            red = states.reduce(g, 1)
            v = red.v_vector
            assert abs(np.real(v.conj() @ v) - red.purity) <= 1e-12

    def test_pure_state_entropy_symmetry(self):
        for i in range(200):
            st = states.haar_random_pure((10, i))
            d1 = measures.linear_entropy(states.reduce(st, 1))
            d2 = measures.linear_entropy(states.reduce(st, 2))
            assert abs(d1 - d2) <= 1e-10


class TestStateIO:
    def test_round_trip(self, tmp_path):
        st = states.ginibre_random(2, (12, 34))
        path = tmp_path / "state.json"
        states.dump_state(st, path)
        loaded = states.load_state(path)
        assert np.max(np.abs(loaded.rho - st.rho)) <= 1e-15

    def test_format_shape(self):
        obj = json.loads(states.state_to_json(states.bell("phi+")))
        assert obj["dim"] == 4
        assert len(obj["matrix"]) == 4 and len(obj["matrix"][0]) == 4
        assert obj["matrix"][0][0] == pytest.approx([0.5, 0.0])

    def test_malformed_json(self):
        with pytest.raises(ValidationError):
            states.state_from_json("{not json")

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError):
            states.state_from_json('{"dim": 4, "matrix": [[[1.0, 0.0]]]}')
