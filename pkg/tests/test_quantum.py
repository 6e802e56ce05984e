import numpy as np
import pytest

from chshlab import (
    DensityMatrix,
    Observable,
    bell_state,
    bloch_of,
    correlation,
    joint_distribution,
    maximally_mixed,
    observable_from_bloch,
    projectors,
    pure_state,
)
from chshlab.linalg import frobenius, hermitian_eigen
from chshlab.quantum import BELL_STATE_NAMES, IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z

from helpers import partial_trace, random_bloch, random_density, random_observable


class TestObservable:
    def test_axis_cases(self):
        assert np.array_equal(observable_from_bloch((0, 0, 1)).matrix, SIGMA_Z)
        assert np.array_equal(observable_from_bloch((1, 0, 0)).matrix, SIGMA_X)
        assert np.array_equal(observable_from_bloch((0, 1, 0)).matrix, SIGMA_Y)

    def test_tilted_observable_spectrum(self):
        inv = 1.0 / np.sqrt(2.0)
        obs = observable_from_bloch((inv, 0.0, inv))
        assert frobenius(obs.matrix - (SIGMA_X + SIGMA_Z) * inv) < 1e-15
        assert np.allclose(hermitian_eigen(obs.matrix).eigenvalues, [1.0, -1.0], atol=1e-12)

    def test_rejects_non_unit_vector(self):
        with pytest.raises(ValueError, match="unit length"):
            observable_from_bloch((0.5, 0.0, 0.0))

    def test_bloch_round_trip(self):
        rng = np.random.default_rng(17)
        for _ in range(100):
            n = random_bloch(rng)
            back = bloch_of(observable_from_bloch(n))
            assert max(abs(a - b) for a, b in zip(n, back)) < 1e-12

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            Observable(np.array([[0, 1], [0, 0]], dtype=complex), label="bad")

    def test_rejects_wrong_spectrum(self):
        with pytest.raises(ValueError, match="square to the identity"):
            Observable(np.diag([1.0, 0.5]).astype(complex))

    def test_rejects_wrong_dim(self):
        with pytest.raises(ValueError, match="2x2"):
            Observable(np.eye(4, dtype=complex))

    def test_label_appears_in_diagnostics(self):
        with pytest.raises(ValueError, match="'b2'"):
            Observable(np.diag([1.0, 0.5]).astype(complex), label="b2")


class TestProjectors:
    def test_sigma_z_case(self):
        p_plus, p_minus = projectors(observable_from_bloch((0, 0, 1)))
        assert np.array_equal(p_plus, np.diag([1.0, 0.0]).astype(complex))
        assert np.array_equal(p_minus, np.diag([0.0, 1.0]).astype(complex))

    def test_projector_algebra(self):
        rng = np.random.default_rng(41)
        for _ in range(50):
            obs = random_observable(rng)
            p, m = projectors(obs)
            assert frobenius(p @ p - p) < 1e-10
            assert frobenius(m @ m - m) < 1e-10
            assert frobenius(p @ m) < 1e-12
            assert frobenius(p + m - IDENTITY_2) < 1e-14
            assert frobenius(p - m - obs.matrix) < 1e-14


class TestStates:
    def test_bell_states_pure_unit_trace(self):
        for name in BELL_STATE_NAMES:
            rho = bell_state(name).matrix
            assert abs(np.trace(rho) - 1.0) < 1e-14
            assert abs(np.trace(rho @ rho) - 1.0) < 1e-14

    def test_singlet_reduced_states_maximally_mixed(self):
        rho = bell_state("psi_minus").matrix
        for party in ("A", "B"):
            assert frobenius(partial_trace(rho, party) - IDENTITY_2 / 2.0) < 1e-12

    def test_bell_states_orthogonal(self):
        for i, a in enumerate(BELL_STATE_NAMES):
            for b in BELL_STATE_NAMES[i + 1 :]:
                overlap = np.trace(bell_state(a).matrix @ bell_state(b).matrix)
                assert abs(overlap) < 1e-14

    def test_unknown_bell_name(self):
        with pytest.raises(ValueError, match="unknown Bell state"):
            bell_state("sigma_plus")

    def test_density_matrix_validation(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix(np.eye(4, dtype=complex))
        with pytest.raises(ValueError, match="negative eigenvalue"):
            DensityMatrix(np.diag([1.5, -0.5]).astype(complex))
        with pytest.raises(ValueError, match="dim 2 or 4"):
            DensityMatrix(np.eye(3, dtype=complex) / 3.0)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]], dtype=complex))

    def test_pure_state_requires_normalized_vector(self):
        with pytest.raises(ValueError, match="normalized"):
            pure_state([1.0, 1.0])

    def test_maximally_mixed(self):
        assert np.array_equal(maximally_mixed(4).matrix, np.eye(4) / 4.0)


class TestJointDistribution:
    def test_singlet_perfect_anticorrelation(self):
        sz = observable_from_bloch((0, 0, 1))
        d = joint_distribution(bell_state("psi_minus"), sz, sz)
        assert abs(d.p_pp) < 1e-15 and abs(d.p_mm) < 1e-15
        assert abs(d.p_pm - 0.5) < 1e-12 and abs(d.p_mp - 0.5) < 1e-12

    def test_maximally_mixed_flat(self):
        rng = np.random.default_rng(43)
        d = joint_distribution(maximally_mixed(4), random_observable(rng), random_observable(rng))
        assert np.allclose(d.as_array(), 0.25, atol=1e-12)

    def test_product_eigenstate(self):
        rho = DensityMatrix(np.kron(np.diag([1.0, 0.0]), np.diag([1.0, 0.0])).astype(complex))
        sz = observable_from_bloch((0, 0, 1))
        d = joint_distribution(rho, sz, sz)
        assert d.p_pp == 1.0 and d.p_pm == 0.0 and d.p_mp == 0.0 and d.p_mm == 0.0

    def test_dimension_check(self):
        sz = observable_from_bloch((0, 0, 1))
        with pytest.raises(ValueError, match="dim 4"):
            joint_distribution(DensityMatrix(IDENTITY_2 / 2.0), sz, sz)

    def test_no_signaling_marginals_exact(self):
        # the A-side marginal cannot depend on which B observable is measured
        rng = np.random.default_rng(44)
        for _ in range(1000):
            rho = random_density(rng)
            a = random_observable(rng)
            b1 = random_observable(rng)
            b2 = random_observable(rng)
            d1 = joint_distribution(rho, a, b1)
            d2 = joint_distribution(rho, a, b2)
            assert abs((d1.p_pp + d1.p_pm) - (d2.p_pp + d2.p_pm)) < 1e-10
            assert abs((d1.p_mp + d1.p_mm) - (d2.p_mp + d2.p_mm)) < 1e-10

    def test_marginal_matches_single_party_born_rule(self):
        rng = np.random.default_rng(45)
        for _ in range(100):
            rho = random_density(rng)
            a = random_observable(rng)
            b = random_observable(rng)
            d = joint_distribution(rho, a, b)
            p_plus, _ = projectors(a)
            direct = float(np.trace(rho.matrix @ np.kron(p_plus, IDENTITY_2)).real)
            assert abs((d.p_pp + d.p_pm) - direct) < 1e-10


class TestCorrelation:
    def test_singlet_dot_product_law(self):
        rng = np.random.default_rng(46)
        singlet = bell_state("psi_minus")
        for _ in range(100):
            u = random_bloch(rng)
            v = random_bloch(rng)
            e = correlation(singlet, observable_from_bloch(u), observable_from_bloch(v))
            assert abs(e - (-np.dot(u, v))) < 1e-10

    def test_singlet_equal_settings(self):
        rng = np.random.default_rng(47)
        obs = random_observable(rng)
        assert abs(correlation(bell_state("psi_minus"), obs, obs) + 1.0) < 1e-10

    def test_maximally_mixed_uncorrelated(self):
        rng = np.random.default_rng(48)
        e = correlation(maximally_mixed(4), random_observable(rng), random_observable(rng))
        assert abs(e) < 1e-12

    def test_two_computation_routes_agree(self):
        rng = np.random.default_rng(49)
        for _ in range(1000):
            rho = random_density(rng)
            a = random_observable(rng)
            b = random_observable(rng)
            via_trace = correlation(rho, a, b)
            via_distribution = joint_distribution(rho, a, b).expectation()
            assert abs(via_trace - via_distribution) < 1e-10
            assert -1.0 - 1e-10 <= via_trace <= 1.0 + 1e-10
