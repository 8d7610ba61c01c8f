import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeds
from qdis.channels import (
    IDENTITY,
    IsotropicChannel,
    PauliMixture,
    SweepRow,
    analytic_ppt_margin,
    apply_channel,
    apply_local,
    count_disagreements,
    isotropic_kraus,
    kraus_set,
    pauli_mixture_kraus,
    quality_factor,
    threshold_ok,
    threshold_sweep,
    worst_case_margin,
)
from qdis.errors import EtaOutOfRange, IncompleteKrausSet, InvalidProbabilities
from qdis.geometry import decompose, profile
from qdis.linalg import I2, PAULIS
from qdis.separability import det_m, is_product, ppt_verdict
from qdis.states import bell, random_mixed, random_pure, schmidt, werner

etas = st.floats(min_value=0.0, max_value=1.0)


def bloch_state(v):
    return 0.5 * (I2 + sum(x * p for x, p in zip(v, PAULIS)))


class TestIsotropicKraus:
    def test_identity(self):
        k = isotropic_kraus(1.0)
        assert np.allclose(k.operators[0], I2)
        assert all(np.allclose(op, 0) for op in k.operators[1:])

    def test_full_depolarizing(self):
        rho = bloch_state([0.3, -0.2, 0.6])
        assert np.allclose(apply_channel(isotropic_kraus(0.0), rho).matrix, I2 / 2)

    def test_third(self):
        out = apply_channel(isotropic_kraus(1 / 3), np.diag([1.0, 0.0]))
        assert np.allclose(out.matrix, np.diag([2 / 3, 1 / 3]))

    @pytest.mark.parametrize("eta", [-0.34, 1.01])
    def test_out_of_range(self, eta):
        with pytest.raises(EtaOutOfRange):
            isotropic_kraus(eta)
        with pytest.raises(EtaOutOfRange):
            IsotropicChannel(eta)

    @given(st.floats(min_value=-1 / 3, max_value=1.0))
    def test_complete(self, eta):
        assert isotropic_kraus(eta).completeness_defect < 1e-12

    @given(st.floats(min_value=-1 / 3, max_value=1.0), seeds)
    def test_shrinks_bloch_vector(self, eta, seed):
        rng = np.random.default_rng(seed)
        v = rng.standard_normal(3)
        v *= rng.uniform() / np.linalg.norm(v)
        out = apply_channel(isotropic_kraus(eta), bloch_state(v)).matrix
        assert np.allclose(out, bloch_state(eta * v), atol=1e-12)


class TestApplyChannel:
    def test_identity_set(self):
        rho = bloch_state([0.1, 0.2, 0.3])
        assert np.allclose(apply_channel(IDENTITY, rho).matrix, rho)

    def test_full_twirl(self):
        k = pauli_mixture_kraus(PauliMixture(0.25, 0.25, 0.25, 0.25))
        assert np.allclose(apply_channel(k, bloch_state([0.0, 0.6, 0.8])).matrix, I2 / 2)

    def test_incomplete(self):
        with pytest.raises(IncompleteKrausSet):
            apply_channel(kraus_set([0.5 * I2]), I2 / 2)

    def test_empty(self):
        with pytest.raises(IncompleteKrausSet):
            kraus_set([])


class TestApplyLocal:
    def test_identity(self):
        rho = random_mixed(1)
        assert np.allclose(apply_local(rho, IDENTITY, IDENTITY).matrix, rho.matrix)

    @pytest.mark.parametrize("e1, e2", [(1.0, 1 / 3), (0.5, 0.5), (0.9, 0.2)])
    def test_bell_to_werner(self, e1, e2):
        out = apply_local(bell(0), isotropic_kraus(e1), isotropic_kraus(e2))
        assert np.allclose(out.matrix, werner(e1 * e2).matrix, atol=1e-14)

    @pytest.mark.parametrize("theta, e1, e2", [(0.3, 0.8, 0.5), (np.pi / 6, 1.0, 0.2), (1.2, 0.4, 0.9)])
    def test_schmidt_output_form(self, theta, e1, e2):
        s, t = np.cos(2 * theta), np.sin(2 * theta)
        e = e1 * e2
        expected = np.diag(
            [1 + e + (e1 + e2) * s, 1 - e + (e1 - e2) * s, 1 - e - (e1 - e2) * s, 1 + e - (e1 + e2) * s]
        ).astype(complex)
        expected[0, 3] = expected[3, 0] = 2 * e * t
        out = apply_local(schmidt(theta), isotropic_kraus(e1), isotropic_kraus(e2))
        assert np.allclose(out.matrix, expected / 4, atol=1e-14)

    def test_structure(self):
        rng = np.random.default_rng(3)
        for seed in range(500):
            rho = random_mixed(seed) if seed % 2 else random_pure(seed)
            e1, e2 = rng.uniform(0, 1, 2)
            d = decompose(rho)
            out = decompose(apply_local(rho, isotropic_kraus(e1), isotropic_kraus(e2)))
            assert np.max(np.abs(out.r - e1 * d.r)) < 1e-12
            assert np.max(np.abs(out.s - e2 * d.s)) < 1e-12
            assert np.max(np.abs(out.T - e1 * e2 * d.T)) < 1e-12


class TestPauliMixture:
    def test_identity(self):
        k = pauli_mixture_kraus(PauliMixture(1, 0, 0, 0))
        rho = random_mixed(4)
        assert np.allclose(apply_local(rho, k, IDENTITY).matrix, rho.matrix)

    def test_twirl_matrix(self):
        assert np.allclose(PauliMixture(0.25, 0.25, 0.25, 0.25).bloch_matrix, 0)

    @given(st.floats(min_value=-1 / 3, max_value=1.0), seeds)
    def test_isotropic_special_case(self, eta, seed):
        q = (1 - eta) / 4
        mix = PauliMixture(1 - 3 * q, q, q, q)
        assert np.allclose(mix.bloch_matrix, eta * np.eye(3), atol=1e-12)
        rho = random_mixed(seed)
        a = apply_local(rho, pauli_mixture_kraus(mix), IDENTITY).matrix
        b = apply_local(rho, isotropic_kraus(eta), IDENTITY).matrix
        assert np.allclose(a, b, atol=1e-12)

    @given(seeds)
    def test_bloch_matrix_acts_on_T(self, seed):
        rng = np.random.default_rng(seed)
        mix = PauliMixture(*rng.dirichlet(np.ones(4)))
        rho = random_mixed(seed)
        out = decompose(apply_local(rho, pauli_mixture_kraus(mix), IDENTITY))
        d = decompose(rho)
        assert np.allclose(out.T, mix.bloch_matrix @ d.T, atol=1e-12)
        assert np.allclose(out.r, mix.bloch_matrix @ d.r, atol=1e-12)
        assert np.allclose(out.s, d.s, atol=1e-12)

    @pytest.mark.parametrize("p", [(0.5, 0.5, 0.5, -0.5), (0.2, 0.2, 0.2, 0.2)])
    def test_invalid(self, p):
        with pytest.raises(InvalidProbabilities):
            PauliMixture(*p)

    def test_monotonicity(self):
        rng = np.random.default_rng(9)
        for seed in range(1000):
            rho = random_mixed(seed) if seed % 2 else random_pure(seed)
            k = pauli_mixture_kraus(PauliMixture(*rng.dirichlet(np.ones(4))))
            before = profile(rho).Ic
            after = profile(apply_local(rho, k, IDENTITY) if seed % 3 else apply_local(rho, IDENTITY, k)).Ic
            assert after <= before + 1e-9


class TestThresholdArithmetic:
    def test_quality_factor(self):
        assert quality_factor(1, 1 / 3) == pytest.approx(2 / 3, abs=1e-15)
        assert quality_factor(0, 0) == 0
        assert quality_factor(1 / np.sqrt(3), 1 / np.sqrt(3)) == pytest.approx(0.5773502691896258)

    def test_threshold_ok(self):
        assert threshold_ok(1, 1 / 3)
        assert not threshold_ok(1, 1)
        assert threshold_ok(0.6, 0.5)

    def test_margin_examples(self):
        assert analytic_ppt_margin(np.pi / 4, 1, 1 / 3) == pytest.approx(0.0, abs=1e-15)
        assert analytic_ppt_margin(np.pi / 4, 0.5, 0.5) == pytest.approx(0.3125, abs=1e-15)
        assert analytic_ppt_margin(np.pi / 4, 1, 0.4) == pytest.approx(-0.28, abs=1e-15)

    def test_margin_equals_block_determinant(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            theta = rng.uniform(0, np.pi / 2)
            e1, e2 = rng.uniform(0, 1, 2)
            out = apply_local(schmidt(theta), isotropic_kraus(e1), isotropic_kraus(e2)).matrix
            pt = out.reshape(2, 2, 2, 2).swapaxes(1, 3).reshape(4, 4)
            block = 4 * pt[1:3, 1:3]
            assert analytic_ppt_margin(theta, e1, e2) == pytest.approx(np.linalg.det(block).real, abs=1e-12)

    def test_worst_case_examples(self):
        assert worst_case_margin(1, 1 / 3, 181) == pytest.approx(0.0, abs=1e-12)
        assert worst_case_margin(0.5, 0.5, 7) > 0
        assert worst_case_margin(1, 1, 181) == pytest.approx(-4.0, abs=1e-12)

    @given(etas, etas)
    def test_worst_case_closed_form(self, e1, e2):
        # linear in t^2: the minimum sits at t = 0 or t = 1 (both on the grid)
        at_quarter = (1 - 3 * e1 * e2) * (1 + e1 * e2)
        at_zero = (1 - e1**2) * (1 - e2**2)
        assert worst_case_margin(e1, e2, 181) == pytest.approx(min(at_quarter, at_zero), abs=1e-12)

    @given(etas, etas, st.floats(min_value=0, max_value=np.pi / 2))
    def test_margin_sign_matches_ppt(self, e1, e2, theta):
        margin = analytic_ppt_margin(theta, e1, e2)
        out = apply_local(schmidt(theta), isotropic_kraus(e1), isotropic_kraus(e2))
        if abs(margin) > 1e-8:
            assert ppt_verdict(out).separable == (margin > 0)

    @given(st.floats(min_value=0.01, max_value=np.pi / 2 - 0.01), st.floats(min_value=1e-3, max_value=1 / 3))
    def test_classical_correlation_survives(self, theta, product):
        out = apply_local(schmidt(theta), isotropic_kraus(1.0), isotropic_kraus(product))
        assert not is_product(out)
        assert det_m(out) > 0


class TestSweep:
    def test_corners(self):
        rows = threshold_sweep(2, 19)
        by = {(r.eta1, r.eta2): r for r in rows}
        assert [(r.eta1, r.eta2) for r in rows] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert not by[1, 1].ppt_all_theta and not by[1, 1].threshold_predict
        for key in [(0, 0), (0, 1), (1, 0)]:
            assert by[key].ppt_all_theta and by[key].threshold_predict

    def test_boundary_row(self):
        rows = threshold_sweep(4, 181)
        row = next(r for r in rows if r.eta1 == 1.0 and abs(r.eta2 - 1 / 3) < 1e-15)
        assert row.worst_margin >= -1e-9
        assert row.ppt_all_theta and row.threshold_predict

    def test_small_grid_agrees(self):
        rows = threshold_sweep(12, 31)
        assert count_disagreements(rows) == 0

    def test_band_excludes(self):
        row = SweepRow(1.0, 0.3335, 0.3335, -1e-4, False, True)
        assert not row.agree and row.near_boundary
        assert count_disagreements([row]) == 0
