"""Tests for SIC and MUB constructions, design checks and depolarized sets."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdesign.core import QuantumValidationError, random_pure_states, random_unitary
from qdesign.designs import (
    MixedStateSet,
    WeightedStateSet,
    as_ensemble,
    as_povm,
    builtin_mub,
    builtin_sic,
    check_design,
    depolarize,
    ensemble_is_two_design,
    frame_potential,
    povm_is_two_design,
    ququart_witness_basis,
    qubit_sic_fiducial,
    qutrit_sic_povm,
    validate_generalized_mub,
    validate_generalized_sic,
    validate_mub,
    validate_sic,
    weyl_heisenberg_orbit,
)

BUILTINS = [("sic", 2), ("sic", 3), ("mub", 2), ("mub", 3), ("mub", 4)]


def builtin(kind, d):
    return builtin_sic(d) if kind == "sic" else builtin_mub(d)


def off_diagonal(m):
    return m[~np.eye(m.shape[0], dtype=bool)]


class TestFramePotential:
    def test_qubit_sic(self):
        report = check_design(builtin_sic(2), 2)
        assert report.frame_potential == pytest.approx(1 / 3, abs=1e-12)
        assert report.verdict

    def test_qutrit_mub(self):
        report = check_design(builtin_mub(3), 2)
        assert report.frame_potential == pytest.approx(1 / 6, abs=1e-12)
        assert report.verdict

    def test_computational_basis_is_not_a_two_design(self):
        basis = WeightedStateSet.uniform(np.eye(2))
        report = check_design(basis, 2)
        assert report.frame_potential == pytest.approx(1 / 2)
        assert not report.verdict
        assert check_design(basis, 1).verdict

    @pytest.mark.parametrize("kind,d", BUILTINS)
    def test_builtins_hit_the_minimum(self, kind, d):
        states = builtin(kind, d)
        assert frame_potential(states, 2) == pytest.approx(2 / (d * (d + 1)), abs=1e-12)
        assert check_design(states, 2).operator_deviation < 1e-10

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            check_design(builtin_sic(2), 3)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 2**32 - 1))
    def test_random_sets_never_beat_the_bound(self, d, seed):
        rng = np.random.default_rng(seed)
        n = d * d
        states = WeightedStateSet(rng.dirichlet(np.ones(n)), random_pure_states(n, d, rng))
        assert frame_potential(states, 2) >= 2 / (d * (d + 1)) - 1e-12


class TestSic:
    def test_qutrit_overlaps(self):
        overlaps = builtin_sic(3).overlaps()
        assert off_diagonal(overlaps) == pytest.approx(np.full(72, 1 / 4), abs=1e-12)

    def test_qubit_overlaps(self):
        overlaps = builtin_sic(2).overlaps()
        assert off_diagonal(overlaps) == pytest.approx(np.full(12, 1 / 3), abs=1e-12)

    def test_qubit_fiducial_weight(self):
        f = qubit_sic_fiducial()
        assert abs(f[0]) ** 2 == pytest.approx((1 + 1 / np.sqrt(3)) / 2)

    @pytest.mark.parametrize("d", [2, 3])
    def test_validate_passes(self, d):
        assert validate_sic(builtin_sic(d)).passed

    def test_basis_fiducial_degenerates(self):
        orbit = weyl_heisenberg_orbit([1.0, 0.0])
        assert np.sort(np.abs(orbit.vectors[:, 0])) == pytest.approx([0, 0, 1, 1])
        assert not validate_sic(orbit).passed

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_any_orbit_is_a_one_design(self, d):
        f = random_pure_states(1, d, np.random.default_rng(d))[0]
        assert check_design(weyl_heisenberg_orbit(f), 1).verdict

    def test_padded_basis_fails(self):
        rng = np.random.default_rng(0)
        vecs = np.vstack([np.eye(2), random_pure_states(2, 2, rng)])
        assert not validate_sic(WeightedStateSet.uniform(vecs)).passed

    def test_wrong_cardinality(self):
        with pytest.raises(ValueError):
            validate_sic(builtin_mub(2))

    def test_unsupported_dimension(self):
        with pytest.raises(ValueError):
            builtin_sic(4)

    def test_povm_trace(self):
        povm = as_povm(builtin_sic(2))
        traces = np.trace(povm.effects, axis1=1, axis2=2).real
        assert traces == pytest.approx(np.full(4, 0.5))
        assert len(qutrit_sic_povm()) == 9


class TestMub:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_validate_passes(self, d):
        states = builtin_mub(d)
        assert len(states) == d * (d + 1)
        assert validate_mub(states).passed

    def test_qubit_cross_overlaps(self):
        states = builtin_mub(2)
        overlaps = states.overlaps()
        cross = states.labels[:, 0][:, None] != states.labels[:, 0][None, :]
        assert overlaps[cross] == pytest.approx(np.full(cross.sum(), 0.5), abs=1e-12)

    def test_labels_required(self):
        states = builtin_mub(3)
        with pytest.raises(ValueError):
            validate_mub(WeightedStateSet(states.weights, states.vectors))

    def test_shuffled_labels_fail(self):
        states = builtin_mub(3)
        labels = states.labels[np.random.default_rng(1).permutation(12)]
        assert not validate_mub(WeightedStateSet(states.weights, states.vectors, labels)).passed

    def test_dimension_six_unsupported(self):
        with pytest.raises(ValueError):
            builtin_mub(6)

    def test_povm_trace(self):
        traces = np.trace(as_povm(builtin_mub(3)).effects, axis1=1, axis2=2).real
        assert traces == pytest.approx(np.full(12, 0.25))

    def test_single_basis_is_projective(self):
        povm = as_povm(WeightedStateSet.uniform(np.eye(2)))
        assert povm.effects == pytest.approx(np.array([np.diag([1.0, 0]), np.diag([0, 1.0])]))

    def test_witness_basis_is_orthonormal(self):
        q = ququart_witness_basis()
        assert q.conj() @ q.T == pytest.approx(np.eye(4), abs=1e-12)


class TestTwoDesignDetection:
    @pytest.mark.parametrize("kind,d", BUILTINS)
    def test_builtins(self, kind, d):
        states = builtin(kind, d)
        assert ensemble_is_two_design(as_ensemble(states))
        assert povm_is_two_design(as_povm(states))

    def test_unitary_image_is_still_a_design(self):
        u = random_unitary(3, np.random.default_rng(4))
        assert ensemble_is_two_design(as_ensemble(builtin_sic(3)).conjugated(u))

    def test_projective_measurement_is_not(self):
        assert not povm_is_two_design(as_povm(WeightedStateSet.uniform(np.eye(3))))


class TestDepolarize:
    @pytest.mark.parametrize("d", [2, 3])
    def test_endpoints(self, d):
        assert depolarize(builtin_sic(d), 1.0).parameter == pytest.approx(1 / d**2)
        assert depolarize(builtin_sic(d), 0.0).parameter == pytest.approx(1 / d**3)

    def test_qubit_half(self):
        mixed = depolarize(builtin_sic(2), 0.5)
        assert mixed.parameter == pytest.approx(5 / 32)
        report = validate_generalized_sic(mixed, a=5 / 32)
        assert report.passed
        gram = np.einsum("aij,bji->ab", mixed.states, mixed.states).real
        assert np.diag(gram) == pytest.approx(np.full(4, 5 / 8))
        # t^2 |<f|g>|^2 + (1 - t^2) / d with |<f|g>|^2 = 1/3
        assert off_diagonal(gram) == pytest.approx(np.full(12, 0.25 / 3 + 0.75 / 2))

    def test_sic_at_point_seven(self):
        mixed = depolarize(builtin_sic(2), 0.7)
        assert validate_generalized_sic(mixed).passed

    def test_mub_half(self):
        mixed = depolarize(builtin_mub(3), 0.5)
        assert mixed.kind == "mub"
        assert mixed.parameter == pytest.approx(0.25 + 0.75 / 3)
        assert validate_generalized_mub(mixed).passed

    @pytest.mark.parametrize("t", [0.0, 0.25, 0.5, 0.75, 1.0])
    @pytest.mark.parametrize("kind,d", BUILTINS)
    def test_every_builtin(self, kind, d, t):
        mixed = depolarize(builtin(kind, d), t)
        check = validate_generalized_sic if kind == "sic" else validate_generalized_mub
        assert check(mixed, 1e-9).passed

    def test_replaced_state_fails(self):
        mixed = depolarize(builtin_sic(2), 1.0)
        states = mixed.states.copy()
        states[0] = np.eye(2) / 2
        broken = MixedStateSet(mixed.weights, states, "sic", mixed.parameter)
        assert not validate_generalized_sic(broken).passed

    def test_wrong_parameter_fails(self):
        mixed = depolarize(builtin_mub(2), 0.5)
        assert not validate_generalized_mub(mixed, k=0.9).passed

    def test_t_out_of_range(self):
        with pytest.raises(ValueError):
            depolarize(builtin_sic(2), 1.5)

    def test_mixed_average_is_maximally_mixed(self):
        ens = as_ensemble(depolarize(builtin_mub(4), 0.3))
        avg = np.einsum("x,xij->ij", ens.weights, ens.states)
        assert avg == pytest.approx(np.eye(4) / 4, abs=1e-12)


class TestStateSetValidation:
    def test_unnormalized_vectors_rejected(self):
        with pytest.raises(QuantumValidationError):
            WeightedStateSet(np.array([0.5, 0.5]), np.array([[1.0, 0.0], [1.0, 1.0]]))

    def test_weights_must_sum_to_one(self):
        with pytest.raises(QuantumValidationError):
            WeightedStateSet(np.array([0.5, 0.6]), np.eye(2))

    def test_non_design_cannot_become_a_povm(self):
        with pytest.raises(QuantumValidationError):
            as_povm(WeightedStateSet.uniform([[1.0, 0.0], [1 / np.sqrt(2), 1 / np.sqrt(2)]]))
