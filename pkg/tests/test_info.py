"""Tests for entropies, mutual information and the closed-form bounds."""

from math import log2

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdesign.core import (
    Ensemble,
    JointDistribution,
    Povm,
    born_statistics,
    random_density,
    random_pure_states,
)
from qdesign.designs import as_ensemble, as_povm, builtin_mub, builtin_sic, ququart_witness_basis
from qdesign.info import (
    accinfo_upper_bound,
    bound_set,
    collision_sum,
    conditional_input_distribution,
    conditional_output_distribution,
    ensemble_entropy_bound,
    entropy,
    gen_conditional_entropy_bounds,
    gen_mub_bound,
    gen_mub_conditional_entropy_bound,
    gen_sic_bound,
    gen_sic_conditional_entropy_bound,
    infopower_upper_bound,
    mutual_information,
    mutual_information_kl,
    pg_mub_value,
    pg_sic_value,
    povm_entropy_bound,
    pretty_good_ensemble,
    pretty_good_povm,
    scrooge_bounds,
)


class TestEntropy:
    def test_fair_coin(self):
        assert entropy([0.5, 0.5]) == pytest.approx(1.0)

    def test_deterministic(self):
        assert entropy([1.0, 0.0, 0.0]) == 0.0

    def test_uniform_three(self):
        assert entropy([1 / 3] * 3) == pytest.approx(1.584962500721156)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            entropy([0.5, 0.6])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            entropy([1.1, -0.1])


class TestMutualInformation:
    def test_product_distribution(self):
        assert mutual_information(np.outer([0.3, 0.7], [0.6, 0.4])) == pytest.approx(0.0, abs=1e-12)

    def test_perfect_correlation(self):
        assert mutual_information(np.diag([0.5, 0.5])) == pytest.approx(1.0)

    def test_inconsistent_marginals(self):
        joint = JointDistribution(np.diag([0.5, 0.5]), np.array([0.4, 0.6]), np.array([0.5, 0.5]))
        with pytest.raises(ValueError):
            mutual_information(joint)

    def test_qutrit_witness(self):
        joint = born_statistics(as_ensemble(builtin_mub(3)), as_povm(builtin_sic(3)))
        assert mutual_information(joint) == pytest.approx(log2(1.5), abs=1e-12)

    def test_qutrit_witness_reversed(self):
        joint = born_statistics(as_ensemble(builtin_sic(3)), as_povm(builtin_mub(3)))
        assert mutual_information(joint) == pytest.approx(log2(1.5), abs=1e-12)

    def test_ququart_witness(self):
        basis = ququart_witness_basis()
        mub = builtin_mub(4)
        i_eq = mutual_information(born_statistics(as_ensemble(mub), Povm.from_basis(basis)))
        i_fp = mutual_information(born_statistics(Ensemble.from_vectors(np.full(4, 0.25), basis),
                                                  as_povm(mub)))
        assert i_eq == pytest.approx(0.6, abs=1e-12)
        assert i_fp == pytest.approx(0.6, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 5), st.integers(2, 5), st.integers(0, 2**32 - 1))
    def test_kl_form_agrees(self, nx, ny, seed):
        p = np.random.default_rng(seed).dirichlet(np.ones(nx * ny)).reshape(nx, ny)
        joint = JointDistribution.from_matrix(p)
        assert mutual_information(joint) == pytest.approx(mutual_information_kl(joint), abs=1e-12)
        assert 0 <= mutual_information(joint) <= min(log2(nx), log2(ny)) + 1e-12


class TestPrettyGood:
    def test_qubit_sic_joint(self):
        joint = born_statistics(as_ensemble(builtin_sic(2)), pretty_good_povm(as_ensemble(builtin_sic(2))))
        expected = np.full((4, 4), 1 / 24) + np.eye(4) * (1 / 8 - 1 / 24)
        assert joint.matrix == pytest.approx(expected, abs=1e-14)

    def test_povm_traces(self):
        povm = pretty_good_povm(as_ensemble(builtin_sic(2)))
        assert np.trace(povm.effects, axis1=1, axis2=2).real == pytest.approx(np.full(4, 0.5))

    def test_roundtrip(self):
        ens = as_ensemble(builtin_mub(3))
        back = pretty_good_ensemble(pretty_good_povm(ens))
        assert back.weights == pytest.approx(ens.weights)
        assert back.states == pytest.approx(ens.states)

    def test_rejects_non_one_design(self):
        with pytest.raises(ValueError):
            pretty_good_povm(Ensemble.from_vectors([1.0], [[1.0, 0.0]]))

    def test_closed_forms(self):
        assert pg_mub_value(2) == pytest.approx(1 / 3)
        assert pg_sic_value(2) == pytest.approx(1 - 0.5 * log2(3))
        assert pg_mub_value(3) == pytest.approx(log2(3) / 4)
        assert pg_mub_value(3) < log2(1.5)

    @pytest.mark.parametrize("kind,d", [("sic", 2), ("sic", 3), ("mub", 2), ("mub", 3), ("mub", 4)])
    def test_computed_matches_closed_form(self, kind, d):
        states = builtin_sic(d) if kind == "sic" else builtin_mub(d)
        ens = as_ensemble(states)
        value = mutual_information(born_statistics(ens, pretty_good_povm(ens)))
        closed = pg_sic_value(d) if kind == "sic" else pg_mub_value(d)
        assert value == pytest.approx(closed, abs=1e-9)


class TestUpperBounds:
    def test_small_dimensions(self):
        assert accinfo_upper_bound(2) == pytest.approx(0.415037499, abs=1e-9)
        assert accinfo_upper_bound(3) == pytest.approx(0.584962501, abs=1e-9)
        assert infopower_upper_bound(4) == pytest.approx(log2(8 / 5))

    def test_never_reaches_one_bit(self):
        assert accinfo_upper_bound(10**6) == pytest.approx(1.0, abs=1e-5)
        assert accinfo_upper_bound(10**6) < 1.0

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValueError):
            accinfo_upper_bound(1)

    def test_scrooge_values(self):
        assert scrooge_bounds(2)[0] == pytest.approx(1 - 1 / (2 * np.log(2)))
        assert scrooge_bounds(2)[0] == pytest.approx(0.278652, abs=1e-6)
        assert scrooge_bounds(3)[0] == pytest.approx(0.382716633, abs=1e-9)
        assert scrooge_bounds(5)[1] == pytest.approx(log2(5))

    @pytest.mark.parametrize("d", range(2, 16))
    def test_scrooge_below_design_ceiling(self, d):
        assert scrooge_bounds(d)[0] < infopower_upper_bound(d)

    def test_bound_set_rows(self):
        rows = dict(bound_set(3, k=1.0).as_rows())
        assert rows["gen_mub"] == pytest.approx(accinfo_upper_bound(3))
        assert "gen_sic" not in rows


class TestEntropyBounds:
    def test_rank_one_sic(self):
        pi = np.diag([1.0, 0.0])
        assert ensemble_entropy_bound(pi, 4, 2) == pytest.approx(log2(3))

    def test_identity_gives_log_n(self):
        assert ensemble_entropy_bound(np.eye(3), 9, 3) == pytest.approx(log2(9))
        assert povm_entropy_bound(np.eye(3) / 3, 12, 3) == pytest.approx(log2(12))

    def test_rank_one_mub_qutrit(self):
        assert ensemble_entropy_bound(np.diag([1.0, 0, 0]), 12, 3) == pytest.approx(3.0)

    def test_monotone_in_purity(self):
        values = [povm_entropy_bound(np.diag([0.5 + e, 0.5 - e]), 4, 2) for e in np.linspace(0, 0.5, 11)]
        assert np.all(np.diff(values) < 0)
        assert values[0] == pytest.approx(2.0)
        assert values[-1] == pytest.approx(log2(3))

    @pytest.mark.parametrize("kind,d", [("sic", 2), ("sic", 3), ("mub", 3), ("mub", 4)])
    def test_random_effects_respect_bound(self, kind, d):
        states = builtin_sic(d) if kind == "sic" else builtin_mub(d)
        ens, povm = as_ensemble(states), as_povm(states)
        rng = np.random.default_rng(d)
        for vec in random_pure_states(200, d, rng):
            pi = np.outer(vec, vec.conj())
            h = entropy(conditional_input_distribution(ens, pi))
            assert h >= ensemble_entropy_bound(pi, len(ens), d) - 1e-9
        for _ in range(50):
            rho = random_density(d, rng)
            h = entropy(conditional_output_distribution(povm, rho))
            assert h >= povm_entropy_bound(rho, len(povm), d) - 1e-9


class TestCollisionIdentity:
    @pytest.mark.parametrize("e_kind,p_kind,d", [
        ("sic", "sic", 2), ("sic", "mub", 2), ("mub", "mub", 3), ("sic", "mub", 3), ("mub", "mub", 4)])
    def test_design_pairs(self, e_kind, p_kind, d):
        get = {"sic": builtin_sic, "mub": builtin_mub}
        value = collision_sum(as_ensemble(get[e_kind](d)), as_povm(get[p_kind](d)))
        assert value == pytest.approx(2 * d / (d + 1), abs=1e-12)


class TestGeneralizedBounds:
    @pytest.mark.parametrize("d", range(2, 12))
    def test_rank_one_limits(self, d):
        assert gen_sic_bound(d, 1 / d**2) == accinfo_upper_bound(d)
        assert gen_mub_bound(d, 1 / d) == 0.0
        assert gen_mub_bound(d, 1.0) == pytest.approx(accinfo_upper_bound(d))

    def test_qubit_half(self):
        assert gen_sic_bound(2, 5 / 32) == pytest.approx(log2(13 / 12))
        assert gen_sic_bound(2, 5 / 32) == pytest.approx(0.11548, abs=1e-5)

    def test_parameter_range(self):
        with pytest.raises(ValueError):
            gen_sic_bound(2, 0.5)
        with pytest.raises(ValueError):
            gen_mub_bound(3, 0.1)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_conditional_entropy_rank_one(self, d):
        assert gen_sic_conditional_entropy_bound(d, 1 / d**2) == pytest.approx(log2(d * (d + 1) / 2))
        assert gen_mub_conditional_entropy_bound(d, 1.0) == pytest.approx(log2((d + 1) ** 2 / 2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 8), st.floats(0, 1))
    def test_mub_identity(self, d, u):
        k = 1 / d + u * (1 - 1 / d)
        lhs = log2(d * (d + 1)) - gen_mub_conditional_entropy_bound(d, k)
        assert lhs == pytest.approx(gen_mub_bound(d, k), abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 8), st.floats(0, 1))
    def test_sic_identity(self, d, u):
        a = 1 / d**3 + u * (1 / d**2 - 1 / d**3)
        lhs = log2(d * d) - gen_sic_conditional_entropy_bound(d, a)
        assert lhs == pytest.approx(log2((d**3 * a + d) / (d + 1)), abs=1e-12)

    def test_dispatch(self):
        assert gen_conditional_entropy_bounds(2, a=0.25) == gen_sic_conditional_entropy_bound(2, 0.25)
        with pytest.raises(ValueError):
            gen_conditional_entropy_bounds(2)
        with pytest.raises(ValueError):
            gen_conditional_entropy_bounds(2, a=0.25, k=1.0)
