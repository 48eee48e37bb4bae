"""Weight multiplicities: two algorithms plus brute-force oracles."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kvcalc import multiplicity, rootdata
from kvcalc.errors import UsageError


def rd(label, isogeny="sc"):
    return rootdata.build_root_datum(label, isogeny)


def cw(*coords):
    return rootdata.coweight(coords)


def naive_partition_count(datum, beta):
    """Independent oracle: iterate over all bounded coefficient vectors."""
    dual = datum.dual()
    roots = dual.positive_roots
    caps = []
    for a in roots:
        caps.append(min(b // x for b, x in zip(beta, a) if x > 0))
    count = 0
    for coeffs in product(*(range(c + 1) for c in caps)):
        total = [0] * datum.rank
        for k, a in zip(coeffs, roots):
            for j in range(datum.rank):
                total[j] += k * a[j]
        if tuple(total) == tuple(beta):
            count += 1
    return count


class TestKostantPartition:
    def test_zero(self):
        assert multiplicity.kostant_partition(rd("A2"), (0, 0)) == 1

    def test_a1_single_root(self):
        assert multiplicity.kostant_partition(rd("A1"), (1,)) == 1

    def test_a2_theta_two_ways(self):
        # alpha1+alpha2 as itself or as the two simple roots
        assert multiplicity.kostant_partition(rd("A2"), (1, 1)) == 2

    def test_negative_is_zero(self):
        assert multiplicity.kostant_partition(rd("A2"), (-1, 0)) == 0

    @pytest.mark.parametrize("label", ["A2", "B2", "G2"])
    def test_against_naive_oracle(self, label):
        datum = rd(label)
        for beta in product(range(4), repeat=2):
            assert multiplicity.kostant_partition(datum, beta) == naive_partition_count(
                datum, beta
            )


class TestFreudenthal:
    def test_highest_weight_is_one(self):
        for label, lam in [("A1", (3,)), ("A2", (2, 1)), ("B2", (2, 1))]:
            datum = rd(label)
            assert multiplicity.multiplicity_freudenthal(datum, lam, lam) == 1

    def test_a1_ladder(self):
        # V(2 alpha) of the dual SL2 is the 5-dimensional representation
        datum = rd("A1")
        assert multiplicity.multiplicity_freudenthal(datum, (2,), (0,)) == 1
        assert multiplicity.multiplicity_freudenthal(datum, (2,), (1,)) == 1
        assert multiplicity.multiplicity_freudenthal(datum, (1,), (0,)) == 1

    def test_a2_adjoint_zero_weight(self):
        assert multiplicity.multiplicity_freudenthal(rd("A2"), (1, 1), (0, 0)) == 2

    def test_disjoint_classes_are_zero(self):
        # in the adjoint lattice, the minuscule coweight and 0 fall in
        # different pi_1 classes, so the multiplicity vanishes
        datum = rd("A1", "adjoint")
        assert multiplicity.multiplicity_freudenthal(
            datum, cw(Fraction(1, 2)), (0,)
        ) == 0

    def test_rejects_outside_lattice(self):
        with pytest.raises(UsageError):
            multiplicity.multiplicity_freudenthal(rd("A1"), (Fraction(1, 2),), (0,))

    def test_rejects_non_dominant(self):
        with pytest.raises(UsageError):
            multiplicity.multiplicity_freudenthal(rd("A2"), (-1, 0), (0, 0))


class TestKostantFormula:
    def test_highest_weight(self):
        assert multiplicity.multiplicity_kostant(rd("B2"), (1, 1), (1, 1)) == 1

    def test_a1_interior(self):
        assert multiplicity.multiplicity_kostant(rd("A1"), (2,), (1,)) == 1

    def test_b2_zero_weight_cross_check(self):
        datum = rd("B2")
        lam = rootdata.dominant_reduce(datum, (1, 1))[0]
        a = multiplicity.multiplicity_kostant(datum, lam, (0, 0))
        b = multiplicity.multiplicity_freudenthal(datum, lam, (0, 0))
        assert a == b

    @pytest.mark.parametrize("label", ["A1", "A2", "B2"])
    def test_oracle_agreement_small(self, label):
        datum = rd(label)
        for lam in multiplicity.sweep_dominant(datum, 8):
            wsys = multiplicity.weight_system(datum, lam)
            for mu in wsys:
                if rootdata.is_dominant(datum, mu):
                    assert wsys[mu] == multiplicity.multiplicity_kostant(datum, lam, mu)


class TestWeightSystem:
    @pytest.mark.parametrize("label", ["A2", "B2", "G2"])
    def test_dimension_sum_matches_weyl_formula(self, label):
        datum = rd(label)
        for lam in multiplicity.sweep_dominant(datum, 9):
            assert multiplicity.dimension_sum(datum, lam) == rootdata.weyl_dimension(
                datum, lam
            )

    def test_dominant_weights_have_positive_multiplicity(self):
        datum = rd("B2")
        wsys = multiplicity.weight_system(datum, cw(2, 2))
        for mu in multiplicity.dominant_below(datum, cw(2, 2)):
            assert wsys[mu] >= 1

    def test_weights_closed_under_dominance_interval(self):
        datum = rd("A2")
        lam = cw(2, 2)
        wsys = multiplicity.weight_system(datum, lam)
        dominant_weights = {m for m in wsys if rootdata.is_dominant(datum, m)}
        assert dominant_weights == set(multiplicity.dominant_below(datum, lam))


class TestDominantBelow:
    def test_a1_ladder(self):
        assert multiplicity.dominant_below(rd("A1"), cw(1)) == (cw(0), cw(1))

    def test_zero(self):
        assert multiplicity.dominant_below(rd("A2"), cw(0, 0)) == (cw(0, 0),)

    def test_a2_theta(self):
        assert multiplicity.dominant_below(rd("A2"), cw(1, 1)) == (cw(0, 0), cw(1, 1))

    def test_adjoint_minuscule_is_alone(self):
        datum = rd("A1", "adjoint")
        omega = cw(Fraction(1, 2))
        assert multiplicity.dominant_below(datum, omega) == (omega,)

    def test_interval_is_downward_closed_within_class(self):
        datum = rd("B2")
        lam = cw(2, 2)
        below = multiplicity.dominant_below(datum, lam)
        for mu in below:
            for nu in multiplicity.dominant_below(datum, mu):
                assert nu in below

    @given(st.integers(0, 3), st.integers(0, 3))
    @settings(max_examples=30, deadline=None)
    def test_orbit_sum_bounds_dimension(self, a, b):
        datum = rd("A2")
        lam, _ = rootdata.dominant_reduce(datum, cw(a, b))
        total = multiplicity.dimension_sum(datum, lam)
        assert total == rootdata.weyl_dimension(datum, lam)


class TestOrbits:
    def test_regular_orbit_size(self):
        assert multiplicity.orbit_size(rd("A2"), cw(1, 1)) == 6

    def test_singular_orbit_size(self):
        # (2,1) in B2 coroot coordinates lies on one wall: orbit |W|/2
        assert multiplicity.orbit_size(rd("B2"), cw(2, 1)) == 4
        assert multiplicity.orbit_size(rd("B2"), cw(0, 0)) == 1
