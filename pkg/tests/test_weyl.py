"""Weyl group enumeration, Coxeter elements, cosets, fixed spaces."""

import pytest

from kvcalc import rootdata, weyl
from kvcalc.errors import SizeGuardError


def rd(label, isogeny="sc"):
    return rootdata.build_root_datum(label, isogeny)


def all_reduced_words(datum, element):
    """Every reduced word of an element: extend words breadth-first from the
    identity, keeping only length-increasing extensions (small groups only)."""
    if element.length == 0:
        return {()}
    frontier = {(): weyl.identity_element(datum)}
    for _ in range(element.length):
        nxt = {}
        for word, w in frontier.items():
            for i in range(datum.rank):
                cand = weyl.word_to_element(datum, word + (i,))
                if cand.length == len(word) + 1:
                    nxt[word + (i,)] = cand
        frontier = nxt
    return {word for word, w in frontier.items() if w.action == element.action}


class TestEnumeration:
    @pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("B2", 8),
                                             ("G2", 12), ("A3", 24), ("A1xA1", 4)])
    def test_group_orders(self, label, order):
        assert len(weyl.enumerate_group(rd(label))) == order

    def test_a2_length_multiset(self):
        lengths = sorted(e.length for e in weyl.enumerate_group(rd("A2")))
        assert lengths == [0, 1, 1, 2, 2, 3]

    def test_identity_first(self):
        group = weyl.enumerate_group(rd("B2"))
        assert group[0].is_identity()

    def test_length_equals_inversions(self):
        for label in ["A2", "B2", "G2"]:
            datum = rd(label)
            for e in weyl.enumerate_group(datum):
                assert e.length == weyl.inversions(e)

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            weyl.enumerate_group(rd("B6xB5"))

    def test_longest_element(self):
        for label in ["A2", "B2", "G2", "A3"]:
            datum = rd(label)
            w0 = weyl.longest_element(datum)
            assert w0.length == datum.num_positive_roots
            assert weyl._mat_mul(w0.action, w0.action) == weyl._identity(datum.rank)

    def test_iota_matches_w0(self):
        for label in ["A2", "A3", "D4", "G2", "B3"]:
            datum = rd(label)
            assert tuple(datum.iota[datum.iota[i]] for i in range(datum.rank)) == tuple(
                range(datum.rank)
            )


class TestCoxeterElements:
    def test_a1_single(self):
        elements = weyl.coxeter_elements(rd("A1"))
        assert len(elements) == 1
        assert elements[0].word == (0,)

    def test_a2_two(self):
        assert len(weyl.coxeter_elements(rd("A2"))) == 2

    def test_product_count_multiplies(self):
        assert len(weyl.coxeter_elements(rd("A1xA1"))) == 1
        assert len(weyl.coxeter_elements(rd("A2xA2"))) == 4

    def test_full_support_and_length(self):
        for label in ["A3", "B2", "G2"]:
            datum = rd(label)
            for e in weyl.coxeter_elements(datum):
                assert e.length == datum.rank
                assert e.support == frozenset(range(datum.rank))

    @pytest.mark.parametrize("label,h", [("A1", 2), ("A2", 3), ("A3", 4),
                                         ("B2", 4), ("G2", 6)])
    def test_coxeter_number(self, label, h):
        for e in weyl.coxeter_elements(rd(label)):
            assert e.order() == h


class TestDoubleCosets:
    def test_full_parabolic_single_coset(self):
        datum = rd("A2")
        reps = weyl.min_double_coset_reps(datum, {0, 1}, {0, 1})
        assert len(reps) == 1 and reps[0].is_identity()

    def test_empty_parabolic_all_elements(self):
        datum = rd("A2")
        reps = weyl.min_double_coset_reps(datum, set(), set())
        assert len(reps) == 6

    def test_a2_proper_parabolic_reps(self):
        # exhaustive scan oracle: group the 6 elements into double cosets.
        # W_{s1} \ W / W_{s1} in S3 has cosets of sizes 2 and 4.
        datum = rd("A2")
        sub = weyl.parabolic_subgroup(datum, frozenset({0}))
        cosets = set()
        for w in weyl.enumerate_group(datum):
            coset = frozenset(
                weyl._mat_mul(weyl._mat_mul(a.action, w.action), b.action)
                for a in sub for b in sub
            )
            cosets.add(coset)
        assert sorted(len(c) for c in cosets) == [2, 4]
        reps = weyl.min_double_coset_reps(datum, {0}, {0})
        assert len(reps) == len(cosets) == 2

    def test_partition_covers_group(self):
        for label, j1, j2 in [("B2", {0}, {1}), ("A3", {0, 2}, {1}), ("G2", {1}, {1})]:
            datum = rd(label)
            reps = weyl.min_double_coset_reps(datum, j1, j2)
            total = sum(weyl.double_coset_size(datum, j1, j2, w) for w in reps)
            assert total == len(weyl.enumerate_group(datum))

    def test_reps_are_minimal(self):
        datum = rd("B2")
        sub = weyl.parabolic_subgroup(datum, frozenset({0}))
        table = {e.action: e for e in weyl.enumerate_group(datum)}
        for w in weyl.min_double_coset_reps(datum, {0}, {0}):
            for a in sub:
                for b in sub:
                    other = table[
                        weyl._mat_mul(weyl._mat_mul(a.action, w.action), b.action)
                    ]
                    assert w.length <= other.length


class TestSupportAndFixedSpace:
    def test_support_independent_of_reduced_word(self):
        for label in ["A2", "B2", "A3"]:
            datum = rd(label)
            for e in weyl.enumerate_group(datum):
                if e.length > 4:
                    continue
                supports = {frozenset(word) for word in all_reduced_words(datum, e)}
                assert supports == {e.support}

    def test_identity_fixes_everything(self):
        datum = rd("A3")
        assert weyl.fixed_space_dim(weyl.identity_element(datum)) == 3

    def test_a1_reflection(self):
        datum = rd("A1")
        s = weyl.word_to_element(datum, [0])
        assert weyl.fixed_space_dim(s) == 0

    def test_a2_coxeter_elliptic(self):
        datum = rd("A2")
        for e in weyl.coxeter_elements(datum):
            assert weyl.fixed_space_dim(e) == 0

    def test_b2_reflection_fixes_line(self):
        datum = rd("B2")
        s = weyl.word_to_element(datum, [0])
        assert weyl.fixed_space_dim(s) == 1
