from itertools import combinations, product

import pytest
from hypothesis import assume, given
from pydantic import ValidationError

from thompsonf.core.exceptions import InputError, NotFiniteIndexError
from thompsonf.models.lattice import LatticeSubgroup
from thompsonf.schemas.subgroup import IsoVerdict, Witness
from thompsonf.services import classify
from thompsonf.services import lattice as lt
from thompsonf.services import plmap as pl
from thompsonf.services.thompson import phi

from .oracles import minor_gcd
from .strategies import generator_sets

EXAMPLE_1 = [(3, 7), (5, 11)]
EXAMPLE_2 = [(15, 0), (0, 15), (3, 3)], [(15, 0), (0, 15), (3, 6)]
EXAMPLE_3 = [(10, 0), (0, 15), (2, 6)], [(35, 0), (0, 20), (14, 4)]


def _all_up_to(n: int):
    return [classify.FIFSubgroup(lat) for k in range(1, n + 1) for lat in lt.enumerate_index(k)]


class TestConstruction:
    def test_from_phi_pairs(self):
        sub = classify.from_phi_pairs(EXAMPLE_1)
        assert sub.lattice.triple == (1, 1, 2)
        assert sub.index == 2
        assert sub.provenance == ((3, 7), (5, 11))

    def test_from_generators(self, f0, f1):
        assert classify.from_f_generators([f0, f1]) == classify.full_group()

    def test_from_generators_rank_one(self, f1):
        with pytest.raises(NotFiniteIndexError) as info:
            classify.from_f_generators([f1])
        assert "infinite index" in str(info.value)

    def test_provenance_ignored_in_equality(self, f0, f1):
        by_pairs = classify.from_phi_pairs([(1, -1), (0, -1)])
        assert by_pairs == classify.from_f_generators([f0, f1])

    def test_elements_with_example_1_images(self, f0, f1):
        first = pl.compose(pl.power(f0, 3), pl.power(f1, -10))
        second = pl.compose(pl.power(f0, 5), pl.power(f1, -16))
        assert (phi(first), phi(second)) == ((3, 7), (5, 11))
        assert classify.from_f_generators([first, second]).lattice.triple == (1, 1, 2)

    def test_rectangular(self):
        assert classify.rectangular(2, 3) == classify.from_phi_pairs([(2, 0), (0, 3)])

    def test_every_small_lattice_from_elements(self, f0, f1):
        def element(p, q):
            # phi(f0) = (1, -1), phi(f1) = (0, -1)
            return pl.compose(pl.power(f0, p), pl.power(f1, -p - q))

        subs = []
        for n in range(1, 13):
            for lat in lt.enumerate_index(n):
                gens = [element(lat.g, lat.h), element(0, lat.m)]
                assert [phi(x) for x in gens] == [(lat.g, lat.h), (0, lat.m)]
                sub = classify.from_f_generators(gens)
                assert sub.lattice == lat
                subs.append(sub)
        assert len(set(subs)) == len(subs)


class TestIsomorphism:
    def test_example_1_not_f(self):
        assert not classify.is_isomorphic_to_F(classify.from_phi_pairs(EXAMPLE_1))

    def test_rectangular_is_f(self):
        assert classify.is_isomorphic_to_F(classify.from_phi_pairs([(2, 0), (0, 3)]))
        assert classify.is_isomorphic_to_F(classify.full_group())

    def test_example_2(self):
        first, second = (classify.from_phi_pairs(p) for p in EXAMPLE_2)
        verdict = classify.are_isomorphic(first, second)
        assert not verdict.isomorphic and verdict.witness == "none"
        assert [s.triple for s in verdict.scaled_forms] == [(1, 1, 5), (1, 2, 5)]

    def test_example_3(self):
        first, second = (classify.from_phi_pairs(p) for p in EXAMPLE_3)
        verdict = classify.are_isomorphic(first, second)
        assert verdict.isomorphic and verdict.witness is Witness.tau_and_rev
        assert verdict.witness.value == "equal-after-tau-and-rev"
        assert [s.triple for s in verdict.scaled_forms] == [(1, 2, 5), (1, 3, 5)]

    def test_witness_must_match_verdict(self):
        scaled = (LatticeSubgroup(g=1, h=0, m=1), LatticeSubgroup(g=1, h=0, m=1))
        with pytest.raises(ValidationError):
            IsoVerdict(isomorphic=True, witness=Witness.none, scaled_forms=scaled)
        with pytest.raises(ValidationError):
            IsoVerdict(isomorphic=False, witness="equal-after-tau", scaled_forms=scaled)

    def test_reflexive_witness(self):
        sub = classify.from_phi_pairs(EXAMPLE_3[0])
        assert classify.are_isomorphic(sub, sub).witness == "equal-after-tau"

    @given(generator_sets(), generator_sets())
    def test_symmetric(self, vs, ws):
        assume(minor_gcd(vs) > 0 and minor_gcd(ws) > 0)
        first, second = classify.from_phi_pairs(vs), classify.from_phi_pairs(ws)
        assert classify.are_isomorphic(first, first).isomorphic
        assert classify.are_isomorphic(first, second).isomorphic == classify.are_isomorphic(second, first).isomorphic

    def test_equivalence_relation(self):
        subs = _all_up_to(12)
        iso = {
            (i, j): classify.are_isomorphic(subs[i], subs[j]).isomorphic
            for i, j in product(range(len(subs)), repeat=2)
        }
        for i, j in iso:
            assert iso[i, j] == iso[j, i]
        for i, j, k in product(range(len(subs)), repeat=3):
            if iso[i, j] and iso[j, k]:
                assert iso[i, k]

    def test_invariants_of_isomorphic_pairs(self):
        subs = _all_up_to(12)
        for first, second in combinations(subs, 2):
            if not classify.are_isomorphic(first, second).isomorphic:
                continue
            n = lt.residue(first.lattice)
            assert lt.residue(second.lattice) == n
            # Inner and Outer may differ between the two; Inner over Outer is (n, n) for both
            for sub in (first, second):
                (a, b), (c, d) = lt.inner_rect(sub.lattice).pair, lt.outer_rect(sub.lattice).pair
                assert (a // c, b // d) == (n, n)

    def test_f_like_pair_with_different_rectangles(self):
        verdict = classify.are_isomorphic(classify.rectangular(1, 6), classify.rectangular(2, 3))
        assert verdict.isomorphic
        assert lt.inner_rect(classify.rectangular(1, 6).lattice).pair == (1, 6)

    def test_residue_one_iff_isomorphic_to_f(self):
        full = classify.full_group()
        for sub in _all_up_to(12):
            assert classify.is_isomorphic_to_F(sub) == classify.are_isomorphic(sub, full).isomorphic
            assert classify.is_isomorphic_to_F(sub) == (lt.residue(sub.lattice) == 1)


class TestClassification:
    def test_index_1(self):
        assert classify.classify_index(1) == [[LatticeSubgroup(g=1, h=0, m=1)]]

    def test_index_2(self):
        classes = classify.classify_index(2)
        assert [[lat.triple for lat in cls] for cls in classes] == [[(1, 0, 2), (2, 0, 1)], [(1, 1, 2)]]

    def test_index_4(self):
        classes = classify.classify_index(4)
        assert sum(len(cls) for cls in classes) == 7
        assert [[lat.triple for lat in cls] for cls in classes] == [
            [(1, 0, 4), (2, 0, 2), (4, 0, 1)],
            [(1, 2, 4), (2, 1, 2)],
            [(1, 1, 4)],
            [(1, 3, 4)],
        ]

    def test_class_key(self):
        first, second = (classify.from_phi_pairs(p).lattice for p in EXAMPLE_3)
        assert classify.class_key(first) == classify.class_key(second) == (1, 2, 5)
        keys = [classify.class_key(classify.from_phi_pairs(p).lattice) for p in EXAMPLE_2]
        assert keys == [(1, 1, 5), (1, 2, 5)]
        assert classify.class_key(LatticeSubgroup(g=4, h=0, m=1)) == (1, 0, 1)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_pairwise_decision(self, n):
        classes = classify.classify_index(n)
        for cls in classes:
            residues = {lt.residue(lat) for lat in cls}
            assert len(residues) == 1
            assert {lt.index(lat) for lat in cls} == {n}
            for first, second in combinations(cls, 2):
                assert classify.are_isomorphic(classify.FIFSubgroup(first), classify.FIFSubgroup(second)).isomorphic
        for cls_a, cls_b in combinations(classes, 2):
            assert not classify.are_isomorphic(classify.FIFSubgroup(cls_a[0]), classify.FIFSubgroup(cls_b[0])).isomorphic


class TestExtension:
    def test_example_1(self):
        summary = classify.extension_summary(classify.from_phi_pairs(EXAMPLE_1))
        assert summary.inner.pair == (2, 2)
        assert (summary.quotient_order, summary.index_in_F, summary.iso_to_F) == (2, 2, False)
        assert summary.quotient_generator == (1, 1)

    def test_example_3(self):
        summary = classify.extension_summary(classify.from_phi_pairs(EXAMPLE_3[0]))
        assert summary.inner.pair == (10, 15)
        assert summary.quotient_order == 5

    def test_rectangular(self):
        summary = classify.extension_summary(classify.rectangular(3, 4))
        assert summary.quotient_order == 1 and summary.iso_to_F

    def test_lagrange(self):
        for sub in _all_up_to(12):
            summary = classify.extension_summary(sub)
            assert summary.quotient_order * summary.index_in_F == summary.inner.a * summary.inner.b


class TestQuotient:
    def test_trivial(self):
        assert classify.quotient_by_rectangular(1, 1).order == 1

    def test_z2_by_z3(self):
        quotient = classify.quotient_by_rectangular(2, 3)
        assert quotient.factors == (2, 3) and quotient.order == 6
        assert quotient.order == classify.rectangular(2, 3).index

    def test_bad_parameters(self):
        with pytest.raises(InputError):
            classify.quotient_by_rectangular(0, 3)
