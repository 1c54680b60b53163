from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thompsonf.core.exceptions import (
    BadInputError,
    CoordinateOutOfRangeError,
    InputError,
    IterationCapExceededError,
    NotInOrbitalError,
    NotMonotoneError,
    OutOfRangeError,
    SlopeNotPowerOfTwoError,
)
from thompsonf.models.dyadic import Dyadic
from thompsonf.models.plmap import Orbital, PLMap
from thompsonf.services import plmap as pl
from thompsonf.services.thompson import phi

from .strategies import increasing_sequences, pl_maps, scaled_into, unit_dyadics

D = Dyadic


def _grid(k: int = 6):
    return [D(i, 2 ** k) for i in range(2 ** k + 1)]


class TestConstruction:
    def test_identity(self):
        e = pl.identity()
        assert e.breaks == ((0, 0), (1, 1))
        assert pl.evaluate(e, D(3, 8)) == D(3, 8)
        assert pl.orbitals(e) == []

    def test_from_breaks_f0(self, f0):
        f = pl.from_breaks([(D(1, 2), D(3, 4)), (D(1, 4), D(1, 2))])
        assert f == f0
        assert f.interior_breaks == ((D(1, 4), D(1, 2)), (D(1, 2), D(3, 4)))

    def test_from_breaks_drops_collinear_points(self):
        f = pl.from_breaks([(D(1, 4), D(1, 4)), (D(1, 2), D(1, 2))])
        assert f.is_identity()

    def test_not_monotone(self):
        with pytest.raises(NotMonotoneError):
            pl.from_breaks([(D(1, 4), D(1, 2)), (D(1, 2), D(1, 2))])

    def test_bad_slope(self):
        with pytest.raises(SlopeNotPowerOfTwoError):
            pl.from_breaks([(D(1, 4), D(3, 4))])

    def test_out_of_range(self):
        with pytest.raises(CoordinateOutOfRangeError):
            pl.from_breaks([(D(1, 2), D(3, 2))])

    @given(pl_maps())
    def test_round_trip_through_breaks(self, f):
        assert pl.from_breaks(f.breaks) == f

    @given(pl_maps())
    def test_canonical_form_preserves_values(self, f):
        expanded = PLMap(tuple(sorted(set(f.breaks) | {(x, pl.evaluate(f, x)) for x in _grid(4)})))
        assert PLMap.canonical(expanded.breaks) == f
        assert all(pl.evaluate(expanded, t) == pl.evaluate(f, t) for t in _grid())


class TestEvaluate:
    def test_f0_at_quarter(self, f0):
        assert pl.evaluate(f0, D(1, 4)) == D(1, 2)

    def test_non_dyadic_point(self, f0):
        assert pl.evaluate(f0, Fraction(1, 3)) == Fraction(7, 12)

    def test_outside_unit_interval(self, f0):
        with pytest.raises(OutOfRangeError):
            pl.evaluate(f0, D(3, 2))


class TestGroupLaws:
    def test_compose_is_word_order(self, f0, f1):
        t = D(3, 4)
        assert pl.evaluate(pl.compose(f0, f1), t) == pl.evaluate(f1, pl.evaluate(f0, t))

    def test_power(self, f0):
        assert pl.power(f0, 2) == pl.compose(f0, f0)
        assert pl.power(f0, -1) == pl.inverse(f0)
        assert pl.power(f0, 0) == pl.identity()

    @settings(max_examples=50)
    @given(pl_maps(), pl_maps(), pl_maps())
    def test_associativity(self, f, g, h):
        assert pl.compose(pl.compose(f, g), h) == pl.compose(f, pl.compose(g, h))

    @given(pl_maps())
    def test_identity_and_inverse(self, f):
        e = pl.identity()
        assert pl.compose(e, f) == f == pl.compose(f, e)
        assert pl.compose(f, pl.inverse(f)) == e

    @settings(max_examples=50)
    @given(pl_maps(), pl_maps(), pl_maps())
    def test_iterated_conjugation(self, f, g, h):
        assert pl.conjugate(pl.conjugate(f, g), h) == pl.conjugate(f, pl.compose(g, h))

    @given(pl_maps(), pl_maps())
    def test_endpoint_exponents_add(self, f, g):
        assert phi(pl.compose(f, g)) == phi(f) + phi(g)


class TestRev:
    def test_rev_f0(self, f0):
        assert pl.rev(f0).interior_breaks == ((D(1, 2), D(1, 4)), (D(3, 4), D(1, 2)))

    def test_rev_identity(self):
        assert pl.rev(pl.identity()) == pl.identity()

    @given(pl_maps())
    def test_involution(self, f):
        assert pl.rev(pl.rev(f)) == f

    @settings(max_examples=200)
    @given(pl_maps())
    def test_swaps_phi(self, f):
        assert phi(pl.rev(f)) == phi(f).swap()


class TestOrbitals:
    def test_f0(self, f0):
        assert pl.orbitals(f0) == [Orbital(D(0), D(1))]

    def test_g1(self, g1):
        assert pl.orbitals(g1) == [Orbital(D(3, 8), D(5, 8))]

    def test_non_dyadic_fixed_point(self):
        # the slope-4 segment crosses the diagonal at 7/24
        f = pl.from_breaks([(D(1, 4), D(1, 8)), (D(3, 8), D(5, 8)), (D(1, 2), D(3, 4))])
        assert pl.orbitals(f) == [Orbital(D(0), Fraction(7, 24)), Orbital(Fraction(7, 24), D(1))]

    @given(pl_maps())
    def test_orbitals_partition(self, f):
        orbs = pl.orbitals(f)
        for orb in orbs:
            assert pl.evaluate(f, orb.lo) == orb.lo and pl.evaluate(f, orb.hi) == orb.hi
            mid = (orb.lo + orb.hi) / 2
            assert pl.evaluate(f, mid) != mid
        for t in _grid():
            if not any(t in orb for orb in orbs):
                assert pl.evaluate(f, t) == t

    @settings(max_examples=200)
    @given(pl_maps(), pl_maps())
    def test_conjugate_orbitals(self, f, g):
        conj = pl.conjugate(f, g)
        moved = [Orbital(pl.evaluate(g, o.lo), pl.evaluate(g, o.hi)) for o in pl.orbitals(f)]
        assert pl.orbitals(conj) == moved
        for o, m in zip(pl.orbitals(f), moved):
            assert pl.right_slope(conj, m.lo) == pl.right_slope(f, o.lo)
            assert pl.left_slope(conj, m.hi) == pl.left_slope(f, o.hi)

    def test_support_hull(self, g0):
        assert pl.support_hull(g0) == (D(3, 8), D(7, 8))
        assert pl.support_hull(pl.identity()) is None
        assert pl.is_supported_in(g0, D(3, 8), D(7, 8))
        assert not pl.is_supported_in(g0, D(1, 2), D(1))


class TestSupports:
    def test_same_map(self, f0):
        assert pl.support_equals(f0, f0, D(0), D(1))

    def test_differ_near_zero(self, f0, f1):
        assert not pl.support_equals(f0, f1, D(0), D(1, 8))

    def test_agree_on_common_identity_region(self, f1):
        assert pl.support_equals(f1, pl.identity(), D(0), D(1, 2))

    @settings(max_examples=200)
    @given(pl_maps(), pl_maps())
    def test_disjoint_supports_commute(self, f, g):
        left = scaled_into(f, D(0), D(1, 2))
        right = scaled_into(g, D(1, 2), D(1, 2))
        assert pl.compose(left, right) == pl.compose(right, left)

    @settings(max_examples=200)
    @given(pl_maps(), pl_maps())
    def test_disjoint_supports_product_covers_union(self, f, g):
        left = scaled_into(f, D(0), D(1, 2))
        right = scaled_into(g, D(1, 2), D(1, 2))
        assert pl.orbitals(pl.compose(left, right)) == pl.orbitals(left) + pl.orbitals(right)

    @settings(max_examples=50)
    @given(pl_maps(), pl_maps(), st.lists(st.sampled_from(["f", "g", "F", "G"]), max_size=6))
    def test_words_stay_in_union_of_supports(self, f, g, letters):
        table = {"f": f, "g": g, "F": pl.inverse(f), "G": pl.inverse(g)}
        w = pl.product(*(table[c] for c in letters))
        orbs = pl.orbitals(f) + pl.orbitals(g)
        for o in pl.orbitals(w):
            mid = (o.lo + o.hi) / 2
            assert any(mid in orb for orb in orbs)


class TestPushToEnd:
    def test_f0_towards_zero(self, f0):
        orb = Orbital(D(0), D(1))
        n = pl.push_to_end(f0, orb, D(1, 2), D(1, 4))
        assert 0 < pl.evaluate(pl.power(f0, n), D(1, 2)) < D(1, 4)
        assert n < 0

    def test_already_there(self, f0):
        assert pl.push_to_end(f0, Orbital(D(0), D(1)), D(1, 2), D(1)) == 0

    def test_towards_one(self, f0):
        n = pl.push_to_end(f0, Orbital(D(0), D(1)), D(1, 8), D(1, 16), end="hi")
        assert pl.evaluate(pl.power(f0, n), D(1, 8)) > D(15, 16)

    def test_point_outside_orbital(self, g1):
        with pytest.raises(NotInOrbitalError):
            pl.push_to_end(g1, Orbital(D(3, 8), D(5, 8)), D(3, 4), D(1, 16))

    def test_not_an_orbital(self, f0):
        with pytest.raises(NotInOrbitalError):
            pl.push_to_end(f0, Orbital(D(0), D(1, 2)), D(1, 4), D(1, 16))

    def test_iteration_cap(self, f0):
        with pytest.raises(IterationCapExceededError):
            pl.push_to_end(f0, Orbital(D(0), D(1)), D(1, 2), D(1, 2 ** 40), cap=3)

    @pytest.mark.parametrize("cap", [0, -5])
    def test_cap_below_one(self, f0, cap):
        with pytest.raises(InputError):
            pl.push_to_end(f0, Orbital(D(0), D(1)), D(1, 2), D(1, 16), cap=cap)


class TestInterpolator:
    def test_equal_constraints_give_identity(self):
        assert pl.dyadic_interpolator([D(1, 4), D(1, 2)], [D(1, 4), D(1, 2)]).is_identity()

    def test_f0_constraints(self):
        f = pl.dyadic_interpolator([D(1, 4), D(1, 2)], [D(1, 2), D(3, 4)])
        assert pl.evaluate(f, D(1, 4)) == D(1, 2)
        assert pl.evaluate(f, D(1, 2)) == D(3, 4)

    def test_non_dyadic_target(self):
        with pytest.raises(BadInputError):
            pl.dyadic_interpolator([D(1, 2)], [Fraction(1, 3)])

    def test_unequal_lengths(self):
        with pytest.raises(BadInputError):
            pl.dyadic_interpolator([D(1, 2)], [])

    def test_not_increasing(self):
        with pytest.raises(BadInputError):
            pl.dyadic_interpolator([D(1, 2), D(1, 4)], [D(1, 4), D(1, 2)])

    @given(st.integers(1, 4).flatmap(lambda k: st.tuples(increasing_sequences(k), increasing_sequences(k))))
    def test_hits_every_constraint(self, constraints):
        xs, ys = constraints
        f = pl.dyadic_interpolator(xs, ys)
        assert [pl.evaluate(f, x) for x in xs] == ys

    @given(unit_dyadics())
    def test_single_point_fixed(self, x):
        assert pl.dyadic_interpolator([x], [x]).is_identity()
