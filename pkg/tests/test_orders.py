"""Monomial orders: base kinds, weight refinement, homogenization lift."""

import random
from fractions import Fraction

import pytest

from skewgb import (
    KINDS,
    MonomialOrder,
    SkewGbError,
    WeightVector,
    commutative_presentation,
    rees_presentation,
    sl2_presentation,
    validate_order,
    weyl_presentation,
)

A1 = weyl_presentation(1)
A2 = weyl_presentation(2)
SL2 = sl2_presentation()


def mono(a, b):
    return (tuple(a), tuple(b))


class TestBaseOrders:
    def test_lex(self):
        o = MonomialOrder("lex")
        assert o.less(mono([0, 1], []), mono([1, 0], []))
        assert o.less(mono([1, 0], []), mono([1, 1], []))

    def test_grlex_degree_first(self):
        o = MonomialOrder("grlex")
        assert o.less(mono([2, 0], []), mono([1, 1, ], []) ) is False
        assert o.less(mono([1, 0], []), mono([0, 2], []))

    def test_grevlex_classic_distinction(self):
        # x^2 y z vs x y^3: grevlex compares total degree 4 = 4 then
        # reversed-exponent; classic example x1^1x2^1x3^2 < x1^2x2^2
        o = MonomialOrder("grevlex")
        a = mono([1, 1, 2], [])
        b = mono([2, 2, 0], [])
        assert o.less(a, b)

    def test_grlex_grevlex_differ(self):
        o1, o2 = MonomialOrder("grlex"), MonomialOrder("grevlex")
        a = mono([0, 2, 0], [])
        b = mono([1, 0, 1], [])
        assert o1.less(a, b) != o2.less(a, b)

    def test_unknown_kind(self):
        with pytest.raises(SkewGbError):
            MonomialOrder("mystery")

    def test_permutation(self):
        o = MonomialOrder("lex", perm=(1, 0))
        assert o.less(mono([1, 0], []), mono([0, 1], []))


class TestRefinement:
    def test_weight_comparison_first(self):
        w = WeightVector.for_ring(A1, [1, 3])
        o = MonomialOrder("grevlex").refine(w)
        assert o.less(mono([2], [0]), mono([0], [1]))  # weight 2 < 3
        assert o.is_term_order

    def test_negative_weight_is_not_term_order(self):
        w = WeightVector.for_ring(A1, [3, -1])
        o = MonomialOrder("grevlex").refine(w)
        assert not o.is_term_order
        # 1 > y1 under this order
        assert o.less(mono([0], [1]), mono([0], [0]))

    def test_lifted_order_x0_first(self):
        o = MonomialOrder("grevlex").lift()
        assert not o.is_term_order
        # larger x0 exponent sorts lower
        assert o.less(mono([2, 0], [0]), mono([1, 5], [3]))

    def test_sort_terms_deterministic(self):
        f = A2.x(1) * A2.y(1) + A2.y(2) + A2.one()
        o = MonomialOrder("grevlex")
        assert o.sort_terms(f) == o.sort_terms(f)


class TestMultiplicativeValidity:
    def test_term_orders_valid_on_weyl_and_sl2(self):
        for kind in KINDS:
            for P in (A1, A2, SL2):
                assert validate_order(P, MonomialOrder(kind))

    def test_weight_refinement_valid_iff_in_pr_spirit(self):
        # (3,-1) in PR(A1): in_w relations still drop; order valid
        assert validate_order(A1, MonomialOrder("grevlex").refine(
            WeightVector.for_ring(A1, [3, -1])
        ))
        # (-1,-1) not in PR: x1*y1 vs 1 has weight -2 < 0: invalid
        assert not validate_order(A1, MonomialOrder("grevlex").refine(
            WeightVector.for_ring(A1, [-1, -1])
        ))

    def test_sl2_weight_order(self):
        assert validate_order(SL2, MonomialOrder("grevlex").refine(
            WeightVector.for_ring(SL2, [-1, 1, 3])
        ))

    def test_rees_shifted_weight_order(self):
        w = WeightVector.for_ring(A2, [2, 2, -1, -1])
        rz = rees_presentation(A2, WeightVector.for_ring(A2, [1, 1, 1, 1]))
        from skewgb.groebner import _rees_weight_order

        _w_plus, shifted = _rees_weight_order(A2, w)
        assert shifted.is_positive()
        order = MonomialOrder("grevlex").refine(shifted)
        assert order.is_term_order
        assert validate_order(rz.ring, order)


class TestLeadingData:
    def test_leading_monomial(self):
        f = A1.y(1) ** 2 - A1.x(1)
        o = MonomialOrder("grevlex")
        assert o.leading_monomial(f) == mono([0], [2])
        wo = o.refine(WeightVector.for_ring(A1, [3, 1]))
        assert wo.leading_monomial(f) == mono([1], [0])

    def test_zero_has_no_lead(self):
        with pytest.raises(SkewGbError):
            MonomialOrder("lex").leading_monomial(A1.zero())

    def test_total_order_random(self):
        rng = random.Random(1)
        o = MonomialOrder("grevlex").refine(WeightVector.for_ring(A2, [1, 2, 3, 1]))
        monos = [
            mono(
                [rng.randrange(4) for _ in range(2)],
                [rng.randrange(4) for _ in range(2)],
            )
            for _ in range(30)
        ]
        keys = [o.key(x) for x in monos]
        # keys induce a total order consistent with equality of monomials
        for mi, ki in zip(monos, keys):
            for mj, kj in zip(monos, keys):
                assert (ki == kj) == (mi == mj)
