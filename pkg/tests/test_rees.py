"""Rees homogenization: ring structure, roundtrips, centrality of x0."""

import random
from fractions import Fraction

import pytest

from skewgb import (
    RegionError,
    WeightVector,
    dehomogenize,
    homogenize,
    pr_sample_positive,
    rees_presentation,
    sl2_presentation,
    strip_x0,
    validate_presentation,
    weight_degree,
    weyl_presentation,
)
from skewgb.weights import initial_form

from test_ring import random_poly

A1 = weyl_presentation(1)
A2 = weyl_presentation(2)
SL2 = sl2_presentation()


def _rees(P, entries):
    return rees_presentation(P, WeightVector.for_ring(P, entries))


class TestConstruction:
    def test_weight_must_be_integral_and_in_pr(self):
        with pytest.raises(RegionError):
            _rees(A1, [Fraction(1, 2), 1])
        with pytest.raises(RegionError):
            _rees(A1, [1, -1])

    def test_weyl_relations_homogenized(self):
        rz = _rees(A2, [2, 2, -1, -1])
        R = rz.ring
        # y_i x_i - x_i y_i = x0^{u_i+v_i} = x0 here
        assert R.q1_entry(1, 2) == rz.x0()  # x index shifted by x0
        assert R.q1_entry(2, 3) == rz.x0()
        assert R.q1_entry(1, 3).is_zero()

    def test_sl2_relations_homogenized(self):
        rz = _rees(SL2, [1, 1, 1])
        R = rz.ring
        # [y2, y3] = 2 y3 has degree drop 1: entry is 2 x0 y3
        assert R.q2_entry(3, 2) == -2 * rz.x0() * R.y(3)
        assert R.q2_entry(3, 1) == -rz.x0() * R.y(2)

    def test_rees_ring_is_consistent(self):
        for P, entries in ((A1, [1, 1]), (A2, [2, 2, -1, -1]), (SL2, [-1, 1, 3])):
            rz = _rees(P, entries)
            assert validate_presentation(rz.ring)

    def test_x0_is_central(self):
        rng = random.Random(3)
        rz = _rees(A2, [2, 1, -1, 3])
        for _ in range(10):
            f = random_poly(rz.ring, rng)
            assert rz.x0() * f == f * rz.x0()


class TestHomogenize:
    def test_roundtrip(self):
        rng = random.Random(5)
        w = WeightVector.for_ring(A2, [2, 2, -1, 3])
        rz = rees_presentation(A2, w)
        for _ in range(15):
            f = random_poly(A2, rng)
            if f.is_zero():
                continue
            h = homogenize(A2, w, f, rz)
            assert dehomogenize(h, A2) == f

    def test_result_is_homogeneous(self):
        w = WeightVector.for_ring(A2, [2, 2, -1, -1])
        rz = rees_presentation(A2, w)
        f = A2.x(1) * A2.y(1) + A2.y(2) ** 2 + A2.one()
        h = homogenize(A2, w, f, rz)
        degs = {rz.extended_weight.dot(key) for key in h.terms}
        assert len(degs) == 1

    def test_homogenize_example_values(self):
        w = WeightVector.for_ring(A2, [2, 2, -1, -1])
        rz = rees_presentation(A2, w)
        h = homogenize(A2, w, A2.y(1) - A2.one(), rz)
        assert h == rz.x0() * rz.ring.y(1) - rz.ring.one()

    def test_products_of_homogenizations(self):
        # homogenization is multiplicative up to an x0 power
        rng = random.Random(11)
        w = WeightVector.for_ring(A1, [3, -1])
        rz = rees_presentation(A1, w)
        for _ in range(10):
            f = random_poly(A1, rng)
            g = random_poly(A1, rng)
            if f.is_zero() or g.is_zero() or (f * g).is_zero():
                continue
            hf, hg, hfg = (homogenize(A1, w, p, rz) for p in (f, g, f * g))
            prod = hf * hg
            drop = weight_degree(f, w) + weight_degree(g, w) - weight_degree(
                f * g, w
            )
            assert drop >= 0 and drop == int(drop)
            assert prod == rz.x0() ** int(drop) * hfg

    def test_strip_x0(self):
        rz = _rees(A1, [1, 1])
        R = rz.ring
        f = rz.x0() ** 2 * R.y(1) + rz.x0() ** 3
        assert strip_x0(f) == R.y(1) + rz.x0()
        assert strip_x0(R.zero()).is_zero()

    def test_zero_rejected(self):
        with pytest.raises(Exception):
            homogenize(A1, WeightVector.for_ring(A1, [1, 1]), A1.zero())
