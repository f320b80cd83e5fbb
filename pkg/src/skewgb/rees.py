"""Rees homogenization with respect to an integer weight in PR(R).

The Rees ring adjoins a central degree-1 commuting generator x0 (stored
as the first x-variable) and replaces each relation table entry by its
weight homogenization; membership of the weight in PR(R) guarantees all
x0 exponents are nonnegative.  The substitution x0 = 1 recovers R.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RegionError
from .ring import RingPresentation, SkewPoly
from .weights import WeightVector, pr_contains, weight_degree


class ReesPresentation:
    """The homogenized ring R~ together with the weight used to build it."""

    __slots__ = ("base", "weight", "ring", "extended_weight")

    def __init__(self, base: RingPresentation, weight: WeightVector, ring: RingPresentation):
        self.base = base
        self.weight = weight
        self.ring = ring
        self.extended_weight = WeightVector((Fraction(1),) + weight.u, weight.v)

    def x0(self) -> SkewPoly:
        return self.ring.x(1)

    def __eq__(self, other):
        return (
            isinstance(other, ReesPresentation)
            and self.base == other.base
            and self.weight == other.weight
        )

    def __hash__(self):
        return hash((self.base, self.weight))

    def __repr__(self):
        return f"ReesPresentation({self.base.name!r}, w={self.weight})"


def _check_weight(P: RingPresentation, w: WeightVector):
    w.check(P)
    if not w.is_integral():
        raise RegionError("Rees construction requires an integer weight vector")
    if not pr_contains(P, w):
        raise RegionError(f"weight {w} is not in the polynomial region of {P.name}")


def rees_presentation(P: RingPresentation, w: WeightVector) -> ReesPresentation:
    """Homogenized presentation over B[x0] with x0 of weight 1.

    Each monomial x^a (resp. x^a y_l) of a relation table entry is
    multiplied by the x0 power making the relation homogeneous of the
    degree of its left-hand side.
    """
    _check_weight(P, w)
    m, n = P.m, P.n
    q1 = {}
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            entry = P.q1_entry(i, j)
            if entry.is_zero():
                continue
            lhs_deg = w.u[j - 1] + w.v[i - 1]
            table = {}
            for (a, _b), c in entry.terms.items():
                e0 = lhs_deg - w.dot((a, (0,) * n))
                assert e0 >= 0 and e0.denominator == 1
                table[(int(e0),) + a] = c
            q1[(i, j + 1)] = table
    q2 = {}
    for (i, j) in [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > j]:
        entry = P.q2_entry(i, j)
        if entry.is_zero():
            continue
        lhs_deg = w.v[i - 1] + w.v[j - 1]
        table = {}
        for (a, b), c in entry.terms.items():
            e0 = lhs_deg - w.dot((a, b))
            assert e0 >= 0 and e0.denominator == 1
            table[((int(e0),) + a, b)] = c
        q2[(i, j)] = table
    ring = RingPresentation(m + 1, n, q1=q1, q2=q2, name=f"rees({P.name})")
    # display x0 with its own name; remaining variables keep theirs
    ring.var_names = ("x0",) + P.var_names
    return ReesPresentation(P, w, ring)


def homogenize(P: RingPresentation, w: WeightVector, f: SkewPoly, rees: ReesPresentation | None = None) -> SkewPoly:
    """Weight homogenization of a nonzero f into the Rees ring."""
    if rees is None:
        rees = rees_presentation(P, w)
    else:
        _check_weight(P, w)
    if f.is_zero():
        raise RegionError("cannot homogenize the zero polynomial")
    top = weight_degree(f, w)
    terms = {}
    for (a, b), c in f.terms.items():
        e0 = top - w.dot((a, b))
        terms[((int(e0),) + a, b)] = c
    return SkewPoly(rees.ring, terms)


def dehomogenize(f: SkewPoly, base: RingPresentation) -> SkewPoly:
    """Image of a Rees-ring element under x0 -> 1, in standard form."""
    terms = {}
    for (a, b), c in f.terms.items():
        key = (a[1:], b)
        acc = terms.get(key, Fraction(0)) + c
        if acc:
            terms[key] = acc
        elif key in terms:
            del terms[key]
    return SkewPoly(base, terms)


def strip_x0(f: SkewPoly) -> SkewPoly:
    """Divide a Rees-ring element by the largest common power of x0."""
    if f.is_zero():
        return f
    k = min(a[0] for (a, _b) in f.terms)
    if k == 0:
        return f
    return SkewPoly(f.ring, {((a[0] - k,) + a[1:], b): c for (a, b), c in f.terms.items()})
