"""Groebner cones, epsilon thresholds, weight walks and the Groebner fan.

The equivalence class of a weight (all weights giving the same initial
ideal) is a relatively open polyhedral cone cut out by the exponent
differences of a suitably marked reduced Groebner basis: exponents tied
at the top of each basis element give equalities, everything below gives
strict inequalities, and the defining half-spaces of the polynomial
region are always included.  Full-dimensional cones correspond to
monomial initial ideals; the fan is enumerated by crossing facets.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import BudgetExceeded, RegionError, SkewGbError
from .groebner import (
    MonomialIdeal,
    _integral_scale,
    comm_groebner,
    ideals_equal_comm,
    initial_ideal_weight,
    groebner_wrt_weight,
)
from .orders import MonomialOrder
from .polyhedra import find_point, irredundant_strict
from .ring import RingPresentation, SkewPoly
from .weights import (
    HalfspaceSystem,
    WeightVector,
    _normalize_form,
    initial_form,
    pr_contains,
    pr_halfspaces,
    pr_sample_positive,
)

_MAX_CONES_DEFAULT = 512
_EPS_REFINE_ROUNDS = 40


def _form(entries) -> Tuple[Fraction, ...]:
    return _normalize_form(tuple(Fraction(x) for x in entries))


def _mono_vec(mono) -> Tuple[Fraction, ...]:
    a, b = mono
    return tuple(Fraction(e) for e in a + b)


def _diff(e, f) -> Tuple[Fraction, ...]:
    return tuple(x - y for x, y in zip(_mono_vec(e), _mono_vec(f)))


def _canonical_eq(form) -> Tuple[Fraction, ...]:
    form = _normalize_form(tuple(form))
    lead = next((x for x in form if x), None)
    if lead is not None and lead < 0:
        form = tuple(-x for x in form)
    return form


def _integral_point(entries, m: int) -> WeightVector:
    denom = 1
    for x in entries:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    scaled = [x * denom for x in entries]
    return WeightVector(scaled[:m], scaled[m:])


class GroebnerCone:
    """The equivalence class of a weight, with its defining constraints.

    ``equalities`` hold with value 0 on the cone and ``strict`` forms are
    positive; both are normalized exponent-difference forms in the m + n
    weight coordinates.  ``basis`` is the marked Groebner basis that cut
    the cone out and ``initial_gens`` the canonical generators of the
    shared initial ideal.  ``inside_gr`` records whether the class was
    certified to contain a positive weight.
    """

    __slots__ = (
        "ring",
        "weight",
        "equalities",
        "strict",
        "basis",
        "initial_gens",
        "inside_gr",
        "positive_rep",
    )

    def __init__(
        self,
        ring: RingPresentation,
        weight: WeightVector,
        equalities,
        strict,
        basis,
        initial_gens,
        inside_gr: bool,
        positive_rep: Optional[WeightVector],
    ):
        self.ring = ring
        self.weight = weight
        self.equalities = tuple(sorted(set(equalities)))
        self.strict = tuple(sorted(set(strict)))
        self.basis = tuple(basis)
        self.initial_gens = tuple(initial_gens)
        self.inside_gr = inside_gr
        self.positive_rep = positive_rep

    @property
    def dim_deficiency(self) -> int:
        """Number of independent equality constraints (0 for maximal cones)."""
        from .polyhedra import _gauss

        return len(_gauss(self.ring.m + self.ring.n, self.equalities))

    def is_maximal(self) -> bool:
        return not self.equalities

    def key(self):
        """Canonical identifier: the initial ideal's generator supports."""
        return tuple(
            tuple(sorted(h.terms)) for h in self.initial_gens
        )

    def monomial_initial_ideal(self) -> MonomialIdeal:
        if not all(len(h.terms) == 1 for h in self.initial_gens):
            raise SkewGbError("initial ideal of a non-maximal cone is not monomial")
        return MonomialIdeal(
            self.ring.m, self.ring.n, [next(iter(h.terms)) for h in self.initial_gens]
        )

    def contains(self, w: WeightVector, closure: bool = False) -> bool:
        entries = w.entries
        for form in self.equalities:
            if sum(c * x for c, x in zip(form, entries)) != 0:
                return False
        for form in self.strict:
            val = sum(c * x for c, x in zip(form, entries))
            if val < 0 or (val == 0 and not closure):
                return False
        return True

    def halfspaces(self) -> HalfspaceSystem:
        return HalfspaceSystem(self.ring.m, self.ring.n, self.strict)

    def to_text(self) -> str:
        lines = [f"weight {self.weight}"]
        lines.append("initial ideal: " + ", ".join(str(h) for h in self.initial_gens))
        for form in self.equalities:
            lines.append("[" + " ".join(str(c) for c in form) + "] = 0")
        for form in self.strict:
            lines.append("[" + " ".join(str(c) for c in form) + "] > 0")
        lines.append(f"inside GR: {'yes' if self.inside_gr else 'unknown'}")
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, GroebnerCone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        kind = "maximal" if self.is_maximal() else "non-maximal"
        return f"GroebnerCone({kind}, weight={self.weight})"


def _cone_forms(P: RingPresentation, basis, w: WeightVector):
    """Equalities and strict forms of the class of w cut out by a basis."""
    equalities = []
    strict = []
    for g in basis:
        top = max(w.dot(key) for key in g.terms)
        winners = [key for key in g.terms if w.dot(key) == top]
        rest = [key for key in g.terms if w.dot(key) != top]
        e0 = winners[0]
        for e in winners[1:]:
            form = _canonical_eq(_diff(e, e0))
            if any(form):
                equalities.append(form)
        for e in winners:
            for f in rest:
                form = _normalize_form(_diff(e, f))
                if any(form):
                    strict.append(form)
    for form in pr_halfspaces(P).strict:
        strict.append(form)
    return equalities, strict


def _reduced_marked_basis(
    P: RingPresentation, gens: Sequence[SkewPoly], w: WeightVector, **kw
):
    """A reduced basis for the class of w, plus GR certification data.

    Returns (basis, inside_gr, positive_rep).  For nonnegative weights
    the weight-refined order is a term order and the completed basis is
    already reduced.  Otherwise the class is searched for a positive
    representative: if one is found and certified (same initial ideal),
    the reduced basis is recomputed there; if not, the possibly
    unreduced basis from the Rees route is used best-effort.
    """
    w.check(P)
    w_int = _integral_scale(w)
    basis, _ord = groebner_wrt_weight(P, gens, w_int, **kw)
    if w_int.is_positive():
        return basis, True, w_int
    ok, rep = _class_has_positive(P, basis, w_int, gens, **kw)
    if not ok:
        return basis, False, None
    if w_int.is_nonnegative():
        # already reduced (term order); keep the original marking
        return basis, True, rep
    reduced, _ord = groebner_wrt_weight(P, gens, rep, **kw)
    return reduced, True, rep


def _class_has_positive(
    P: RingPresentation, basis, w: WeightVector, gens, **kw
) -> Tuple[bool, Optional[WeightVector]]:
    """Search the class of w for a certified positive representative."""
    dim = P.m + P.n
    equalities, strict = _cone_forms(P, basis, w)
    coord = [
        tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))
        for i in range(dim)
    ]
    point = find_point(dim, equalities, (), list(strict) + coord)
    if point is None:
        return False, None
    rep = _integral_point(list(point), P.m)
    lhs = initial_ideal_weight(P, gens, w, **kw)
    rhs = initial_ideal_weight(P, gens, rep, **kw)
    if not ideals_equal_comm(P.graded(), lhs, rhs):
        return False, None
    return True, rep


def cone_of(
    P: RingPresentation, gens: Sequence[SkewPoly], w: WeightVector, **kw
) -> GroebnerCone:
    """The Groebner cone (equivalence class) of w for the ideal of gens."""
    w.check(P)
    if not pr_contains(P, w):
        raise RegionError(f"weight {w} not in the polynomial region")
    w_int = _integral_scale(w)
    basis, inside_gr, rep = _reduced_marked_basis(P, gens, w_int, **kw)
    equalities, strict = _cone_forms(P, basis, w_int)
    dim = P.m + P.n
    eqs = sorted(set(e for e in equalities if any(e)))
    stricts = sorted(set(s for s in strict if any(s)))
    stricts = sorted(irredundant_strict(dim, eqs, stricts))
    init = initial_ideal_weight(P, gens, w_int, **kw)
    return GroebnerCone(P, w_int, eqs, stricts, basis, init, inside_gr, rep)


def same_class(
    P: RingPresentation,
    gens: Sequence[SkewPoly],
    w1: WeightVector,
    w2: WeightVector,
    **kw,
) -> bool:
    """Whether two weights induce the same initial ideal in S."""
    lhs = initial_ideal_weight(P, gens, w1, **kw)
    rhs = initial_ideal_weight(P, gens, w2, **kw)
    return ideals_equal_comm(P.graded(), lhs, rhs)


def gr_region_contains(
    P: RingPresentation, gens: Sequence[SkewPoly], w: WeightVector, **kw
) -> bool:
    """Whether the class of w contains a positive weight (w in GR(I))."""
    w.check(P)
    if not pr_contains(P, w):
        return False
    w_int = _integral_scale(w)
    if w_int.is_positive():
        return True
    basis, _ord = groebner_wrt_weight(P, gens, w_int, **kw)
    ok, _rep = _class_has_positive(P, basis, w_int, gens, **kw)
    return ok


# -- epsilon threshold -------------------------------------------------


def epsilon_threshold(
    P: RingPresentation,
    gens: Sequence[SkewPoly],
    w: WeightVector,
    w_prime: WeightVector,
    verify: bool = True,
    **kw,
) -> Fraction:
    """Largest eps0 such that for all 0 < eps < eps0 the perturbed weight
    w + eps*w' stays in the polynomial region and satisfies
    in_{w + eps w'}(I) = in_{w'}(in_w(I)).

    The bound is exact, read off from exponent differences on a marked
    basis; when ``verify`` is set the identity is checked by direct
    computation at eps0/2.
    """
    w.check(P)
    w_prime.check(P)
    if not pr_contains(P, w):
        raise RegionError(f"weight {w} not in the polynomial region")
    w_int = _integral_scale(w)
    basis, _inside, _rep = _reduced_marked_basis(P, gens, w_int, **kw)
    bounds: List[Fraction] = []
    for g in basis:
        top = max(w_int.dot(key) for key in g.terms)
        winners = [key for key in g.terms if w_int.dot(key) == top]
        rest = [key for key in g.terms if w_int.dot(key) != top]
        ptop = max(w_prime.dot(key) for key in winners)
        new_winners = [key for key in winners if w_prime.dot(key) == ptop]
        for e in new_winners:
            for f in rest:
                drop = w_int.dot(e) - w_int.dot(f)
                rise = w_prime.dot(f) - w_prime.dot(e)
                if rise > 0:
                    bounds.append(drop / rise)
    for form in pr_halfspaces(P).strict:
        val = sum(c * x for c, x in zip(form, w_int.entries))
        slope = sum(c * x for c, x in zip(form, w_prime.entries))
        if slope < 0:
            bounds.append(val / -slope)
    eps0 = min(bounds) if bounds else Fraction(1)
    if verify:
        eps = eps0 / 2
        perturbed = w_int + w_prime.scale(eps)
        lhs = initial_ideal_weight(P, gens, perturbed, **kw)
        inner = initial_ideal_weight(P, gens, w_int, **kw)
        S = P.graded()
        if inner:
            rhs = initial_ideal_weight(S, inner, w_prime, **kw)
        else:
            rhs = []
        if not ideals_equal_comm(S, lhs, rhs):
            raise SkewGbError(
                "epsilon threshold verification failed at eps0/2; "
                f"w={w_int} w'={w_prime} eps0={eps0}"
            )
    return eps0


# -- walks -------------------------------------------------------------


class WalkSegment:
    """One cone visited along a straight-line walk, with its parameter range."""

    __slots__ = ("t_lo", "t_hi", "cone")

    def __init__(self, t_lo: Fraction, t_hi: Fraction, cone: GroebnerCone):
        self.t_lo = t_lo
        self.t_hi = t_hi
        self.cone = cone

    def __repr__(self):
        return f"WalkSegment([{self.t_lo}, {self.t_hi}], {self.cone!r})"


def _segment_point(w_start: WeightVector, w_end: WeightVector, t: Fraction):
    return w_start.scale(1 - t) + w_end.scale(t)


def walk(
    P: RingPresentation,
    gens: Sequence[SkewPoly],
    w_start: WeightVector,
    w_end: WeightVector,
    max_cones: int = _MAX_CONES_DEFAULT,
    **kw,
) -> List[WalkSegment]:
    """Walk the segment from w_start to w_end through the Groebner fan.

    Both endpoints must lie in the polynomial region, and so must the
    whole segment (the region is convex, so this is automatic).  Returns
    the visited cones with exact rational breakpoints; each wall is
    certified by checking that the initial ideals on both sides match
    the adjacent cones.
    """
    for w in (w_start, w_end):
        w.check(P)
        if not pr_contains(P, w):
            raise RegionError(f"walk endpoint {w} not in the polynomial region")
    segments: List[WalkSegment] = []
    t_enter = Fraction(0)
    w_rep = w_start
    while True:
        if len(segments) >= max_cones:
            raise BudgetExceeded("walk cones", max_cones)
        cone = cone_of(P, gens, w_rep, **kw)
        # exit parameter: first root of a strict form along the segment
        t_exit = Fraction(1)
        entries_s = w_start.entries
        entries_e = w_end.entries
        for form in cone.strict:
            vs = sum(c * x for c, x in zip(form, entries_s))
            ve = sum(c * x for c, x in zip(form, entries_e))
            if ve >= vs:
                continue
            # value (1-t)vs + t*ve decreases; root at vs/(vs-ve)
            root = vs / (vs - ve)
            if t_enter < root < t_exit:
                t_exit = root
        segments.append(WalkSegment(t_enter, t_exit, cone))
        if t_exit >= 1:
            break
        # certify the wall: the one-sided initial ideal matches the cone
        before = _segment_point(w_start, w_end, (t_enter + t_exit) / 2)
        if not same_class(P, gens, before, cone.weight, **kw):
            raise SkewGbError(f"walk certification failed before wall t={t_exit}")
        # step strictly past the wall, close enough to stay in one cone
        t_next = t_exit + (Fraction(1) - t_exit) / 2
        while True:
            w_next = _segment_point(w_start, w_end, t_next)
            half = t_exit + (t_next - t_exit) / 2
            if same_class(P, gens, w_next, _segment_point(w_start, w_end, half), **kw):
                break
            t_next = half
            if t_next - t_exit < Fraction(1, 2 ** _EPS_REFINE_ROUNDS):
                raise BudgetExceeded("walk wall refinement", _EPS_REFINE_ROUNDS)
        # the wall itself is a genuine lower-dimensional class
        wall_cone = cone_of(P, gens, _segment_point(w_start, w_end, t_exit), **kw)
        if wall_cone.is_maximal():
            raise SkewGbError(f"expected a wall at t={t_exit}, found a maximal cone")
        t_enter = t_exit
        w_rep = _segment_point(w_start, w_end, t_next)
    return segments


# -- fan enumeration ---------------------------------------------------


class GroebnerFan:
    """Maximal Groebner cones covering the polynomial region."""

    __slots__ = ("ring", "cones", "adjacency", "complete")

    def __init__(self, ring, cones, adjacency, complete: bool):
        self.ring = ring
        self.cones = tuple(cones)
        self.adjacency = frozenset(adjacency)
        self.complete = complete

    def cone_containing(self, w: WeightVector) -> Optional[GroebnerCone]:
        for cone in self.cones:
            if cone.contains(w):
                return cone
        return None

    def to_text(self) -> str:
        lines = [f"{len(self.cones)} maximal cones" + ("" if self.complete else " (partial)")]
        for i, cone in enumerate(self.cones, 1):
            lines.append(f"-- cone {i} --")
            lines.append(cone.to_text())
        return "\n".join(lines)

    def __repr__(self):
        flag = "" if self.complete else ", partial"
        return f"GroebnerFan({len(self.cones)} cones{flag})"


def _generic_seed(
    P: RingPresentation, gens: Sequence[SkewPoly], **kw
) -> WeightVector:
    """A positive weight whose initial ideal is monomial."""
    w = pr_sample_positive(P)
    cone = cone_of(P, gens, w, **kw)
    if cone.is_maximal():
        return _integral_scale(w)
    # nudge into the interior of an adjacent maximal cone: perturb along
    # a direction violating one equality while keeping all stricts
    dim = P.m + P.n
    for form in cone.equalities:
        point = find_point(
            dim,
            [e for e in cone.equalities if e != form],
            (),
            list(cone.strict) + [form],
        )
        if point is None:
            continue
        d = WeightVector(point[: P.m], point[P.m:])
        eps = epsilon_threshold(P, gens, w, d, verify=False, **kw)
        candidate = _integral_scale(w + d.scale(eps / 2))
        if cone_of(P, gens, candidate, **kw).is_maximal():
            return candidate
    raise SkewGbError("could not find a generic seed weight")


def _cross_facet(
    P: RingPresentation,
    gens: Sequence[SkewPoly],
    cone: GroebnerCone,
    facet,
    pr_forms,
    **kw,
) -> Optional[GroebnerCone]:
    """The maximal cone on the far side of a facet, or None when the
    facet lies on the boundary of the polynomial region."""
    if facet in pr_forms:
        return None
    dim = P.m + P.n
    others = [s for s in cone.strict if s != facet]
    point = find_point(dim, list(cone.equalities) + [facet], (), others)
    if point is None:
        return None
    p = _integral_point(list(point), P.m)
    if not pr_contains(P, p):
        return None
    d = WeightVector(
        [-x for x in facet[: P.m]], [-x for x in facet[P.m:]]
    )
    eps = epsilon_threshold(P, gens, p, d, verify=False, **kw)
    candidate = _integral_scale(p + d.scale(eps / 2))
    if not pr_contains(P, candidate):
        return None
    neighbor = cone_of(P, gens, candidate, **kw)
    if not neighbor.is_maximal():
        raise SkewGbError("facet crossing landed on a non-maximal cone")
    return neighbor


def enumerate_fan(
    P: RingPresentation,
    gens: Sequence[SkewPoly],
    seed: Optional[WeightVector] = None,
    max_cones: int = _MAX_CONES_DEFAULT,
    **kw,
) -> GroebnerFan:
    """All maximal Groebner cones, found by breadth-first facet crossing.

    When the ideal is zero or contains a unit the fan is the single cone
    equal to the whole polynomial region.  If ``max_cones`` is exceeded
    a partial fan is returned with ``complete`` set to False.
    """
    gens = [g for g in gens if not g.is_zero()]
    pr = pr_halfspaces(P)
    if not gens:
        w0 = pr_sample_positive(P)
        trivial = GroebnerCone(P, _integral_scale(w0), (), pr.strict, (), (), True, None)
        return GroebnerFan(P, [trivial], (), True)
    if seed is None:
        seed = _generic_seed(P, gens, **kw)
    first = cone_of(P, gens, seed, **kw)
    if not first.is_maximal():
        raise SkewGbError("seed weight lies on a wall; supply a generic seed")
    if any(len(h.terms) == 1 and not any(_mono_vec(next(iter(h.terms)))) for h in first.initial_gens):
        # the ideal contains a unit: one cone covering the whole region
        return GroebnerFan(P, [first], (), True)
    pr_forms = set(pr.strict)
    cones: Dict[tuple, GroebnerCone] = {first.key(): first}
    adjacency: Set[frozenset] = set()
    queue = [first]
    complete = True
    while queue:
        cone = queue.pop(0)
        for facet in cone.strict:
            neighbor = _cross_facet(P, gens, cone, facet, pr_forms, **kw)
            if neighbor is None:
                continue
            k = neighbor.key()
            if k != cone.key():
                adjacency.add(frozenset((cone.key(), k)))
            if k not in cones:
                if len(cones) >= max_cones:
                    complete = False
                    continue
                cones[k] = neighbor
                queue.append(neighbor)
    ordered = sorted(cones.values(), key=lambda c: c.key())
    return GroebnerFan(P, ordered, adjacency, complete)
