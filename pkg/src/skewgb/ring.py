"""Exact arithmetic in an almost centralizing extension of k[x_1..x_m].

The ring R is generated by commuting x_1..x_m and skew y_1..y_n subject
to relation tables Q1 (values of y_i x_j - x_j y_i, polynomials in x)
and Q2 (values of y_i y_j - y_j y_i, at most linear in the y's).  Every
element has a unique standard expression sum kappa_{a,b} x^a y^b; the
``SkewPoly`` class stores exactly that normal form with exact rational
coefficients.  All values are immutable after construction and every
operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .errors import PresentationError
from .kernel import MulKernel

Exponents = Tuple[int, ...]
MonomialKey = Tuple[Exponents, Exponents]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _canon_xpoly(entry, m: int):
    """Canonicalize a commutative-in-x table entry to sorted item pairs."""
    items: Dict[Exponents, Fraction] = {}
    for xe, coeff in dict(entry).items():
        xe = tuple(int(e) for e in xe)
        if len(xe) != m or any(e < 0 for e in xe):
            raise PresentationError(f"bad x-exponent {xe} in Q1 entry")
        coeff = _as_fraction(coeff)
        if coeff:
            items[xe] = items.get(xe, _ZERO) + coeff
    return tuple(sorted((xe, c) for xe, c in items.items() if c))


def _canon_xypoly(entry, m: int, n: int):
    """Canonicalize a Q2 table entry to sorted ((xexp, yexp), coeff) pairs."""
    items: Dict[MonomialKey, Fraction] = {}
    for key, coeff in dict(entry).items():
        xe, ye = key
        xe = tuple(int(e) for e in xe)
        ye = tuple(int(e) for e in ye)
        if len(xe) != m or len(ye) != n or any(e < 0 for e in xe + ye):
            raise PresentationError(f"bad exponent {key} in Q2 entry")
        coeff = _as_fraction(coeff)
        if coeff:
            items[(xe, ye)] = items.get((xe, ye), _ZERO) + coeff
    return tuple(sorted((k, c) for k, c in items.items() if c))


class RingPresentation:
    """Generators and relation tables of an almost centralizing extension.

    ``q1`` maps (i, j) with 1 <= i <= n, 1 <= j <= m to a polynomial in x
    given as {x_exponent_tuple: coefficient}; ``q2`` maps (i, j) with
    1 <= i, j <= n to a polynomial of y-degree at most one given as
    {(x_exponent_tuple, y_exponent_tuple): coefficient}.  Missing (j, i)
    entries are filled in antisymmetrically.
    """

    __slots__ = ("m", "n", "_q1", "_q2", "name", "_kernel", "_graded", "var_names")

    def __init__(self, m: int, n: int, q1=None, q2=None, name: str = "custom"):
        if m < 0 or n < 0:
            raise PresentationError("generator counts must be nonnegative")
        self.m = m
        self.n = n
        self.name = name
        self.var_names = tuple(f"x{j}" for j in range(1, m + 1)) + tuple(
            f"y{i}" for i in range(1, n + 1)
        )
        q1 = q1 or {}
        q2 = q2 or {}
        table1 = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, m + 1):
                row.append(_canon_xpoly(q1.get((i, j), {}), m))
            table1.append(tuple(row))
        self._q1 = tuple(table1)

        table2: Dict[Tuple[int, int], tuple] = {}
        for (i, j), entry in q2.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise PresentationError(f"Q2 index {(i, j)} out of range")
            canon = _canon_xypoly(entry, m, n)
            if i == j and canon:
                raise PresentationError(f"Q2[{i},{i}] must vanish (antisymmetry)")
            for (xe, ye), _c in canon:
                if sum(ye) > 1:
                    raise PresentationError(f"Q2[{i},{j}] has y-degree > 1")
            table2[(i, j)] = canon
        # antisymmetric completion for missing mirror entries
        for (i, j), canon in list(table2.items()):
            if (j, i) not in table2:
                table2[(j, i)] = tuple((k, -c) for k, c in canon)
        self._q2 = {k: v for k, v in sorted(table2.items()) if v}
        self._kernel = None
        self._graded = None

    # -- table access --------------------------------------------------

    def q1_entry(self, i: int, j: int) -> "SkewPoly":
        """Value of y_i x_j - x_j y_i as an element of R (1-based)."""
        entry = self._q1[i - 1][j - 1]
        zero_y = (0,) * self.n
        return SkewPoly(self, {(xe, zero_y): c for xe, c in entry})

    def q2_entry(self, i: int, j: int) -> "SkewPoly":
        """Value of y_i y_j - y_j y_i as an element of R (1-based)."""
        entry = self._q2.get((i, j), ())
        return SkewPoly(self, {key: c for key, c in entry})

    @property
    def is_commutative(self) -> bool:
        return all(not row or all(not e for e in row) for row in self._q1) and not self._q2

    def _canonical(self):
        return (self.m, self.n, self._q1, tuple(sorted(self._q2.items())))

    def __eq__(self, other):
        return isinstance(other, RingPresentation) and self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def __repr__(self):
        return f"RingPresentation({self.name!r}, m={self.m}, n={self.n})"

    def kernel(self) -> MulKernel:
        if self._kernel is None:
            q1 = tuple(self._q1)
            q2 = {(i - 1, j - 1): entry for (i, j), entry in self._q2.items()}
            self._kernel = MulKernel(self.m, self.n, q1, q2)
        return self._kernel

    def graded(self) -> "RingPresentation":
        """The associated commutative polynomial ring S on the same variables."""
        if self.is_commutative:
            return self
        if self._graded is None:
            self._graded = RingPresentation(self.m, self.n, name=f"gr({self.name})")
        return self._graded

    # -- element constructors -----------------------------------------

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, {})

    def one(self) -> "SkewPoly":
        return self.constant(1)

    def constant(self, value) -> "SkewPoly":
        value = _as_fraction(value)
        if not value:
            return self.zero()
        return SkewPoly(self, {((0,) * self.m, (0,) * self.n): value})

    def x(self, j: int) -> "SkewPoly":
        if not 1 <= j <= self.m:
            raise PresentationError(f"x index {j} out of range 1..{self.m}")
        a = tuple(1 if k == j - 1 else 0 for k in range(self.m))
        return SkewPoly(self, {(a, (0,) * self.n): _ONE})

    def y(self, i: int) -> "SkewPoly":
        if not 1 <= i <= self.n:
            raise PresentationError(f"y index {i} out of range 1..{self.n}")
        b = tuple(1 if k == i - 1 else 0 for k in range(self.n))
        return SkewPoly(self, {((0,) * self.m, b): _ONE})

    def monomial(self, a: Iterable[int], b: Iterable[int], coeff=1) -> "SkewPoly":
        a = tuple(int(e) for e in a)
        b = tuple(int(e) for e in b)
        if len(a) != self.m or len(b) != self.n or any(e < 0 for e in a + b):
            raise PresentationError(f"bad monomial ({a}, {b})")
        coeff = _as_fraction(coeff)
        return SkewPoly(self, {(a, b): coeff} if coeff else {})

    def generators(self):
        return [self.x(j) for j in range(1, self.m + 1)] + [
            self.y(i) for i in range(1, self.n + 1)
        ]


class SkewPoly:
    """Element of R in its unique standard expression."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingPresentation, terms: Mapping[MonomialKey, Fraction]):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        zero_key = ((0,) * self.ring.m, (0,) * self.ring.n)
        return not self.terms or set(self.terms) == {zero_key}

    def monomials(self):
        return list(self.terms)

    def coefficient(self, key: MonomialKey) -> Fraction:
        return self.terms.get(key, _ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(a) + sum(b) for a, b in self.terms)

    def sorted_terms(self):
        """Terms in a fixed display order: total degree, then exponents, descending."""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0][0]) + sum(item[0][1]), item[0]),
            reverse=True,
        )

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "SkewPoly"):
        if self.ring != other.ring:
            raise PresentationError("operands over different presentations")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            acc = terms.get(key, _ZERO) + c
            if acc:
                terms[key] = acc
            elif key in terms:
                del terms[key]
        return SkewPoly(self.ring, terms)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def scale(self, value) -> "SkewPoly":
        value = _as_fraction(value)
        if not value:
            return self.ring.zero()
        return SkewPoly(self.ring, {k: c * value for k, c in self.terms.items()})

    def __mul__(self, other) -> "SkewPoly":
        if not isinstance(other, SkewPoly):
            return self.scale(other)
        self._check(other)
        return SkewPoly(self.ring, self.ring.kernel().multiply(self.terms, other.terms))

    def __rmul__(self, other) -> "SkewPoly":
        # scalars only; ring elements always hit __mul__
        return self.scale(other)

    def __pow__(self, exponent: int) -> "SkewPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined in R")
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- display -------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.var_names
        chunks = []
        for (a, b), coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, a + b):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


# -- shipped presentations --------------------------------------------


def weyl_presentation(n: int) -> RingPresentation:
    """The Weyl algebra A_n: m = n, y_i x_j - x_j y_i = delta_ij, Q2 = 0."""
    if n < 1:
        raise PresentationError("weyl_presentation requires n >= 1")
    q1 = {(i, i): {(0,) * n: 1} for i in range(1, n + 1)}
    return RingPresentation(n, n, q1=q1, name=f"weyl{n}")


def commutative_presentation(m: int, n: int = 0, name: str | None = None) -> RingPresentation:
    """The commutative polynomial ring on m x-variables and n y-variables."""
    return RingPresentation(m, n, name=name or f"poly{m}+{n}")


def sl2_presentation() -> RingPresentation:
    """U(sl2) on the standard basis y1, y2, y3.

    Brackets: y2 y3 - y3 y2 = 2 y3, y2 y1 - y1 y2 = -2 y1,
    y1 y3 - y3 y1 = y2.
    """
    e3 = lambda k: tuple(1 if t == k else 0 for t in range(3))
    q2 = {
        (2, 3): {((), e3(2)): 2},
        (2, 1): {((), e3(0)): -2},
        (1, 3): {((), e3(1)): 1},
    }
    return RingPresentation(0, 3, q2=q2, name="sl2")


# -- operations --------------------------------------------------------


def multiply(P: RingPresentation, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Standard expression of the product f * g in R."""
    if f.ring != P or g.ring != P:
        raise PresentationError("operands do not belong to the given presentation")
    return f * g


def validate_presentation(P: RingPresentation) -> bool:
    """Consistency check of the relation tables.

    Verifies antisymmetry of Q2, the y-degree bound on its entries, and
    associativity of the normalized product on all generator triples.
    This is a necessary condition for the standard monomials to be a
    k-basis (an overlap/diamond check), not a certified sufficient one.
    """
    n = P.n
    for i in range(1, n + 1):
        if not P.q2_entry(i, i).is_zero():
            return False
        for j in range(1, n + 1):
            if P.q2_entry(i, j) != -P.q2_entry(j, i):
                return False
    gens = P.generators()
    for f in gens:
        for g in gens:
            fg = f * g
            for h in gens:
                if (fg * h) != f * (g * h):
                    return False
    return True
