"""Graded commutative Q-algebras of named base symbols with built-in relations.

Three ring shapes occur:

* the ring over the total space X of the family (symbols L, omega, and a point
  class when the base is a point),
* the ring over a boundary family X^theta (adds the two marked sections
  theta_x, theta_y plus pullbacks psi_x, psi_y, tauL from the boundary base),
* the ring over the boundary base T itself (psi_x, psi_y, tauL).

Relations enforced in canonical form: theta_x * theta_y = 0, the section
self-intersection theta^r = (-psi)^(r-1) * theta, omega * theta = psi * theta,
and truncation above the dimension of the underlying space.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

_ring_counter = itertools.count()

KIND_UNIT = "unit"
KIND_CANONICAL = "canonical"
KIND_LINE_BUNDLE = "line-bundle"
KIND_SECTION = "section"
KIND_PSI = "psi"
KIND_PULLBACK = "node-section-pullback"
KIND_POINT = "point"


class BaseSymbol:
    __slots__ = ("name", "degree", "kind", "on_base")

    def __init__(self, name, degree, kind, on_base=False):
        self.name = name
        self.degree = degree
        self.kind = kind
        # on_base: pulled back from the base of the fibration (T), not a fiber class
        self.on_base = on_base

    def __repr__(self):
        return "BaseSymbol(%r, deg=%d, %s)" % (self.name, self.degree, self.kind)


class Ring:
    """A ring instance; symbols and relations are fixed at construction."""

    def __init__(self, label, dim, symbols, psi_of=None):
        self.ring_id = next(_ring_counter)
        self.label = label
        self.dim = dim  # dimension of the underlying space; higher degrees vanish
        self.symbols = {}
        for sym in symbols:
            if sym.name in self.symbols:
                raise ValueError("duplicate symbol %r" % sym.name)
            self.symbols[sym.name] = sym
        # section symbol name -> its psi symbol name
        self.psi_of = dict(psi_of or {})

    def symbol_names(self):
        return sorted(self.symbols)

    def degree(self, mono):
        return sum(self.symbols[name].degree * p for name, p in mono)

    def base_part(self, mono):
        return tuple((n, p) for n, p in mono if self.symbols[n].on_base)

    def fiber_part(self, mono):
        return tuple((n, p) for n, p in mono if not self.symbols[n].on_base)

    def normalize_monomial(self, mono):
        """Canonical (coefficient, monomial) for a raw exponent map, or None if zero."""
        powers = {}
        for name, p in mono:
            if name not in self.symbols:
                raise KeyError("symbol %r not in ring %s" % (name, self.label))
            if p:
                powers[name] = powers.get(name, 0) + p
        sign = Fraction(1)
        sections = [s for s in self.psi_of if powers.get(s)]
        if len(sections) > 1:
            return None  # disjoint sections: theta_x * theta_y = 0
        if sections:
            theta = sections[0]
            psi = self.psi_of[theta]
            # theta^r = (-psi)^(r-1) theta
            r = powers[theta]
            if r > 1:
                powers[theta] = 1
                powers[psi] = powers.get(psi, 0) + (r - 1)
                if (r - 1) % 2:
                    sign = -sign
            # omega restricted to the section is psi
            w = powers.get("omega", 0)
            if w:
                del powers["omega"]
                powers[psi] = powers.get(psi, 0) + w
        mono = tuple(sorted((n, p) for n, p in powers.items() if p))
        if self.degree(mono) > self.dim:
            return None
        return sign, mono

    def __repr__(self):
        return "Ring(%s, dim=%d)" % (self.label, self.dim)


class BaseClass:
    """Finite Q-linear combination of canonical monomials of one ring.

    Mixed degrees are allowed (total Chern classes); graded pieces are
    extracted with `graded_part`.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                self._add(mono, Fraction(coeff))
        self.terms = {m: c for m, c in self.terms.items() if c}

    def _add(self, mono, coeff):
        if not coeff:
            return
        norm = self.ring.normalize_monomial(mono)
        if norm is None:
            return
        sign, mono = norm
        self.terms[mono] = self.terms.get(mono, Fraction(0)) + sign * coeff

    @staticmethod
    def unit(ring, coeff=1):
        return BaseClass(ring, {(): Fraction(coeff)})

    @staticmethod
    def gen(ring, name, coeff=1):
        return BaseClass(ring, {((name, 1),): Fraction(coeff)})

    @staticmethod
    def zero(ring):
        return BaseClass(ring)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.ring.ring_id != other.ring.ring_id:
            raise ValueError("mixed rings: %s vs %s" % (self.ring.label, other.ring.label))

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = BaseClass(self.ring, self.terms)
        for mono, coeff in other.terms.items():
            out._add(mono, coeff)
        out.terms = {m: c for m, c in out.terms.items() if c}
        return out

    __radd__ = __add__

    def __neg__(self):
        return BaseClass(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BaseClass(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        out = BaseClass(self.ring)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out._add(_merge(m1, m2), c1 * c2)
        out.terms = {m: c for m, c in out.terms.items() if c}
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BaseClass.unit(self.ring)
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, BaseClass):
            return other
        if isinstance(other, (int, Fraction)):
            return BaseClass.unit(self.ring, other)
        raise TypeError("cannot coerce %r" % (other,))

    def __eq__(self, other):
        if not isinstance(other, BaseClass):
            return NotImplemented
        return self.ring.ring_id == other.ring.ring_id and self.terms == other.terms

    def graded_part(self, d):
        return BaseClass(
            self.ring, {m: c for m, c in self.terms.items() if self.ring.degree(m) == d}
        )

    def max_degree(self):
        return max((self.ring.degree(m) for m in self.terms), default=0)

    def monomials(self):
        """Sorted (monomial, coefficient) pairs."""
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.monomials():
            body = "*".join(n if p == 1 else "%s^%d" % (n, p) for n, p in mono) or "1"
            if coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append("-" + body)
            else:
                pieces.append("%s*%s" % (coeff, body))
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text

    def __repr__(self):
        return "BaseClass<%s>(%s)" % (self.ring.label, self)


def _merge(m1, m2):
    powers = dict(m1)
    for name, p in m2:
        powers[name] = powers.get(name, 0) + p
    return tuple(sorted(powers.items()))


def multiply(a: BaseClass, b: BaseClass) -> BaseClass:
    """Graded product in canonical relation-closed form."""
    return a * b


def section_power(ring: Ring, theta: str, r: int) -> BaseClass:
    """The r-th self-intersection power of a marked section: (-psi)^(r-1) * theta."""
    if r <= 0:
        raise ValueError("section power needs r >= 1; use the unit class for r = 0")
    if theta not in ring.psi_of:
        raise ValueError("%r is not a section symbol of %s" % (theta, ring.label))
    return BaseClass(ring, {((theta, r),): Fraction(1)})


def make_total_space_ring(dim_b: int, with_point=False) -> Ring:
    """Ring over the total space X of the family (dimension dim_b + 1)."""
    symbols = [
        BaseSymbol("L", 1, KIND_LINE_BUNDLE),
        BaseSymbol("omega", 1, KIND_CANONICAL),
    ]
    if with_point:
        symbols.append(BaseSymbol("pt", 1, KIND_POINT))
    return Ring("X/B(dim %d)" % dim_b, dim_b + 1, symbols)


def make_boundary_ring(dim_b: int, node_id: str) -> Ring:
    """Ring over the normalized boundary family X^theta (dimension dim_b)."""
    symbols = [
        BaseSymbol("L", 1, KIND_LINE_BUNDLE),
        BaseSymbol("omega", 1, KIND_CANONICAL),
        BaseSymbol("theta_x", 1, KIND_SECTION),
        BaseSymbol("theta_y", 1, KIND_SECTION),
        BaseSymbol("psi_x", 1, KIND_PSI, on_base=True),
        BaseSymbol("psi_y", 1, KIND_PSI, on_base=True),
        BaseSymbol("tauL", 1, KIND_PULLBACK, on_base=True),
    ]
    return Ring(
        "X^theta(%s)" % node_id,
        dim_b,
        symbols,
        psi_of={"theta_x": "psi_x", "theta_y": "psi_y"},
    )


def make_node_base_ring(dim_b: int, node_id: str) -> Ring:
    """Ring over the boundary base T of a node (dimension dim_b - 1)."""
    symbols = [
        BaseSymbol("psi_x", 1, KIND_PSI),
        BaseSymbol("psi_y", 1, KIND_PSI),
        BaseSymbol("tauL", 1, KIND_PULLBACK),
    ]
    return Ring("T(%s)" % node_id, dim_b - 1, symbols)
