"""Exact multivariate polynomials over Q, used as the value domain for characters.

Every zero-dimensional class in the calculus evaluates to a polynomial in the
numerical characters of the family (b, d, Lomega, omega2, sigma, twogm2, ...).
Characters may be bound to rational numbers or left symbolic, so the common
value type is a polynomial with Fraction coefficients.
"""

from __future__ import annotations

from fractions import Fraction

# Preferred display order for the standard character symbols; everything else
# sorts alphabetically after these.
_SYMBOL_ORDER = ["b", "d", "g", "L2", "Lomega", "omega2", "sigma", "twogm2", "tauL"]


def _symbol_key(name):
    try:
        return (0, _SYMBOL_ORDER.index(name), name)
    except ValueError:
        return (1, 0, name)


class CharPoly:
    """Polynomial in named character symbols with exact rational coefficients.

    Immutable in practice: all operations return new instances.  A monomial is
    a tuple of (symbol, exponent) pairs sorted by symbol.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    self.terms[mono] = self.terms.get(mono, Fraction(0)) + coeff
            self.terms = {m: c for m, c in self.terms.items() if c}

    @staticmethod
    def const(value):
        value = Fraction(value)
        return CharPoly({(): value} if value else {})

    @staticmethod
    def symbol(name, power=1):
        if power == 0:
            return CharPoly.const(1)
        return CharPoly({((name, power),): Fraction(1)})

    @staticmethod
    def zero():
        return CharPoly({})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {()}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return CharPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CharPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return CharPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return CharPoly({m: c / scalar for m, c in self.terms.items()})

    def __pow__(self, n):
        out = CharPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, bindings):
        """Replace symbols by CharPoly/Fraction values given in `bindings`."""
        out = CharPoly.zero()
        for mono, coeff in self.terms.items():
            term = CharPoly.const(coeff)
            for name, power in mono:
                if name in bindings:
                    term = term * (_coerce(bindings[name]) ** power)
                else:
                    term = term * CharPoly.symbol(name, power)
            out = out + term
        return out

    def symbols(self):
        names = set()
        for mono in self.terms:
            for name, _ in mono:
                names.add(name)
        return names

    def _sorted_terms(self):
        def mono_key(mono):
            return (len(mono), [(_symbol_key(n), -p) for n, p in mono])

        return sorted(self.terms.items(), key=lambda item: mono_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self._sorted_terms():
            factors = "*".join(
                name if power == 1 else "%s^%d" % (name, power) for name, power in mono
            )
            if not factors:
                body = str(coeff)
            elif coeff == 1:
                body = factors
            elif coeff == -1:
                body = "-" + factors
            else:
                body = "%s*%s" % (coeff, factors)
            pieces.append(body)
        text = pieces[0]
        for piece in pieces[1:]:
            text += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return text

    def __repr__(self):
        return "CharPoly(%s)" % self


def _coerce(value):
    if isinstance(value, CharPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return CharPoly.const(value)
    raise TypeError("cannot coerce %r to CharPoly" % (value,))


def _merge(m1, m2):
    powers = dict(m1)
    for name, p in m2:
        powers[name] = powers.get(name, 0) + p
    return tuple(sorted(powers.items()))
