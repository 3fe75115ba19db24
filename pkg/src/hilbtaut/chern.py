"""Chern classes of tautological bundles, the full-flag evaluation pipeline,
and the enumerative applications (trisecants, contact loci, double points).

A polynomial in the flag classes L_1..L_m and the discriminants of degrees
2..m evaluates by pushing down the tower of flaglet correspondences: at each
stage the accumulated class is transferred with the new point's twist and
multiplied by the stage's discriminant powers.  Pushing the fundamental class
through the whole tower multiplies by m!, which is the degree of the full
flag over the Hilbert scheme; flag-level numbers are therefore m! times the
Hilbert-scheme numbers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .basering import BaseClass
from .charpoly import CharPoly
from .family import FamilyDescriptor
from .partitions import enumerate_distributions
from .tautmod import TautClass, gamma_action, integrate, base_monomial_mult
from .transfer import transfer, segre_contact_step

# -- polynomial expressions on the full flag ---------------------------------------


class WExpression:
    """Polynomial in L_1..L_m and the discriminant pullbacks of degrees 2..m.

    Exponent keys are tuples (a_1..a_m, k_2..k_m); all coefficients exact.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[key] = self.terms.get(key, Fraction(0)) + c
            self.terms = {k: c for k, c in self.terms.items() if c}

    @staticmethod
    def const(m, value=1):
        key = tuple([0] * (2 * m - 1))
        return WExpression(m, {key: Fraction(value)})

    @staticmethod
    def L(m, i):
        if not 1 <= i <= m:
            raise ValueError("L index out of range")
        key = [0] * (2 * m - 1)
        key[i - 1] = 1
        return WExpression(m, {tuple(key): Fraction(1)})

    @staticmethod
    def G(m, i):
        """The degree-i discriminant pullback; degrees 0 and 1 vanish."""
        if not 0 <= i <= m:
            raise ValueError("discriminant index out of range")
        if i <= 1:
            return WExpression(m)
        key = [0] * (2 * m - 1)
        key[m + i - 2] = 1
        return WExpression(m, {tuple(key): Fraction(1)})

    def __add__(self, other):
        out = WExpression(self.m, self.terms)
        for key, c in other.terms.items():
            out.terms[key] = out.terms.get(key, Fraction(0)) + c
        out.terms = {k: c for k, c in out.terms.items() if c}
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return WExpression(self.m, {k: cc * c for k, cc in self.terms.items()})

    def __mul__(self, other):
        out = WExpression(self.m)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out.terms[key] = out.terms.get(key, Fraction(0)) + c1 * c2
        out.terms = {k: c for k, c in out.terms.items() if c}
        return out

    def __pow__(self, n):
        out = WExpression.const(self.m)
        for _ in range(n):
            out = out * self
        return out

    def degree_part(self, d):
        return WExpression(self.m, {k: c for k, c in self.terms.items() if sum(k) == d})

    def max_degree(self):
        return max((sum(k) for k in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, WExpression) and self.m == other.m and self.terms == other.terms

    def __repr__(self):
        bits = []
        for key, c in sorted(self.terms.items()):
            names = []
            for i in range(self.m):
                if key[i]:
                    names.append("L%d" % (i + 1) + ("^%d" % key[i] if key[i] > 1 else ""))
            for i in range(2, self.m + 1):
                e = key[self.m + i - 2]
                if e:
                    names.append("G%d" % i + ("^%d" % e if e > 1 else ""))
            bits.append("(%s)%s" % (c, "*".join(names) or "1"))
        return "WExpression(%s)" % (" + ".join(bits) or "0")


# -- pushing flag polynomials down to the Hilbert scheme ----------------------------


def push_monomial(fam: FamilyDescriptor, m, key) -> TautClass:
    """Push one flag monomial down to the degree-m Hilbert scheme.

    Stage i transfers the class accumulated on degree i-1 with twist L^(a_i),
    then applies the degree-i discriminant k_i times.
    """
    ring = fam.total_ring
    ell = BaseClass.gen(ring, "L")
    cls = TautClass.from_twists(fam, 1, [(1, ell ** key[0])])
    for i in range(2, m + 1):
        if cls.is_zero():
            return TautClass.zero(fam, m)
        cls = transfer(cls, ell ** key[i - 1])
        for _ in range(key[m + i - 2]):
            cls = gamma_action(cls)
    return cls


def pushdown(fam: FamilyDescriptor, expr: WExpression) -> TautClass:
    """Sum the per-monomial flag pushdowns (m! times the Hilbert-scheme class)."""
    total = TautClass.zero(fam, expr.m)
    for key, c in expr.terms.items():
        total = total + push_monomial(fam, expr.m, key).scale(c)
    return total


def integrate_w(fam: FamilyDescriptor, expr: WExpression) -> CharPoly:
    """Exact integral of a top-degree flag polynomial over the full flag space."""
    top = expr.m + fam.dim_b
    for key in expr.terms:
        if sum(key) != top:
            raise ValueError("monomial %r is not top-dimensional on the flag" % (key,))
    return integrate(pushdown(fam, expr))


def w3_monomial(fam: FamilyDescriptor, exponents) -> CharPoly:
    """Evaluate a degree-4 monomial in L1, L2, L3, G2, G3 on the 3-step flag.

    `exponents` is (a1, a2, a3, k2, k3); requires a 1-dimensional base.
    """
    if fam.dim_b != 1:
        raise ValueError("the 3-step flag formulary needs a 1-dimensional base")
    if sum(exponents) != 4:
        raise ValueError("degree must be 4")
    return integrate_w(fam, WExpression(3, {tuple(exponents): Fraction(1)}))


# -- Chern classes of tautological bundles ------------------------------------------


def chern_splitting(m, truncate=None) -> WExpression:
    """Total Chern class of the rank-m tautological bundle of a line bundle.

    The pullback to the full flag factors as the product over stages of
    (1 + L_i - G_i + G_{i-1}); optionally truncated above a given degree.
    """
    out = WExpression.const(m)
    for i in range(1, m + 1):
        factor = (
            WExpression.const(m)
            + WExpression.L(m, i)
            - WExpression.G(m, i)
            + WExpression.G(m, i - 1)
        )
        out = out * factor
    if truncate is not None:
        out = WExpression(
            m, {k: c for k, c in out.terms.items() if sum(k) <= truncate}
        )
    return out


def chern_flaglet(m):
    """Both sides of the one-step factorization of the total Chern class."""
    lhs = chern_splitting(m)
    step = (
        WExpression.const(m)
        + WExpression.L(m, m)
        - WExpression.G(m, m)
        + WExpression.G(m, m - 1)
    )
    prev = WExpression.const(m)
    for i in range(1, m):
        prev = prev * (
            WExpression.const(m)
            + WExpression.L(m, i)
            - WExpression.G(m, i)
            + WExpression.G(m, i - 1)
        )
    return lhs, prev * step


def chern_class_on_hilb(fam: FamilyDescriptor, m) -> TautClass:
    """Total Chern class of the tautological bundle on the Hilbert scheme."""
    return pushdown(fam, chern_splitting(m)).scale(Fraction(1, factorial(m)))


def chern_closed_form(fam: FamilyDescriptor, m) -> TautClass:
    """Closed-form diagonal part of the total Chern class.

    Sum over distributions of weight m of prod_n ((-1)^(n-1) / n)^(mu(n))
    times the reduced diagonal class with a (1 + L) twist in every block.
    In the unreduced ordered normalization the coefficient picks up the
    factor aut(mu) * chi(mu) familiar from the symmetrized statement.  This
    is the node-free part; node families pick up scroll and section
    corrections computed by the splitting pushdown.
    """
    ring = fam.total_ring
    one_plus_l = BaseClass.unit(ring) + BaseClass.gen(ring, "L")
    total = TautClass.zero(fam, m)
    for mu in enumerate_distributions(m):
        if mu.weight() != m:
            continue
        coeff = Fraction(1)
        for n, k in mu.mult:
            coeff *= (Fraction((-1) ** (n - 1), n)) ** k
        pairs = [(n, one_plus_l) for n in mu.parts()]
        total = total + TautClass.from_twists(fam, m, pairs, coeff=coeff)
    return total


# -- Chern numbers on the 3-step flag and trisecants ---------------------------------


def chern_numbers_w3(fam: FamilyDescriptor):
    """The four degree-4 Chern numbers of the rank-3 tautological bundle.

    Returned on the 3-step flag (3! times the Hilbert-scheme numbers), as a
    dict with keys c1^4, c1^2c2, c1c3, c2^2.
    """
    total = chern_splitting(3)
    c1 = total.degree_part(1)
    c2 = total.degree_part(2)
    c3 = total.degree_part(3)
    return {
        "c1^4": integrate_w(fam, c1 ** 4),
        "c1^2c2": integrate_w(fam, c1 * c1 * c2),
        "c1c3": integrate_w(fam, c1 * c3),
        "c2^2": integrate_w(fam, c2 * c2),
    }


def trisecant_count(fam: FamilyDescriptor) -> CharPoly:
    """Count of ordered trisecant lines to the fibers of a map to P^5.

    The degeneracy combination c1^4 - 3 c1^2 c2 + 2 c1 c3 + c2^2 of the
    rank-3 tautological bundle, evaluated on the 3-step flag (six times the
    number of unordered trisecants).
    """
    numbers = chern_numbers_w3(fam)
    return (
        numbers["c1^4"]
        - numbers["c1^2c2"] * 3
        + numbers["c1c3"] * 2
        + numbers["c2^2"]
    )


def trisecant_grand_total(fam: FamilyDescriptor) -> CharPoly:
    """Closed polynomial for the ordered trisecant count in the characters."""
    d = fam.char("d")
    b = fam.char("b")
    lw = fam.char("Lomega")
    w2 = fam.char("omega2")
    tg = fam.char("twogm2")
    sg = fam.sigma()
    return (
        (d * d * 3 - d * 27 + CharPoly.const(60)) * b
        + (d * (-12) + CharPoly.const(72)) * lw
        + (d * (-3) + CharPoly.const(28)) * w2
        - b * tg * 3
        + (d * 3 - CharPoly.const(20)) * sg
    )


def single_curve_trisecant_scroll(chars=None) -> CharPoly:
    """Virtual degree of the trisecant scroll of one smooth space curve.

    Degree of c3 of the second exterior power of the rank-3 tautological
    bundle on the length-3 Hilbert scheme of a single curve: with rank 3,
    c3(wedge^2 E) = c1 c2 - c3.
    """
    fam = FamilyDescriptor(0, chars=chars or {}, label="X")
    total = chern_splitting(3)
    c1 = total.degree_part(1)
    c2 = total.degree_part(2)
    c3 = total.degree_part(3)
    flag_number = integrate_w(fam, c1 * c2 - c3)
    return flag_number / 6


def single_curve_trisecant_formula(chars=None) -> CharPoly:
    fam = FamilyDescriptor(0, chars=chars or {}, label="X")
    d = fam.char("d")
    tg = fam.char("twogm2")
    return (
        d * d * d * 2 - d * d * 12 + d * 16 - d * tg * 3 + tg * 6
    ) / 6


# -- contact loci and double points ---------------------------------------------------


def mcontact_segre(fam: FamilyDescriptor, m):
    """Recursion step for the locus of m-contact hyperplanes (punctual class)."""
    return segre_contact_step(fam, m)


def projective_target(n):
    """Diagonal decomposition and tangent Chern classes of projective n-space."""
    diag = [(i, n - i, Fraction(1)) for i in range(n + 1)]
    tangent = [Fraction(comb(n + 1, j)) for j in range(n + 1)]
    return {"dim": n, "diag": diag, "tangent": tangent}


def double_point_class(fam: FamilyDescriptor, target) -> TautClass:
    """Virtual double-point class of a fiberwise map to a smooth n-fold.

    Computed on the length-2 Hilbert scheme as the descent of
    (f x f)^* (diagonal of the target) + sum_{i>=1} (-Gamma)^i c_{n-i}(T),
    with the discriminant powers expanded through the module structure.  The
    sign of the diagonal-excess sum is pinned by the Segre-class route and the
    classical per-fiber count (d-1)(d-2)/2 - g for plane maps; the count of
    ordered double points is twice this class's degree.
    """
    n = target["dim"]
    ring = fam.total_ring
    ell = BaseClass.gen(ring, "L")
    total = TautClass.zero(fam, 2)
    for a, b, c in target["diag"]:
        total = total + TautClass.from_twists(fam, 2, [(1, ell ** a), (1, ell ** b)], coeff=c)
    for i in range(1, n + 1):
        cls = _gamma_power_m2_signed(fam, i)
        coeff = target["tangent"][n - i]
        if not coeff:
            continue
        twisted = _twist_small_support(cls, n - i)
        total = total + twisted.scale(coeff)
    return total


def _gamma_power_m2_signed(fam, i):
    """(-Gamma)^i on the length-2 Hilbert scheme."""
    from .tautmod import gamma_power

    return gamma_power(fam, 2, i).scale(Fraction((-1) ** i))


def _twist_small_support(tc: TautClass, k) -> TautClass:
    """Multiply a small-diagonal supported class by the k-th power of the bundle.

    Diagonal terms are supported on the 2-point diagonal, where the pullback
    restricts to the class itself; node terms restrict through the section.
    """
    if k == 0:
        return tc
    ring = tc.ring
    out = TautClass.zero(tc.fam, tc.m)
    for (base_mono, blocks), coeff in tc.diag.items():
        if len(blocks) != 1 or blocks[0][0] != 2:
            raise ValueError("class is not supported on the small diagonal")
        merged = dict(blocks[0][1])
        merged["L"] = merged.get("L", 0) + k
        norm = ring.normalize_monomial(tuple(merged.items()))
        if norm is None:
            continue
        sign, mono = norm
        out.add_diag(base_mono, ((2, mono),), coeff * sign)
    for sector, adder in (("scroll", out.add_scroll), ("section", out.add_section)):
        for (node_id, nn, j), payload in getattr(tc, sector).items():
            twisted = base_monomial_mult(payload, (("tauL", k),))
            adder(node_id, nn, j, twisted)
    return out


def double_point_segre_route(fam: FamilyDescriptor, n) -> TautClass:
    """The same double-point class through the Segre-class degeneracy route.

    The n-th Segre class of the dual tautological bundle pulls back to the
    ordered model as sum_i L_1^(n-i) (L_2 - Gamma)^i; each ordered monomial
    L_1^a L_2^b Gamma^c descends to the discriminant power acting on the
    two-point diagonal class with twists L^a, L^b.
    """
    ring = fam.total_ring
    ell = BaseClass.gen(ring, "L")
    total = TautClass.zero(fam, 2)
    for i in range(n + 1):
        for c in range(i + 1):
            coeff = Fraction(comb(i, c) * (-1) ** c)
            base = TautClass.from_twists(
                fam, 2, [(1, ell ** (n - i)), (1, ell ** (i - c))], coeff=coeff
            )
            for _ in range(c):
                base = gamma_action(base)
            total = total + base
    return total
