"""The tautological module of a Hilbert scheme and the discriminant action.

Classes of Hilbert degree m are stored in three sectors:

* diagonal terms: twisted polyblock diagonal classes, indexed by a
  distribution together with one twisting monomial per block (plus a monomial
  pulled back from the base);
* node scroll terms F^{n,m}_j(theta)[P], indexed by (node, n, j) with a
  recursive payload P of degree m-n on the boundary family;
* node section terms (-Gamma) . F^{n,m}_j(theta)[P], same index shape.

Normalization of the diagonal sector: the stored coefficient of a key is the
coefficient of the class obtained by pushing the ordered twisted polydiagonal
down the symmetrization map and dividing by its degree aut(mu).  With this
normalization the untwisted key is the reduced class of the diagonal locus.

Multiplication by the discriminant polarization acts by

* uniting block pairs, with the combinatorial factor
  n1 * n2 * aut(united mu) / aut(mu) per ordered pair of blocks,
* interior multiplication by -omega with binomial(n, 2) in each block,
* a boundary term per node and per block of size n >= 2, with multiplicity
  nu(n, j) = j (n-j) n / 2 on the scroll F^{n,m}_j, weight 1/mult(n), and the
  block's twist evaluated through the node section;

on scrolls it is minus a node section, and on node sections it expands
through the polarized rank-2 structure of the scroll with the classes
e^n_j = binom(n-j+1,2) psi_x + binom(j,2) psi_y
       - (n-j+1) [m-n]_* theta_x - j [m-n]_* theta_y - Gamma^(m-n).
"""

from __future__ import annotations

from fractions import Fraction

from .basering import BaseClass
from .charpoly import CharPoly
from .family import FamilyDescriptor, fiber_integral
from .partitions import Distribution, aut_count

_ZERO = CharPoly.zero()


def _coerce_coeff(c):
    if isinstance(c, CharPoly):
        return c
    return CharPoly.const(c)


class TautClass:
    """Formal tautological class of Hilbert degree m on a family's Hilbert scheme."""

    __slots__ = ("fam", "m", "diag", "scroll", "section")

    def __init__(self, fam: FamilyDescriptor, m: int):
        self.fam = fam
        self.m = m
        self.diag = {}  # (base_mono, blocks) -> CharPoly
        self.scroll = {}  # (node_id, n, j) -> payload TautClass
        self.section = {}  # (node_id, n, j) -> payload TautClass

    # -- bookkeeping -----------------------------------------------------------

    @property
    def ring(self):
        return self.fam.total_ring

    def space_dim(self):
        return self.m + self.fam.dim_b

    def _diag_codim(self, base_mono, blocks):
        d = sum(p for _, p in base_mono)
        for n, mono in blocks:
            d += (n - 1) + self.ring.degree(mono)
        return d

    def add_diag(self, base_mono, blocks, coeff):
        coeff = _coerce_coeff(coeff)
        if coeff.is_zero():
            return
        blocks = tuple(sorted(blocks, key=lambda b: (-b[0], b[1])))
        base_mono = tuple(sorted(base_mono))
        if sum(n for n, _ in blocks) != self.m:
            raise ValueError("blocks of weight %s in degree-%d class" % (blocks, self.m))
        if self._diag_codim(base_mono, blocks) > self.space_dim():
            return
        key = (base_mono, blocks)
        self.diag[key] = self.diag.get(key, _ZERO) + coeff
        if self.diag[key].is_zero():
            del self.diag[key]

    def _node_bucket(self, sector, node_id, n, j, payload):
        if payload.is_zero():
            return
        if not (2 <= n <= self.m and 1 <= j <= n - 1):
            raise ValueError("bad scroll index n=%d j=%d for m=%d" % (n, j, self.m))
        key = (node_id, n, j)
        bucket = getattr(self, sector)
        if key in bucket:
            bucket[key] = bucket[key] + payload
            if bucket[key].is_zero():
                del bucket[key]
        else:
            bucket[key] = payload

    def add_scroll(self, node_id, n, j, payload):
        self._node_bucket("scroll", node_id, n, j, payload)

    def add_section(self, node_id, n, j, payload):
        self._node_bucket("section", node_id, n, j, payload)

    # -- linear structure --------------------------------------------------------

    def is_zero(self):
        return not self.diag and not self.scroll and not self.section

    def __add__(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        if other.fam is not self.fam or other.m != self.m:
            raise ValueError("cannot add classes on different spaces")
        out = TautClass(self.fam, self.m)
        for key, c in self.diag.items():
            out.diag[key] = c
        for key, c in other.diag.items():
            out.diag[key] = out.diag.get(key, _ZERO) + c
        out.diag = {k: c for k, c in out.diag.items() if not c.is_zero()}
        for sector in ("scroll", "section"):
            mine, theirs = getattr(self, sector), getattr(other, sector)
            target = getattr(out, sector)
            for key, p in mine.items():
                target[key] = p
            for key, p in theirs.items():
                target[key] = target[key] + p if key in target else p
            for key in [k for k, p in target.items() if p.is_zero()]:
                del target[key]
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        factor = _coerce_coeff(factor)
        out = TautClass(self.fam, self.m)
        if factor.is_zero():
            return out
        out.diag = {k: c * factor for k, c in self.diag.items()}
        out.scroll = {k: p.scale(factor) for k, p in self.scroll.items()}
        out.section = {k: p.scale(factor) for k, p in self.section.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        return (
            self.fam is other.fam
            and self.m == other.m
            and self.diag == other.diag
            and self.scroll == other.scroll
            and self.section == other.section
        )

    # -- constructors -------------------------------------------------------------

    @staticmethod
    def zero(fam, m):
        return TautClass(fam, m)

    @staticmethod
    def fundamental(fam, m):
        out = TautClass(fam, m)
        out.add_diag((), tuple((1, ()) for _ in range(m)), 1)
        return out

    @staticmethod
    def from_twists(fam, m, pairs, coeff=1, base=None):
        """Diagonal class with per-block BaseClass twists, expanded multilinearly.

        `pairs` is a list of (block size, BaseClass or monomial) entries; `base`
        an optional BaseClass of pulled-back symbols multiplying the whole term.
        """
        ring = fam.total_ring
        out = TautClass(fam, m)
        combos = [((), Fraction(1))]
        for n, twist in pairs:
            if isinstance(twist, BaseClass):
                items = list(twist.terms.items()) or []
            else:
                norm = ring.normalize_monomial(twist)
                items = [] if norm is None else [(norm[1], norm[0])]
            new = []
            for blocks, c in combos:
                for mono, mc in items:
                    new.append((blocks + ((n, mono),), c * mc))
            combos = new
        base_items = [((), Fraction(1))]
        if base is not None:
            base_items = list(base.terms.items())
        for blocks, c in combos:
            # move pulled-back symbols out of the slots
            base_extra = {}
            fiber_blocks = []
            for n, mono in blocks:
                fiber_blocks.append((n, ring.fiber_part(mono)))
                for name, p in ring.base_part(mono):
                    base_extra[name] = base_extra.get(name, 0) + p
            for bmono, bc in base_items:
                merged = dict(base_extra)
                for name, p in bmono:
                    merged[name] = merged.get(name, 0) + p
                out.add_diag(
                    tuple(sorted(merged.items())),
                    tuple(fiber_blocks),
                    _coerce_coeff(coeff) * c * bc,
                )
        return out

    # -- inspection ----------------------------------------------------------------

    def diag_terms(self):
        return sorted(self.diag.items())

    def codim_parts(self):
        """Set of codimensions present (diagnostic)."""
        out = set()
        for (base_mono, blocks), _ in self.diag.items():
            out.add(self._diag_codim(base_mono, blocks))
        for (node_id, n, j), p in self.scroll.items():
            out |= {n + c for c in p.codim_parts()} or {n}
        for (node_id, n, j), p in self.section.items():
            out |= {n + 1 + c for c in p.codim_parts()} or {n + 1}
        return out

    def graded_part(self, codim):
        out = TautClass(self.fam, self.m)
        for (base_mono, blocks), c in self.diag.items():
            if self._diag_codim(base_mono, blocks) == codim:
                out.diag[(base_mono, blocks)] = c
        for (node_id, n, j), p in self.scroll.items():
            part = p.graded_part(codim - n)
            if not part.is_zero():
                out.scroll[(node_id, n, j)] = part
        for (node_id, n, j), p in self.section.items():
            part = p.graded_part(codim - n - 1)
            if not part.is_zero():
                out.section[(node_id, n, j)] = part
        return out

    def render(self):
        """Human-readable text form."""
        pieces = []
        for (base_mono, blocks), c in sorted(self.diag.items()):
            parts = ",".join(str(n) for n, _ in blocks)
            twists = ", ".join(_mono_text(mono) for _, mono in blocks)
            body = "Gamma_(%s)[%s]" % (parts, twists)
            if base_mono:
                body = "%s*%s" % (_mono_text(base_mono), body)
            pieces.append("(%s)*%s" % (c, body))
        for (node_id, n, j), p in sorted(self.scroll.items()):
            pieces.append("F^{%d,%d}_%d(%s)[%s]" % (n, self.m, j, node_id, p.render()))
        for (node_id, n, j), p in sorted(self.section.items()):
            pieces.append(
                "(-Gamma).F^{%d,%d}_%d(%s)[%s]" % (n, self.m, j, node_id, p.render())
            )
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self):
        return "TautClass(m=%d: %s)" % (self.m, self.render())


def _mono_text(mono):
    return "*".join(n if p == 1 else "%s^%d" % (n, p) for n, p in mono) or "1"


def _coeff_data(c: CharPoly):
    return sorted(
        ([[name, p] for name, p in mono], str(value)) for mono, value in c.terms.items()
    )


def _coeff_from_data(data):
    return CharPoly(
        {tuple((n, p) for n, p in mono): Fraction(value) for mono, value in data}
    )


def to_data(tc: TautClass):
    """Canonical nested-list serialization (deterministic, round-trippable)."""
    diag = []
    for (base_mono, blocks), c in sorted(tc.diag.items()):
        diag.append(
            {
                "base": [[n, p] for n, p in base_mono],
                "blocks": [[n, [[s, p] for s, p in mono]] for n, mono in blocks],
                "coeff": _coeff_data(c),
            }
        )
    out = {"m": tc.m, "diag": diag, "scroll": [], "section": []}
    for sector in ("scroll", "section"):
        for (node_id, n, j), payload in sorted(getattr(tc, sector).items()):
            out[sector].append(
                {"node": node_id, "n": n, "j": j, "payload": to_data(payload)}
            )
    return out


def from_data(fam: FamilyDescriptor, data) -> TautClass:
    """Rebuild a class from its serialization, on the given family."""
    tc = TautClass(fam, data["m"])
    for term in data["diag"]:
        base = tuple((str(n), int(p)) for n, p in term["base"])
        blocks = tuple(
            (int(n), tuple((str(s), int(p)) for s, p in mono)) for n, mono in term["blocks"]
        )
        tc.add_diag(base, blocks, _coeff_from_data(term["coeff"]))
    for sector, adder in (("scroll", tc.add_scroll), ("section", tc.add_section)):
        for term in data[sector]:
            bd = fam.boundary_family(term["node"])
            adder(term["node"], term["n"], term["j"], from_data(bd, term["payload"]))
    return tc


def _mono_mult(ring, m1, m2):
    powers = dict(m1)
    for name, p in m2:
        powers[name] = powers.get(name, 0) + p
    return ring.normalize_monomial(tuple(powers.items()))


def _mu_of(blocks):
    return Distribution.from_parts(n for n, _ in blocks)


# -- the discriminant action -------------------------------------------------------


def nu_coeff(n, j):
    """Exceptional multiplicity of the j-th scroll component for an n-fold point."""
    return Fraction(j * (n - j) * n, 2)


def gamma_as_class(fam, m):
    """The discriminant polarization as a diagonal class: half the 2-point diagonal."""
    if m < 2:
        return TautClass.zero(fam, max(m, 0))
    out = TautClass(fam, m)
    blocks = ((2, ()),) + tuple((1, ()) for _ in range(m - 2))
    out.add_diag((), blocks, Fraction(1, 2))
    return out


def gamma_action(tc: TautClass) -> TautClass:
    """Multiply a tautological class by the discriminant polarization."""
    fam, m = tc.fam, tc.m
    ring = tc.ring
    out = TautClass(fam, m)

    for (base_mono, blocks), coeff in tc.diag.items():
        mu = _mu_of(blocks)
        # unite pairs of blocks
        for i in range(len(blocks)):
            for k in range(i + 1, len(blocks)):
                n1, mono1 = blocks[i]
                n2, mono2 = blocks[k]
                prod = _mono_mult(ring, mono1, mono2)
                if prod is None:
                    continue
                sign, mono = prod
                mult_n1, mult_n2 = mu.get(n1), mu.get(n2)
                if n1 == n2:
                    ratio = Fraction(mu.get(2 * n1) + 1, mult_n1 * (mult_n1 - 1))
                else:
                    ratio = Fraction(mu.get(n1 + n2) + 1, mult_n1 * mult_n2)
                rest = blocks[:i] + blocks[i + 1 : k] + blocks[k + 1 :]
                new_blocks = rest + ((n1 + n2, ring.fiber_part(mono)),)
                extra_base = dict(base_mono)
                for name, p in ring.base_part(mono):
                    extra_base[name] = extra_base.get(name, 0) + p
                out.add_diag(
                    tuple(sorted(extra_base.items())),
                    new_blocks,
                    coeff * sign * Fraction(n1 * n2) * ratio,
                )
        # interior multiplication by omega within each block
        for i, (n, mono) in enumerate(blocks):
            if n < 2:
                continue
            prod = _mono_mult(ring, mono, (("omega", 1),))
            if prod is None:
                continue
            sign, new_mono = prod
            extra_base = dict(base_mono)
            for name, p in ring.base_part(new_mono):
                extra_base[name] = extra_base.get(name, 0) + p
            out.add_diag(
                tuple(sorted(extra_base.items())),
                blocks[:i] + ((n, ring.fiber_part(new_mono)),) + blocks[i + 1 :],
                coeff * sign * Fraction(-n * (n - 1), 2),
            )
        # boundary terms: one scroll per node, per block of size >= 2, per j
        if fam.nodes and any(n >= 2 for n, _ in blocks):
            for node in fam.nodes:
                bd = fam.boundary_family(node.node_id)
                for i, (n, mono) in enumerate(blocks):
                    if n < 2:
                        continue
                    tau = _theta_star_mono(mono)
                    if tau is None:
                        continue
                    rest = blocks[:i] + blocks[i + 1 :]
                    payload = _payload_from_blocks(bd, m - n, rest, tau, base_mono)
                    if payload.is_zero():
                        continue
                    scale = coeff * Fraction(1, mu.get(n))
                    for j in range(1, n):
                        out.add_scroll(
                            node.node_id,
                            n,
                            j,
                            payload.scale(scale * nu_coeff(n, j) * node.weight),
                        )

    # scrolls: Gamma . F = -((-Gamma) . F)
    for (node_id, n, j), payload in tc.scroll.items():
        out.add_section(node_id, n, j, payload.scale(-1))

    # sections: Gamma . (-Gamma)F[P] = -(-Gamma)^2 F[P]
    #         = -(-Gamma)F[(e_j + e_{j+1}) P] + F[e_j e_{j+1} P]
    for (node_id, n, j), payload in tc.section.items():
        ej_p = _mult_e(payload, n, j)
        ej1_p = _mult_e(payload, n, j + 1)
        out.add_section(node_id, n, j, (ej_p + ej1_p).scale(-1))
        out.add_scroll(node_id, n, j, _mult_e(ej1_p, n, j))
    return out


def _theta_star_mono(mono):
    """Image of a total-space monomial under restriction to a node section.

    The canonical class restricts trivially, the polarization to its value on
    the boundary base; the result is a pure pullback monomial or None.
    """
    powers = {}
    for name, p in mono:
        if name == "omega":
            return None
        if name == "L":
            powers["tauL"] = powers.get("tauL", 0) + p
        elif name == "pt":
            return None
        else:
            raise AssertionError("unexpected symbol %r at a node" % name)
    return tuple(sorted(powers.items()))


def _payload_from_blocks(bd, m_payload, blocks, tau_mono, base_mono):
    """Build the boundary payload: remaining blocks pulled back, times tau twist."""
    ring = bd.total_ring
    phi = {
        "L": BaseClass.gen(ring, "L"),
        "omega": BaseClass.gen(ring, "omega")
        + BaseClass.gen(ring, "theta_x")
        + BaseClass.gen(ring, "theta_y"),
    }
    pairs = []
    for n, mono in blocks:
        twist = BaseClass.unit(ring)
        for name, p in mono:
            twist = twist * (phi[name] ** p)
        pairs.append((n, twist))
    merged = dict(tau_mono)
    for name, p in base_mono:
        merged[name] = merged.get(name, 0) + p
    base = BaseClass(ring, {tuple(sorted(merged.items())): Fraction(1)})
    return TautClass.from_twists(bd, m_payload, pairs, base=base)


# -- operators on boundary payloads ---------------------------------------------


def base_monomial_mult(tc: TautClass, mono) -> TautClass:
    """Multiply by a monomial pulled back from the base (psi classes etc.)."""
    out = TautClass(tc.fam, tc.m)
    for (base_mono, blocks), coeff in tc.diag.items():
        merged = dict(base_mono)
        for name, p in mono:
            merged[name] = merged.get(name, 0) + p
        out.add_diag(tuple(sorted(merged.items())), blocks, coeff)
    if tc.scroll or tc.section:
        raise NotImplementedError("pullback twist on nested node terms")
    return out


def norm_mult(tc: TautClass, name) -> TautClass:
    """Multiply by the norm divisor of a section/divisor symbol: [m]_* name.

    On a polyblock diagonal the norm restricts to the sum over blocks of the
    symbol inserted in the block, weighted by the block size.
    """
    ring = tc.ring
    out = TautClass(tc.fam, tc.m)
    for (base_mono, blocks), coeff in tc.diag.items():
        for i, (n, mono) in enumerate(blocks):
            prod = _mono_mult(ring, mono, ((name, 1),))
            if prod is None:
                continue
            sign, new_mono = prod
            extra_base = dict(base_mono)
            for sym, p in ring.base_part(new_mono):
                extra_base[sym] = extra_base.get(sym, 0) + p
            out.add_diag(
                tuple(sorted(extra_base.items())),
                blocks[:i] + ((n, ring.fiber_part(new_mono)),) + blocks[i + 1 :],
                coeff * Fraction(n) * sign,
            )
    if tc.scroll or tc.section:
        raise NotImplementedError("norm twist on nested node terms")
    return out


def mult_D(tc: TautClass, n, j) -> TautClass:
    """Multiply a boundary payload by the scroll line-bundle divisor D^n_j."""
    out = base_monomial_mult(tc, (("psi_x", 1),)).scale(Fraction((n - j + 1) * (n - j), 2))
    out = out + base_monomial_mult(tc, (("psi_y", 1),)).scale(Fraction(j * (j - 1), 2))
    out = out + norm_mult(tc, "theta_x").scale(-(n - j + 1))
    out = out + norm_mult(tc, "theta_y").scale(-j)
    return out


def _mult_e(tc: TautClass, n, j) -> TautClass:
    """Multiply a boundary payload by e^n_j = D^n_j - Gamma^(payload degree)."""
    out = mult_D(tc, n, j)
    if tc.m >= 2:
        out = out - gamma_action(tc)
    return out


def gamma_mult_diagonal(tc: TautClass) -> TautClass:
    """Discriminant times a purely diagonal class (checked restriction)."""
    if tc.scroll or tc.section:
        raise ValueError("class has node terms; use gamma_action")
    return gamma_action(tc)


def gamma_mult_scroll(tc: TautClass) -> TautClass:
    """Single discriminant multiplication (alias of the action, for clarity)."""
    return gamma_action(tc)


def gamma_power_on_scroll(fam, m, node_id, n, j, payload, ell) -> TautClass:
    """(-Gamma)^ell applied to the twisted scroll F^{n,m}_j(node)[payload].

    Closed form through the polarized rank-2 structure:
    (-G)^ell F[P] = (-G) F[h_{ell-1}(e_j, e_{j+1}) P] - F[e_j e_{j+1} h_{ell-2}(e) P]
    with h_k the complete homogeneous symmetric polynomial of degree k.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    out = TautClass(fam, m)
    if ell == 0:
        out.add_scroll(node_id, n, j, payload)
        return out
    h1 = _complete_homog(payload, n, j, ell - 1)
    out.add_section(node_id, n, j, h1)
    if ell >= 2:
        h2 = _complete_homog(payload, n, j, ell - 2)
        out.add_scroll(node_id, n, j, _mult_e(_mult_e(h2, n, j + 1), n, j).scale(-1))
    return out


def _complete_homog(payload, n, j, k):
    """h_k(e_j, e_{j+1}) applied to the payload."""
    total = TautClass.zero(payload.fam, payload.m)
    for i in range(k + 1):
        term = payload
        for _ in range(i):
            term = _mult_e(term, n, j)
        for _ in range(k - i):
            term = _mult_e(term, n, j + 1)
        total = total + term
    return total


# -- powers, small diagonal, integration ------------------------------------------


def gamma_power(fam, m, k) -> TautClass:
    """(Gamma^(m))^k fully expanded into the three sectors."""
    if k == 0:
        return TautClass.fundamental(fam, m)
    out = gamma_as_class(fam, m)
    for _ in range(k - 1):
        out = gamma_action(out)
    return out


def small_diag_gamma(fam, m) -> TautClass:
    """Discriminant times the small diagonal: scroll chain minus binom(m,2) omega."""
    if m < 2:
        raise ValueError("small diagonal needs m >= 2")
    small = TautClass(fam, m)
    small.add_diag((), ((m, ()),), 1)
    return gamma_action(small)


def integrate(tc: TautClass) -> CharPoly:
    """Exact degree of a zero-dimensional tautological class.

    Diagonal terms integrate over the fiber product of the family with the
    1/aut(mu) symmetrization normalization; node sections project with degree
    one onto the boundary Hilbert scheme; bare scrolls integrate to zero.
    """
    fam = tc.fam
    total = CharPoly.zero()
    dim = tc.space_dim()
    for (base_mono, blocks), coeff in tc.diag.items():
        if tc._diag_codim(base_mono, blocks) != dim:
            raise ValueError("not top-dimensional: %s" % ((base_mono, blocks),))
        mu = _mu_of(blocks)
        slots = [mono for _, mono in blocks]
        value = fiber_integral(fam, tc.ring, slots, base_mono=base_mono)
        total = total + value * coeff / aut_count(mu)
    for (node_id, n, j), payload in tc.section.items():
        total = total + integrate(payload)
    # scroll terms are pulled back from the scroll base and die in top degree
    return total


def pushforward_to_base(tc: TautClass):
    """Image of a degree-2 tautological class on the base (interior, boundary).

    The interior part is expressed in pushforward symbols kappa_j = pi_*(
    omega^{j+1}), kappaL_j = pi_*(L^{j+1}), kappaLw_{i,j} = pi_*(L^{i+1}
    omega^{j+1}); the boundary part collects the node contributions as
    formal symbols per node.
    """
    if tc.m != 2:
        raise NotImplementedError("base pushforward implemented for degree 2")
    interior = CharPoly.zero()
    boundary = CharPoly.zero()
    for (base_mono, blocks), coeff in tc.diag.items():
        if base_mono:
            raise NotImplementedError
        mu = _mu_of(blocks)
        value = CharPoly.const(1)
        for _, mono in blocks:
            value = value * _kappa_symbol(mono)
        interior = interior + value * coeff / aut_count(mu)
    for sector in (tc.section, tc.scroll):
        for (node_id, n, j), payload in sector.items():
            if sector is tc.scroll:
                continue  # scrolls collapse onto the boundary base
            for (bmono, bblocks), c in payload.diag.items():
                tag = "delta[%s|%s]" % (node_id, _mono_text(bmono))
                boundary = boundary + CharPoly.symbol(tag) * c
    return interior, boundary


def _kappa_symbol(mono):
    powers = dict(mono)
    a = powers.pop("L", 0)
    b = powers.pop("omega", 0)
    if powers:
        raise NotImplementedError("kappa pushforward of %r" % (mono,))
    if a == 0 and b == 0:
        # pushforward of the fundamental class of a curve fibration
        return CharPoly.zero()
    if a == 0:
        return CharPoly.symbol("kappa_%d" % (b - 1))
    if b == 0:
        return CharPoly.symbol("kappaL_%d" % (a - 1))
    return CharPoly.symbol("kappaLw_%d_%d" % (a - 1, b - 1))
