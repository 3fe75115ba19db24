"""Family descriptors: numerical characters, boundary data, and fiber integration.

A family of nodal curves X -> B is described purely numerically: the base
dimension, the evaluable characters (d, b, Lomega, omega2, twogm2), and a
weighted list of relative nodes.  Characters may be bound to exact rationals
or left as symbols, in which case every evaluation returns a polynomial in
them.
"""

from __future__ import annotations

from fractions import Fraction

from .basering import (
    make_boundary_ring,
    make_node_base_ring,
    make_total_space_ring,
)
from .charpoly import CharPoly

STANDARD_CHARS = ("d", "b", "Lomega", "omega2", "twogm2")


class Node:
    """A weighted relative node: a boundary datum with numerical data attached."""

    __slots__ = ("node_id", "weight", "tau_L", "psi_table")

    def __init__(self, node_id, weight, tau_L=None, psi_table=None):
        self.node_id = str(node_id)
        self.weight = weight if isinstance(weight, CharPoly) else CharPoly.const(weight)
        # value of theta^*(L) on the boundary base; None means "keep symbolic"
        if tau_L is not None and not isinstance(tau_L, CharPoly):
            tau_L = CharPoly.const(tau_L)
        self.tau_L = tau_L
        # table of boundary-base integrals, keyed by canonical strings
        self.psi_table = dict(psi_table or {})

    def __repr__(self):
        return "Node(%s, weight=%s)" % (self.node_id, self.weight)


class FamilyDescriptor:
    """Numerical characters of a family X/B plus its weighted node list."""

    def __init__(self, dim_b, chars=None, nodes=(), label="X/B"):
        if dim_b < 0:
            raise ValueError("dim_b must be >= 0")
        self.dim_b = dim_b
        self.label = label
        self.chars = {}
        for key, value in (chars or {}).items():
            self.chars[key] = value if isinstance(value, CharPoly) else CharPoly.const(value)
        self.nodes = list(nodes)
        seen = set()
        for node in self.nodes:
            if node.node_id in seen:
                raise ValueError("duplicate node id %r" % node.node_id)
            seen.add(node.node_id)
            if node.weight.is_constant() and node.weight.constant_value() <= 0:
                raise ValueError("node %s has nonpositive weight" % node.node_id)
        self.total_ring = make_total_space_ring(dim_b, with_point=(dim_b == 0))
        self._boundary_rings = {
            n.node_id: make_boundary_ring(dim_b, n.node_id) for n in self.nodes
        }
        self._node_base_rings = {
            n.node_id: make_node_base_ring(dim_b, n.node_id) for n in self.nodes
        }
        self._boundary_families = {}

    # -- characters -----------------------------------------------------------

    def char(self, key):
        """Character value; unbound keys stay symbolic."""
        if key in self.chars:
            return self.chars[key]
        return CharPoly.symbol(key)

    def sigma(self):
        total = CharPoly.zero()
        for node in self.nodes:
            total = total + node.weight
        return total

    # -- nodes, rings, boundary families --------------------------------------

    def node(self, node_id):
        for node in self.nodes:
            if node.node_id == node_id:
                return node
        raise KeyError("no node %r" % node_id)

    def boundary_ring(self, node_id):
        return self._boundary_rings[node_id]

    def node_base_ring(self, node_id):
        return self._node_base_rings[node_id]

    def boundary_family(self, node_id):
        """The normalized boundary family X^theta / T attached to a node.

        The base dimension drops by one, the relative canonical degree by two
        (the node is separated into two marked points).  Boundary families are
        treated as node-free; their total-space ring carries the two sections.
        """
        if node_id not in self._boundary_families:
            node = self.node(node_id)
            chars = dict(self.chars)
            chars["twogm2"] = self.char("twogm2") - CharPoly.const(2)
            fam = FamilyDescriptor(
                self.dim_b - 1,
                chars=chars,
                nodes=(),
                label="%s^theta(%s)" % (self.label, node.node_id),
            )
            fam.total_ring = self.boundary_ring(node_id)
            fam.context_node = node
            self._boundary_families[node_id] = fam
        return self._boundary_families[node_id]

    context_node = None  # set on boundary families

    # -- fiber-level data ------------------------------------------------------

    def fiber_degree(self, name):
        """Degree on a fiber curve of a degree-1 symbol."""
        if name == "L":
            return self.char("d")
        if name == "omega":
            return self.char("twogm2")
        if name in ("theta_x", "theta_y", "pt"):
            return CharPoly.const(1)
        raise KeyError("no fiber degree for %r" % name)

    def __repr__(self):
        return "FamilyDescriptor(%s, dim_b=%d, nodes=%d)" % (
            self.label,
            self.dim_b,
            len(self.nodes),
        )


def symbolic_family(dim_b=1, with_node=True, label="X/B"):
    """Fully symbolic descriptor; one generic node of symbolic total weight."""
    nodes = []
    if with_node and dim_b >= 1:
        tau = CharPoly.const(0) if dim_b == 1 else None
        nodes.append(Node("s", CharPoly.symbol("sigma"), tau_L=tau))
    return FamilyDescriptor(dim_b, chars={}, nodes=nodes, label=label)


def _mono_str(mono):
    return "*".join(n if p == 1 else "%s^%d" % (n, p) for n, p in mono) or "1"


def integrate_classes(fam: FamilyDescriptor, factors, node=None):
    """Top-degree integral over a fiber product of the family's total space.

    `factors` is one BaseClass per fiber factor; a single class integrates
    over the total space itself.  Raises ValueError on degree mismatch.
    """
    from itertools import product as iproduct

    if not isinstance(factors, (list, tuple)):
        factors = [factors]
    ring = factors[0].ring
    total = CharPoly.zero()
    items = [list(f.terms.items()) for f in factors]
    if any(not it for it in items):
        return total
    for combo in iproduct(*items):
        slots = [mono for mono, _ in combo]
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        total = total + fiber_integral(fam, ring, slots, node=node) * coeff
    return total


def fiber_integral(fam: FamilyDescriptor, ring, slot_monos, base_mono=(), node=None):
    """Integrate a product of per-factor monomials over a fiber product of X/base.

    Each slot contributes one curve factor of the fiber product; `base_mono`
    is pulled back from the base.  The factors push down the fibration one at
    a time: a degree-1 fiber factor contributes its fiber degree, a degree-2
    factor its total-space integral (a degree-1 class on the base).  Over a
    1-dimensional base this forces exactly one degree-2 factor; over a point
    base all factors have degree 1.

    Raises ValueError when the total degree is not top-dimensional.
    """
    base_dim = fam.dim_b
    if node is None:
        node = fam.context_node
    # split off base pullbacks hiding inside slots
    base_powers = {}
    for name, p in base_mono:
        base_powers[name] = base_powers.get(name, 0) + p
    fibers = []
    for mono in slot_monos:
        fibers.append(ring.fiber_part(mono))
        for name, p in ring.base_part(mono):
            base_powers[name] = base_powers.get(name, 0) + p
    base_mono = tuple(sorted((n, p) for n, p in base_powers.items() if p))
    tdeg = sum(p for _, p in base_mono)

    fdegs = [sum(p for _, p in f) for f in fibers]
    if any(d == 0 for d in fdegs):
        # pushforward of a pure pullback along a curve fibration vanishes
        return CharPoly.zero()
    excess = sum(d - 1 for d in fdegs)
    if excess + tdeg != base_dim:
        raise ValueError(
            "not top-dimensional: base degree %d + fiber excess %d != base dim %d"
            % (tdeg, excess, base_dim)
        )

    value = CharPoly.const(1)
    pushed = []  # degree->1+ classes on the base, as (kind, data)
    for mono, d in zip(fibers, fdegs):
        if d == 1:
            value = value * fam.fiber_degree(mono[0][0])
            continue
        section = [n for n, _ in mono if n in ("theta_x", "theta_y")]
        if section:
            # a section factor restricts the rest: pushforward is theta^*(L^k)
            rest = {n: p for n, p in mono if n not in ("theta_x", "theta_y")}
            if set(rest) - {"L"}:
                raise AssertionError("unreduced section monomial %r" % (mono,))
            k = rest.get("L", 0)
            base_powers = dict(base_mono)
            base_powers["tauL"] = base_powers.get("tauL", 0) + k
            base_mono = tuple(sorted((n, p) for n, p in base_powers.items() if p))
        else:
            pushed.append(mono)
    return value * _base_integral(fam, base_mono, pushed, node)


def _base_integral(fam, base_mono, pushed, node):
    """Integrate over the base: pulled-back monomial times pushed-down factors."""
    base_dim = fam.dim_b
    # bind theta^*L when the node fixes its value
    tau_power = dict(base_mono).get("tauL", 0)
    tau_value = None
    if tau_power and node is not None and node.tau_L is not None:
        tau_value = node.tau_L ** tau_power
        if tau_value.is_zero():
            return CharPoly.zero()
        base_mono = tuple((n, p) for n, p in base_mono if n != "tauL")

    if base_dim == 0:
        assert not base_mono and not pushed
        result = CharPoly.const(1)
    elif base_dim == 1 and not base_mono and len(pushed) == 1 and node is None:
        result = _main_pushforward_char(fam, pushed[0])
    else:
        where = node.node_id if node is not None else fam.label
        key = "IT[%s|%s|%s]" % (
            where,
            _mono_str(base_mono),
            ";".join(sorted(_mono_str(m) for m in pushed)),
        )
        if node is not None and key in node.psi_table:
            result = node.psi_table[key]
        else:
            result = CharPoly.symbol(key)
    if tau_value is not None:
        result = result * tau_value
    return result


def _main_pushforward_char(fam, mono):
    named = {
        (("L", 2),): "b",
        (("L", 1), ("omega", 1)): "Lomega",
        (("omega", 2),): "omega2",
        (("pt", 2),): None,
    }
    mono = tuple(sorted(mono))
    if mono in named:
        key = named[mono]
        return CharPoly.zero() if key is None else fam.char(key)
    return CharPoly.symbol("PF[%s|%s]" % (fam.label, _mono_str(mono)))
