"""Independent brute-force checkers for the unordered calculus.

The ordered model works on plain tensors (lists of ring classes) with the
big-diagonal action as a sum of pair unions minus interior omega terms; its
symmetrization must match the unordered operators.  Everything here is coded
directly on lists, sharing nothing with the tensymmetric module it checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .partitions import BPartition, Distribution


class OrderedTensor:
    """Q-combination of pure tensors: keys are tuples of slot monomials.

    Slots may be merged, in which case a parallel tuple of labels tracks which
    original positions were united (the b-partition of the diagonal locus).
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = dict(terms or {})
        self.terms = {k: c for k, c in self.terms.items() if c}

    @staticmethod
    def pure(ring, classes):
        """Tensor with one BaseClass per slot, expanded multilinearly."""
        combos = [((), Fraction(1))]
        for cls in classes:
            combos = [
                (key + ((frozenset([len(key) + 1]), mono),), c * mc)
                for key, c in combos
                for mono, mc in cls.terms.items()
            ]
        # relabel: slot i gets label {i+1}
        out = OrderedTensor(ring)
        for key, c in combos:
            labels = tuple(frozenset([i + 1]) for i in range(len(key)))
            monos = tuple(mono for _, mono in key)
            out._add((labels, monos), c)
        return out

    def _add(self, key, coeff):
        if not coeff:
            return
        self.terms[key] = self.terms.get(key, Fraction(0)) + coeff
        if not self.terms[key]:
            del self.terms[key]

    def __add__(self, other):
        out = OrderedTensor(self.ring, self.terms)
        for key, c in other.terms.items():
            out._add(key, c)
        return out

    def scale(self, c):
        c = Fraction(c)
        return OrderedTensor(self.ring, {k: cc * c for k, cc in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return isinstance(other, OrderedTensor) and self.terms == other.terms


def _merge_monos(ring, m1, m2):
    powers = dict(m1)
    for name, p in m2:
        powers[name] = powers.get(name, 0) + p
    return ring.normalize_monomial(tuple(powers.items()))


def ordered_union(t: OrderedTensor, i: int, j: int) -> OrderedTensor:
    """Unite slots i < j (0-based) by ring multiplication."""
    out = OrderedTensor(t.ring)
    for (labels, monos), c in t.terms.items():
        prod = _merge_monos(t.ring, monos[i], monos[j])
        if prod is None:
            continue
        sign, mono = prod
        new_labels = tuple(
            lab | labels[j] if k == i else lab
            for k, lab in enumerate(labels)
            if k != j
        )
        new_monos = tuple(
            mono if k == i else m for k, m in enumerate(monos) if k != j
        )
        out._add((new_labels, new_monos), c * sign)
    return out


def ordered_disc(t: OrderedTensor) -> OrderedTensor:
    """Big-diagonal action on the ordered model.

    Sum over slot pairs of the union, weighted by the product of the slot
    multiplicities (the number of underlying points each slot carries), minus
    the interior omega terms with one binomial per slot.
    """
    ring = t.ring
    omega_mono = (("omega", 1),)
    out = OrderedTensor(ring)
    for (labels, monos), c in t.terms.items():
        k = len(labels)
        base = OrderedTensor(ring, {(labels, monos): c})
        for i, j in combinations(range(k), 2):
            ni, nj = len(labels[i]), len(labels[j])
            out = out + ordered_union(base, i, j).scale(ni * nj)
        for i in range(k):
            n = len(labels[i])
            if n < 2:
                continue
            prod = _merge_monos(ring, monos[i], omega_mono)
            if prod is None:
                continue
            sign, mono = prod
            out._add(
                (labels, monos[:i] + (mono,) + monos[i + 1 :]),
                -c * sign * Fraction(n * (n - 1), 2),
            )
    return out


def symmetrize(t: OrderedTensor):
    """Push an ordered tensor to the unordered model: canonical block keys.

    Returns a dict mapping ((n, monomial), ...) sorted keys to coefficients;
    labels are forgotten, so equivalent orderings accumulate.
    """
    out = {}
    for (labels, monos), c in t.terms.items():
        key = tuple(sorted(((len(lab), mono) for lab, mono in zip(labels, monos)),
                           key=lambda b: (-b[0], b[1])))
        out[key] = out.get(key, Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def count_block_permutations(blocks):
    """Brute-force order of the block permutation group of a b-partition."""
    blocks = [frozenset(b) for b in blocks]
    count = 0
    for perm in permutations(blocks):
        if all(len(a) == len(b) for a, b in zip(blocks, perm)):
            count += 1
    return count


def enumerate_bpartitions(m, mu: Distribution):
    """All b-partitions of {1..m} with the given distribution."""
    sizes = mu.parts()
    if sum(sizes) != m:
        raise ValueError("distribution weight %d != %d" % (sum(sizes), m))
    out = []

    def rec(remaining, sizes_left, chosen):
        if not sizes_left:
            out.append(BPartition(chosen))
            return
        first = min(remaining)
        seen = set()
        for pos, n in enumerate(sizes_left):
            if n in seen:
                continue
            seen.add(n)
            rest_sizes = sizes_left[:pos] + sizes_left[pos + 1 :]
            others = sorted(remaining - {first})
            for extra in combinations(others, n - 1):
                block = frozenset((first,) + extra)
                rec(remaining - block, rest_sizes, chosen + [block])

    rec(frozenset(range(1, m + 1)), sizes, [])
    return out


# -- projective line degrees -----------------------------------------------------------


def p1_jet_chern(m, n):
    """First Chern number of the (n-1)-jet bundle of O(m) on the projective line.

    Computed through the filtration with graded pieces O(m - 2i): the sum of
    m - 2i for i = 0..n-1.
    """
    return sum(m - 2 * i for i in range(n))


def p1_diagonal_degree(m, n):
    """Degree in P^m of the locus of divisors with an n-fold point, via jets.

    The locus is the degeneracy locus of n generic sections of the jet bundle
    of O(m), so its degree is the first Chern number of that bundle.  The
    degenerate case n = 1 imposes no condition and returns 1.
    """
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    if n == 1:
        return 1
    return p1_jet_chern(m, n)
