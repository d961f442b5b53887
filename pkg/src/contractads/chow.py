"""Divisor, h-, and psi-classes in degree two of wonderful models.

The class group is presented by one generator [D_G] per proper nontrivial
tube and one relation per pair of edges (the two edge sums agree).  All
classes are stored as canonical coset representatives against the reduced
relation matrix, so equality of classes is equality of vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .graphs import CapExceeded, Graph, multipartite_graph, tube_split


@dataclass(frozen=True)
class DivisorClass:
    host: Graph
    coeffs: tuple

    def __add__(self, other):
        if self.host != other.host:
            raise ValueError("classes live on different graphs")
        return class_space(self.host).make(
            [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return class_space(self.host).make(
            [Fraction(scalar) * c for c in self.coeffs])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        out = {}
        for tube, c in zip(class_space(self.host).basis, self.coeffs):
            if c:
                key = ",".join(str(v) for v in tube)
                out[key] = int(c) if c.denominator == 1 else str(c)
        return out


class ClassSpace:
    """Tube-divisor presentation of H^2 with reduced relations."""

    def __init__(self, g: Graph, cap: int = 12):
        if g.n > cap:
            raise CapExceeded("class space capped at %d vertices" % cap)
        self.host = g
        self.basis = g.proper_nontrivial_tubes()
        self.index = {t: i for i, t in enumerate(self.basis)}
        edge_sums = []
        for e in g.edges:
            inside = set(e)
            vec = [Fraction(int(inside <= set(t))) for t in self.basis]
            edge_sums.append(vec)
        self.relation_rows = [
            [a - b for a, b in zip(edge_sums[i], edge_sums[j])]
            for i, j in itertools.combinations(range(len(edge_sums)), 2)]
        self.reduced, self.pivots = linalg.rref(self.relation_rows)

    def dimension(self) -> int:
        return len(self.basis) - len(self.reduced)

    def make(self, vec) -> DivisorClass:
        if not self.basis:
            return DivisorClass(self.host, ())
        reduced = linalg.reduce_vector(vec, self.reduced, self.pivots)
        return DivisorClass(self.host, reduced)

    def zero(self) -> DivisorClass:
        return DivisorClass(self.host, (Fraction(0),) * len(self.basis))

    def divisor(self, tube) -> DivisorClass:
        tube = tuple(sorted(tube))
        if tube not in self.index:
            raise ValueError("%r is not a proper nontrivial tube" % (tube,))
        vec = [Fraction(0)] * len(self.basis)
        vec[self.index[tube]] = Fraction(1)
        return self.make(vec)


@lru_cache(maxsize=None)
def class_space(g: Graph) -> ClassSpace:
    return ClassSpace(g)


def _h_vector(space: ClassSpace, tube) -> list:
    """Raw (unreduced) divisor sum for one choice of edge, with the
    edge-independence of the reduced class asserted."""
    g = space.host
    inside = set(tube)
    edges = [e for e in g.edges if set(e) <= inside]
    seen = None
    first = None
    for e in edges:
        es = set(e)
        vec = [Fraction(int(es <= set(k) and not inside <= set(k)))
               for k in space.basis]
        red = linalg.reduce_vector(vec, space.reduced, space.pivots) \
            if space.basis else ()
        if seen is None:
            seen, first = red, vec
        elif red != seen:
            raise RuntimeError("h-class depends on the defining edge")
    return first if first is not None else [Fraction(0)] * len(space.basis)


@lru_cache(maxsize=None)
def _h_class_cached(g: Graph, tube) -> DivisorClass:
    space = class_space(g)
    if len(tube) < 2:
        return space.zero()
    if not g.is_tube(tube):
        raise ValueError("%r is not a tube" % (tube,))
    return space.make(_h_vector(space, tube))


def h_class(g: Graph, tube) -> DivisorClass:
    """Hyperplane-style class of a tube; trivial tubes give zero."""
    return _h_class_cached(g, tuple(sorted(set(tube))))


def divisor_from_h(g: Graph, tube) -> DivisorClass:
    """Moebius inversion expressing [D_G] through h-classes.

    Sums -(-1)^(|H|-|G|) h_H over tubes G <= H inside the closed
    neighborhood of G; must reproduce the basis class."""
    tube = tuple(sorted(set(tube)))
    space = class_space(g)
    if tube not in space.index:
        raise ValueError("%r is not a proper nontrivial tube" % (tube,))
    total = space.zero()
    outside = sorted(g.closed_neighborhood(tube) - set(tube))
    for r in range(len(outside) + 1):
        for extra in itertools.combinations(outside, r):
            bigger = tuple(sorted(tube + extra))
            coeff = -g.tube_mobius(tube, bigger)
            if coeff:
                total = total + coeff * h_class(g, bigger)
    return total


def psi_class(g: Graph, v: int) -> DivisorClass:
    """Cotangent-style class at a vertex, an alternating h-sum over the
    closed neighborhood."""
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    total = class_space(g).zero()
    others = sorted(g.adj[v])
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            tube = tuple(sorted((v,) + extra))
            sign = (-1) ** (len(tube) - 1)
            total = total + sign * h_class(g, tube)
    return total


def psi_infinity(g: Graph) -> DivisorClass:
    return h_class(g, tuple(range(g.n)))


def _divisor_sum(space: ClassSpace, keep, avoid) -> DivisorClass:
    vec = [Fraction(0)] * len(space.basis)
    for i, tube in enumerate(space.basis):
        members = set(tube)
        if keep in members and avoid not in members:
            vec[i] = Fraction(1)
    return space.make(vec)


def verify_prespsi(parts, v: int | None = None, w: int | None = None) -> bool:
    """On a complete multipartite host, psi at v equals the sum of divisor
    classes separating v from an adjacent w, and psi at infinity equals
    the edge sum.  Sweeps all adjacent pairs when none is given."""
    g = multipartite_graph(parts)
    space = class_space(g)
    if v is None:
        pairs = [(a, b) for a, b in itertools.permutations(range(g.n), 2)
                 if g.has_edge(a, b)]
    else:
        if w is None or not g.has_edge(v, w):
            raise ValueError("need an adjacent pair of vertices")
        pairs = [(v, w)]
    infinity = psi_infinity(g)
    for a, b in pairs:
        if psi_class(g, a) != _divisor_sum(space, a, b):
            return False
        edge_vec = [Fraction(int({a, b} <= set(t)))
                    for t in space.basis]
        if infinity != space.make(edge_vec):
            return False
    return True


def _h_expansion(g: Graph, tube) -> dict:
    """[D_G] as a formal h-combination {tube H: coefficient}."""
    out = {}
    outside = sorted(g.closed_neighborhood(tube) - set(tube))
    for r in range(len(outside) + 1):
        for extra in itertools.combinations(outside, r):
            bigger = tuple(sorted(tuple(tube) + extra))
            coeff = -g.tube_mobius(tube, bigger)
            if coeff:
                out[bigger] = out.get(bigger, 0) + coeff
    return out


def _pullback_h(g: Graph, tube, h_tube):
    """Pullback of one h-class along the composition at a tube: classes
    inside the tube restrict, all others descend to the quotient."""
    quotient, block_of, piece, vmap = tube_split(g, tuple(tube))
    inside = set(tube)
    if set(h_tube) <= inside:
        spot = {u: i for i, u in enumerate(vmap)}
        local = tuple(sorted(spot[u] for u in h_tube))
        return class_space(quotient).zero(), h_class(piece, local)
    image = tuple(sorted({block_of[u] for u in h_tube}))
    return h_class(quotient, image), class_space(piece).zero()


def pullback_class(g: Graph, tube, cls: DivisorClass):
    """Linear pullback to (quotient, restriction), through h-classes."""
    space = class_space(g)
    quotient, _, piece, _ = tube_split(g, tuple(tube))
    q_total = class_space(quotient).zero()
    r_total = class_space(piece).zero()
    for i, basis_tube in enumerate(space.basis):
        c = cls.coeffs[i]
        if not c:
            continue
        for h_tube, m in _h_expansion(g, basis_tube).items():
            q, r = _pullback_h(g, tube, h_tube)
            q_total = q_total + (c * m) * q
            r_total = r_total + (c * m) * r
    return q_total, r_total


def pullback_respects_relations(g: Graph, tube) -> bool:
    """Relations must pull back to zero classes on both factors."""
    space = class_space(g)
    for row in space.relation_rows:
        q, r = pullback_class(g, tube, DivisorClass(g, tuple(row)))
        if not (q.is_zero() and r.is_zero()):
            return False
    return True
