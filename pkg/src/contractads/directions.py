"""Weighted acyclic directions of a graph, their poset, and the
realization map from exact point configurations.

A weighted direction assigns every edge an orientation and a weight in
{1..d}. The plain family excludes all directed cycles; the relaxed
family excludes only directed cycles whose edges share one weight.
Composition contracts a tube: edges inside the tube keep the inner
datum, all other edges inherit the outer datum through the quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .graphs import CapExceeded, Graph, tube_split


@dataclass(frozen=True)
class WeightedDirection:
    """Orientation plus weight per edge of a host graph."""

    host: Graph
    d: int
    arcs: tuple[tuple[int, int, int], ...]  # (tail, head, weight)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need d >= 1")
        keys = tuple((a, b) if a < b else (b, a) for a, b, _ in self.arcs)
        if keys != self.host.edges:
            fixed = tuple(sorted(
                self.arcs, key=lambda t: (min(t[0], t[1]), max(t[0], t[1]))))
            keys = tuple((a, b) if a < b else (b, a) for a, b, _ in fixed)
            if keys != self.host.edges:
                raise ValueError("arcs must cover the host edges exactly once")
            object.__setattr__(self, "arcs", fixed)
        if any(not 1 <= w <= self.d for _, _, w in self.arcs):
            raise ValueError("weights must lie in 1..d")

    def arc_on(self, u, v):
        """The (tail, head, weight) triple carried by edge {u, v}.

        Arcs are stored in host edge order, so this is an index lookup.
        """
        key = (u, v) if u < v else (v, u)
        return self.arcs[self.host.edge_index[key]]

    def is_acyclic(self) -> bool:
        return _arcs_acyclic(self.host.n, [(a, b) for a, b, _ in self.arcs])

    def is_ext_valid(self) -> bool:
        """No directed cycle of uniform weight."""
        for w in range(1, self.d + 1):
            if not _arcs_acyclic(self.host.n, [(a, b) for a, b, x in self.arcs if x == w]):
                return False
        return True

    def is_valid(self, ext: bool = False) -> bool:
        return _valid_memo(self, ext)

    def leq(self, other: "WeightedDirection") -> bool:
        """Order: each arc may grow in weight, or flip with strict growth.

        Both arc tuples follow host edge order, so they can be zipped.
        """
        if self.host != other.host or self.d != other.d:
            raise ValueError("elements live on different hosts")
        for (a, b, w), (oa, ob, ow) in zip(self.arcs, other.arcs):
            if oa == a:
                if ow < w:
                    return False
            elif ow <= w:
                return False
        return True


@lru_cache(maxsize=None)
def _valid_memo(wd: "WeightedDirection", ext: bool) -> bool:
    return wd.is_ext_valid() if ext else wd.is_acyclic()


def _arcs_acyclic(n, arcs) -> bool:
    out = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def unit_direction(d: int = 1) -> WeightedDirection:
    return WeightedDirection(Graph(1, ()), d, ())


@lru_cache(maxsize=None)
def _compose_program(host: Graph, tube: tuple):
    """Per-edge recipe for composing at a tube, cached across calls.

    Entries are (True, inner_edge_pos) for edges inside the tube and
    (False, outer_edge_pos, u, v, block_u) otherwise; the latter carries
    enough to transfer the quotient orientation back to the host edge.
    """
    quotient, block_of, sub, vmap = tube_split(host, tube)
    spot = {v: i for i, v in enumerate(vmap)}
    program = []
    for u, v in host.edges:
        if u in spot and v in spot:
            iu, iv = spot[u], spot[v]
            key = (iu, iv) if iu < iv else (iv, iu)
            program.append((True, sub.edge_index[key]))
        else:
            qu, qv = block_of[u], block_of[v]
            key = (qu, qv) if qu < qv else (qv, qu)
            program.append((False, quotient.edge_index[key], u, v, qu))
    return quotient, sub, vmap, tuple(program)


def compose(host: Graph, tube, outer: WeightedDirection,
            inner: WeightedDirection, ext: bool = False) -> WeightedDirection:
    """Contractad composition: outer lives on host/tube, inner on host|tube."""
    if outer.d != inner.d:
        raise ValueError("ambient d mismatch")
    if not outer.is_valid(ext) or not inner.is_valid(ext):
        raise ValueError("arguments are not valid directions for this family")
    quotient, sub, vmap, program = _compose_program(host, tuple(sorted(set(tube))))
    if outer.host != quotient:
        raise ValueError("outer element does not live on the quotient")
    if inner.host != sub:
        raise ValueError("inner element does not live on the restriction")
    in_arcs = inner.arcs
    out_arcs = outer.arcs
    arcs = []
    for op in program:
        if op[0]:
            a, b, w = in_arcs[op[1]]
            arcs.append((vmap[a], vmap[b], w))
        else:
            _, pos, u, v, qu = op
            qa, _, w = out_arcs[pos]
            arcs.append((u, v, w) if qa == qu else (v, u, w))
    return WeightedDirection(host, outer.d, tuple(arcs))


def relabel(wd: WeightedDirection, perm, host: Graph = None) -> WeightedDirection:
    """Push a direction along a vertex bijection v -> perm[v]."""
    target = host if host is not None else wd.host
    return WeightedDirection(target, wd.d,
                             tuple((perm[a], perm[b], w) for a, b, w in wd.arcs))


def enumerate_directions(g: Graph, d: int, ext: bool = False,
                         cap: int = 10 ** 7) -> list[WeightedDirection]:
    """All valid weighted directions, in a canonical order."""
    m = len(g.edges)
    if (2 * d) ** m > cap:
        raise CapExceeded(f"(2d)^edges = {(2 * d) ** m} exceeds cap {cap}")
    options = []
    for u, v in g.edges:
        options.append([(u, v, w) for w in range(1, d + 1)]
                       + [(v, u, w) for w in range(1, d + 1)])
    out = []
    for combo in itertools.product(*options):
        wd = WeightedDirection(g, d, tuple(combo))
        if wd.is_valid(ext):
            out.append(wd)
    out.sort(key=lambda w: w.arcs)
    return out


def poset_covers(elements) -> list[tuple[int, int]]:
    """Covering pairs (i, j) of the order on a list of directions."""
    m = len(elements)
    less = [[i != j and elements[i].leq(elements[j]) for j in range(m)] for i in range(m)]
    covers = []
    for i in range(m):
        for j in range(m):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(m)):
                covers.append((i, j))
    return covers


# -- realization from configurations --------------------------------------

def psi_map(host: Graph, points) -> WeightedDirection:
    """Orient each edge toward the larger point, weighted by the first
    coordinate where the endpoints differ."""
    points = [tuple(p) for p in points]
    if len(points) != host.n:
        raise ValueError("one point per vertex required")
    d = len(points[0])
    if any(len(p) != d for p in points) or d < 1:
        raise ValueError("points must share a positive dimension")
    arcs = []
    for u, v in host.edges:
        i = next((k for k in range(d) if points[u][k] != points[v][k]), None)
        if i is None:
            raise ValueError(f"adjacent vertices {u},{v} coincide")
        if points[u][i] < points[v][i]:
            arcs.append((u, v, i + 1))
        else:
            arcs.append((v, u, i + 1))
    return WeightedDirection(host, d, tuple(arcs))


def in_P(alpha: WeightedDirection) -> bool:
    """Exact realizability test for the coordinate-tie map.

    A weight-w arc v->w says coordinates below w agree and coordinate w
    strictly increases.  The constraint system splits per coordinate:
    level i is solvable iff, after gluing endpoints of all heavier
    edges, the weight-i arcs are loop-free and acyclic.  A topological
    order of the glued classes then realizes the level with integer
    values 0..n-1, so solvability in R and on a small integer grid
    coincide.
    """
    if not alpha.is_acyclic():
        raise ValueError("direction has a directed cycle")
    n = alpha.host.n
    for level in range(1, alpha.d + 1):
        parent = list(range(n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b, w in alpha.arcs:
            if w > level:
                parent[find(a)] = find(b)
        arcs = [(find(a), find(b)) for a, b, w in alpha.arcs if w == level]
        if any(a == b for a, b in arcs):
            return False
        succ = {}
        indeg = {}
        for a, b in arcs:
            succ.setdefault(a, []).append(b)
            indeg[b] = indeg.get(b, 0) + 1
            indeg.setdefault(a, 0)
        queue = [v for v, k in indeg.items() if k == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for b in succ.get(v, ()):
                indeg[b] -= 1
                if indeg[b] == 0:
                    queue.append(b)
        if seen < len(indeg):
            return False
    return True


# -- order complexes -------------------------------------------------------

def _strict_less_matrix(elements, leq=None):
    if leq is None:
        leq = lambda x, y: x.leq(y)
    m = len(elements)
    return [[i != j and leq(elements[i], elements[j]) for j in range(m)] for i in range(m)]


def order_complex_betti(elements, leq=None, cap: int = 10 ** 6) -> list[int]:
    """Rational homology of the order complex (simplices = chains)."""
    less = _strict_less_matrix(elements, leq)
    m = len(elements)
    chains = {0: [(i,) for i in range(m)]}
    total = m
    k = 0
    while chains.get(k):
        nxt = []
        for chain in chains[k]:
            last = chain[-1]
            for j in range(m):
                if less[last][j]:
                    nxt.append(chain + (j,))
        total += len(nxt)
        if total > cap:
            raise CapExceeded(f"order complex exceeds {cap} simplices")
        if nxt:
            chains[k + 1] = nxt
        k += 1
    dims = [len(chains[i]) for i in range(len(chains))]
    boundaries = {}
    for i in range(1, len(chains)):
        index = {c: col for col, c in enumerate(chains[i - 1])}
        rows = []
        for chain in chains[i]:
            row = [0] * dims[i - 1]
            for drop in range(len(chain)):
                face = chain[:drop] + chain[drop + 1:]
                row[index[face]] += (-1) ** drop
            rows.append(row)
        boundaries[i] = rows
    if not dims:
        return []
    return linalg.chain_betti(dims, boundaries)


def nerve_euler_characteristic(elements, leq=None) -> int:
    """Euler characteristic of the order complex, via chain counting.

    f(v) = 1 - sum_{u < v} f(u) telescopes the alternating chain count,
    so no simplices are materialized.
    """
    less = _strict_less_matrix(elements, leq)
    m = len(elements)
    order = _linear_extension(less)
    f = [0] * m
    for v in order:
        f[v] = 1 - sum(f[u] for u in range(m) if less[u][v])
    return sum(f)


def _linear_extension(less):
    m = len(less)
    indeg = [sum(1 for u in range(m) if less[u][v]) for v in range(m)]
    ready = [v for v in range(m) if indeg[v] == 0]
    out = []
    while ready:
        v = ready.pop()
        out.append(v)
        for w in range(m):
            if less[v][w]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    if len(out) != m:
        raise ValueError("relation is not a partial order")
    return out


# -- serialization -----------------------------------------------------------

def direction_to_json(wd: WeightedDirection) -> dict:
    return {
        "d": wd.d,
        "edges": [{"from": a, "to": b, "w": w} for a, b, w in wd.arcs],
    }


def direction_from_json(host: Graph, data: dict) -> WeightedDirection:
    arcs = tuple(
        (int(e["from"]), int(e["to"]), int(e["w"])) for e in data["edges"]
    )
    return WeightedDirection(host, int(data["d"]), arcs)
