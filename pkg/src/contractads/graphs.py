"""Finite simple connected graphs, tubes, and graph partitions.

Vertices are the integers 0..n-1; the named family constructors attach
paper-style display labels, but every computation is label-free. Values
are immutable and hashable so they can key memo tables. Quotient and
induced subgraphs relabel their vertices canonically: blocks are ordered
by their minimum original vertex.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache


class CapExceeded(RuntimeError):
    """An enumeration exceeded its configured size cap."""


def _normalize_edge(u, v):
    if u == v:
        raise ValueError(f"loop edge {u}-{v}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple connected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        norm = sorted({_normalize_edge(u, v) for u, v in self.edges})
        for u, v in norm:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {u}-{v} out of range")
        if len(norm) < len(set(map(tuple, self.edges))):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", tuple(norm))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("labels must cover all vertices")
            object.__setattr__(self, "labels", tuple(self.labels))
        if not self._connected(range(self.n)):
            raise ValueError("graph is not connected")

    # -- basic structure ------------------------------------------------

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict:
        """Position of each normalized edge within self.edges."""
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def _connected(self, vertices) -> bool:
        verts = set(vertices)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in verts and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == verts

    # -- tubes ----------------------------------------------------------

    def is_tube(self, vertices) -> bool:
        """True iff the nonempty vertex set induces a connected subgraph."""
        verts = set(vertices)
        if not verts or not verts <= set(range(self.n)):
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y in verts and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == verts

    def tubes(self) -> list[tuple[int, ...]]:
        """All tubes, sorted by size then lexicographically."""
        out = []
        for size in range(1, self.n + 1):
            for comb in itertools.combinations(range(self.n), size):
                if self.is_tube(comb):
                    out.append(comb)
        return out

    def proper_nontrivial_tubes(self) -> list[tuple[int, ...]]:
        return [t for t in self.tubes() if 1 < len(t) < self.n]

    def closed_neighborhood(self, vertices) -> frozenset:
        verts = set(vertices)
        out = set(verts)
        for v in verts:
            out |= self.adj[v]
        return frozenset(out)

    def tube_mobius(self, G, H) -> int:
        """Mobius function of the tube poset.

        Equals (-1)^(|H|-|G|) when G <= H lies inside the closed
        neighborhood of G, and 0 otherwise.
        """
        gs, hs = frozenset(G), frozenset(H)
        if not self.is_tube(gs) or not self.is_tube(hs):
            raise ValueError("arguments must be tubes")
        if not gs <= hs:
            raise ValueError("G must be contained in H")
        if hs <= self.closed_neighborhood(gs):
            return (-1) ** (len(hs) - len(gs))
        return 0

    # -- partitions -----------------------------------------------------

    def graph_partitions(self, cap: int = 10) -> list[tuple[tuple[int, ...], ...]]:
        """All partitions of the vertex set whose blocks are tubes.

        Deterministic order: sorted by (number of blocks, blocks). Blocks
        are sorted tuples and listed by minimum element.
        """
        if self.n > cap:
            raise CapExceeded(f"partition enumeration capped at {cap} vertices")
        out = []
        for part in _set_partitions(self.n):
            if all(self.is_tube(b) for b in part):
                out.append(part)
        out.sort(key=lambda p: (len(p), p))
        return out

    def partition_lattice(self, cap: int = 10):
        """Graph partitions plus the refinement order as explicit covers.

        Returns (partitions, leq, covers): leq[i][j] is True when
        partition i refines partition j; covers lists (i, j) pairs with
        j covering i.
        """
        parts = self.graph_partitions(cap=cap)
        m = len(parts)
        sets = [[frozenset(b) for b in p] for p in parts]
        leq = [[refines_blocks(sets[i], sets[j]) for j in range(m)] for i in range(m)]
        covers = []
        for i in range(m):
            for j in range(m):
                if i != j and leq[i][j]:
                    if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(m)):
                        covers.append((i, j))
        return parts, leq, covers

    # -- contraction and restriction -------------------------------------

    def contract(self, partition):
        """Quotient by a graph partition.

        Returns (quotient graph, block_of) where block_of maps each
        original vertex to its quotient label. Quotient vertices are the
        blocks, labeled 0..k-1 in order of minimum original vertex.
        """
        blocks = [tuple(sorted(b)) for b in partition]
        seen = set()
        for b in blocks:
            if not self.is_tube(b):
                raise ValueError(f"block {b} is not a tube")
            seen.update(b)
        if len(seen) != self.n or sum(len(b) for b in blocks) != self.n:
            raise ValueError("blocks do not partition the vertex set")
        blocks.sort(key=lambda b: b[0])
        block_of = [0] * self.n
        for i, b in enumerate(blocks):
            for v in b:
                block_of[v] = i
        qedges = set()
        for u, v in self.edges:
            bu, bv = block_of[u], block_of[v]
            if bu != bv:
                qedges.add(_normalize_edge(bu, bv))
        return Graph(len(blocks), tuple(sorted(qedges))), tuple(block_of)

    def contract_tube(self, tube):
        """Quotient by the partition {tube} + singletons."""
        ts = set(tube)
        blocks = [tuple(sorted(ts))] + [(v,) for v in range(self.n) if v not in ts]
        return self.contract(blocks)

    def restrict(self, tube):
        """Induced subgraph on a tube.

        Returns (subgraph, vertex_map) where vertex_map[i] is the
        original vertex carrying the new label i.
        """
        verts = tuple(sorted(set(tube)))
        if not self.is_tube(verts):
            raise ValueError(f"{tube} is not a tube")
        index = {v: i for i, v in enumerate(verts)}
        sedges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(verts), tuple(sorted(sedges))), verts

    # -- chordality -------------------------------------------------------

    def chordality(self) -> dict:
        """Perfect elimination ordering via maximum-cardinality search.

        Returns {"is_chordal": True, "peo": ordering} or
        {"is_chordal": False, "witness": chordless cycle of length >= 4}.
        """
        n = self.n
        weight = [0] * n
        picked = [False] * n
        order = []  # reverse of a candidate peo
        for _ in range(n):
            v = max((w, -u) for u, w in enumerate(weight) if not picked[u])[1]
            v = -v
            picked[v] = True
            order.append(v)
            for u in self.adj[v]:
                if not picked[u]:
                    weight[u] += 1
        peo = list(reversed(order))
        pos = {v: i for i, v in enumerate(peo)}
        ok = True
        for v in peo:
            later = [u for u in self.adj[v] if pos[u] > pos[v]]
            if later:
                u = min(later, key=pos.get)
                if not set(later) - {u} <= self.adj[u]:
                    ok = False
                    break
        if ok:
            return {"is_chordal": True, "peo": peo}
        return {"is_chordal": False, "witness": self._chordless_cycle()}

    def _chordless_cycle(self):
        # smallest vertex set inducing a plain cycle of length >= 4
        for size in range(4, self.n + 1):
            for comb in itertools.combinations(range(self.n), size):
                cs = set(comb)
                if all(len(self.adj[v] & cs) == 2 for v in comb) and self.is_tube(comb):
                    return _cycle_order(self, comb)
        raise AssertionError("no chordless cycle in a non-chordal graph")

    def is_simplicial(self, v: int) -> bool:
        """True iff the neighborhood of v is a clique."""
        nbrs = sorted(self.adj[v])
        return all(self.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))

    # -- canonical forms ---------------------------------------------------

    def canonical_form(self) -> tuple:
        return canonical_edges(self.n, self.edges)

    def is_isomorphic(self, other: "Graph") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __repr__(self):
        es = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph({self.n};{es})"


def refines_blocks(pblocks, qblocks) -> bool:
    """True iff every block of p is contained in some block of q."""
    return all(any(b <= c for c in qblocks) for b in pblocks)


def _cycle_order(g: Graph, comb):
    cs = set(comb)
    start = min(comb)
    cycle = [start]
    prev = None
    cur = start
    while True:
        nxt = min(u for u in g.adj[cur] if u in cs and u != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return cycle


def _set_partitions(n: int):
    """All set partitions of range(n); blocks sorted, listed by minimum."""
    parts: list[list[int]] = []

    def rec(v):
        if v == n:
            yield tuple(tuple(b) for b in parts)
            return
        for b in parts:
            b.append(v)
            yield from rec(v + 1)
            b.pop()
        parts.append([v])
        yield from rec(v + 1)
        parts.pop()

    yield from rec(0)


# -- canonical labeling -------------------------------------------------

def canonical_edges(n: int, edges) -> tuple:
    """Canonical form (n, edge tuple) of a possibly disconnected graph.

    Color refinement first, then the lexicographic minimum over all
    color-preserving relabelings. Desk scale: intended for n <= 9.
    """
    edges = sorted({_normalize_edge(u, v) for u, v in edges})
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    colors = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[sig[v]] for v in range(n)]
        if new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    slots = []
    start = 0
    for cls in ordered:
        slots.append(list(range(start, start + len(cls))))
        start += len(cls)
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in ordered)):
        relabel = [0] * n
        for cls_perm, slot in zip(perms, slots):
            for v, s in zip(cls_perm, slot):
                relabel[v] = s
        cand = tuple(sorted(_normalize_edge(relabel[u], relabel[v]) for u, v in edges))
        if best is None or cand < best:
            best = cand
    return (n, best if best is not None else ())


# -- named families ------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)),
                 labels=tuple(str(i + 1) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, tuple(edges), labels=tuple(str(i) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)),
                 labels=tuple(str(i + 1) for i in range(n)))


def star_graph(n: int) -> Graph:
    """St_n: the star with core 0 and n leaves."""
    if n < 1:
        raise ValueError("St_n needs n >= 1")
    return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)),
                 labels=tuple(str(i) for i in range(n + 1)))


def multipartite_graph(parts) -> Graph:
    """K_lambda: blocks of the given sizes, edges across distinct blocks."""
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("block sizes must be positive")
    if len(parts) == 1 and parts[0] > 1:
        raise ValueError("K_lambda with a single block of size >= 2 is disconnected")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    n = bounds[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph(n, tuple(edges), labels=tuple(str(i + 1) for i in range(n)))


_FAMILY_RE = re.compile(r"^(P|C|K|St)\s*(\d+(?:,\d+)*)$")


def family(name: str) -> Graph:
    """Named family: P4, C5, K4, St3, K2,2 and friends."""
    m = _FAMILY_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown graph family {name!r}")
    kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
    if kind == "P":
        return path_graph(nums[0])
    if kind == "C":
        return cycle_graph(nums[0])
    if kind == "St":
        return star_graph(nums[0])
    if len(nums) == 1:
        return complete_graph(nums[0])
    return multipartite_graph(nums)


def parse_graph(spec: str) -> Graph:
    """Parse `n;i-j,i-j,...`, a named family, or the JSON form."""
    spec = spec.strip()
    if spec.startswith("{"):
        return graph_from_json(json.loads(spec))
    if ";" in spec:
        head, _, tail = spec.partition(";")
        n = int(head)
        edges = []
        for item in tail.split(","):
            item = item.strip()
            if not item:
                continue
            u, _, v = item.partition("-")
            edges.append((int(u), int(v)))
        return Graph(n, tuple(edges))
    return family(spec)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(data: dict) -> Graph:
    return Graph(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))


def graph_to_text(g: Graph) -> str:
    """Compact `n;i-j,...` form accepted back by parse_graph."""
    return "%d;%s" % (g.n, ",".join("%d-%d" % e for e in g.edges))


@lru_cache(maxsize=None)
def tube_split(g: Graph, tube: tuple):
    """Quotient/restriction pair at a tube, cached for composition loops.

    Returns (quotient, block_of, piece, vertex_map) where quotient = g/tube
    and piece = g restricted to the tube.
    """
    tube = tuple(sorted(set(tube)))
    quotient, block_of = g.contract_tube(tube)
    piece, vertex_map = g.restrict(tube)
    return quotient, block_of, piece, vertex_map
