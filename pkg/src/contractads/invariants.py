"""Chromatic polynomials, graphical functions with their convolution
product, and configuration-space dimension formulas.

The chromatic polynomial drives everything else here: Euler
characteristics of graphical configuration spaces are evaluations of it,
cohomology dimensions over R^d come from a sign twist of it, and the
convolution identity one * (q mu) = chi ties the two views together.
Intermediate graphs in deletion-contraction may be disconnected, so the
internal recursion works on raw (n, edges) data.
"""

from __future__ import annotations

import itertools
import threading

from . import polys
from .graphs import Graph, canonical_edges

_memo_lock = threading.Lock()
_chromatic_memo: dict = {}


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _components(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _chromatic_raw(n, edges):
    """Deletion-contraction with memoization on canonical forms."""
    if not edges:
        return [0] * n + [1]
    key = canonical_edges(n, edges)
    with _memo_lock:
        cached = _chromatic_memo.get(key)
    if cached is not None:
        return cached
    comps = _components(n, edges)
    if len(comps) > 1:
        poly = [1]
        for verts in comps:
            index = {v: i for i, v in enumerate(verts)}
            sub = tuple(sorted(
                (index[u], index[v]) for u, v in edges if u in index and v in index
            ))
            poly = polys.mul(poly, _chromatic_raw(len(verts), sub))
    else:
        u, v = edges[0]
        deleted = edges[1:]
        p_del = _chromatic_raw(n, deleted)
        relabel = {}
        nxt = 0
        for x in range(n):
            if x == v:
                continue
            relabel[x] = nxt
            nxt += 1
        relabel[v] = relabel[u]
        contracted = tuple(sorted({
            _norm(relabel[a], relabel[b])
            for a, b in deleted
            if relabel[a] != relabel[b]
        }))
        p_con = _chromatic_raw(n - 1, contracted)
        poly = polys.sub(p_del, p_con)
    with _memo_lock:
        _chromatic_memo[key] = poly
    return poly


def chromatic(g: Graph) -> list:
    """Chromatic polynomial, coefficients ascending in q."""
    return list(_chromatic_raw(g.n, g.edges))


def mobius(g: Graph) -> int:
    """Signed coefficient of q^1 in the chromatic polynomial."""
    p = chromatic(g)
    return p[1] if len(p) > 1 else 0


def os_top_dimension(g: Graph) -> int:
    return abs(mobius(g))


def count_acyclic_orientations(g: Graph) -> int:
    return abs(polys.evaluate(chromatic(g), -1))


def euler_conf(g: Graph, chi_x: int) -> int:
    """Compactly supported Euler characteristic of Conf_g(X) from chi_c(X)."""
    return polys.evaluate(chromatic(g), chi_x)


def euler_conf_manifold(g: Graph, d: int, chi_x: int) -> int:
    """Ordinary Euler characteristic for an even/odd-dimensional manifold."""
    return (-1) ** (d * g.n) * polys.evaluate(chromatic(g), (-1) ** d * chi_x)


class GraphicalFunction:
    """Isomorphism-invariant map from connected graphs to polynomials.

    Values are memoized on canonical forms, which also enforces the
    constancy on isomorphism classes.
    """

    def __init__(self, rule, name="f"):
        self._rule = rule
        self.name = name
        self._memo = {}
        self._lock = threading.Lock()

    def __call__(self, g: Graph):
        key = g.canonical_form()
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return list(cached)
        value = polys.trim(list(self._rule(g)))
        with self._lock:
            self._memo[key] = tuple(value)
        return value


def star_product(psi: GraphicalFunction, phi: GraphicalFunction,
                 cap: int = 10) -> GraphicalFunction:
    """Convolution over graph partitions.

    (psi*phi)(G) sums psi(G/I) * prod_{blocks B of I} phi(G|_B) over all
    graph partitions I.
    """

    def rule(g: Graph):
        total = []
        for part in g.graph_partitions(cap=cap):
            quotient, _ = g.contract(part)
            term = psi(quotient)
            for block in part:
                sub, _ = g.restrict(block)
                term = polys.mul(term, phi(sub))
            total = polys.add(total, term)
        return total

    return GraphicalFunction(rule, name=f"({psi.name}*{phi.name})")


one_function = GraphicalFunction(lambda g: [1], name="one")
unit_function = GraphicalFunction(lambda g: [1] if g.n == 1 else [], name="unit")
chromatic_function = GraphicalFunction(chromatic, name="chi")
q_mobius_function = GraphicalFunction(lambda g: polys.trim([0, mobius(g)]), name="q.mu")


def os_poincare(g: Graph, d: int = 2) -> list:
    """Betti numbers of Conf_g(R^d), listed by k with H^((d-1)k) = b_k.

    Computed two independent ways: a sign twist of the chromatic
    polynomial, and a sum over graph partitions of products of top
    dimensions. Both must agree, and the k=0,1 anchors are asserted.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    n = g.n
    chi = chromatic(g)
    via_chromatic = [
        (-1) ** k * (chi[n - k] if n - k < len(chi) else 0)
        for k in range(n)
    ]
    via_partitions = [0] * n
    for part in g.graph_partitions(cap=max(10, n)):
        prod = 1
        for block in part:
            sub, _ = g.restrict(block)
            prod *= abs(mobius(sub))
        via_partitions[n - len(part)] += prod
    assert via_chromatic == via_partitions, (via_chromatic, via_partitions)
    assert via_chromatic[0] == 1
    if n >= 2:
        assert via_chromatic[1] == len(g.edges)
    return polys.trim(via_chromatic)


# -- no-broken-circuit oracle ---------------------------------------------

def _simple_cycle_edge_sets(g: Graph):
    """Edge sets of all simple cycles, each listed once."""
    cycles = []
    for size in range(3, g.n + 1):
        for comb in itertools.combinations(range(g.n), size):
            cycles.extend(_hamiltonian_cycles(g, comb))
    return cycles


def _hamiltonian_cycles(g: Graph, verts):
    verts = sorted(verts)
    start, rest = verts[0], verts[1:]
    out = []
    path = [start]

    def dfs(cur, remaining):
        if not remaining:
            if g.has_edge(cur, start) and path[1] < path[-1]:
                out.append(frozenset(
                    _norm(path[i], path[(i + 1) % len(path)])
                    for i in range(len(path))
                ))
            return
        for nxt in sorted(remaining):
            if g.has_edge(cur, nxt):
                path.append(nxt)
                dfs(nxt, remaining - {nxt})
                path.pop()

    dfs(start, frozenset(rest))
    return out


def nbc_dimensions(g: Graph, edge_order=None) -> list:
    """Counts of no-broken-circuit edge subsets by size.

    A broken circuit is a simple cycle minus its last edge in the given
    total order; subsets avoiding all of them are counted by a pruned
    depth-first search (they are all forests, so the search stays small).
    """
    order = [tuple(_norm(u, v)) for u, v in (edge_order or g.edges)]
    if sorted(order) != list(g.edges) or len(order) != len(g.edges):
        raise ValueError("edge_order must be a permutation of the edges")
    position = {e: i for i, e in enumerate(order)}
    broken = [
        frozenset(c) - {max(c, key=position.get)}
        for c in _simple_cycle_edge_sets(g)
    ]
    counts = [0] * g.n

    def extend(start, current):
        counts[len(current)] += 1
        for i in range(start, len(order)):
            nxt = current | {order[i]}
            if any(bc <= nxt for bc in broken):
                continue
            extend(i + 1, nxt)

    extend(0, frozenset())
    return counts


def chordal_top_recursion(g: Graph, v: int) -> bool:
    """Top OS dimension recursion at a simplicial vertex."""
    if not g.is_simplicial(v):
        raise ValueError(f"vertex {v} is not simplicial")
    if g.n < 2:
        raise ValueError("need at least two vertices")
    verts = [u for u in range(g.n) if u != v]
    index = {u: i for i, u in enumerate(verts)}
    sub = Graph(g.n - 1, tuple(
        (index[a], index[b]) for a, b in g.edges if a != v and b != v
    ))
    return os_top_dimension(g) == g.degree(v) * os_top_dimension(sub)
