"""Rooted trees with leaves labeled by graph vertices, where every
subtree's leaf set must induce a connected subgraph of the host.

A tree is stored as a nested structure: a leaf is the vertex it carries,
an internal node is the tuple of its children ordered by minimum
descendant leaf. Stable trees (every internal node has at least two
inputs) correspond bijectively to laminar families of proper nontrivial
tubes; grafting substitutes one tree into a leaf of another and is the
free composition these trees carry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import CapExceeded, Graph, tube_split


def _min_leaf(node):
    return node if isinstance(node, int) else min(_min_leaf(c) for c in node)


def _canonical(node):
    if isinstance(node, int):
        return node
    return tuple(sorted((_canonical(c) for c in node), key=_min_leaf))


def _leaves(node):
    if isinstance(node, int):
        yield node
    else:
        for child in node:
            yield from _leaves(child)


def _internal_nodes(node):
    if not isinstance(node, int):
        yield node
        for child in node:
            yield from _internal_nodes(child)


def _depth(node):
    if isinstance(node, int):
        return 0
    return 1 + max(_depth(c) for c in node)


@dataclass(frozen=True)
class AdmissibleTree:
    host: Graph
    root: object  # vertex or nested tuple of children

    def __post_init__(self):
        object.__setattr__(self, "root", _canonical(self.root))
        leaves = sorted(_leaves(self.root))
        if leaves != list(range(self.host.n)):
            raise ValueError("leaves must be exactly the host vertices")
        for node in _internal_nodes(self.root):
            for child in node:
                support = frozenset(_leaves(child))
                if not self.host.is_tube(support):
                    raise ValueError(f"subtree leaf set {sorted(support)} is not a tube")

    @property
    def is_stable(self) -> bool:
        return all(len(node) >= 2 for node in _internal_nodes(self.root))

    def internal_nodes(self):
        return list(_internal_nodes(self.root))

    def depth(self) -> int:
        return _depth(self.root)

    def nested_set(self) -> frozenset:
        """Leaf sets of the non-root internal vertices."""
        out = set()
        for node in _internal_nodes(self.root):
            if node != self.root:
                out.add(frozenset(_leaves(node)))
        return frozenset(out)


def corolla(g: Graph) -> AdmissibleTree:
    if g.n == 1:
        return AdmissibleTree(g, (0,))
    return AdmissibleTree(g, tuple(range(g.n)))


def unit_tree() -> AdmissibleTree:
    return AdmissibleTree(Graph(1, ()), 0)


def enumerate_trees(g: Graph, stable_only: bool = True, cap: int = 7,
                    max_depth: int = None) -> list[AdmissibleTree]:
    """All admissible trees; unary chains are depth-capped when allowed."""
    if g.n > cap:
        raise CapExceeded(f"tree enumeration capped at {cap} vertices")
    if max_depth is None:
        max_depth = g.n + 1

    def build(verts, depth):
        out = []
        if len(verts) == 1:
            out.append(min(verts))
        if depth <= 0:
            return out
        sub, vmap = g.restrict(verts)
        for part in sub.graph_partitions():
            if stable_only and len(part) < 2:
                continue
            blocks = [frozenset(vmap[i] for i in b) for b in part]
            child_choices = [build(b, depth - 1) for b in blocks]
            for combo in itertools.product(*child_choices):
                out.append(tuple(combo))
        return out

    depth_bound = g.n if stable_only else max_depth
    roots = build(frozenset(range(g.n)), depth_bound)
    trees = [AdmissibleTree(g, r) for r in roots]
    trees.sort(key=lambda t: _sort_key(t.root))
    return trees


def _sort_key(node):
    if isinstance(node, int):
        return (0, node)
    return (1, tuple(_sort_key(c) for c in node))


def input_graph(t: AdmissibleTree, node) -> tuple[Graph, list]:
    """The graph on the inputs of an internal vertex.

    Children are the vertices (ordered by minimum leaf); two children
    are adjacent exactly when the union of their leaf sets is a tube.
    Returns (graph, children in vertex order).
    """
    if isinstance(node, int):
        raise ValueError("leaves have no input graph")
    children = sorted(node, key=_min_leaf)
    supports = [frozenset(_leaves(c)) for c in children]
    edges = []
    for i in range(len(children)):
        for j in range(i + 1, len(children)):
            if t.host.is_tube(supports[i] | supports[j]):
                edges.append((i, j))
    return Graph(len(children), tuple(edges)), children


def graft(host: Graph, tube, outer: AdmissibleTree,
          inner: AdmissibleTree) -> AdmissibleTree:
    """Substitute the inner tree for the leaf of the outer tree that
    carries the contracted tube."""
    quotient, block_of, sub, vmap = tube_split(host, tuple(tube))
    if outer.host != quotient:
        raise ValueError("outer tree does not live on the quotient")
    if inner.host != sub:
        raise ValueError("inner tree does not live on the restriction")
    tube_block = block_of[min(tube)]
    unquotient = {}
    for v in range(host.n):
        if block_of[v] != tube_block:
            unquotient[block_of[v]] = v

    inner_root = _relabel(inner.root, dict(enumerate(vmap)))

    def substitute(node):
        if isinstance(node, int):
            return inner_root if node == tube_block else unquotient[node]
        return tuple(substitute(c) for c in node)

    return AdmissibleTree(host, substitute(outer.root))


def _relabel(node, mapping):
    if isinstance(node, int):
        return mapping[node]
    return tuple(_relabel(c, mapping) for c in node)


def tree_from_nested_set(g: Graph, members) -> AdmissibleTree:
    """Inverse dictionary: a laminar family of proper nontrivial tubes
    determines a unique stable tree."""
    sets = {frozenset(m) for m in members}
    full = frozenset(range(g.n))
    for m in sets:
        if not g.is_tube(m) or len(m) < 2 or m == full:
            raise ValueError(f"{sorted(m)} is not a proper nontrivial tube")
    for a, b in itertools.combinations(sets, 2):
        if a & b and not (a <= b or b <= a):
            raise ValueError("members must be nested or disjoint")

    def build(verts):
        if len(verts) == 1:
            return min(verts)
        inside = [m for m in sets if m < verts]
        maximal = [m for m in inside if not any(m < o for o in inside)]
        covered = frozenset().union(*maximal) if maximal else frozenset()
        children = [build(m) for m in maximal]
        children += [v for v in verts - covered]
        return tuple(children)

    return AdmissibleTree(g, build(full))


def tree_to_json(t: AdmissibleTree):
    def conv(node):
        if isinstance(node, int):
            return node
        return [conv(c) for c in node]

    return conv(t.root)


def tree_from_json(g: Graph, data) -> AdmissibleTree:
    def conv(node):
        if isinstance(node, list):
            return tuple(conv(c) for c in node)
        return int(node)

    return AdmissibleTree(g, conv(data))
