"""Pipes of an acyclic orientation, nested sets of pipes, and the face
counts of the polytope each orientation spans.

A tube is a pipe of an orientation when no directed path with both ends
in the tube ever leaves it.  Nested sets of proper nontrivial pipes index
the faces of a polytope of dimension |V| - 2; one polytope arises per
acyclic orientation, and the census buckets them up to face-lattice
isomorphism.
"""

from __future__ import annotations

import itertools

import networkx as nx

from . import trees as trz
from .directions import WeightedDirection, enumerate_directions
from .graphs import CapExceeded, Graph, tube_split


def orientation(g: Graph, arcs) -> WeightedDirection:
    """Wrap plain (tail, head) pairs as a weight-1 direction."""
    return WeightedDirection(g, 1, tuple((a, b, 1) for a, b in arcs))


def _check_alpha(alpha: WeightedDirection):
    if alpha.d != 1:
        raise ValueError("orientations carry a single weight (d = 1)")
    if not alpha.is_acyclic():
        raise ValueError("orientation has a directed cycle")


def _reachability(alpha: WeightedDirection) -> list[set]:
    n = alpha.host.n
    out = [set() for _ in range(n)]
    for a, b, _ in alpha.arcs:
        out[a].add(b)
    reach = [set() for _ in range(n)]
    for v in reversed(_topo_order(alpha)):
        for w in out[v]:
            reach[v].add(w)
            reach[v] |= reach[w]
    return reach


def _topo_order(alpha: WeightedDirection) -> list[int]:
    n = alpha.host.n
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b, _ in alpha.arcs:
        out[a].append(b)
        indeg[b] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    return order


def pipes(alpha: WeightedDirection) -> list[tuple]:
    """Tubes no directed path can pass through: every directed path with
    both endpoints inside stays inside.  Includes singletons and the
    full vertex set."""
    _check_alpha(alpha)
    g = alpha.host
    reach = _reachability(alpha)
    out = []
    for tube in g.tubes():
        inside = set(tube)
        for w in range(g.n):
            if w in inside:
                continue
            if any(w in reach[u] for u in inside) and inside & reach[w]:
                break
        else:
            out.append(tube)
    return out


def is_nested(alpha: WeightedDirection, members) -> bool:
    """Recursive contraction test: at every node of the inclusion forest
    of members plus the full set, contracting the restriction by the
    maximal members strictly inside must be well-defined (parallel cross
    edges agree) and acyclic."""
    _check_alpha(alpha)
    g = alpha.host
    tubes = []
    for m in members:
        t = tuple(sorted(set(m)))
        if not g.is_tube(t):
            raise ValueError("member %r is not a tube" % (t,))
        if len(t) < 2 or len(t) == g.n:
            raise ValueError("members must be proper nontrivial tubes")
        tubes.append(t)
    tubes = sorted(set(tubes))
    sets = [set(t) for t in tubes]
    for a, b in itertools.combinations(sets, 2):
        if (a & b) and not (a <= b or b <= a):
            return False
    for node in sets + [set(range(g.n))]:
        children = [s for s in sets if s < node
                    and not any(s < t < node for t in sets)]
        block = {}
        for i, child in enumerate(children):
            for v in child:
                block[v] = i
        nxt = len(children)
        for v in sorted(node):
            if v not in block:
                block[v] = nxt
                nxt += 1
        seen = {}
        arcs = []
        conflict = False
        for a, b, _ in alpha.arcs:
            if a not in block or b not in block:
                continue
            pa, pb = block[a], block[b]
            if pa == pb:
                continue
            key = (pa, pb) if pa < pb else (pb, pa)
            if seen.setdefault(key, (pa, pb)) != (pa, pb):
                conflict = True
                break
            arcs.append((pa, pb))
        if conflict or not _acyclic(nxt, arcs):
            return False
    return True


def _acyclic(n, arcs) -> bool:
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    done = 0
    queue = [v for v in range(n) if indeg[v] == 0]
    while queue:
        v = queue.pop()
        done += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done == n


def nested_sets(alpha: WeightedDirection, cap: int = 8) -> list[tuple]:
    """Every nested set of proper nontrivial pipes, the empty one
    included; faces of the polytope in the nested-set indexing."""
    g = alpha.host
    if g.n > cap:
        raise CapExceeded("nested-set enumeration capped at %d vertices" % cap)
    candidates = [p for p in pipes(alpha) if 2 <= len(p) < g.n]
    found = []

    def extend(current, start):
        found.append(tuple(current))
        for i in range(start, len(candidates)):
            trial = current + [candidates[i]]
            if is_nested(alpha, trial):
                extend(trial, i + 1)

    extend([], 0)
    return sorted(tuple(sorted(face)) for face in found)


def f_vector(alpha: WeightedDirection, cap: int = 8) -> tuple:
    """Face counts by dimension, vertices first, top face last."""
    faces = nested_sets(alpha, cap=cap)
    return _f_from_faces(faces, alpha.host.n)


def _f_from_faces(faces, n) -> tuple:
    top_dim = max(n - 2, 0)
    counts = [0] * (top_dim + 1)
    for face in faces:
        counts[top_dim - len(face)] += 1
    return tuple(counts)


def _hasse(faces) -> nx.DiGraph:
    by_size = {}
    for i, face in enumerate(faces):
        by_size.setdefault(len(face), []).append(i)
    h = nx.DiGraph()
    for i, face in enumerate(faces):
        h.add_node(i, rank=len(face))
    for size, idxs in by_size.items():
        for i in idxs:
            small = set(faces[i])
            for j in by_size.get(size + 1, ()):
                if small <= set(faces[j]):
                    h.add_edge(j, i)
    return h


def _lattice_isomorphic(h1: nx.DiGraph, h2: nx.DiGraph) -> bool:
    match = nx.algorithms.isomorphism.DiGraphMatcher(
        h1, h2, node_match=lambda a, b: a["rank"] == b["rank"])
    return match.is_isomorphic()


def fm1_census(g: Graph, cap: int = 8) -> list[dict]:
    """One polytope per acyclic orientation, bucketed by face-lattice
    isomorphism; deterministic order (f-vector, then lattice hash)."""
    if g.n > cap:
        raise CapExceeded("census capped at %d vertices" % cap)
    buckets = []
    for alpha in enumerate_directions(g, 1):
        faces = nested_sets(alpha, cap=cap)
        fv = _f_from_faces(faces, g.n)
        hasse = _hasse(faces)
        label = nx.weisfeiler_lehman_graph_hash(hasse, node_attr="rank")
        for bucket in buckets:
            if (bucket["f"] == fv and bucket["hash"] == label
                    and _lattice_isomorphic(bucket["rep"], hasse)):
                bucket["count"] += 1
                break
        else:
            buckets.append({"f": fv, "hash": label, "rep": hasse, "count": 1})
    buckets.sort(key=lambda b: (b["f"], b["hash"]))
    return [{"f": list(b["f"]), "count": b["count"]} for b in buckets]


def realize_decorated_tree(t: trz.AdmissibleTree, decoration: dict) -> WeightedDirection:
    """Orientation of the host produced by a stable tree whose internal
    vertices carry acyclic orientations of their input graphs: edges
    inside a child keep the child's datum, edges between children follow
    the node's own orientation."""
    g = t.host
    if isinstance(t.root, int):
        return WeightedDirection(g, 1, ())

    def build(node) -> WeightedDirection:
        support = tuple(sorted(trz._leaves(node)))
        sub = tube_split(g, support)[2]
        spot = {v: i for i, v in enumerate(support)}
        input_graph, children = trz.input_graph(t, node)
        beta = decoration[node]
        if beta.host != input_graph:
            raise ValueError("decoration does not live on the input graph")
        child_of = {}
        realized = {}
        for i, child in enumerate(children):
            leaves = tuple(sorted(trz._leaves(child)))
            for v in leaves:
                child_of[v] = i
            if not isinstance(child, int):
                realized[i] = (build(child), leaves)
        arcs = []
        for a, b in sub.edges:
            ha, hb = support[a], support[b]
            i, j = child_of[ha], child_of[hb]
            if i == j:
                inner, leaves = realized[i]
                pos = {v: k for k, v in enumerate(leaves)}
                x, y, _ = inner.arc_on(pos[ha], pos[hb])
                arcs.append((spot[leaves[x]], spot[leaves[y]], 1))
            else:
                p, q, _ = beta.arc_on(i, j)
                arcs.append((a, b, 1) if (p, q) == (i, j) else (b, a, 1))
        return WeightedDirection(sub, 1, tuple(arcs))

    return build(t.root)


def decorated_tree_atlas(g: Graph, cap: int = 7) -> dict:
    """Independent route to the faces: for every stable tree and every
    decoration of its internal vertices by acyclic orientations, record
    the tree's nested set under the orientation the pair composes to.
    Returns {orientation: sorted list of nested sets}."""
    atlas = {}
    for t in trz.enumerate_trees(g, stable_only=True, cap=cap):
        internal = t.internal_nodes()
        pools = []
        for node in internal:
            input_graph, _ = trz.input_graph(t, node)
            pools.append(enumerate_directions(input_graph, 1))
        face = tuple(sorted(tuple(sorted(s)) for s in t.nested_set()))
        for combo in itertools.product(*pools):
            alpha = realize_decorated_tree(t, dict(zip(internal, combo)))
            atlas.setdefault(alpha, []).append(face)
    for key in atlas:
        atlas[key].sort()
    return atlas
