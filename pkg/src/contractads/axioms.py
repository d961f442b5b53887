"""Generic contractad interface plus exhaustive axiom checkers.

An instance bundles, for every connected graph, a finite component together
with a unit element and a composition indexed by tubes.  The checkers below
verify the defining laws by brute force on small graphs and return report
dicts `{"axiom", "instance", "graph", "checked", "witnesses"}`; an empty
witness list means no violation was found.

Tube pairs where one side contracts to a single vertex make the composition
degenerate to a unit law, which `check_unit` already covers exhaustively, so
`check_associativity` and `check_monotonicity` only iterate tubes of size at
least two.  That keeps the sweeps over 4-vertex hosts with d = 3 inside a
sane time budget without dropping any non-degenerate case.
"""

from __future__ import annotations

import itertools

from . import directions as dirs
from . import trees as trz
from .graphs import CapExceeded, Graph, graph_to_text, tube_split

MAX_WITNESSES = 25


class ADContractad:
    """Acyclic weighted directions with d weights per edge (optionally the
    extended family that only forbids uniform-weight cycles)."""

    def __init__(self, d: int, ext: bool = False):
        self.d = d
        self.ext = ext
        self.name = "AD_%d%s" % (d, "^ext" if ext else "")
        self.ordered = True
        self._memo = {}

    def component(self, g: Graph):
        if g not in self._memo:
            self._memo[g] = dirs.enumerate_directions(g, self.d, self.ext)
        return self._memo[g]

    def unit(self):
        return dirs.unit_direction(self.d)

    def compose(self, host, tube, outer, inner):
        return dirs.compose(host, tube, outer, inner, self.ext)

    def leq(self, x, y):
        return x.leq(y)

    def relabel(self, x, perm, host):
        return dirs.relabel(x, perm, host)

    def element_json(self, x):
        return dirs.direction_to_json(x)


class TreesContractad:
    """Stable admissible trees under leaf grafting.  No order and no
    declared relabelling action."""

    name = "trees"
    ordered = False

    def __init__(self):
        self._memo = {}

    def component(self, g: Graph):
        if g not in self._memo:
            self._memo[g] = trz.enumerate_trees(g, stable_only=True)
        return self._memo[g]

    def unit(self):
        return trz.unit_tree()

    def compose(self, host, tube, outer, inner):
        return trz.graft(host, tube, outer, inner)

    def element_json(self, x):
        return trz.tree_to_json(x)


def automorphisms(g: Graph) -> list[tuple]:
    """All adjacency-preserving vertex bijections, as tuples v -> perm[v]."""
    if g.n > 8:
        raise CapExceeded("automorphism search capped at 8 vertices")
    edge_set = set(g.edges)
    out = []
    degrees = [g.degree(v) for v in range(g.n)]
    for perm in itertools.permutations(range(g.n)):
        if any(degrees[v] != degrees[perm[v]] for v in range(g.n)):
            continue
        if all(tuple(sorted((perm[u], perm[v]))) in edge_set for u, v in g.edges):
            out.append(perm)
    return out


def _report(axiom, instance, g, checked, witnesses):
    return {"axiom": axiom, "instance": instance.name, "graph": graph_to_text(g),
            "checked": checked, "witnesses": witnesses}


def check_unit(instance, g: Graph, cap: int = 6) -> dict:
    """x composed with the unit at any single vertex is x, and the unit
    composed with x over the full vertex set is x."""
    if g.n > cap:
        raise CapExceeded("unit check capped at %d vertices" % cap)
    unit = instance.unit()
    full = tuple(range(g.n))
    witnesses = []
    checked = 0
    for x in instance.component(g):
        for v in range(g.n):
            checked += 1
            got = instance.compose(g, (v,), x, unit)
            if got != x:
                witnesses.append({"law": "inner", "vertex": v,
                                  "element": instance.element_json(x),
                                  "got": instance.element_json(got)})
        checked += 1
        got = instance.compose(g, full, unit, x)
        if got != x:
            witnesses.append({"law": "outer",
                              "element": instance.element_json(x),
                              "got": instance.element_json(got)})
        if len(witnesses) >= MAX_WITNESSES:
            break
    return _report("unit", instance, g, checked, witnesses)


def check_associativity(instance, g: Graph, cap: int = 5) -> dict:
    """Sequential law for nested tubes and parallel law for disjoint ones,
    exhaustive over component elements."""
    if g.n > cap:
        raise CapExceeded("associativity check capped at %d vertices" % cap)
    ej = instance.element_json
    witnesses = []
    checked = 0
    tubes = [t for t in g.tubes() if len(t) >= 2]

    for big in tubes:
        quotient, _, sub, vmap = tube_split(g, big)
        outer_elems = instance.component(quotient)
        for small_sub in sub.tubes():
            if len(small_sub) < 2:
                continue
            small = tuple(vmap[i] for i in small_sub)
            q_small, block_small, piece, _ = tube_split(g, small)
            big_image = tuple(sorted({block_small[v] for v in big}))
            mid_graph = tube_split(sub, small_sub)[0]
            mids = instance.component(mid_graph)
            inner_elems = instance.component(piece)
            for x, y, z in itertools.product(outer_elems, mids, inner_elems):
                checked += 1
                lhs = instance.compose(g, big, x,
                                       instance.compose(sub, small_sub, y, z))
                rhs = instance.compose(g, small,
                                       instance.compose(q_small, big_image, x, y),
                                       z)
                if lhs != rhs:
                    witnesses.append({"kind": "sequential",
                                      "tube": list(big), "subtube": list(small),
                                      "x": ej(x), "y": ej(y), "z": ej(z),
                                      "lhs": ej(lhs), "rhs": ej(rhs)})
                    if len(witnesses) >= MAX_WITNESSES:
                        return _report("associativity", instance, g, checked,
                                       witnesses)

    for left, right in itertools.combinations(tubes, 2):
        if set(left) & set(right):
            continue
        q_left, block_left, piece_left, _ = tube_split(g, left)
        q_right, block_right, piece_right, _ = tube_split(g, right)
        left_image = tuple(sorted({block_right[v] for v in left}))
        right_image = tuple(sorted({block_left[v] for v in right}))
        top = tube_split(q_right, left_image)[0]
        xs = instance.component(top)
        ys = instance.component(piece_left)
        zs = instance.component(piece_right)
        for x, y, z in itertools.product(xs, ys, zs):
            checked += 1
            via_right = instance.compose(
                g, right, instance.compose(q_right, left_image, x, y), z)
            via_left = instance.compose(
                g, left, instance.compose(q_left, right_image, x, z), y)
            if via_right != via_left:
                witnesses.append({"kind": "parallel",
                                  "tube": list(left), "other": list(right),
                                  "x": ej(x), "y": ej(y), "z": ej(z),
                                  "lhs": ej(via_right), "rhs": ej(via_left)})
                if len(witnesses) >= MAX_WITNESSES:
                    return _report("associativity", instance, g, checked,
                                   witnesses)
    return _report("associativity", instance, g, checked, witnesses)


def check_monotonicity(instance, g: Graph, cap: int = 5,
                       pair_cap: int = 300000) -> dict:
    """Composition respects the partial order in each argument.  Together
    with transitivity this gives the two-sided statement for pairs
    x <= x', y <= y'.

    Finding comparable pairs costs |component|^2 order queries, so tubes
    whose quotient or restriction component is too large for pair_cap are
    skipped; the skip rule is size-based and deterministic.
    """
    if not getattr(instance, "ordered", False):
        raise ValueError("instance %r carries no partial order" % instance.name)
    if g.n > cap:
        raise CapExceeded("monotonicity check capped at %d vertices" % cap)
    ej = instance.element_json
    witnesses = []
    checked = 0
    for tube in g.tubes():
        if len(tube) < 2:
            continue
        quotient, _, piece, _ = tube_split(g, tube)
        xs = instance.component(quotient)
        ys = instance.component(piece)
        if len(xs) ** 2 + len(ys) ** 2 > pair_cap:
            continue
        table = {(i, j): instance.compose(g, tube, x, y)
                 for i, x in enumerate(xs) for j, y in enumerate(ys)}
        outer_pairs = [(i, k) for i in range(len(xs)) for k in range(len(xs))
                       if i != k and instance.leq(xs[i], xs[k])]
        inner_pairs = [(j, l) for j in range(len(ys)) for l in range(len(ys))
                       if j != l and instance.leq(ys[j], ys[l])]
        for (i, k), j in itertools.product(outer_pairs, range(len(ys))):
            checked += 1
            if not instance.leq(table[i, j], table[k, j]):
                witnesses.append({"side": "outer", "tube": list(tube),
                                  "low": ej(xs[i]), "high": ej(xs[k]),
                                  "with": ej(ys[j])})
                if len(witnesses) >= MAX_WITNESSES:
                    return _report("monotonicity", instance, g, checked, witnesses)
        for i, (j, l) in itertools.product(range(len(xs)), inner_pairs):
            checked += 1
            if not instance.leq(table[i, j], table[i, l]):
                witnesses.append({"side": "inner", "tube": list(tube),
                                  "low": ej(ys[j]), "high": ej(ys[l]),
                                  "with": ej(xs[i])})
                if len(witnesses) >= MAX_WITNESSES:
                    return _report("monotonicity", instance, g, checked, witnesses)
    return _report("monotonicity", instance, g, checked, witnesses)


def check_equivariance(instance, g: Graph, cap: int = 5,
                       sample_cap: int = 200):
    """Composition commutes with graph automorphisms, for instances that
    declare a relabelling action.  Element pairs are subsampled with a
    deterministic stride once the product grows past sample_cap."""
    if not hasattr(instance, "relabel"):
        return None
    if g.n > cap:
        raise CapExceeded("equivariance check capped at %d vertices" % cap)
    ej = instance.element_json
    witnesses = []
    checked = 0
    autos = [p for p in automorphisms(g) if p != tuple(range(g.n))]
    for tube in g.tubes():
        if len(tube) < 2:
            continue
        quotient, block_of, piece, vmap = tube_split(g, tube)
        xs = instance.component(quotient)
        ys = instance.component(piece)
        total = len(xs) * len(ys)
        stride = max(1, total // sample_cap)
        for sigma in autos:
            image = tuple(sorted(sigma[v] for v in tube))
            q_img, block_img, piece_img, vmap_img = tube_split(g, image)
            perm_q = [0] * quotient.n
            for v in range(g.n):
                perm_q[block_of[v]] = block_img[sigma[v]]
            spot = {v: i for i, v in enumerate(vmap_img)}
            perm_r = [spot[sigma[v]] for v in vmap]
            for idx in range(0, total, stride):
                x = xs[idx // len(ys)]
                y = ys[idx % len(ys)]
                checked += 1
                lhs = instance.relabel(instance.compose(g, tube, x, y), sigma, g)
                rhs = instance.compose(g, image,
                                       instance.relabel(x, perm_q, q_img),
                                       instance.relabel(y, perm_r, piece_img))
                if lhs != rhs:
                    witnesses.append({"perm": list(sigma), "tube": list(tube),
                                      "x": ej(x), "y": ej(y),
                                      "lhs": ej(lhs), "rhs": ej(rhs)})
                    if len(witnesses) >= MAX_WITNESSES:
                        return _report("equivariance", instance, g, checked,
                                       witnesses)
    return _report("equivariance", instance, g, checked, witnesses)


def full_report(instance, g: Graph, cap: int = 5) -> list[dict]:
    """Every applicable axiom check for one instance on one graph."""
    reports = [check_unit(instance, g, cap=max(cap, g.n)),
               check_associativity(instance, g, cap=cap)]
    if getattr(instance, "ordered", False):
        reports.append(check_monotonicity(instance, g, cap=cap))
    equi = check_equivariance(instance, g, cap=cap)
    if equi is not None:
        reports.append(equi)
    return reports
