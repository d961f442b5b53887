"""End-to-end checks bundling the shipped guarantees into one report.

Each check returns {"name", "ok", "detail"}; run_all adds wall-clock
seconds.  The sweeps default to the sizes the guarantees are stated at;
--max-vertices only ever shrinks them.
"""

from __future__ import annotations

import itertools
import random
import time

import networkx as nx

from .axioms import ADContractad, TreesContractad, full_report
from .cehomology import FiniteCDGA, build_cf, cf_euler, conf_cs_cohomology
from .chow import class_space, divisor_from_h, verify_prespsi
from .directions import (enumerate_directions, in_P, nerve_euler_characteristic,
                         order_complex_betti, psi_map)
from .graphs import Graph, cycle_graph, complete_graph, parse_graph
from .invariants import (chordal_top_recursion, chromatic,
                         count_acyclic_orientations, nbc_dimensions,
                         os_poincare)
from .oscycle import (bijection_check, euler_hilbert_identity, hilbert_os,
                      minimality_gap)
from .polys import evaluate
from .polytopes import decorated_tree_atlas, fm1_census, nested_sets

DEFAULT_SEED = 20240611


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """Connected graphs up to isomorphism, from the small-graph atlas."""
    out = []
    for ng in nx.graph_atlas_g():
        n = ng.number_of_nodes()
        if min_n <= n <= max_n and n and nx.is_connected(ng):
            spot = {u: i for i, u in enumerate(sorted(ng.nodes()))}
            edges = tuple((spot[u], spot[v]) for u, v in ng.edges())
            out.append(Graph(n, edges))
    return out


def _clamp(default: int, max_vertices) -> int:
    return default if max_vertices is None else min(default, max_vertices)


def check_fm1_census(max_vertices=None, seed=None) -> dict:
    c4 = fm1_census(cycle_graph(4))
    want_c4 = [{"f": [5, 5, 1], "count": 8}, {"f": [6, 6, 1], "count": 4},
               {"f": [8, 8, 1], "count": 2}]
    k4 = fm1_census(complete_graph(4))
    want_k4 = [{"f": [5, 5, 1], "count": 24}]
    total = sum(entry["count"] for entry in c4)
    ok = c4 == want_c4 and k4 == want_k4 and total == 14
    return {"name": "fm1-census", "ok": ok,
            "detail": "C_4 components %d (want 14), K_4 %s" % (total, k4)}


def check_face_lattice_oracle(max_vertices=None, seed=None) -> dict:
    bound = _clamp(5, max_vertices)
    graphs_checked = 0
    faces_checked = 0
    for g in connected_graphs(bound):
        atlas = decorated_tree_atlas(g)
        oriented = enumerate_directions(g, 1)
        if sorted(atlas, key=lambda a: a.arcs) != oriented:
            return {"name": "face-lattice-oracle", "ok": False,
                    "detail": "orientation sets differ on %s" % (g.edges,)}
        for alpha in oriented:
            if atlas[alpha] != nested_sets(alpha):
                return {"name": "face-lattice-oracle", "ok": False,
                        "detail": "face mismatch on %s" % (alpha,)}
            faces_checked += len(atlas[alpha])
        graphs_checked += 1
    return {"name": "face-lattice-oracle", "ok": True,
            "detail": "%d graphs, %d faces vs decorated trees"
                      % (graphs_checked, faces_checked)}


def check_os_dimensions(max_vertices=None, seed=None) -> dict:
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    c4 = cycle_graph(4)
    if os_poincare(c4, 2) != [1, 4, 6, 3]:
        return {"name": "os-dimensions", "ok": False,
                "detail": "os_poincare(C_4,2) off"}
    for trial in range(5):
        order = list(c4.edges)
        rng.shuffle(order)
        if nbc_dimensions(c4, tuple(order)) != [1, 4, 6, 3]:
            return {"name": "os-dimensions", "ok": False,
                    "detail": "NBC oracle differs on order %s" % (order,)}
    totals = 0
    for g in connected_graphs(_clamp(6, max_vertices)):
        if sum(os_poincare(g, 2)) != count_acyclic_orientations(g):
            return {"name": "os-dimensions", "ok": False,
                    "detail": "t=1 total mismatch on %s" % (g.edges,)}
        totals += 1
    chordal_pairs = 0
    for g in connected_graphs(_clamp(7, max_vertices), min_n=2):
        if not g.chordality()["is_chordal"]:
            continue
        for v in range(g.n):
            if g.is_simplicial(v):
                if not chordal_top_recursion(g, v):
                    return {"name": "os-dimensions", "ok": False,
                            "detail": "recursion fails at %d of %s"
                                      % (v, g.edges)}
                chordal_pairs += 1
    return {"name": "os-dimensions", "ok": True,
            "detail": "5 NBC orders, %d totals, %d simplicial-vertex "
                      "recursions" % (totals, chordal_pairs)}


def _algebra_panel():
    panel = [FiniteCDGA.point()]
    panel += [FiniteCDGA.euclidean(d) for d in (1, 2, 3)]
    panel += [FiniteCDGA.wedge(g, d) for g in (1, 2, 3) for d in (1, 2)]
    return panel


def check_euler_identity(max_vertices=None, seed=None) -> dict:
    panel = _algebra_panel()
    pairs = 0
    for g in connected_graphs(_clamp(5, max_vertices)):
        chi_poly = chromatic(g)
        for A in panel:
            if cf_euler(g, A) != evaluate(chi_poly, A.euler_characteristic()):
                return {"name": "euler-identity", "ok": False,
                        "detail": "chain count differs from chromatic "
                                  "value on %s" % (g.edges,)}
            pairs += 1
    built = 0
    for g in connected_graphs(_clamp(4, max_vertices)):
        A = FiniteCDGA.euclidean(2)
        if build_cf(g, A).euler_characteristic() != \
                evaluate(chromatic(g), 1):
            return {"name": "euler-identity", "ok": False,
                    "detail": "built complex disagrees on %s" % (g.edges,)}
        built += 1
    return {"name": "euler-identity", "ok": True,
            "detail": "%d (graph, algebra) pairs + %d built complexes"
                      % (pairs, built)}


def check_wedge_betti(max_vertices=None, seed=None) -> dict:
    top = _clamp(4, max_vertices)
    cases = 0
    for n in range(2, top + 1):
        g = parse_graph("P%d" % n)
        for genus in (1, 2, 3):
            for d in (1, 2):
                got = conf_cs_cohomology(g, FiniteCDGA.wedge(genus, d))
                want = {d * n: genus ** n}
                want[d * (n - 1)] = want.get(d * (n - 1), 0) \
                    + genus ** (n - 1)
                if got != want:
                    return {"name": "wedge-betti", "ok": False,
                            "detail": "P_%d g=%d d=%d gave %s"
                                      % (n, genus, d, got)}
                cases += 1
    dual_ok = True
    if top >= 4:
        got = conf_cs_cohomology(cycle_graph(4), FiniteCDGA.euclidean(2))
        dual_ok = got == {5: 3, 6: 6, 7: 4, 8: 1}
        osp = os_poincare(cycle_graph(4), 2)
        dual_ok = dual_ok and all(got.get(8 - k, 0) == osp[k]
                                  for k in range(4))
    if not dual_ok:
        return {"name": "wedge-betti", "ok": False,
                "detail": "C_4 compact-support table broken"}
    return {"name": "wedge-betti", "ok": True,
            "detail": "%d wedge cases + C_4 duality table" % cases}


def check_anick_suite(max_vertices=None, seed=None) -> dict:
    for n in (5, 6):
        if not bijection_check(n, 6):
            return {"name": "anick-suite", "ok": False,
                    "detail": "chain/word bijection fails at n=%d" % n}
        if not minimality_gap(n, 6)["minimal"]:
            return {"name": "anick-suite", "ok": False,
                    "detail": "gap condition fails at n=%d" % n}
        if not euler_hilbert_identity(n, 8):
            return {"name": "anick-suite", "ok": False,
                    "detail": "Hilbert identity fails at n=%d" % n}
    if minimality_gap(4, 6)["minimal"]:
        return {"name": "anick-suite", "ok": False,
                "detail": "n=4 negative control unexpectedly minimal"}
    for n in range(4, 9):
        if sum(hilbert_os(n)) != 2 ** n - 2:
            return {"name": "anick-suite", "ok": False,
                    "detail": "normal-word total off at n=%d" % n}
    return {"name": "anick-suite", "ok": True,
            "detail": "n in {5,6} through m=6; n=4 control; totals to n=8"}


def check_psi_h_classes(max_vertices=None, seed=None) -> dict:
    tubes = 0
    for g in connected_graphs(_clamp(6, max_vertices)):
        space = class_space(g)
        for tube in space.basis:
            if divisor_from_h(g, tube) != space.divisor(tube):
                return {"name": "psi-h-classes", "ok": False,
                        "detail": "round trip fails at %s of %s"
                                  % (tube, g.edges)}
            tubes += 1
    for shape in ((1, 1, 1), (3, 1), (2, 2), (2, 1, 1)):
        if not verify_prespsi(shape):
            return {"name": "psi-h-classes", "ok": False,
                    "detail": "prespsi fails on blocks %s" % (shape,)}
    return {"name": "psi-h-classes", "ok": True,
            "detail": "%d tube round trips (edge independence asserted "
                      "inside h); 4 multipartite hosts" % tubes}


def check_contractad_axioms(max_vertices=None, seed=None) -> dict:
    instances = [ADContractad(1), ADContractad(2), ADContractad(3),
                 ADContractad(1, ext=True), ADContractad(2, ext=True),
                 TreesContractad()]
    graphs = connected_graphs(_clamp(4, max_vertices))
    checked = 0
    for instance in instances:
        for g in graphs:
            for report in full_report(instance, g):
                if report["witnesses"]:
                    return {"name": "contractad-axioms", "ok": False,
                            "detail": "%s fails %s on %s"
                                      % (instance.name, report["axiom"],
                                         report["graph"])}
                checked += report["checked"]
    return {"name": "contractad-axioms", "ok": True,
            "detail": "%d axiom instances across %d structures x %d graphs"
                      % (checked, len(instances), len(graphs))}


def check_nerve_homology(max_vertices=None, seed=None) -> dict:
    p2 = parse_graph("P2")
    betti = order_complex_betti(enumerate_directions(p2, 2))
    if betti != [1, 1]:
        return {"name": "nerve-homology", "ok": False,
                "detail": "AD_2(P_2) nerve betti %s" % (betti,)}
    bound = _clamp(4, max_vertices)
    euler_checked = 0
    for g in connected_graphs(bound, min_n=2):
        if nerve_euler_characteristic(enumerate_directions(g, 2)) != 0:
            return {"name": "nerve-homology", "ok": False,
                    "detail": "nerve Euler nonzero on %s" % (g.edges,)}
        euler_checked += 1
    grids = 0
    for g in connected_graphs(bound, min_n=2):
        predicate = {a for a in enumerate_directions(g, 2) if in_P(a)}
        image = set()
        axis = list(itertools.product(range(5), repeat=2))
        for assignment in itertools.product(axis, repeat=g.n):
            try:
                alpha = psi_map(g, assignment)
            except ValueError:
                continue
            image.add(alpha)
        if image != predicate:
            return {"name": "nerve-homology", "ok": False,
                    "detail": "grid image differs from realizability "
                              "predicate on %s" % (g.edges,)}
        grids += 1
    return {"name": "nerve-homology", "ok": True,
            "detail": "P_2 circle; %d nerve Euler zeros; %d grid images"
                      % (euler_checked, grids)}


CHECKS = [check_fm1_census, check_face_lattice_oracle, check_os_dimensions,
          check_euler_identity, check_wedge_betti, check_anick_suite,
          check_psi_h_classes, check_contractad_axioms, check_nerve_homology]


def run_all(max_vertices=None, seed=None) -> list[dict]:
    results = []
    for check in CHECKS:
        start = time.time()
        result = check(max_vertices=max_vertices, seed=seed)
        result["seconds"] = round(time.time() - start, 2)
        results.append(result)
    return results
