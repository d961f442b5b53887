"""Tests for divisor, h-, and psi-class arithmetic."""

from fractions import Fraction

import networkx as nx
import pytest

from contractads.chow import (DivisorClass, class_space, divisor_from_h,
                              h_class, psi_class, psi_infinity,
                              pullback_class, pullback_respects_relations,
                              verify_prespsi)
from contractads.graphs import (CapExceeded, Graph, multipartite_graph,
                                parse_graph, path_graph, tube_split)

P3 = parse_graph("P3")
P4 = parse_graph("P4")
C4 = parse_graph("C4")
K3 = parse_graph("K3")


def connected_atlas(max_n, min_n=1):
    out = []
    for ng in nx.graph_atlas_g():
        n = ng.number_of_nodes()
        if min_n <= n <= max_n and n and nx.is_connected(ng):
            spot = {u: i for i, u in enumerate(sorted(ng.nodes()))}
            edges = tuple((spot[u], spot[v]) for u, v in ng.edges())
            out.append(Graph(n, edges))
    return out


def test_class_space_shapes():
    sp = class_space(P3)
    assert sp.basis == [(0, 1), (1, 2)]
    assert sp.dimension() == 1
    spc = class_space(C4)
    assert len(spc.basis) == 8
    assert spc.dimension() == 5


def test_dimension_is_isomorphism_invariant():
    bent = parse_graph("3;0-2,1-2")
    assert class_space(bent).dimension() == class_space(P3).dimension() == 1
    shuffled = parse_graph("4;0-2,2-3,1-3")
    assert class_space(shuffled).dimension() == class_space(P4).dimension()


def test_h_of_trivial_tubes_is_zero():
    assert h_class(P3, (0, 1)).is_zero()
    assert h_class(P3, (1,)).is_zero()
    assert h_class(C4, (2, 3)).is_zero()


def test_h_of_full_path():
    sp = class_space(P3)
    full = h_class(P3, (0, 1, 2))
    assert full == sp.divisor((0, 1))
    assert full == sp.divisor((1, 2))
    assert not full.is_zero()


def test_h_rejects_non_tube():
    with pytest.raises(ValueError, match="tube"):
        h_class(P4, (0, 2))


def test_divisor_from_h_path_example():
    sp = class_space(P3)
    got = divisor_from_h(P3, (0, 1))
    assert got == sp.divisor((0, 1))
    # by hand: -(h_{01} - h_{012}) and h of an edge tube vanishes
    assert got == h_class(P3, (0, 1, 2))


def test_divisor_from_h_roundtrip_small():
    for g in (P3, P4, C4, K3, parse_graph("St3")):
        sp = class_space(g)
        for tube in sp.basis:
            assert divisor_from_h(g, tube) == sp.divisor(tube), (g, tube)


def test_divisor_from_h_roundtrip_atlas():
    for g in connected_atlas(5):
        sp = class_space(g)
        for tube in sp.basis:
            assert divisor_from_h(g, tube) == sp.divisor(tube)


def test_divisor_from_h_rejects_trivial():
    with pytest.raises(ValueError):
        divisor_from_h(P3, (0, 1, 2))
    with pytest.raises(ValueError):
        divisor_from_h(P3, (1,))


def test_psi_path_center_and_leaves():
    sp = class_space(P3)
    assert psi_class(P3, 1) == sp.divisor((1, 2))
    assert psi_class(P3, 1) == sp.divisor((0, 1))
    assert psi_class(P3, 0).is_zero()
    assert psi_class(P3, 2).is_zero()
    assert psi_infinity(P3) == sp.divisor((0, 1))
    assert psi_class(P3, 1).to_json() == {"1,2": 1}


def test_psi_vertex_range():
    with pytest.raises(ValueError):
        psi_class(P3, 3)


def test_prespsi_named_hosts():
    assert verify_prespsi((2, 1))
    assert verify_prespsi((1, 1, 1))
    assert verify_prespsi((3, 1))
    assert verify_prespsi((2, 2))
    assert verify_prespsi((2, 1, 1))


def test_prespsi_all_small_multipartite():
    shapes = [(1, 1), (2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1),
              (1, 1, 1, 1), (4, 1), (3, 2), (2, 2, 1), (3, 1, 1),
              (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    for shape in shapes:
        assert verify_prespsi(shape), shape


def test_prespsi_single_pair_and_errors():
    assert verify_prespsi((2, 2), 0, 2)
    with pytest.raises(ValueError):
        verify_prespsi((2, 2), 0, 1)  # same block, not adjacent
    with pytest.raises(ValueError):
        verify_prespsi((2, 2), 0)


def test_class_arithmetic():
    sp = class_space(C4)
    a = sp.divisor((0, 1))
    b = sp.divisor((1, 2))
    assert (a + b) - b == a
    assert (0 * a).is_zero()
    half = Fraction(1, 2) * a
    assert half + half == a
    with pytest.raises(ValueError):
        a + class_space(P3).divisor((0, 1))


def test_to_json_fractions():
    sp = class_space(P3)
    half = Fraction(1, 2) * sp.divisor((0, 1))
    assert half.to_json() == {"1,2": "1/2"}


def test_pullback_respects_relations():
    for g in (P4, C4, K3):
        for tube in class_space(g).basis:
            assert pullback_respects_relations(g, tube), (g, tube)


def test_pullback_case_split():
    # a class inside the tube restricts; the rest descends to the quotient
    quotient, block_of, piece, vmap = tube_split(C4, (0, 1))
    q, r = pullback_class(C4, (0, 1), h_class(C4, (0, 1, 2, 3)))
    assert q == h_class(quotient, tuple(range(quotient.n)))
    assert r.is_zero()


def test_pullback_normal_bundle_identity():
    for g in (C4, P4):
        for tube in class_space(g).basis:
            q, r = pullback_class(g, tube, class_space(g).divisor(tube))
            quotient, block_of, piece, _ = tube_split(g, tube)
            assert q == -1 * psi_class(quotient, block_of[tube[0]])
            assert r == -1 * psi_infinity(piece)


def test_class_space_cap():
    with pytest.raises(CapExceeded):
        class_space(path_graph(13))
