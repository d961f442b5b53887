"""Admissible trees, grafting, and the nested-set dictionary."""

import itertools

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from contractads.graphs import CapExceeded, complete_graph, cycle_graph, path_graph, star_graph
from contractads.trees import (
    AdmissibleTree,
    corolla,
    enumerate_trees,
    graft,
    input_graph,
    tree_from_json,
    tree_from_nested_set,
    tree_to_json,
    unit_tree,
)


def test_rejects_non_tube_subtree():
    with pytest.raises(ValueError):
        AdmissibleTree(cycle_graph(4), ((1, 3), 0, 2))
    with pytest.raises(ValueError):
        AdmissibleTree(path_graph(3), (0, 1))  # missing leaf
    with pytest.raises(ValueError):
        AdmissibleTree(path_graph(2), (0, 0, 1))  # duplicate leaf


def test_stable_counts_small():
    assert len(enumerate_trees(path_graph(2))) == 1
    assert len(enumerate_trees(path_graph(3))) == 3
    trees = enumerate_trees(path_graph(3))
    assert corolla(path_graph(3)) in trees


def _laminar_families(g):
    tubes = [frozenset(t) for t in g.proper_nontrivial_tubes()]
    count = 0
    for r in range(len(tubes) + 1):
        for combo in itertools.combinations(tubes, r):
            ok = all(
                not (a & b) or a <= b or b <= a
                for a, b in itertools.combinations(combo, 2)
            )
            if ok:
                count += 1
    return count


@pytest.mark.parametrize("g", [
    path_graph(4), cycle_graph(4), complete_graph(4), star_graph(3), cycle_graph(5),
])
def test_stable_trees_match_laminar_families(g):
    assert len(enumerate_trees(g)) == _laminar_families(g)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_trees(complete_graph(5), cap=4)


def test_unstable_unary_chains_are_depth_capped():
    p1 = path_graph(1)
    assert [t.root for t in enumerate_trees(p1)] == [0]
    loose = enumerate_trees(p1, stable_only=False)  # depth <= n+1 = 2
    assert len(loose) == 3
    assert max(t.depth() for t in loose) == 2
    assert sum(1 for t in loose if not t.is_stable) == 2


def test_input_graphs():
    p3 = path_graph(3)
    t = AdmissibleTree(p3, ((0, 1), 2))
    g_root, children = input_graph(t, t.root)
    assert g_root.is_isomorphic(path_graph(2))
    assert [sorted(_leaves(c)) for c in children] == [[0, 1], [2]]
    full, _ = input_graph(corolla(p3), corolla(p3).root)
    assert full == p3
    c4 = cycle_graph(4)
    t2 = AdmissibleTree(c4, ((0, 1), (2, 3)))
    g2, _ = input_graph(t2, t2.root)
    assert g2 == path_graph(2)  # both cross edges merge into one
    with pytest.raises(ValueError):
        input_graph(t, 0)


def _leaves(node):
    if isinstance(node, int):
        yield node
    else:
        for c in node:
            yield from _leaves(c)


def test_graft_corollas():
    p3 = path_graph(3)
    quotient, _ = p3.contract_tube((0, 1))
    sub, _ = p3.restrict((0, 1))
    got = graft(p3, (0, 1), corolla(quotient), corolla(sub))
    assert got == AdmissibleTree(p3, ((0, 1), 2))


def test_graft_units():
    c4 = cycle_graph(4)
    for t in enumerate_trees(c4):
        for v in range(4):
            quotient, _ = c4.contract_tube((v,))
            outer = AdmissibleTree(quotient, t.root)  # same shape, quotient relabels nothing
            assert graft(c4, (v,), outer, unit_tree()) == t
        full = tuple(range(4))
        sub, _ = c4.restrict(full)
        assert graft(c4, full, unit_tree(), AdmissibleTree(sub, t.root)) == t


def test_graft_rejects_mismatch():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        graft(c4, (0, 1), corolla(path_graph(2)), unit_tree())


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_n=5))
def test_nested_set_round_trip(g):
    trees = enumerate_trees(g)
    seen = set()
    for t in trees:
        ns = t.nested_set()
        assert ns not in seen
        seen.add(ns)
        assert tree_from_nested_set(g, ns) == t
    assert corolla(g).nested_set() == frozenset()


def test_nested_set_rejects_overlap():
    with pytest.raises(ValueError):
        tree_from_nested_set(path_graph(4), [{0, 1}, {1, 2}])
    with pytest.raises(ValueError):
        tree_from_nested_set(path_graph(4), [{0, 1, 2, 3}])
    with pytest.raises(ValueError):
        tree_from_nested_set(cycle_graph(4), [{0, 2}])


def test_json_round_trip():
    p4 = path_graph(4)
    t = AdmissibleTree(p4, ((0, 1), (2, 3)))
    data = tree_to_json(t)
    assert data == [[0, 1], [2, 3]]
    assert tree_from_json(p4, data) == t
