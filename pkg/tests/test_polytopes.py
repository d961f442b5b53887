"""Pipe, nested-set and census tests against hand-derived small cases."""

import itertools

import pytest

from contractads.graphs import (CapExceeded, complete_graph, cycle_graph,
                                path_graph, star_graph)
from contractads.directions import enumerate_directions
from contractads.invariants import count_acyclic_orientations
from contractads.polytopes import (decorated_tree_atlas, f_vector, fm1_census,
                                   is_nested, nested_sets, orientation, pipes)

P4 = path_graph(4)
C4 = cycle_graph(4)

LINEAR = orientation(P4, [(0, 1), (1, 2), (2, 3)])
# sources at 0 and 2, sinks at 1 and 3
ALTERNATING = orientation(C4, [(0, 1), (2, 1), (2, 3), (0, 3)])
# two directed paths 0 -> 1 -> 2 and 0 -> 3 -> 2
PARALLEL = orientation(C4, [(0, 1), (1, 2), (3, 2), (0, 3)])


def proper_nontrivial(alpha):
    return [p for p in pipes(alpha) if 2 <= len(p) < alpha.host.n]


def test_pipes_linear_path():
    assert proper_nontrivial(LINEAR) == [
        (0, 1), (1, 2), (2, 3), (0, 1, 2), (1, 2, 3)]


def test_pipes_alternating_cycle():
    # every directed path is a single edge, so nothing can escape a tube
    assert len(proper_nontrivial(ALTERNATING)) == 8


def test_pipes_blocked_by_through_path():
    around = orientation(C4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    ps = pipes(around)
    assert (0, 3) not in ps
    assert (0, 1) in ps and (0, 1, 2) in ps


def test_pipes_include_trivial_and_full():
    for alpha in (LINEAR, ALTERNATING, PARALLEL):
        ps = pipes(alpha)
        n = alpha.host.n
        assert all((v,) in ps for v in range(n))
        assert tuple(range(n)) in ps


def test_is_nested_examples():
    assert not is_nested(ALTERNATING, [(0, 1), (2, 3)])
    assert is_nested(LINEAR, [(0, 1), (2, 3)])
    for alpha in (LINEAR, ALTERNATING, PARALLEL):
        for pipe in proper_nontrivial(alpha):
            assert is_nested(alpha, [pipe])


def test_is_nested_rejects_bad_members():
    with pytest.raises(ValueError):
        is_nested(ALTERNATING, [(0, 2)])  # not a tube
    with pytest.raises(ValueError):
        is_nested(ALTERNATING, [(0,)])
    with pytest.raises(ValueError):
        is_nested(ALTERNATING, [(0, 1, 2, 3)])


def test_nested_sets_are_downward_closed():
    for g in (P4, C4, star_graph(3)):
        for alpha in enumerate_directions(g, 1):
            faces = set(nested_sets(alpha))
            for face in faces:
                for k in range(len(face)):
                    sub = tuple(sorted(face[:k] + face[k + 1:]))
                    assert sub in faces


def test_f_vectors():
    assert f_vector(LINEAR) == (5, 5, 1)
    assert f_vector(ALTERNATING) == (8, 8, 1)
    assert f_vector(PARALLEL) == (6, 6, 1)


def test_euler_relation():
    for g in (P4, C4, complete_graph(4), star_graph(3)):
        for alpha in enumerate_directions(g, 1):
            fv = f_vector(alpha)
            assert sum((-1) ** i * c for i, c in enumerate(fv)) == 1


def test_census_cycle():
    census = fm1_census(C4)
    assert [(tuple(b["f"]), b["count"]) for b in census] == [
        ((5, 5, 1), 8), ((6, 6, 1), 4), ((8, 8, 1), 2)]


def test_census_complete():
    census = fm1_census(complete_graph(4))
    assert [(tuple(b["f"]), b["count"]) for b in census] == [((5, 5, 1), 24)]


def test_census_small_star():
    census = fm1_census(star_graph(2))
    assert [(tuple(b["f"]), b["count"]) for b in census] == [((2, 1), 4)]


@pytest.mark.parametrize("g", [path_graph(2), path_graph(3), cycle_graph(3),
                               P4, C4, star_graph(3), complete_graph(4)])
def test_census_total_counts_orientations(g):
    census = fm1_census(g)
    assert sum(b["count"] for b in census) == count_acyclic_orientations(g)


def test_census_cap():
    with pytest.raises(CapExceeded):
        fm1_census(path_graph(9))


@pytest.mark.parametrize("g", [path_graph(3), P4, C4, cycle_graph(3),
                               star_graph(3), complete_graph(4)])
def test_tree_oracle_matches_nested_sets(g):
    atlas = decorated_tree_atlas(g)
    orientations = enumerate_directions(g, 1)
    assert sorted(atlas, key=lambda a: a.arcs) == orientations
    for alpha in orientations:
        assert atlas[alpha] == nested_sets(alpha)


def test_tree_oracle_has_no_duplicate_faces():
    # each face of each polytope comes from exactly one decorated tree
    atlas = decorated_tree_atlas(C4)
    for faces in atlas.values():
        assert len(faces) == len(set(faces))
