"""Tests for the configuration-space cochain complexes."""

import json

import pytest

from contractads.cehomology import (FiniteCDGA, GradedComplex,
                                    algebra_from_spec, build_cf, cf_euler,
                                    conf_cs_cohomology, path_complex)
from contractads.graphs import CapExceeded, parse_graph
from contractads.invariants import chromatic, mobius
from contractads.polys import evaluate

P2 = parse_graph("P2")
P3 = parse_graph("P3")
P4 = parse_graph("P4")
C4 = parse_graph("C4")
K4 = parse_graph("K4")
ST3 = parse_graph("St3")

ACYCLIC_DATA = {
    "basis": [{"name": "1", "deg": 0}, {"name": "x", "deg": 1},
              {"name": "y", "deg": 2}],
    "mult": [["1", "1", "1"], ["1", "x", "x"], ["1", "y", "y"]],
    "diff": [["x", "y"]],
    "unit": "1",
}


def test_point_algebra():
    A = FiniteCDGA.point()
    assert A.dim == 1
    assert A.unit == "1"
    assert A.euler_characteristic() == 1


def test_euclidean_model():
    A = FiniteCDGA.euclidean(2)
    assert A.dim == 1
    assert A.unit is None
    assert A.degrees == [2]
    assert not any(A.mult[0][0])
    assert A.euler_characteristic() == 1
    assert FiniteCDGA.euclidean(1).euler_characteristic() == -1
    with pytest.raises(ValueError):
        FiniteCDGA.euclidean(0)


def test_wedge_model():
    A = FiniteCDGA.wedge(2, 1)
    assert A.dim == 3
    assert A.euler_characteristic() == -1
    assert FiniteCDGA.wedge(3, 2).euler_characteristic() == 4
    # generators multiply to zero, the unit acts as identity
    i = A.names.index("x1")
    j = A.names.index("x2")
    assert not any(A.mult[i][j])
    u = A.names.index("1")
    assert A.mult[u][i][i] == 1


def test_rejects_non_commutative():
    # two odd generators with xy = z but yx = z as well: sign is wrong
    with pytest.raises(ValueError, match="commutative"):
        FiniteCDGA(["x", "y", "z"], [1, 1, 2],
                   [[[0, 0, 0], [0, 0, 1], [0, 0, 0]],
                    [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
                    [[0, 0, 0], [0, 0, 0], [0, 0, 0]]],
                   [[0, 0, 0]] * 3)


def test_rejects_inhomogeneous_product():
    with pytest.raises(ValueError, match="homogeneous"):
        FiniteCDGA(["x"], [2], [[[1]]], [[0]])


def test_rejects_bad_differential_degree():
    with pytest.raises(ValueError, match="degree"):
        FiniteCDGA(["x", "y"], [1, 3],
                   [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
                   [[0, 1], [0, 0]])


def test_rejects_broken_leibniz():
    # a and b are closed but their product has a nonzero differential
    zero = [0, 0, 0, 0]
    mult = [[list(zero) for _ in range(4)] for _ in range(4)]
    mult[0][1][2] = 1
    mult[1][0][2] = -1
    with pytest.raises(ValueError, match="Leibniz"):
        FiniteCDGA(["a", "b", "c", "e"], [1, 1, 2, 3], mult,
                   [zero, zero, [0, 0, 0, 1], zero])


def test_rejects_unit_not_identity():
    with pytest.raises(ValueError, match="unit"):
        FiniteCDGA(["1", "x"], [0, 1],
                   [[[1, 0], [0, 0]], [[0, 0], [0, 0]]],
                   [[0, 0], [0, 0]], unit="1")


def test_from_json_and_strings():
    A = FiniteCDGA.from_json(ACYCLIC_DATA)
    assert A.names == ["1", "x", "y"]
    assert A.diff[1][2] == 1
    B = FiniteCDGA.from_json(json.dumps(ACYCLIC_DATA))
    assert B.degrees == A.degrees


def test_expr_parser_coefficients():
    data = {
        "basis": [{"name": "a", "deg": 1}, {"name": "b", "deg": 1},
                  {"name": "c", "deg": 2}],
        "mult": [["a", "b", "2*c"], ["a", "a", "0"], ["b", "b", "0"]],
        "diff": [],
    }
    A = FiniteCDGA.from_json(data)
    assert A.mult[0][1][2] == 2
    assert A.mult[1][0][2] == -2
    with pytest.raises(ValueError, match="unknown basis"):
        FiniteCDGA.from_json({"basis": [{"name": "a", "deg": 1}],
                              "mult": [["a", "a", "q"]], "diff": []})


def test_algebra_from_spec():
    assert algebra_from_spec("point").unit == "1"
    assert algebra_from_spec("euclidean:3").degrees == [3]
    assert algebra_from_spec("wedge:2:1").dim == 3
    with pytest.raises(ValueError):
        algebra_from_spec("sphere:2")


def test_path_complex_two_points():
    A = FiniteCDGA.euclidean(2)
    assert path_complex(2, A).cohomology() == {3: 1, 4: 1}
    # the shift is one per lost interval, so d = 3 lands at (4, 6)
    assert path_complex(2, FiniteCDGA.euclidean(3)).cohomology() == {4: 1, 6: 1}


def test_path_complex_single_point_is_the_algebra():
    A = FiniteCDGA.wedge(2, 1)
    assert path_complex(1, A).cohomology() == {0: 1, 1: 2}
    with pytest.raises(ValueError):
        path_complex(0, A)


def test_path_complex_wedge_three_points():
    got = path_complex(3, FiniteCDGA.wedge(2, 1)).cohomology()
    assert got == {2: 4, 3: 8}


def test_build_cf_matches_frozen_path_values():
    assert conf_cs_cohomology(P2, FiniteCDGA.euclidean(2)) == {3: 1, 4: 1}
    assert conf_cs_cohomology(P4, FiniteCDGA.wedge(3, 1)) == {3: 27, 4: 81}


def test_build_cf_four_cycle_plane():
    got = conf_cs_cohomology(C4, FiniteCDGA.euclidean(2))
    assert got == {5: 3, 6: 6, 7: 4, 8: 1}


def test_build_cf_agrees_with_path_oracle():
    algebras = [FiniteCDGA.point(), FiniteCDGA.euclidean(1),
                FiniteCDGA.euclidean(2), FiniteCDGA.wedge(2, 1)]
    for n in (2, 3, 4):
        g = parse_graph("P%d" % n)
        for A in algebras:
            assert build_cf(g, A).cohomology() == \
                path_complex(n, A).cohomology(), (n, A.names)


def test_build_cf_path_oracle_five_points():
    A = FiniteCDGA.euclidean(2)
    got = build_cf(parse_graph("P5"), A).cohomology()
    assert got == path_complex(5, A).cohomology()
    assert got == {6: 1, 7: 4, 8: 6, 9: 4, 10: 1}


def test_wedge_two_degree_pattern():
    for n in (2, 3, 4):
        g = parse_graph("P%d" % n)
        for genus in (1, 2, 3):
            for d in (1, 2):
                got = conf_cs_cohomology(g, FiniteCDGA.wedge(genus, d))
                want = {d * n: genus ** n}
                want[d * (n - 1)] = want.get(d * (n - 1), 0) + genus ** (n - 1)
                assert got == want, (n, genus, d)


def test_point_fiber_vanishes():
    assert conf_cs_cohomology(P3, FiniteCDGA.point()) == {}
    assert conf_cs_cohomology(P2, FiniteCDGA.point()) == {}
    one = parse_graph("P1")
    assert conf_cs_cohomology(one, FiniteCDGA.point()) == {0: 1}


def test_acyclic_model_vanishes():
    A = FiniteCDGA.from_json(ACYCLIC_DATA)
    assert conf_cs_cohomology(P2, A) == {}
    assert conf_cs_cohomology(P3, A) == {}


def test_euler_matches_chromatic_specialization():
    algebras = [FiniteCDGA.point(), FiniteCDGA.euclidean(2),
                FiniteCDGA.wedge(2, 1), FiniteCDGA.wedge(3, 2)]
    for g in (P3, C4, K4, ST3):
        for A in algebras:
            fast = cf_euler(g, A)
            assert fast == evaluate(chromatic(g), A.euler_characteristic())
            assert fast == build_cf(g, A).euler_characteristic()


def test_euler_fast_path_scales():
    A = FiniteCDGA.wedge(3, 1)
    K5 = parse_graph("K5")
    assert cf_euler(K5, A) == evaluate(chromatic(K5), -2)


def test_one_class_total_dimension():
    # with a single zero-square class the complex is a direct sum over
    # partitions weighted by contracted-piece moebius numbers
    A = FiniteCDGA.euclidean(2)
    for g in (C4, K4, P4):
        want = 0
        for part in g.graph_partitions():
            prod = 1
            for block in part:
                piece, _ = g.restrict(block)
                prod *= abs(mobius(piece))
            want += prod
        got = sum(conf_cs_cohomology(g, A).values())
        assert got == want
    assert sum(conf_cs_cohomology(C4, A).values()) == 14


def test_square_zero_guard():
    from fractions import Fraction
    broken = GradedComplex({0: ["a"], 1: ["b"], 2: ["c"]},
                           {0: [[Fraction(1)]], 1: [[Fraction(1)]]})
    with pytest.raises(RuntimeError, match="square"):
        broken.check_square_zero()


def test_build_cf_cap():
    with pytest.raises(CapExceeded):
        build_cf(parse_graph("P9"), FiniteCDGA.euclidean(2), cap=8)
