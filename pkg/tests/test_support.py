"""Polynomial helpers and exact linear algebra."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from contractads import linalg, polys

coeffs = st.lists(st.integers(-9, 9), max_size=6)


@given(coeffs, coeffs, st.integers(-5, 5))
def test_poly_eval_respects_ring_ops(p, q, x):
    assert polys.evaluate(polys.add(p, q), x) == polys.evaluate(p, x) + polys.evaluate(q, x)
    assert polys.evaluate(polys.mul(p, q), x) == polys.evaluate(p, x) * polys.evaluate(q, x)


@given(coeffs, coeffs)
def test_series_mul_truncates(p, q):
    full = polys.mul(p, q)
    trunc = polys.series_mul(p, q, 4)
    assert len(trunc) == 4
    for i in range(4):
        want = full[i] if i < len(full) else 0
        assert trunc[i] == want


def test_poly_shift_and_trim():
    assert polys.shift([1, 2], 2) == [0, 0, 1, 2]
    assert polys.shift([], 3) == []
    assert polys.trim([0, 1, 0, 0]) == [0, 1]


def test_rank_known():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([]) == 0
    assert linalg.rank([[0, 0, 0]]) == 0
    assert linalg.rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def _rank_oracle(rows):
    # plain Gaussian elimination over Fraction
    m = [[Fraction(c) for c in row] for row in rows]
    r = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


@settings(max_examples=80)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_fraction_elimination(nr, nc, data):
    rows = [
        [data.draw(st.integers(-6, 6)) for _ in range(nc)]
        for _ in range(nr)
    ]
    assert linalg.rank(rows) == _rank_oracle(rows)


def test_rref_and_reduce():
    rows, pivots = linalg.rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert pivots == [0, 1]
    assert linalg.in_rowspace([3, 7, 10], rows, pivots)
    assert not linalg.in_rowspace([1, 0, 0], rows, pivots)
    assert linalg.reduce_vector([1, 2, 3], rows, pivots) == (0, 0, 0)


def test_chain_betti_circle():
    # triangle boundary of a circle: three vertices, three edges
    dims = [3, 3]
    d1 = [
        [-1, 1, 0],
        [0, -1, 1],
        [1, 0, -1],
    ]
    assert linalg.chain_betti(dims, {1: d1}) == [1, 1]


def test_cochain_betti_interval():
    # two points and one edge: H^0 = 1, H^1 = 0
    dims = [2, 1]
    d0 = [[-1], [1]]
    assert linalg.cochain_betti(dims, {0: d0}) == [1, 0]
