"""Exact linear algebra over the rationals.

Matrices are lists of equal-length rows with int or Fraction entries.
Rank goes through fraction-free (Bareiss) elimination after clearing
denominators row by row, so everything stays in integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for c in row:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        out.append([int(c * den) for c in row])
    return out


def rank(rows) -> int:
    """Rank of a matrix given as a list of rows."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    prev = 1
    pr = 0
    for col in range(nc):
        piv = next((r for r in range(pr, nr) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        pivot = m[pr][col]
        for r in range(pr + 1, nr):
            factor = m[r][col]
            for c in range(col + 1, nc):
                m[r][c] = (pivot * m[r][c] - factor * m[pr][c]) // prev
            m[r][col] = 0
        prev = pivot
        pr += 1
        if pr == nr:
            break
    return pr


def rref(rows):
    """Reduced row echelon form over Q.

    Returns (reduced nonzero rows as Fraction tuples, pivot columns).
    """
    m = [[Fraction(c) for c in row] for row in rows]
    if not m:
        return [], []
    nc = len(m[0])
    pivots = []
    pr = 0
    for col in range(nc):
        piv = next((r for r in range(pr, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = m[pr][col]
        m[pr] = [c / inv for c in m[pr]]
        for r in range(len(m)):
            if r != pr and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
        pivots.append(col)
        pr += 1
    return [tuple(row) for row in m[:pr]], pivots


def reduce_vector(vec, reduced_rows, pivots):
    """Canonical representative of vec modulo the row space."""
    v = [Fraction(c) for c in vec]
    for row, col in zip(reduced_rows, pivots):
        f = v[col]
        if f != 0:
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def in_rowspace(vec, reduced_rows, pivots) -> bool:
    return all(c == 0 for c in reduce_vector(vec, reduced_rows, pivots))


def chain_betti(dims, boundaries):
    """Betti numbers of a chain complex.

    dims[k] is the dimension of C_k; boundaries[k] is the matrix of
    d: C_k -> C_{k-1} with one row per source basis element. Missing or
    trivial maps may be omitted.
    """
    ranks = {}
    for k, mat in boundaries.items():
        ranks[k] = rank(mat)
    return [
        dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(len(dims))
    ]


def cochain_betti(dims, differentials):
    """Same as chain_betti but for d: C^k -> C^(k+1)."""
    ranks = {}
    for k, mat in differentials.items():
        ranks[k] = rank(mat)
    return [
        dims[k] - ranks.get(k, 0) - ranks.get(k - 1, 0)
        for k in range(len(dims))
    ]
