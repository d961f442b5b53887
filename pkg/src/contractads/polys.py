"""Dense polynomial arithmetic with exact coefficients.

A polynomial is a list of coefficients in ascending degree; the zero
polynomial is the empty list. Integers and fractions.Fraction mix
freely, so evaluation stays exact.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p, q):
    return add(p, [-c for c in q])


def scale(p, c):
    if c == 0:
        return []
    return trim([c * x for x in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def shift(p, k: int):
    """Multiply by t^k."""
    p = trim(p)
    return [0] * k + p if p else []


def evaluate(p, x):
    acc = 0
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def series_mul(p, q, trunc: int):
    """Product modulo t^trunc."""
    out = [0] * trunc
    for i, a in enumerate(p[:trunc]):
        if a == 0:
            continue
        for j, b in enumerate(q[: trunc - i]):
            out[i + j] += a * b
    return out


def as_fractions(p):
    return [Fraction(c) for c in p]
