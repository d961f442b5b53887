"""Noncommutative normal-form calculus for the top cohomology algebra of
configuration spaces of a cycle.

Generators w_1..w_n, one per vertex deletion, with three reduction rules:
squares vanish, out-of-order neighbours skew-commute, and the full
ascending word w_2...w_n rewrites into the alternating sum
sum_{i=2}^n (-1)^i w_1...ŵ_i...w_n.  The sign pattern is pinned down by
the confluence of the overlap w_2...w_n.w_1, which must reduce to zero
both ways (tests check this and random-order confluence).

Homological bookkeeping: m-chains are words made of weakly decreasing
runs over {2..n}, l full separator blocks w_2...w_n, and k trailing w_1,
with m = k + sum(run lengths) + 2l and internal length m + l(n-3).  The
dual count lives on words in y_1..y_n, u with the ascent factors y_i y_j
(i < j) and y_1 u forbidden.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass

from . import polys
from .graphs import CapExceeded


def _check_n(n: int):
    if n < 4:
        raise ValueError("need n >= 4: the 3-cycle is the complete graph "
                         "K_3 and carries a different relation set")


def _cycle_replacement(n: int) -> list[tuple[tuple, int]]:
    """w_2...w_n -> sum_{i=2}^n (-1)^i w_1...ŵ_i...w_n."""
    out = []
    for i in range(2, n + 1):
        word = tuple(j for j in range(1, n + 1) if j != i)
        out.append((word, (-1) ** i))
    return out


def normal_form(word, n: int) -> dict:
    """Reduce to a signed combination of normal words, as {word: coeff}.

    Deterministic leftmost-first strategy; confluence makes the strategy
    irrelevant (see the random-order property test).
    """
    _check_n(n)
    word = tuple(word)
    if any(not 1 <= a <= n for a in word):
        raise ValueError("letter out of range 1..%d" % n)
    ascending = tuple(range(2, n + 1))
    replacement = _cycle_replacement(n)
    result = {}
    stack = [(word, 1)]
    while stack:
        w, c = stack.pop()
        spot = None
        for p in range(len(w) - 1):
            if w[p] == w[p + 1]:
                spot = ("zero", p)
                break
            if w[p] > w[p + 1]:
                spot = ("swap", p)
                break
            if w[p] == 2 and w[p:p + n - 1] == ascending:
                spot = ("cycle", p)
                break
        if spot is None:
            result[w] = result.get(w, 0) + c
            continue
        kind, p = spot
        if kind == "zero":
            continue
        if kind == "swap":
            swapped = w[:p] + (w[p + 1], w[p]) + w[p + 2:]
            stack.append((swapped, -c))
        else:
            for piece, sign in replacement:
                stack.append((w[:p] + piece + w[p + n - 1:], sign * c))
    return {w: c for w, c in result.items() if c}


def is_normal_word(word, n: int) -> bool:
    """Strictly increasing and free of the full ascending factor."""
    word = tuple(word)
    if any(not 1 <= a <= n for a in word):
        raise ValueError("letter out of range 1..%d" % n)
    if any(a >= b for a, b in zip(word, word[1:])):
        return False
    ascending = tuple(range(2, n + 1))
    return not any(word[p:p + n - 1] == ascending for p in range(len(word)))


def hilbert_os(n: int) -> tuple:
    """Normal-word count per internal degree, found by enumeration."""
    _check_n(n)
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for letters in itertools.combinations(range(1, n + 1), k):
            if is_normal_word(letters, n):
                counts[k] += 1
    return tuple(counts)


@dataclass(frozen=True)
class AnickChain:
    """Chain datum: weakly decreasing runs over {2..n} separated by l
    full ascending blocks, then k trailing w_1."""

    n: int
    runs: tuple
    k: int

    def __post_init__(self):
        _check_n(self.n)
        if self.k < 0 or len(self.runs) < 1:
            raise ValueError("need k >= 0 and at least one run")
        for run in self.runs:
            if any(not 2 <= a <= self.n for a in run):
                raise ValueError("run letters lie in 2..n")
            if any(a < b for a, b in zip(run, run[1:])):
                raise ValueError("runs are weakly decreasing")

    @property
    def l(self) -> int:
        return len(self.runs) - 1

    @property
    def m(self) -> int:
        return self.k + sum(len(r) for r in self.runs) + 2 * self.l

    @property
    def internal_degree(self) -> int:
        return self.m + self.l * (self.n - 3)

    @property
    def word(self) -> tuple:
        separator = tuple(range(2, self.n + 1))
        out = []
        for i, run in enumerate(self.runs):
            if i:
                out.extend(separator)
            out.extend(run)
        out.extend([1] * self.k)
        return tuple(out)


def _count_decreasing_runs(n: int, length: int) -> int:
    # multisets of the given size over the n-1 letters 2..n
    return math.comb(n - 2 + length, length)


def count_anick_chains(n: int, m: int) -> dict:
    """Bigraded chain counts {internal degree: count}, by arithmetic."""
    _check_n(n)
    counts = {}
    for l in range(m // 2 + 1):
        rest = m - 2 * l
        total = 0
        for k in range(rest + 1):
            for comp in _compositions(rest - k, l + 1):
                prod = 1
                for part in comp:
                    prod *= _count_decreasing_runs(n, part)
                total += prod
        if total:
            counts[m + l * (n - 3)] = counts.get(m + l * (n - 3), 0) + total
    return counts


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def anick_chains(n: int, m: int, cap: int = 10 ** 6) -> list[AnickChain]:
    """Every m-chain, ordered by (internal degree, word)."""
    _check_n(n)
    if m < 0:
        raise ValueError("need m >= 0")
    if sum(count_anick_chains(n, m).values()) > cap:
        raise CapExceeded("more than %d chains" % cap)
    letters = range(2, n + 1)
    out = []
    for l in range(m // 2 + 1):
        rest = m - 2 * l
        for k in range(rest + 1):
            for comp in _compositions(rest - k, l + 1):
                pools = []
                for part in comp:
                    pools.append([
                        tuple(sorted(c, reverse=True))
                        for c in itertools.combinations_with_replacement(
                            letters, part)])
                for runs in itertools.product(*pools):
                    out.append(AnickChain(n, runs, k))
    out.sort(key=lambda c: (c.internal_degree, c.word))
    return out


def minimality_gap(n: int, m_max: int) -> dict:
    """Internal-degree supports of adjacent chain groups; disjoint
    supports make the resolution minimal degree by degree."""
    _check_n(n)
    supports = [sorted(count_anick_chains(n, m)) for m in range(m_max + 2)]
    pairs = []
    for m in range(m_max + 1):
        overlap = sorted(set(supports[m]) & set(supports[m + 1]))
        pairs.append({"m": m, "overlap": overlap})
    return {"n": n, "pairs": pairs,
            "minimal": all(not p["overlap"] for p in pairs)}


@dataclass(frozen=True)
class ExtWord:
    """Word over y_1..y_n (letter i) and u (letter 0); normal words avoid
    the factors y_i y_j with i < j and y_1 u."""

    n: int
    letters: tuple

    def __post_init__(self):
        if any(not 0 <= a <= self.n for a in self.letters):
            raise ValueError("letter out of range")
        for a, b in zip(self.letters, self.letters[1:]):
            if a >= 1 and b >= 1 and a < b:
                raise ValueError("ascent y_%d y_%d is not normal" % (a, b))
            if a == 1 and b == 0:
                raise ValueError("factor y_1 u is not normal")

    @property
    def hom_degree(self) -> int:
        return sum(2 if a == 0 else 1 for a in self.letters)

    @property
    def internal_degree(self) -> int:
        return sum(self.n - 1 if a == 0 else 1 for a in self.letters)


def ext_words(n: int, m: int) -> list[ExtWord]:
    """Normal words of homological degree m, by direct word search."""
    _check_n(n)
    if n == 4:
        warnings.warn("the dual algebra description is only established "
                      "for n >= 5", RuntimeWarning, stacklevel=2)
    out = []

    def grow(word, degree):
        if degree == m:
            out.append(ExtWord(n, tuple(word)))
            return
        last = word[-1] if word else None
        for letter in range(n + 1):
            if last is not None:
                if last >= 1 and letter >= 1 and last < letter:
                    continue
                if last == 1 and letter == 0:
                    continue
            if degree + (2 if letter == 0 else 1) > m:
                continue
            word.append(letter)
            grow(word, degree + (2 if letter == 0 else 1))
            word.pop()

    grow([], 0)
    out.sort(key=lambda w: (w.internal_degree, w.letters))
    return out


def chain_to_ext_word(chain: AnickChain) -> ExtWord:
    """Separator blocks become u; runs and the trailing block carry over."""
    letters = []
    for i, run in enumerate(chain.runs):
        if i:
            letters.append(0)
        letters.extend(run)
    letters.extend([1] * chain.k)
    return ExtWord(chain.n, tuple(letters))


def bijection_check(n: int, m_max: int, cap: int = 10 ** 6) -> bool:
    """Chains map one-to-one onto normal dual words, degreewise."""
    for m in range(m_max + 1):
        chains = anick_chains(n, m, cap=cap)
        words = ext_words(n, m)
        if len(chains) != len(words):
            return False
        image = sorted(chain_to_ext_word(c).letters for c in chains)
        if image != sorted(w.letters for w in words):
            return False
        mine = {}
        for c in chains:
            key = c.internal_degree
            mine[key] = mine.get(key, 0) + 1
        theirs = {}
        for w in words:
            theirs[w.internal_degree] = theirs.get(w.internal_degree, 0) + 1
        if mine != theirs:
            return False
    return True


def euler_hilbert_identity(n: int, trunc: int) -> bool:
    """Alternating chain counts times the algebra series telescope to 1."""
    _check_n(n)
    alternating = [0] * trunc
    if trunc > 0:
        for m in range(trunc):
            for s, count in count_anick_chains(n, m).items():
                if s < trunc:
                    alternating[s] += (-1) ** m * count
    algebra = list(hilbert_os(n))
    product = polys.series_mul(alternating, algebra, trunc)
    want = [1] + [0] * (trunc - 1) if trunc > 0 else []
    return polys.trim(product) == polys.trim(want)
