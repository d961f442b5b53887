"""Compactly supported cohomology of graphical configuration spaces from
a finite cdga model of the one-vertex space.

The complex has one generator per pair (strict chain of non-discrete
graph partitions, basis tensor over the blocks of the coarsest chain
member); the empty chain carries a tensor factor per vertex.  The
differential inserts one partition into the chain in every possible slot
with alternating signs, multiplying tensor factors when the insertion
creates a new coarsest member, plus the internal differential of the
model.  Cohomological degree is internal degree plus chain length; the
normalization is pinned by the explicit interval-decomposition complex
of a path, which serves as the oracle.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .graphs import CapExceeded, Graph, refines_blocks
from .invariants import chromatic
from .polys import evaluate


class FiniteCDGA:
    """Finite-dimensional graded-commutative dg algebra over Q, given by
    tables.  The unit is optional so one-class models of open cells are
    allowed."""

    def __init__(self, names, degrees, mult, diff, unit=None):
        self.names = list(names)
        self.dim = len(self.names)
        if len(set(self.names)) != self.dim:
            raise ValueError("duplicate basis names")
        self.degrees = [int(d) for d in degrees]
        if len(self.degrees) != self.dim:
            raise ValueError("need one degree per basis element")
        self.mult = [[tuple(Fraction(c) for c in mult[i][j])
                      for j in range(self.dim)] for i in range(self.dim)]
        self.diff = [tuple(Fraction(c) for c in diff[i])
                     for i in range(self.dim)]
        self.unit = unit
        if unit is not None and unit not in self.names:
            raise ValueError("unit %r is not a basis element" % unit)
        self._validate()

    def _validate(self):
        deg = self.degrees
        for i in range(self.dim):
            for j in range(self.dim):
                for t, c in enumerate(self.mult[i][j]):
                    if c and deg[t] != deg[i] + deg[j]:
                        raise ValueError("product table is not homogeneous")
                sign = -1 if (deg[i] % 2 and deg[j] % 2) else 1
                flipped = tuple(sign * c for c in self.mult[j][i])
                if self.mult[i][j] != flipped:
                    raise ValueError(
                        "products of %s and %s are not graded commutative"
                        % (self.names[i], self.names[j]))
            for t, c in enumerate(self.diff[i]):
                if c and deg[t] != deg[i] + 1:
                    raise ValueError("differential is not of degree +1")
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            left = self._mul_combo(dict(enumerate(self.mult[i][j])), k)
            right = self._combo_mul(i, dict(enumerate(self.mult[j][k])))
            if left != right:
                raise ValueError("product table is not associative")
        for i in range(self.dim):
            second = {}
            for t, c in enumerate(self.diff[i]):
                if not c:
                    continue
                for u, e in enumerate(self.diff[t]):
                    if e:
                        second[u] = second.get(u, Fraction(0)) + c * e
            if any(second.values()):
                raise ValueError("differential does not square to zero")
            for j in range(self.dim):
                got = {}
                for t, c in enumerate(self.mult[i][j]):
                    if not c:
                        continue
                    for u, e in enumerate(self.diff[t]):
                        if e:
                            got[u] = got.get(u, Fraction(0)) + c * e
                want = self._combo_mul_vec(self.diff[i], j)
                sign = Fraction(-1 if deg[i] % 2 else 1)
                for t, c in self._mul_vec(i, self.diff[j]).items():
                    want[t] = want.get(t, Fraction(0)) + sign * c
                got = {t: c for t, c in got.items() if c}
                want = {t: c for t, c in want.items() if c}
                if got != want:
                    raise ValueError("Leibniz rule fails on %s, %s"
                                     % (self.names[i], self.names[j]))
        if self.unit is not None:
            u = self.names.index(self.unit)
            if deg[u] != 0:
                raise ValueError("unit must sit in degree 0")
            for i in range(self.dim):
                want = tuple(Fraction(1 if t == i else 0)
                             for t in range(self.dim))
                if self.mult[u][i] != want or self.mult[i][u] != want:
                    raise ValueError("unit does not act as identity")
            if any(self.diff[u]):
                raise ValueError("unit must be closed")

    def _combo_mul(self, i, combo):
        out = {}
        for j, c in combo.items():
            if not c:
                continue
            for t, e in enumerate(self.mult[i][j]):
                if e:
                    out[t] = out.get(t, Fraction(0)) + c * e
        return {t: c for t, c in out.items() if c}

    def _mul_combo(self, combo, k):
        out = {}
        for i, c in combo.items():
            if not c:
                continue
            for t, e in enumerate(self.mult[i][k]):
                if e:
                    out[t] = out.get(t, Fraction(0)) + c * e
        return {t: c for t, c in out.items() if c}

    def _mul_vec(self, i, vec):
        return self._combo_mul(i, dict(enumerate(vec)))

    def _combo_mul_vec(self, vec, j):
        return self._mul_combo(dict(enumerate(vec)), j)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d for d in self.degrees)

    @staticmethod
    def point() -> "FiniteCDGA":
        return FiniteCDGA(["1"], [0], [[[1]]], [[0]], unit="1")

    @staticmethod
    def euclidean(d: int) -> "FiniteCDGA":
        """One compactly supported class in degree d, vanishing square."""
        if d < 1:
            raise ValueError("need d >= 1")
        return FiniteCDGA(["x"], [d], [[[0]]], [[0]])

    @staticmethod
    def wedge(g: int, d: int) -> "FiniteCDGA":
        """Unit plus g degree-d classes with zero products."""
        if g < 1 or d < 1:
            raise ValueError("need g >= 1 and d >= 1")
        names = ["1"] + ["x%d" % i for i in range(1, g + 1)]
        dim = g + 1
        mult = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i in range(dim):
            mult[0][i][i] = 1
            mult[i][0][i] = 1
        return FiniteCDGA(names, [0] + [d] * g, mult,
                          [[0] * dim for _ in range(dim)], unit="1")

    @staticmethod
    def from_json(data) -> "FiniteCDGA":
        if isinstance(data, str):
            data = json.loads(data)
        names = [entry["name"] for entry in data["basis"]]
        degrees = [entry["deg"] for entry in data["basis"]]
        spot = {name: i for i, name in enumerate(names)}
        dim = len(names)
        mult = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for a, b, expr in data.get("mult", []):
            vec = _parse_combination(expr, spot, dim)
            mult[spot[a]][spot[b]] = vec
            sign = -1 if (degrees[spot[a]] % 2 and degrees[spot[b]] % 2) else 1
            mult[spot[b]][spot[a]] = [sign * c for c in vec]
        diff = [[Fraction(0)] * dim for _ in range(dim)]
        for a, expr in data.get("diff", []):
            diff[spot[a]] = _parse_combination(expr, spot, dim)
        return FiniteCDGA(names, degrees, mult, diff, unit=data.get("unit"))


def _parse_combination(expr, spot, dim):
    vec = [Fraction(0)] * dim
    text = expr.replace(" ", "").replace("-", "+-")
    for piece in text.split("+"):
        if piece in ("", "0"):
            continue
        coeff = Fraction(1)
        if piece.startswith("-"):
            coeff = Fraction(-1)
            piece = piece[1:]
        if "*" in piece:
            head, piece = piece.split("*", 1)
            coeff *= Fraction(head)
        if piece not in spot:
            raise ValueError("unknown basis element %r" % piece)
        vec[spot[piece]] += coeff
    return vec


def algebra_from_spec(spec: str) -> FiniteCDGA:
    """Parse `point`, `euclidean:d`, or `wedge:g:d`."""
    parts = spec.split(":")
    if parts[0] == "point" and len(parts) == 1:
        return FiniteCDGA.point()
    if parts[0] == "euclidean" and len(parts) == 2:
        return FiniteCDGA.euclidean(int(parts[1]))
    if parts[0] == "wedge" and len(parts) == 3:
        return FiniteCDGA.wedge(int(parts[1]), int(parts[2]))
    raise ValueError("unknown algebra spec %r" % spec)


@dataclass
class GradedComplex:
    """Cochain complex with labeled basis and exact differentials.

    diff[k] has one row per basis element of degree k, with entries over
    the degree k+1 basis; d*d = 0 is asserted on construction.
    """

    basis: dict = field(default_factory=dict)
    diff: dict = field(default_factory=dict)

    def check_square_zero(self):
        for k, matrix in self.diff.items():
            nxt = self.diff.get(k + 1)
            if not matrix or not nxt:
                continue
            for row in matrix:
                acc = [Fraction(0)] * (len(nxt[0]) if nxt and nxt[0] else 0)
                for j, c in enumerate(row):
                    if c:
                        for t, e in enumerate(nxt[j]):
                            acc[t] += c * e
                if any(acc):
                    raise RuntimeError("differential does not square to zero")

    def dims(self) -> dict:
        return {k: len(v) for k, v in self.basis.items() if v}

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(v) for k, v in self.basis.items())

    def cohomology(self) -> dict:
        if not self.basis:
            return {}
        lo = min(self.basis)
        hi = max(self.basis)
        dims = [len(self.basis.get(k, [])) for k in range(lo, hi + 1)]
        maps = {k - lo: self.diff[k] for k in self.diff
                if lo <= k < hi and self.diff[k]}
        betti = linalg.cochain_betti(dims, maps)
        return {lo + i: b for i, b in enumerate(betti) if b}


def _merge_tensor(A: FiniteCDGA, src_blocks, dst_blocks, tensor):
    """Multiply the factors of source blocks that share a target block.

    Returns {tensor: coefficient}; the Koszul sign accounts for moving
    factors of odd degree past each other while regrouping.
    """
    group = []
    for b in src_blocks:
        inside = set(b)
        for t, c in enumerate(dst_blocks):
            if inside <= set(c):
                group.append(t)
                break
        else:
            raise ValueError("blocks do not refine the target partition")
    sign = 1
    degs = [A.degrees[i] for i in tensor]
    for i in range(len(tensor)):
        for j in range(i + 1, len(tensor)):
            if group[i] > group[j] and degs[i] % 2 and degs[j] % 2:
                sign = -sign
    out = {(): Fraction(sign)}
    for t in range(len(dst_blocks)):
        members = [tensor[i] for i in range(len(tensor)) if group[i] == t]
        partial = {}
        for prefix, coeff in out.items():
            factor = {members[0]: Fraction(1)}
            for nxt in members[1:]:
                factor = A._mul_combo(factor, nxt)
            for idx, c in factor.items():
                if c:
                    key = prefix + (idx,)
                    partial[key] = partial.get(key, Fraction(0)) + coeff * c
        out = partial
        if not out:
            break
    return out


def _internal_terms(A: FiniteCDGA, tensor, sign):
    out = {}
    prefix = 0
    for pos, idx in enumerate(tensor):
        local = Fraction(-1 if prefix % 2 else 1) * sign
        for t, c in enumerate(A.diff[idx]):
            if c:
                target = tensor[:pos] + (t,) + tensor[pos + 1:]
                out[target] = out.get(target, Fraction(0)) + local * c
        prefix += A.degrees[idx]
    return out


def build_cf(g: Graph, A: FiniteCDGA, cap: int = 8) -> GradedComplex:
    """The chain-of-partitions complex for a graph and a one-vertex model."""
    if g.n > cap:
        raise CapExceeded("complex construction capped at %d vertices" % cap)
    partitions = g.graph_partitions(cap=max(cap, g.n))
    discrete = tuple((v,) for v in range(g.n))
    nondiscrete = [p for p in partitions if len(p) < g.n]
    as_sets = {p: tuple(frozenset(b) for b in p) for p in nondiscrete}
    strictly_finer = {}
    for p in nondiscrete:
        for q in nondiscrete:
            if p != q and refines_blocks(as_sets[p], as_sets[q]):
                strictly_finer.setdefault(p, set()).add(q)

    chains = []

    def grow(chain):
        chains.append(chain)
        later = (strictly_finer.get(chain[-1], ()) if chain
                 else nondiscrete)
        for q in nondiscrete:
            if chain and q not in later:
                continue
            grow(chain + (q,))

    grow(())

    basis = {}
    position = {}
    for chain in chains:
        blocks = chain[-1] if chain else discrete
        s = len(chain)
        for tensor in itertools.product(range(A.dim), repeat=len(blocks)):
            deg = sum(A.degrees[i] for i in tensor) + s
            position[(chain, tensor)] = (deg, len(basis.setdefault(deg, [])))
            basis[deg].append((chain, tensor))

    diff = {}
    for deg, labels in basis.items():
        targets = basis.get(deg + 1, [])
        spot = {label: i for i, label in enumerate(targets)}
        matrix = []
        for chain, tensor in labels:
            row = [Fraction(0)] * len(targets)
            s = len(chain)
            blocks = chain[-1] if chain else discrete
            for p in range(s + 1):
                slot_sign = Fraction(-1 if p % 2 else 1)
                lower = chain[p - 1] if p else None
                upper = chain[p] if p < s else None
                for q in nondiscrete:
                    if lower is not None and q not in strictly_finer.get(
                            lower, ()):
                        continue
                    if upper is not None and upper not in strictly_finer.get(
                            q, ()):
                        continue
                    new_chain = chain[:p] + (q,) + chain[p:]
                    if upper is None:
                        pieces = _merge_tensor(A, blocks, q, tensor)
                        for new_tensor, coeff in pieces.items():
                            if coeff:
                                row[spot[(new_chain, new_tensor)]] += \
                                    slot_sign * coeff
                    else:
                        row[spot[(new_chain, tensor)]] += slot_sign
            internal_sign = Fraction(-1 if s % 2 else 1)
            for new_tensor, coeff in _internal_terms(
                    A, tensor, internal_sign).items():
                row[spot[(chain, new_tensor)]] += coeff
            matrix.append(row)
        diff[deg] = matrix

    complex_ = GradedComplex(basis, diff)
    complex_.check_square_zero()
    return complex_


def path_complex(n: int, A: FiniteCDGA) -> GradedComplex:
    """Ordered interval decompositions of a path, merging neighbours.

    The oracle complex: degree is internal degree plus (n - number of
    intervals), and d merges adjacent intervals with sign (-1)^(j-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    decomps = []
    for cuts in itertools.product([False, True], repeat=n - 1):
        sizes = []
        run = 1
        for cut in cuts:
            if cut:
                sizes.append(run)
                run = 1
            else:
                run += 1
        sizes.append(run)
        decomps.append(tuple(sizes))

    basis = {}
    for sizes in decomps:
        k = len(sizes)
        for tensor in itertools.product(range(A.dim), repeat=k):
            deg = sum(A.degrees[i] for i in tensor) + (n - k)
            basis.setdefault(deg, []).append((sizes, tensor))

    diff = {}
    for deg, labels in basis.items():
        targets = basis.get(deg + 1, [])
        spot = {label: i for i, label in enumerate(targets)}
        matrix = []
        for sizes, tensor in labels:
            row = [Fraction(0)] * len(targets)
            k = len(sizes)
            for j in range(k - 1):
                merged = sizes[:j] + (sizes[j] + sizes[j + 1],) + sizes[j + 2:]
                sign = Fraction(-1 if j % 2 else 1)
                for t, c in enumerate(A.mult[tensor[j]][tensor[j + 1]]):
                    if c:
                        new_tensor = tensor[:j] + (t,) + tensor[j + 2:]
                        row[spot[(merged, new_tensor)]] += sign * c
            internal_sign = Fraction(-1 if k % 2 else 1)
            for new_tensor, coeff in _internal_terms(
                    A, tensor, internal_sign).items():
                row[spot[(sizes, new_tensor)]] += coeff
            matrix.append(row)
        diff[deg] = matrix

    complex_ = GradedComplex(basis, diff)
    complex_.check_square_zero()
    return complex_


def cf_euler(g: Graph, A: FiniteCDGA, cap: int = 10) -> int:
    """Euler characteristic of the complex by chain counting alone.

    Alternating chain counts over the partition order telescope through
    the recursion f(I) = -1 - sum of f over strictly finer members."""
    chi = A.euler_characteristic()
    partitions = g.graph_partitions(cap=cap)
    nondiscrete = [p for p in partitions if len(p) < g.n]
    nondiscrete.sort(key=len, reverse=True)
    as_sets = {p: tuple(frozenset(b) for b in p) for p in nondiscrete}
    f = {}
    for i, p in enumerate(nondiscrete):
        total = -1
        for q in nondiscrete[:i]:
            if q != p and refines_blocks(as_sets[q], as_sets[p]):
                total -= f[q]
        f[p] = total
    return chi ** g.n + sum(f[p] * chi ** len(p) for p in nondiscrete)


def conf_cs_cohomology(g: Graph, A: FiniteCDGA, cap: int = 8) -> dict:
    """Cohomology dimensions by degree, with the Euler anchor enforced."""
    complex_ = build_cf(g, A, cap=cap)
    betti = complex_.cohomology()
    euler = sum((-1) ** k * b for k, b in betti.items())
    expected = evaluate(chromatic(g), A.euler_characteristic())
    if euler != expected:
        raise RuntimeError("Euler characteristic %s does not match the "
                           "chromatic value %s" % (euler, expected))
    return betti
