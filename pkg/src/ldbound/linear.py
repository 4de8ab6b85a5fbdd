"""Linear codes over F_q: Reed-Solomon and Hamming constructions,
syndrome-based covering radius, and dual-code weight statistics."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .gf import field, null_space, rref
from .oracles import ExplicitCode
from .spaces import DEFAULT_ENUM_CAP, EnumerationCapError, Hamming


@dataclass(frozen=True)
class LinearCode:
    """An [n, k]_q code held as a row-reduced generator matrix with the
    derived parity-check matrix."""

    q: int
    n: int
    k: int
    generator: tuple[tuple[int, ...], ...]
    parity: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generator(cls, q: int, rows) -> "LinearCode":
        gf = field(q)
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ValueError("empty generator")
        n = len(rows[0])
        if any(len(r) != n for r in rows) or any(not (0 <= v < q) for r in rows for v in r):
            raise ValueError("malformed generator matrix")
        reduced, _ = rref(rows, gf)
        if len(reduced) != len(rows):
            raise ValueError("generator rows are linearly dependent")
        parity = null_space(reduced, gf, n)
        code = cls(q, n, len(reduced), reduced, parity)
        code._check()
        return code

    def _check(self):
        gf = field(self.q)
        for g in self.generator:
            for h in self.parity:
                acc = 0
                for a, b in zip(g, h):
                    acc = gf.add(acc, gf.mul(a, b))
                assert acc == 0, "generator/parity mismatch"

    @property
    def redundancy(self) -> int:
        return self.n - self.k


def rs_code(q: int, n: int, k: int, eval_points=None) -> LinearCode:
    """Reed-Solomon code: rows are evaluations of 1, x, ..., x^{k-1}.

    Default evaluation points are the first n field elements in canonical
    order; the choice does not affect any Hamming-metric statistic."""
    if not (1 <= k <= n <= q):
        raise ValueError("need 1 <= k <= n <= q")
    if eval_points is None:
        eval_points = list(range(n))
    eval_points = list(eval_points)
    if len(set(eval_points)) != len(eval_points) or len(eval_points) != n:
        raise ValueError("evaluation points must be n distinct field elements")
    gf = field(q)
    rows = [tuple(gf.pow(p, j) for p in eval_points) for j in range(k)]
    return LinearCode.from_generator(q, rows)


def hamming_code(q: int, m: int) -> LinearCode:
    """The [ (q^m-1)/(q-1), n-m, 3 ]_q Hamming code: parity columns are one
    representative per projective point (first nonzero coordinate 1)."""
    if m < 2:
        raise ValueError("m >= 2 required")
    gf = field(q)
    cols = []
    for vec in itertools.product(range(q), repeat=m):
        nz = next((v for v in vec if v != 0), None)
        if nz == 1:
            cols.append(vec)
    n = len(cols)
    assert n == (q**m - 1) // (q - 1)
    parity_rows = [tuple(col[i] for col in cols) for i in range(m)]
    gen = null_space(parity_rows, gf, n)
    return LinearCode.from_generator(q, gen)


def random_linear_code(q: int, n: int, k: int, rng: random.Random) -> LinearCode:
    """A seeded random [n, k]_q code (rows redrawn until independent)."""
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    while True:
        rows = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(k)]
        try:
            return LinearCode.from_generator(q, rows)
        except ValueError:
            continue


def enumerate_codewords(c: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> ExplicitCode:
    """All q^k codewords as an ExplicitCode in Hamming(q, n)."""
    if c.q**c.k > cap:
        raise EnumerationCapError(c.q**c.k, cap)
    gf = field(c.q)
    words = []

    def rec(i, acc):
        if i == c.k:
            words.append(tuple(acc))
            return
        row = c.generator[i]
        for coeff in range(c.q):
            if coeff == 0:
                rec(i + 1, acc)
            else:
                rec(i + 1, [gf.add(a, gf.mul(coeff, r)) for a, r in zip(acc, row)])

    rec(0, [0] * c.n)
    return ExplicitCode(Hamming(c.q, c.n), tuple(sorted(set(words))))


def _syndrome_bfs_prime(c: LinearCode) -> int:
    """Covering radius by BFS over the syndrome space, vectorized for prime q."""
    q, r = c.q, c.redundancy
    size = q**r
    powers = np.array([q**i for i in range(r)], dtype=np.int64)
    cols = np.array([[c.parity[i][j] for i in range(r)] for j in range(c.n)], dtype=np.int64)
    reached = np.zeros(size, dtype=bool)
    reached[0] = True
    frontier = np.array([0], dtype=np.int64)
    count = 1
    radius = 0
    while count < size:
        parts = []
        digits = (frontier[:, None] // powers[None, :]) % q
        for j in range(c.n):
            for a in range(1, q):
                newd = (digits + (a * cols[j])[None, :]) % q
                parts.append(newd @ powers)
        cand = np.unique(np.concatenate(parts))
        cand = cand[~reached[cand]]
        radius += 1
        reached[cand] = True
        count += len(cand)
        frontier = cand
    return radius


def _syndrome_bfs_generic(c: LinearCode) -> int:
    gf = field(c.q)
    q, r = c.q, c.redundancy
    size = q**r
    cols = [tuple(c.parity[i][j] for i in range(r)) for j in range(c.n)]
    reached = {(0,) * r}
    frontier = list(reached)
    radius = 0
    while len(reached) < size:
        nxt = []
        for s in frontier:
            for col in cols:
                for a in range(1, q):
                    t = tuple(gf.add(x, gf.mul(a, y)) for x, y in zip(s, col))
                    if t not in reached:
                        reached.add(t)
                        nxt.append(t)
        radius += 1
        frontier = nxt
        if not frontier and len(reached) < size:
            raise RuntimeError("syndrome BFS stalled; parity matrix not full rank")
    return radius


def syndrome_covering_radius(c: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Least l such that every syndrome is a combination of <= l parity
    columns; equals the exhaustive covering radius of the code."""
    if c.k == c.n:
        return 0
    if c.q**c.redundancy > cap:
        raise EnumerationCapError(c.q**c.redundancy, cap)
    if field(c.q).prime:
        return _syndrome_bfs_prime(c)
    return _syndrome_bfs_generic(c)


@dataclass(frozen=True)
class DualStats:
    """Nonzero weight set of the dual code; s = 0 flags a zero dual."""

    dual_weights: frozenset[int]
    s: int
    dual_distance: int | None
    degenerate: bool


def dual_stats(c: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> DualStats:
    """Exact dual weight set by direct enumeration of the q^{n-k} dual
    codewords."""
    if c.k == c.n:
        return DualStats(frozenset(), 0, None, True)
    if c.q**c.redundancy > cap:
        raise EnumerationCapError(c.q**c.redundancy, cap)
    gf = field(c.q)
    weights = set()

    def rec(i, acc):
        if i == c.redundancy:
            w = sum(1 for v in acc if v != 0)
            if w:
                weights.add(w)
            return
        row = c.parity[i]
        for coeff in range(c.q):
            if coeff == 0:
                rec(i + 1, acc)
            else:
                rec(i + 1, [gf.add(a, gf.mul(coeff, r)) for a, r in zip(acc, row)])

    rec(0, [0] * c.n)
    return DualStats(frozenset(weights), len(weights), min(weights), False)
