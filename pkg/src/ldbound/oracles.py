"""Ground-truth brute-force computations on small spaces.

Covering radius, (R, L1, L2) covering-list-decodability profiles,
multiplicity statistics, minimal covering / maximal packing search, and
the seeded probabilistic construction of list-decodable codes from
covering codes.

Hamming spaces get numpy fast paths (multi-source BFS for the covering
radius, vectorized distance counting for profiles); everything else runs
through the generic distance function.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .spaces import (
    DEFAULT_ENUM_CAP,
    Hamming,
    SpaceSpec,
    Subspace,
    canonical_subspace,
    distance,
    enumerate_space,
    space_size,
)

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceededError(Exception):
    """Exact search ran out of its node budget; result would not be optimal."""


@dataclass(frozen=True)
class ExplicitCode:
    """A finite duplicate-free set of points with its space."""

    space: SpaceSpec
    codewords: tuple

    def __post_init__(self):
        words = tuple(self.codewords)
        if isinstance(self.space, Subspace):
            words = tuple(canonical_subspace(w, self.space.q) for w in words)
        object.__setattr__(self, "codewords", words)
        if len(set(words)) != len(words):
            raise ValueError("duplicate codewords")
        if not words:
            raise ValueError("empty code")

    def __len__(self) -> int:
        return len(self.codewords)


@dataclass(frozen=True)
class ListProfile:
    """Exact min/max ball occupancy of a code at a fixed radius."""

    radius: int
    l1: int
    l2: int


@dataclass(frozen=True)
class MultiplicityStats:
    max_mul: int
    multi_count: int
    multiratio: Fraction


# ------------------------------------------------------- Hamming fast paths


def _hamming_index(word, q: int) -> int:
    idx = 0
    for x in word:
        idx = idx * q + x
    return idx


def _hamming_covering_radius_bfs(q: int, n: int, code) -> int:
    size = q**n
    reached = np.zeros(size, dtype=bool)
    frontier = np.fromiter((_hamming_index(w, q) for w in code), dtype=np.int64)
    frontier = np.unique(frontier)
    reached[frontier] = True
    count = int(len(frontier))
    radius = 0
    powers = [q**i for i in range(n)]
    while count < size:
        parts = []
        for qi in powers:
            digit = (frontier // qi) % q
            for c in range(1, q):
                parts.append(frontier + ((digit + c) % q - digit) * qi)
        cand = np.unique(np.concatenate(parts))
        cand = cand[~reached[cand]]
        radius += 1
        reached[cand] = True
        count += len(cand)
        frontier = cand
    return radius


def _hamming_digit_matrix(points, n) -> np.ndarray:
    return np.array(points, dtype=np.uint16).reshape(-1, n)


def _hamming_ball_counts(space: Hamming, code, r: int) -> np.ndarray:
    """Count of codewords within distance r of every point of the space."""
    cw = _hamming_digit_matrix(code, space.n)
    size = space_size(space)
    counts = np.zeros(size, dtype=np.int64)
    chunk = max(1, (1 << 22) // max(1, len(cw) * space.n))
    pts = list(enumerate_space(space))
    for start in range(0, size, chunk):
        block = _hamming_digit_matrix(pts[start : start + chunk], space.n)
        dists = (block[:, None, :] != cw[None, :, :]).sum(axis=2)
        counts[start : start + len(block)] = (dists <= r).sum(axis=1)
    return counts


# ---------------------------------------------------------------- oracles


def covering_radius(code: ExplicitCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    """max over points x of min over codewords of d(x, c), exhaustively."""
    s = code.space
    if space_size(s) > cap:
        from .spaces import EnumerationCapError

        raise EnumerationCapError(space_size(s), cap)
    if isinstance(s, Hamming):
        return _hamming_covering_radius_bfs(s.q, s.n, code.codewords)
    worst = 0
    for x in enumerate_space(s, cap):
        worst = max(worst, min(distance(s, x, c) for c in code.codewords))
    return worst


def list_profile(code: ExplicitCode, r: int, cap: int = DEFAULT_ENUM_CAP) -> ListProfile:
    """Exact min/max of |B(x, r) ∩ C| over all centers x."""
    s = code.space
    if isinstance(s, Hamming):
        counts = _hamming_ball_counts(s, code.codewords, r)
        return ListProfile(r, int(counts.min()), int(counts.max()))
    l1, l2 = None, 0
    for x in enumerate_space(s, cap):
        c = sum(1 for w in code.codewords if distance(s, x, w) <= r)
        l1 = c if l1 is None else min(l1, c)
        l2 = max(l2, c)
    return ListProfile(r, l1, l2)


def multiplicity_stats(code: ExplicitCode, r: int, cap: int = DEFAULT_ENUM_CAP) -> MultiplicityStats:
    """Covering multiplicity and multiratio of the code at radius r."""
    s = code.space
    size = space_size(s)
    if isinstance(s, Hamming):
        counts = _hamming_ball_counts(s, code.codewords, r)
        return MultiplicityStats(int(counts.max()), int((counts >= 2).sum()), Fraction(int((counts >= 2).sum()), size))
    max_mul = 0
    multi = 0
    for x in enumerate_space(s, cap):
        c = sum(1 for w in code.codewords if distance(s, x, w) <= r)
        max_mul = max(max_mul, c)
        if c >= 2:
            multi += 1
    return MultiplicityStats(max_mul, multi, Fraction(multi, size))


def min_distance(code: ExplicitCode) -> int:
    """Minimum pairwise distance; needs at least two codewords."""
    words = code.codewords
    if len(words) < 2:
        raise ValueError("minimum distance needs >= 2 codewords")
    s = code.space
    return min(distance(s, a, b) for i, a in enumerate(words) for b in words[i + 1 :])


def ball_points(s: SpaceSpec, center, r: int, cap: int = DEFAULT_ENUM_CAP) -> list:
    """All points of the space within distance r of the center, in
    enumeration order."""
    return [x for x in enumerate_space(s, cap) if distance(s, center, x) <= r]


# ---------------------------------------------------- covering and packing


def _ball_masks(s: SpaceSpec, points: list, r: int) -> list[int]:
    """For each point, a bitmask over point indices of its radius-r ball."""
    n = len(points)
    if isinstance(s, Hamming):
        pts = _hamming_digit_matrix(points, s.n)
        masks = []
        chunk = max(1, (1 << 22) // max(1, n * s.n))
        for start in range(0, n, chunk):
            block = pts[start : start + chunk]
            near = (block[:, None, :] != pts[None, :, :]).sum(axis=2) <= r
            for row in near:
                mask = 0
                for j in np.flatnonzero(row):
                    mask |= 1 << int(j)
                masks.append(mask)
        return masks
    masks = []
    for a in points:
        mask = 0
        for j, b in enumerate(points):
            if distance(s, a, b) <= r:
                mask |= 1 << j
        masks.append(mask)
    return masks


def _greedy_cover(masks: list[int], n_points: int) -> list[int]:
    universe = (1 << n_points) - 1
    uncovered = universe
    chosen = []
    while uncovered:
        best, best_gain = None, -1
        for i, m in enumerate(masks):
            gain = (m & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        chosen.append(best)
        uncovered &= ~masks[best]
    return chosen


def _exact_cover(masks: list[int], n_points: int, node_budget: int) -> list[int]:
    """Branch-and-bound minimum set cover over ball masks."""
    universe = (1 << n_points) - 1
    greedy = _greedy_cover(masks, n_points)
    best = list(greedy)
    max_size = max(m.bit_count() for m in masks)
    coverers = [[i for i, m in enumerate(masks) if m >> j & 1] for j in range(n_points)]
    nodes = 0

    def dfs(uncovered: int, chosen: list[int]):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(f"exact cover search exceeded {node_budget} nodes")
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        rem = uncovered.bit_count()
        if len(chosen) + (rem + max_size - 1) // max_size >= len(best):
            return
        # branch on the uncovered point with the fewest covering balls
        pick, fewest = -1, None
        u = uncovered
        while u:
            j = (u & -u).bit_length() - 1
            k = len(coverers[j])
            if fewest is None or k < fewest:
                pick, fewest = j, k
            u &= u - 1
        for i in coverers[pick]:
            chosen.append(i)
            dfs(uncovered & ~masks[i], chosen)
            chosen.pop()

    dfs(universe, [])
    return best


def min_covering(
    s: SpaceSpec,
    r: int,
    mode: str = "greedy",
    cap: int = DEFAULT_ENUM_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExplicitCode:
    """A covering code of radius <= r; exact mode returns a minimum one."""
    if mode not in ("greedy", "exact"):
        raise ValueError("mode must be 'greedy' or 'exact'")
    if mode == "exact" and space_size(s) > 2**12:
        raise ValueError("exact covering search limited to spaces of <= 2^12 points")
    points = list(enumerate_space(s, cap))
    masks = _ball_masks(s, points, r)
    if mode == "greedy":
        chosen = _greedy_cover(masks, len(points))
    else:
        chosen = _exact_cover(masks, len(points), node_budget)
    return ExplicitCode(s, tuple(points[i] for i in sorted(chosen)))


def _greedy_packing(s: SpaceSpec, points: list, d: int, seed_code=None) -> list:
    chosen = list(seed_code) if seed_code else []
    for p in points:
        if all(distance(s, p, c) >= d for c in chosen):
            chosen.append(p)
    return chosen


def _max_clique(adj: list[int], node_budget: int) -> list[int]:
    """Maximum clique by branch and bound on bitset adjacency."""
    n = len(adj)
    best: list[int] = []
    nodes = 0

    def expand(cand: int, clique: list[int]):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(f"exact packing search exceeded {node_budget} nodes")
        if len(clique) + cand.bit_count() <= len(best):
            return
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            clique.append(v)
            expand(cand & adj[v], clique)
            clique.pop()

    expand((1 << n) - 1, [])
    return best


def max_packing(
    s: SpaceSpec,
    d: int,
    mode: str = "greedy",
    cap: int = DEFAULT_ENUM_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seed_code=None,
) -> ExplicitCode:
    """A code of minimum distance >= d; exact mode returns a maximum one."""
    if mode not in ("greedy", "exact"):
        raise ValueError("mode must be 'greedy' or 'exact'")
    if mode == "exact" and space_size(s) > 2**12:
        raise ValueError("exact packing search limited to spaces of <= 2^12 points")
    points = list(enumerate_space(s, cap))
    if d <= 1:
        return ExplicitCode(s, tuple(points))
    if mode == "greedy":
        chosen = _greedy_packing(s, points, d, seed_code)
        return ExplicitCode(s, tuple(chosen))
    far = _ball_masks(s, points, d - 1)  # complement gives the >= d graph
    full = (1 << len(points)) - 1
    adj = [full & ~m for m in far]
    idx = _max_clique(adj, node_budget)
    return ExplicitCode(s, tuple(points[i] for i in sorted(idx)))


# -------------------------------------------------- probabilistic construct


def probabilistic_construct(
    cover: ExplicitCode,
    L: int,
    seed: int,
    radius: int | None = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> ExplicitCode:
    """Draw L points uniformly (with replacement, then deduplicated) from
    the radius-R ball of each cover codeword, using a seeded generator.

    R defaults to the cover's covering radius.  Result size is <= L * |cover|.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    if radius is None:
        radius = covering_radius(cover, cap)
    rng = random.Random(seed)
    s = cover.space
    picked = {}
    for c in cover.codewords:
        ball = ball_points(s, c, radius, cap)
        for _ in range(L):
            p = ball[rng.randrange(len(ball))]
            picked.setdefault(p, None)
    return ExplicitCode(s, tuple(picked))


@dataclass(frozen=True)
class CoveringBoundReport:
    """Outcome of checking |C| <= L2 * |C'| against an explicit covering code."""

    code_size: int
    cover_size: int
    cover_radius: int
    radius: int
    l2: int
    upper: int
    holds: bool
    precondition_ok: bool
    sandwich_lower: int | None = None
    sandwich_holds: bool | None = None


def verify_covering_bound(
    code: ExplicitCode,
    cover: ExplicitCode,
    r: int,
    packing: ExplicitCode | None = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> CoveringBoundReport:
    """Check the covering-code upper bound |C| <= l2(C, r) * |C'| where C'
    has covering radius <= r; optionally the packing-side sandwich
    L1 * |C''| <= |C| when a minimum-distance-(2r+1) code is supplied."""
    rc = covering_radius(cover, cap)
    pre_ok = rc <= r
    prof = list_profile(code, r, cap)
    upper = prof.l2 * len(cover)
    holds = len(code) <= upper if pre_ok else True
    lower = None
    lower_holds = None
    if packing is not None:
        if min_distance(packing) < 2 * r + 1:
            raise ValueError("packing code must have minimum distance >= 2r+1")
        lower = prof.l1 * len(packing)
        lower_holds = lower <= len(code)
    return CoveringBoundReport(
        code_size=len(code),
        cover_size=len(cover),
        cover_radius=rc,
        radius=r,
        l2=prof.l2,
        upper=upper,
        holds=holds,
        precondition_ok=pre_ok,
        sandwich_lower=lower,
        sandwich_holds=lower_holds,
    )
