"""The eight finite metric spaces.

Each space kind is a frozen dataclass; points are hashable tuples:

  Hamming / PairMetric : symbol vector, tuple of ints in [0, q)
  Rank / CoverMetric   : m x n matrix, tuple of m row-tuples
  SumRank              : tuple of matrices, one per block
  Subspace / ConstDim  : subspace as canonical RREF basis (tuple of rows)
  Insdel               : string as tuple of ints in [0, v); length may
                         differ from n for received words
  Permutation          : image tuple, a bijection on 1..n

Distances, exact ball volumes where a formula exists, and deterministic
full enumeration for oracle-scale spaces.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .exactmath import binomial, gaussian_binomial
from .gf import field as gf_field, is_prime_power, mat_rank, rref

DEFAULT_ENUM_CAP = 2**24


class EnumerationCapError(Exception):
    """Space too large to enumerate under the configured cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"space has {size} points, exceeding enumeration cap {cap}")
        self.size = size
        self.cap = cap


class CenterRequiredError(ValueError):
    """Ball volume is center-dependent for this space kind."""


def _check_prime_power(q):
    if not is_prime_power(q):
        raise ValueError(f"q={q} must be a prime power")


@dataclass(frozen=True)
class Hamming:
    q: int
    n: int

    def __post_init__(self):
        _check_prime_power(self.q)
        if self.n < 1:
            raise ValueError("n >= 1 required")

    @property
    def diameter(self) -> int:
        return self.n


@dataclass(frozen=True)
class Rank:
    """m x n matrices over F_q with rank distance; m >= n."""

    q: int
    m: int
    n: int

    def __post_init__(self):
        _check_prime_power(self.q)
        if not (self.m >= self.n >= 1):
            raise ValueError("need m >= n >= 1")

    @property
    def diameter(self) -> int:
        return self.n


@dataclass(frozen=True)
class SumRank:
    """Direct sum of matrix blocks (n_i x m_i) with the sum-rank distance.

    Blocks require n_i <= m_i and m_1 >= m_2 >= ... >= m_t.
    """

    q: int
    blocks: tuple[tuple[int, int], ...]  # (n_i, m_i)

    def __post_init__(self):
        _check_prime_power(self.q)
        if not self.blocks:
            raise ValueError("at least one block required")
        ms = [m for _, m in self.blocks]
        if any(n < 1 or n > m for n, m in self.blocks):
            raise ValueError("each block needs 1 <= n_i <= m_i")
        if any(ms[i] < ms[i + 1] for i in range(len(ms) - 1)):
            raise ValueError("block column counts must be non-increasing")

    @property
    def diameter(self) -> int:
        return sum(n for n, _ in self.blocks)


@dataclass(frozen=True)
class Subspace:
    """Subspaces of F_q^n with dimensions in `dims`, metric 'S' or 'I'."""

    q: int
    n: int
    dims: tuple[int, ...]
    metric: str = "S"

    def __post_init__(self):
        _check_prime_power(self.q)
        if self.metric not in ("S", "I"):
            raise ValueError("metric must be 'S' or 'I'")
        if not self.dims or any(d < 1 or d > self.n - 1 for d in self.dims):
            raise ValueError("dims must be a nonempty subset of 1..n-1")
        object.__setattr__(self, "dims", tuple(sorted(set(self.dims))))

    @property
    def diameter(self) -> int:
        return 2 * max(self.dims)


def const_dim_subspace(q: int, n: int, k: int, metric: str = "S") -> Subspace:
    """Grassmannian of k-dimensional subspaces of F_q^n."""
    return Subspace(q, n, (k,), metric)


@dataclass(frozen=True)
class CoverMetric:
    """m x n matrices over F_q with the cover (term-rank) distance; m >= n."""

    q: int
    m: int
    n: int

    def __post_init__(self):
        _check_prime_power(self.q)
        if not (self.m >= self.n >= 1):
            raise ValueError("need m >= n >= 1")

    @property
    def diameter(self) -> int:
        return self.n


@dataclass(frozen=True)
class PairMetric:
    """Symbol vectors with the (cyclic) symbol-pair distance."""

    q: int
    n: int

    def __post_init__(self):
        _check_prime_power(self.q)
        if self.n < 2:
            raise ValueError("pair metric needs n >= 2")

    @property
    def diameter(self) -> int:
        return self.n


@dataclass(frozen=True)
class Insdel:
    """Length-n strings over a v-letter alphabet with the insdel distance."""

    v: int
    n: int

    def __post_init__(self):
        if self.v < 2 or self.n < 1:
            raise ValueError("need v >= 2 and n >= 1")

    @property
    def diameter(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class Permutation:
    """S_n with the Hamming or Chebyshev metric."""

    n: int
    metric: str = "hamming"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n >= 1 required")
        if self.metric not in ("hamming", "chebyshev"):
            raise ValueError("metric must be 'hamming' or 'chebyshev'")

    @property
    def diameter(self) -> int:
        return self.n if self.metric == "hamming" else self.n - 1


SpaceSpec = Hamming | Rank | SumRank | Subspace | CoverMetric | PairMetric | Insdel | Permutation


# ---------------------------------------------------------------- sizes


def space_size(s: SpaceSpec) -> int:
    if isinstance(s, (Hamming, PairMetric)):
        return s.q**s.n
    if isinstance(s, (Rank, CoverMetric)):
        return s.q ** (s.m * s.n)
    if isinstance(s, SumRank):
        return s.q ** sum(n * m for n, m in s.blocks)
    if isinstance(s, Subspace):
        return sum(gaussian_binomial(s.n, k, s.q) for k in s.dims)
    if isinstance(s, Insdel):
        return s.v**s.n
    if isinstance(s, Permutation):
        return math.factorial(s.n)
    raise TypeError(f"unknown space {s!r}")


# ------------------------------------------------------------- distances


def hamming_distance(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def lcs_length(a, b) -> int:
    """Longest common subsequence length (row-rolling DP)."""
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def insdel_distance(a, b) -> int:
    return len(a) + len(b) - 2 * lcs_length(a, b)


def subsequence_test(shorter, longer) -> bool:
    """True iff `shorter` is a subsequence of `longer` (greedy scan)."""
    it = iter(longer)
    return all(any(x == y for y in it) for x in shorter)


def pair_vector(x) -> tuple:
    """Cyclic symbol-pair vector: entry i is (x_i, x_{i+1 mod n})."""
    n = len(x)
    if n < 2:
        raise ValueError("pair vector needs length >= 2")
    return tuple((x[i], x[(i + 1) % n]) for i in range(n))


def _matrix_sub(a, b, gf):
    return tuple(tuple(gf.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cover_weight_matching(mat) -> int:
    """Minimum |I|+|J| covering all nonzero entries, via maximum bipartite
    matching on the nonzero-entry graph (equal by Koenig's theorem)."""
    m = len(mat)
    adj = [[j for j, v in enumerate(row) if v != 0] for row in mat]
    match_col = {}

    def augment(r, seen):
        for c in adj[r]:
            if c in seen:
                continue
            seen.add(c)
            if c not in match_col or augment(match_col[c], seen):
                match_col[c] = r
                return True
        return False

    size = 0
    for r in range(m):
        if adj[r] and augment(r, set()):
            size += 1
    return size


def cover_weight_bruteforce(mat) -> int:
    """Reference minimum over all explicit (I, J) covers."""
    m, n = len(mat), len(mat[0])
    nonzero = [(i, j) for i in range(m) for j in range(n) if mat[i][j] != 0]
    best = m + n
    for rbits in range(1 << m):
        rows = {i for i in range(m) if rbits >> i & 1}
        if len(rows) >= best:
            continue
        cols = {j for i, j in nonzero if i not in rows}
        best = min(best, len(rows) + len(cols))
    return best


def subspace_dim(point) -> int:
    return len(point)


def canonical_subspace(rows, q: int):
    """Canonical RREF basis of the row span; equality of spans is equality
    of canonical forms."""
    reduced, _ = rref(rows, gf_field(q))
    return reduced


def subspace_distance(u, v, q: int) -> int:
    gf = gf_field(q)
    du, dv = len(u), len(v)
    dsum = mat_rank(list(u) + list(v), gf)
    dint = du + dv - dsum
    return du + dv - 2 * dint


def distance(s: SpaceSpec, a, b) -> int:
    """Metric value between two points of the space."""
    if isinstance(s, Hamming):
        if len(a) != s.n or len(b) != s.n:
            raise ValueError("vector length mismatch")
        return hamming_distance(a, b)
    if isinstance(s, Rank):
        gf = gf_field(s.q)
        return mat_rank(_matrix_sub(a, b, gf), gf)
    if isinstance(s, SumRank):
        gf = gf_field(s.q)
        if len(a) != len(s.blocks) or len(b) != len(s.blocks):
            raise ValueError("block count mismatch")
        return sum(mat_rank(_matrix_sub(ba, bb, gf), gf) for ba, bb in zip(a, b))
    if isinstance(s, Subspace):
        ds = subspace_distance(a, b, s.q)
        if s.metric == "S":
            return ds
        di2 = ds + abs(len(a) - len(b))
        assert di2 % 2 == 0
        return di2 // 2
    if isinstance(s, CoverMetric):
        gf = gf_field(s.q)
        return cover_weight_matching(_matrix_sub(a, b, gf))
    if isinstance(s, PairMetric):
        if len(a) != s.n or len(b) != s.n:
            raise ValueError("vector length mismatch")
        return hamming_distance(pair_vector(a), pair_vector(b))
    if isinstance(s, Insdel):
        return insdel_distance(a, b)
    if isinstance(s, Permutation):
        if len(a) != s.n or len(b) != s.n:
            raise ValueError("permutation length mismatch")
        if s.metric == "hamming":
            return hamming_distance(a, b)
        return max(abs(x - y) for x, y in zip(a, b))
    raise TypeError(f"unknown space {s!r}")


# ------------------------------------------------------------ enumeration


def enumerate_space(s: SpaceSpec, cap: int = DEFAULT_ENUM_CAP):
    """Yield every point exactly once in a deterministic (lexicographic)
    order.  Refuses explicitly when the space exceeds `cap` points."""
    size = space_size(s)
    if size > cap:
        raise EnumerationCapError(size, cap)
    if isinstance(s, (Hamming, PairMetric)):
        yield from itertools.product(range(s.q), repeat=s.n)
    elif isinstance(s, Rank):
        yield from _enumerate_matrices(s.q, s.m, s.n)
    elif isinstance(s, CoverMetric):
        yield from _enumerate_matrices(s.q, s.m, s.n)
    elif isinstance(s, SumRank):
        gens = [list(_enumerate_matrices(s.q, m, n)) for n, m in s.blocks]
        yield from itertools.product(*gens)
    elif isinstance(s, Subspace):
        for k in s.dims:
            yield from _enumerate_subspaces(s.q, s.n, k)
    elif isinstance(s, Insdel):
        yield from itertools.product(range(s.v), repeat=s.n)
    elif isinstance(s, Permutation):
        yield from itertools.permutations(range(1, s.n + 1))
    else:
        raise TypeError(f"unknown space {s!r}")


def _enumerate_matrices(q: int, m: int, n: int):
    # m rows x n cols, row-major lexicographic
    for flat in itertools.product(range(q), repeat=m * n):
        yield tuple(flat[i * n : (i + 1) * n] for i in range(m))


def _enumerate_subspaces(q: int, n: int, k: int):
    """All k-dim subspaces of F_q^n as RREF basis matrices, each exactly once."""
    for pivots in itertools.combinations(range(n), k):
        free_pos = []
        pivset = set(pivots)
        for i, p in enumerate(pivots):
            for j in range(p + 1, n):
                if j not in pivset:
                    free_pos.append((i, j))
        for vals in itertools.product(range(q), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free_pos, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


# ------------------------------------------------------------ ball volume


def _rank_count(q: int, m: int, n: int, r: int) -> int:
    # number of m x n matrices over F_q of rank exactly r
    if r < 0 or r > min(m, n):
        return 0
    prod = 1
    for j in range(r):
        prod *= q**m - q**j
    return gaussian_binomial(n, r, q) * prod


def _sumrank_sphere_counts(s: SumRank, rmax: int) -> list[int]:
    # counts[w] = number of block tuples with sum of ranks == w, w <= rmax
    counts = [1] + [0] * rmax
    for n, m in s.blocks:
        blk = [_rank_count(s.q, m, n, r) for r in range(min(n, rmax) + 1)]
        new = [0] * (rmax + 1)
        for w, c in enumerate(counts):
            if c:
                for r, b in enumerate(blk):
                    if w + r <= rmax:
                        new[w + r] += c * b
        counts = new
    return counts


def default_center(s: SpaceSpec):
    """A canonical center for center-transitive kinds."""
    if isinstance(s, (Hamming, PairMetric)):
        return (0,) * s.n
    if isinstance(s, (Rank, CoverMetric)):
        return tuple((0,) * s.n for _ in range(s.m))
    if isinstance(s, SumRank):
        return tuple(tuple((0,) * n for _ in range(m)) for n, m in s.blocks)
    if isinstance(s, Permutation):
        return tuple(range(1, s.n + 1))
    if isinstance(s, Subspace) and len(s.dims) == 1:
        k = s.dims[0]
        return tuple(tuple(1 if j == i else 0 for j in range(s.n)) for i in range(k))
    return None


def ball_volume(s: SpaceSpec, r: int, center=None, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exact number of points at distance <= r from the center.

    Hamming, rank and sum-rank spaces use closed formulas; other kinds are
    counted exhaustively.  Center-dependent kinds (mixed-dimension subspace
    spaces, insdel) require an explicit center.
    """
    if r < 0:
        raise ValueError("radius must be nonnegative")
    if isinstance(s, Hamming):
        return sum(binomial(s.n, j) * (s.q - 1) ** j for j in range(min(r, s.n) + 1))
    if isinstance(s, Rank):
        return sum(_rank_count(s.q, s.m, s.n, j) for j in range(min(r, s.n) + 1))
    if isinstance(s, SumRank):
        return sum(_sumrank_sphere_counts(s, min(r, s.diameter)))
    if center is None:
        center = default_center(s)
        if center is None:
            raise CenterRequiredError(f"ball volume is center-dependent for {s!r}")
    return sum(1 for p in enumerate_space(s, cap) if distance(s, center, p) <= r)
