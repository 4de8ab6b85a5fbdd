import itertools
import random

import pytest

from ldbound.spaces import (
    CenterRequiredError,
    CoverMetric,
    EnumerationCapError,
    Hamming,
    Insdel,
    PairMetric,
    Permutation,
    Rank,
    Subspace,
    SumRank,
    ball_volume,
    cover_weight_bruteforce,
    cover_weight_matching,
    const_dim_subspace,
    default_center,
    distance,
    enumerate_space,
    insdel_distance,
    pair_vector,
    space_size,
    subsequence_test,
)

SMALL_SPACES = [
    Hamming(2, 4),
    Hamming(3, 3),
    Rank(2, 2, 2),
    SumRank(2, ((1, 2), (1, 1))),
    const_dim_subspace(2, 4, 2, "S"),
    Subspace(2, 3, (1, 2), "S"),
    Subspace(2, 3, (1, 2), "I"),
    CoverMetric(2, 2, 2),
    PairMetric(2, 4),
    Insdel(2, 3),
    Permutation(4, "hamming"),
    Permutation(4, "chebyshev"),
]


@pytest.mark.parametrize("s", SMALL_SPACES, ids=repr)
def test_enumeration_size_and_metric_axioms(s):
    pts = list(enumerate_space(s))
    assert len(pts) == space_size(s)
    assert len(set(pts)) == len(pts)
    sample = pts if len(pts) <= 40 else random.Random(1).sample(pts, 40)
    for a in sample:
        assert distance(s, a, a) == 0
        for b in sample:
            d = distance(s, a, b)
            assert 0 <= d <= s.diameter
            assert d == distance(s, b, a)
            if a != b:
                assert d > 0
    for a, b, c in itertools.islice(itertools.product(sample[:12], repeat=3), 1728):
        assert distance(s, a, c) <= distance(s, a, b) + distance(s, b, c)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        list(enumerate_space(Hamming(2, 30), cap=2**10))


def test_insdel_vs_hamming():
    s = Insdel(2, 4)
    for a in itertools.product((0, 1), repeat=4):
        for b in itertools.product((0, 1), repeat=4):
            dh = sum(x != y for x, y in zip(a, b))
            assert insdel_distance(a, b) <= 2 * dh
            assert insdel_distance(a, b) % 2 == 0  # equal lengths
            assert distance(s, a, b) == insdel_distance(a, b)


def test_subsequence_test_matches_lcs():
    for n in range(1, 5):
        for a in itertools.product((0, 1), repeat=n):
            for b in itertools.product((0, 1), repeat=6):
                expect = insdel_distance(a, b) == 6 - n
                assert subsequence_test(a, b) == expect


def test_subspace_metric_relations():
    # (1/2) d_S <= d_I <= d_S over all subspaces of F_2^4
    ss = Subspace(2, 4, (1, 2, 3), "S")
    si = Subspace(2, 4, (1, 2, 3), "I")
    pts = list(enumerate_space(ss))
    for a, b in itertools.combinations(pts, 2):
        d_s = distance(ss, a, b)
        d_i = distance(si, a, b)
        assert d_i <= d_s <= 2 * d_i
    # constant dimension: the dimension gap vanishes, so d_S = 2 d_I
    cs = const_dim_subspace(2, 4, 2, "S")
    ci = const_dim_subspace(2, 4, 2, "I")
    cpts = list(enumerate_space(cs))
    assert len(cpts) == 35
    for a, b in itertools.combinations(cpts, 2):
        assert distance(cs, a, b) == 2 * distance(ci, a, b)


def test_pair_vector_and_sandwich():
    # d_H(x,y) <= d_pair(x,y) <= 2 d_H(x,y)
    s = PairMetric(3, 4)
    assert pair_vector((0, 1, 2, 0)) == ((0, 1), (1, 2), (2, 0), (0, 0))
    pts = list(enumerate_space(s))
    for a, b in itertools.islice(itertools.combinations(pts, 2), 2000):
        dh = sum(x != y for x, y in zip(a, b))
        dp = distance(s, a, b)
        assert dh <= dp <= 2 * dh


def test_cover_weight_matching_vs_bruteforce_small():
    for q, dim in ((2, 2), (3, 2), (2, 3), (3, 3)):
        for flat in itertools.product(range(q), repeat=dim * dim):
            mat = tuple(flat[i * dim : (i + 1) * dim] for i in range(dim))
            assert cover_weight_matching(mat) == cover_weight_bruteforce(mat)


def test_cover_weight_random_4x4():
    rng = random.Random(7)
    for _ in range(200):
        mat = tuple(tuple(rng.randrange(2) for _ in range(4)) for _ in range(4))
        assert cover_weight_matching(mat) == cover_weight_bruteforce(mat)


@pytest.mark.parametrize("s", SMALL_SPACES, ids=repr)
def test_ball_volume_telescopes_to_space_size(s):
    center = default_center(s)
    try:
        full = ball_volume(s, s.diameter, center)
    except CenterRequiredError:
        center = next(iter(enumerate_space(s)))
        full = ball_volume(s, s.diameter, center)
    assert full == space_size(s)
    prev = 0
    for r in range(s.diameter + 1):
        cur = ball_volume(s, r, center)
        assert cur >= max(prev, 1)
        prev = cur


def test_ball_volume_formula_vs_exhaustive():
    for s in (Hamming(3, 3), Rank(2, 3, 2), SumRank(2, ((2, 2), (1, 1)))):
        pts = list(enumerate_space(s))
        c = default_center(s)
        for r in range(s.diameter + 1):
            direct = sum(1 for p in pts if distance(s, c, p) <= r)
            assert ball_volume(s, r) == direct


def test_rank_space_shapes():
    s = Rank(2, 3, 2)
    pts = list(enumerate_space(s))
    assert len(pts) == 2**6
    assert all(len(p) == 3 and len(p[0]) == 2 for p in pts)
    with pytest.raises(ValueError):
        Rank(2, 2, 3)  # m >= n required


def test_sumrank_block_ordering():
    with pytest.raises(ValueError):
        SumRank(2, ((1, 1), (1, 2)))  # m_i must be non-increasing
