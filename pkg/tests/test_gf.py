import pytest

from ldbound.gf import factor_prime_power, field, is_prime_power, mat_rank, \
    null_space, rref


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    gf = field(q)
    elems = range(q)
    for a in elems:
        assert gf.add(a, 0) == a
        assert gf.mul(a, 1) == a
        assert gf.add(a, gf.neg(a)) == 0
        if a != 0:
            assert gf.mul(a, gf.inv(a)) == 1
    # associativity / distributivity on a sample
    sample = list(elems)[: min(q, 6)]
    for a in sample:
        for b in sample:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
            for c in sample:
                assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


def test_multiplicative_group_cyclic():
    for q in (4, 8, 9):
        gf = field(q)
        seen = set()
        x = 1
        g = gf.p  # the polynomial x generates by construction
        for _ in range(q - 1):
            seen.add(x)
            x = gf.mul(x, g)
        assert seen == set(range(1, q))


def test_prime_power_detection():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(49) == (7, 2)
    assert is_prime_power(81) and not is_prime_power(6) and not is_prime_power(1)


def test_rank_and_rref():
    gf = field(2)
    rows = [(1, 0, 1), (0, 1, 1), (1, 1, 0)]
    assert mat_rank(rows, gf) == 2
    reduced, pivots = rref(rows, gf)
    assert pivots == (0, 1)
    assert reduced == ((1, 0, 1), (0, 1, 1))


def test_null_space_orthogonality():
    for q in (2, 3, 4):
        gf = field(q)
        rows = [(1, 2 % q, 0, 1), (0, 1, 1, 1)]
        basis = null_space(rows, gf, 4)
        assert len(basis) == 2
        for v in basis:
            for r in rows:
                acc = 0
                for a, b in zip(r, v):
                    acc = gf.add(acc, gf.mul(a, b))
                assert acc == 0
