import math
from fractions import Fraction

import pytest

from ldbound.exactmath import (
    binomial,
    gamma_q,
    gaussian_binomial,
    krawtchouk_eval,
    krawtchouk_eval_int,
    krawtchouk_smallest_root,
    q_entropy,
    q_entropy_inverse,
)


def test_binomial_matches_pascal():
    for n in range(12):
        for k in range(n + 1):
            if 0 < k:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_gaussian_binomial_counts_subspaces():
    # recursion [n k]_q = q^k [n-1 k]_q + [n-1 k-1]_q
    for q in (2, 3, 4):
        for n in range(1, 8):
            for k in range(1, n):
                assert gaussian_binomial(n, k, q) == (
                    q**k * gaussian_binomial(n - 1, k, q)
                    + gaussian_binomial(n - 1, k - 1, q)
                )
    assert gaussian_binomial(4, 2, 2) == 35
    with pytest.raises(ValueError):
        gaussian_binomial(4, 5, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(4, 2, 6)


def test_q_entropy_endpoints_and_inverse():
    for q in (2, 3, 5, 8):
        assert q_entropy(q, 0.0) == 0.0
        assert abs(q_entropy(q, (q - 1) / q) - 1.0) < 1e-12
        for y in (0.1, 0.35, 0.72, 0.95):
            x = q_entropy_inverse(q, y)
            assert abs(q_entropy(q, x) - y) < 1e-9


def test_krawtchouk_orthogonality_and_generating_function():
    # sum_x C(n,x)(q-1)^x K_k(x) K_l(x) = q^n (q-1)^k C(n,k) delta_{kl}
    q, n = 3, 6
    for k in range(n + 1):
        for l in range(k, n + 1):
            total = sum(
                binomial(n, x) * (q - 1) ** x
                * krawtchouk_eval_int(k, q, n, x)
                * krawtchouk_eval_int(l, q, n, x)
                for x in range(n + 1)
            )
            expect = q**n * (q - 1) ** k * binomial(n, k) if k == l else 0
            assert total == expect


def test_krawtchouk_rational_point():
    v = krawtchouk_eval(2, 2, 4, Fraction(1, 2))
    # K_2(x,2,4) = 2x^2 - 8x + 6 at x = 1/2 -> 5/2
    assert v == Fraction(5, 2)


def test_krawtchouk_smallest_root_binary_quadratic():
    # K_2(x,2,4) = 2x^2-8x+6 has roots 1 and 3
    assert abs(krawtchouk_smallest_root(2, 2, 4) - 1.0) < 1e-9
    # degree 1: K_1(x,q,n) = n(q-1) - qx, root n(q-1)/q
    assert abs(krawtchouk_smallest_root(1, 3, 6) - 4.0) < 1e-9
    with pytest.raises(ValueError):
        krawtchouk_smallest_root(0, 2, 4)


def test_gamma_q_paper_values():
    assert round(gamma_q(2), 3) == 3.463
    assert round(gamma_q(3), 3) == 1.785
    assert round(gamma_q(4), 3) == 1.452
    # partial products are increasing and below the limit
    assert gamma_q(2) > 1 / (1 - 0.5) / (1 - 0.25)


def test_gamma_q_against_direct_product():
    for q in (2, 3, 5):
        direct = math.prod(1 / (1 - q**-i) for i in range(1, 200))
        assert abs(gamma_q(q) - direct) < 1e-12
