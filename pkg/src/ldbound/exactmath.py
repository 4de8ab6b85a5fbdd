"""Exact and high-precision scalar building blocks.

Big-integer combinatorics (binomial / Gaussian binomial), q-ary entropy
and its inverse, Krawtchouk polynomials with smallest-positive-root
extraction, and the gamma_q constant.  Counting functions never touch
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gf import is_prime_power


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n or k < 0."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (q-ary Gauss coefficient)."""
    if q < 2 or not is_prime_power(q):
        raise ValueError(f"q={q} must be a prime power >= 2")
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def q_entropy(q: int, x: float) -> float:
    """q-ary entropy H_q(x) on [0, (q-1)/q], with 0*log 0 = 0."""
    if q < 2 or not is_prime_power(q):
        raise ValueError(f"q={q} must be a prime power >= 2")
    hi = (q - 1) / q
    if x < -1e-15 or x > hi + 1e-15:
        raise ValueError(f"x={x} outside [0, {(q - 1)}/{q}]")
    x = min(max(x, 0.0), hi)
    if x == 0.0:
        return 0.0
    lq = math.log(q)
    h = x * math.log(q - 1) / lq - x * math.log(x) / lq
    if x < 1.0:
        h -= (1 - x) * math.log(1 - x) / lq
    return h


def q_entropy_inverse(q: int, y: float, tol: float = 1e-12) -> float:
    """The unique x in [0, (q-1)/q] with H_q(x) = y, by bisection."""
    if y < -1e-15 or y > 1 + 1e-15:
        raise ValueError(f"y={y} outside [0, 1]")
    y = min(max(y, 0.0), 1.0)
    lo, hi = 0.0, (q - 1) / q
    if y >= 1.0:
        return hi
    if y <= 0.0:
        return 0.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if q_entropy(q, mid) < y:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class KrawtchoukParams:
    k: int
    q: int
    n: int

    def __post_init__(self):
        if self.k < 0 or self.n < 1 or self.k > self.n:
            raise ValueError(f"need 0 <= k <= n, n >= 1: {self}")
        if not is_prime_power(self.q):
            raise ValueError(f"q={self.q} must be a prime power")


def _falling_binomial(x: Fraction, j: int) -> Fraction:
    # C(x, j) = x(x-1)...(x-j+1)/j! for rational x
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    return num / math.factorial(j)


def krawtchouk_eval(k: int, q: int, n: int, x) -> Fraction:
    """K_k(x) = sum_j (-1)^j C(x,j) C(n-x,k-j) (q-1)^{k-j}, exact rational.

    x may be an integer or a Fraction (falling-factorial extension).
    """
    KrawtchoukParams(k, q, n)
    xf = Fraction(x)
    total = Fraction(0)
    for j in range(k + 1):
        term = _falling_binomial(xf, j) * _falling_binomial(n - xf, k - j) * (q - 1) ** (k - j)
        total += -term if j % 2 else term
    return total


def krawtchouk_eval_int(k: int, q: int, n: int, x: int) -> int:
    """Exact integer value of K_k at an integer point."""
    v = krawtchouk_eval(k, q, n, x)
    assert v.denominator == 1
    return int(v)


def _krawtchouk_real(k: int, q: int, n: int, x: float) -> float:
    total = 0.0
    for j in range(k + 1):
        t = 1.0
        for i in range(j):
            t *= (x - i) / (i + 1)
        for i in range(k - j):
            t *= (n - x - i) / (i + 1)
        t *= (q - 1) ** (k - j)
        total += -t if j % 2 else t
    return total


def krawtchouk_smallest_root(k: int, q: int, n: int, tol: float = 1e-9) -> float:
    """Smallest positive root x(k, q, n) of K_k(x, q, n).

    Scans integer x = 0..n for the first sign change of the exact value,
    then bisects the real falling-factorial extension.
    """
    if k < 1:
        raise ValueError("degree k must be >= 1")
    KrawtchoukParams(k, q, n)
    prev = krawtchouk_eval_int(k, q, n, 0)
    if prev == 0:
        return 0.0
    for x in range(1, n + 1):
        cur = krawtchouk_eval_int(k, q, n, x)
        if cur == 0:
            return float(x)
        if (prev > 0) != (cur > 0):
            lo, hi = float(x - 1), float(x)
            flo = _krawtchouk_real(k, q, n, lo)
            while hi - lo > tol:
                mid = (lo + hi) / 2
                fmid = _krawtchouk_real(k, q, n, mid)
                if fmid == 0.0:
                    return mid
                if (flo > 0) == (fmid > 0):
                    lo, flo = mid, fmid
                else:
                    hi = mid
            return (lo + hi) / 2
        prev = cur
    raise ValueError(f"K_{k}(x,{q},{n}) has no positive root on [0, {n}]")


def gamma_q(q: int, tol: float = 1e-15) -> float:
    """gamma_q = prod_{i>=1} (1 - q^-i)^-1, truncated when factors reach 1."""
    if q < 2:
        raise ValueError("q must be >= 2")
    prod = 1.0
    i = 1
    while True:
        f = 1.0 / (1.0 - q ** (-i))
        prod *= f
        if abs(f - 1.0) < tol:
            return prod
        i += 1
