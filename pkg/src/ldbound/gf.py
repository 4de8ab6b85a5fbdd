"""Finite field arithmetic for prime powers q <= 512.

Elements are integers in [0, q).  For a prime power q = p^k the integer's
base-p digits are the coefficients of a polynomial over F_p (digit i is the
coefficient of x^i).  Prime fields use modular arithmetic directly;
extension fields use log/antilog tables built from a primitive polynomial.

The primitive polynomial for each extension field is found by a
deterministic search (smallest monic polynomial, in the integer encoding
above, whose root x generates the multiplicative group), so the element
encoding is stable across runs and platforms.
"""

from __future__ import annotations

from functools import lru_cache

MAX_Q = 512


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power >= 2")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"q={q} is not a prime power")
            return p, k
    raise ValueError(f"q={q} is not a prime power")


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
        return True
    except ValueError:
        return False


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    # modulus is monic of degree k; result reduced to degree < k
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    return prod[:k] + [0] * max(0, k - len(prod))


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _find_primitive_poly(p: int, k: int) -> list[int]:
    """Smallest monic degree-k polynomial over F_p with x a primitive root."""
    q = p**k
    for low in range(1, q):
        mod = _digits(low, p, k) + [1]  # monic
        # order of x modulo mod must be q-1
        xpoly = ([0, 1] + [0] * (k - 2))[:k]
        cur = list(xpoly)
        order = 1
        one = [1] + [0] * (k - 1)
        seen_one = cur == one
        while not seen_one and order <= q - 1:
            cur = _poly_mul_mod(cur, xpoly, mod, p)
            order += 1
            seen_one = cur == one
        if seen_one and order == q - 1:
            return mod
    raise RuntimeError(f"no primitive polynomial found for GF({p}^{k})")


class GF:
    """Arithmetic in GF(q) on integer-encoded elements."""

    def __init__(self, q: int):
        if q > MAX_Q:
            raise ValueError(f"q={q} exceeds supported maximum {MAX_Q}")
        self.q = q
        self.p, self.k = factor_prime_power(q)
        self.prime = self.k == 1
        if not self.prime:
            mod = _find_primitive_poly(self.p, self.k)
            self.modulus = mod
            exp = [0] * (q - 1)
            cur = [1] + [0] * (self.k - 1)
            xpoly = ([0, 1] + [0] * (self.k - 2))[: self.k]
            for i in range(q - 1):
                exp[i] = _undigits(cur, self.p)
                cur = _poly_mul_mod(cur, xpoly, mod, self.p)
            log = [0] * q
            for i, v in enumerate(exp):
                log[v] = i
            self._exp = exp
            self._log = log

    def add(self, a: int, b: int) -> int:
        if self.prime:
            return (a + b) % self.p
        p, k = self.p, self.k
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)

    def neg(self, a: int) -> int:
        if self.prime:
            return (-a) % self.p
        p, k = self.p, self.k
        return _undigits([(-x) % p for x in _digits(a, p, k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.prime:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF")
        if self.prime:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.prime:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def mat_rank(rows, gf: GF) -> int:
    """Rank of a matrix (iterable of row tuples) over GF(q)."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = gf.inv(mat[rank][col])
        mat[rank] = [gf.mul(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [gf.sub(v, gf.mul(c, w)) for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def rref(rows, gf: GF) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form over GF(q).

    Returns (nonzero rows, pivot column indices).
    """
    mat = [list(r) for r in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = gf.inv(mat[rank][col])
        mat[rank] = [gf.mul(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [gf.sub(v, gf.mul(c, w)) for v, w in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(r) for r in mat[:rank]), tuple(pivots)


def null_space(rows, gf: GF, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Basis (RREF) of the right null space of the matrix over GF(q)."""
    reduced, pivots = rref(rows, gf)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for i, pc in enumerate(pivots):
            # pivot row i: x_pc = -sum over free of coeff * x_free
            vec[pc] = gf.neg(reduced[i][f])
        basis.append(tuple(vec))
    reduced_basis, _ = rref(basis, gf)
    return reduced_basis
