"""Rank-metric covering exponents and the sum-rank entropy curve.

The covering exponent for m x n matrices at radius rho comes from a
small dynamic program over column-block compositions.  The closed-form
square-matrix expression disagrees with the optimized exponent already
at m = n = 4, rho = 2; the engine reports both and flags the mismatch.
"""

import numpy as np

from ldbound.bounds import (
    BoundQuery,
    bound_rank,
    gy_exponent,
    sumrank_entropy,
    sumrank_entropy_lower,
)
from ldbound.spaces import Rank

# The 6x4 binary matrices at radius 2: exponent 8, i.e. K <= 256.
exp, witness = gy_exponent(2, 6, 4, 2)
print(f"gy_exponent(2, 6, 4, 2) = {exp}  (cover size <= 2^{exp} = {2**exp})")
print(f"optimal block composition (n_i, rho_i): {witness}\n")

# The flagged discrepancy at m = n = 4, rho = 2.
for r in bound_rank(BoundQuery(Rank(2, 4, 4), 2, 1)):
    if r.applicable and r.kind == "size-upper":
        flag = f"  <-- {r.note}" if r.note else ""
        print(f"{r.name:28s} {r.value:8d}{flag}")

# Sum-rank entropy against its closed-form lower bound.
print("\nsum-rank entropy, q=2, n=m=4:")
print(f"{'rho':>4s} {'H(rho)':>10s} {'lower':>10s}")
for rho in np.arange(0.5, 4.0, 0.5):
    h = sumrank_entropy(2, 4, 4, float(rho))
    lo = sumrank_entropy_lower(2, 4, 4, float(rho))
    print(f"{rho:4.1f} {h:10.6f} {lo:10.6f}")
