"""Walk through the Hamming-metric bound table for a flagship instance.

A (3, L) list-decodable binary code of length 16 is at most L times the
size of a radius-3 covering code.  The best tabulated covering code has
192 codewords, so at L=2 the covering argument gives 384 -- far below
the generalized Singleton value of 8192.
"""

from ldbound.bounds import BoundQuery, best_size_upper, bound_hamming
from ldbound.spaces import Hamming

query = BoundQuery(Hamming(2, 16), radius=3, L=2)
results = bound_hamming(query)

print(f"query: q=2, n=16, d_list=3, L=2\n")
print(f"{'bound':32s} {'kind':11s} {'value':>14s}  citation")
for r in sorted(results, key=lambda r: (not r.applicable, r.name)):
    val = str(r.value) if r.applicable else f"n/a ({r.reason})"
    print(f"{r.name:32s} {r.kind:11s} {val:>14s}  {r.citation}")
    if r.note:
        print(f"{'':32s} note: {r.note}")

best = best_size_upper(results)
print(f"\nminimum size-upper: {best.value} from {best.name}")

# How the gap behaves as the radius grows: the covering bound tracks
# the table where entries exist and falls back to L * q^(n-d) beyond.
print("\nradius sweep (L=2):")
print(f"{'d':>3s} {'covering':>10s} {'singleton':>10s}")
for d in range(1, 9):
    res = bound_hamming(BoundQuery(Hamming(2, 16), d, 2))
    by = {r.name: r for r in res}
    cov = by["table-covering"].value
    sing = by["generalized-singleton"]
    print(f"{d:3d} {cov:10d} {str(sing.value if sing.applicable else '-'):>10s}")
