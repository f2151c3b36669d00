"""Rainbow Ramsey numbers against antichains.

RR(P, Q) is the least n such that every coloring of B_n, with any number of
colors, holds a monochromatic P or a copy of Q in pairwise distinct colors.
For Q = A(2) a good coloring must make every two differently colored sets
comparable, and the answer is dim2(P) + m(P).
"""
from vramsey import (antichain, chain, coloring_prop8_lower, coloring_rainbow_lower, compute_rainbow_ramsey,
                     cube, dim2, extremal_count, find_monochromatic_any, find_rainbow, make_v)

for P in (make_v(1, 1), make_v(1, 2), chain(3), cube(2)):
    value = compute_rainbow_ramsey(P, antichain(2))
    c = coloring_prop8_lower(P)
    print(f"RR({P}, A(2)) = {value}   dim2 + m = {dim2(P) + extremal_count(P)};  "
          f"lower coloring of B_{c.n} has rainbow A(2): {find_rainbow(c, antichain(2)) is not None}")

# Larger antichains: the size-band coloring of B_{n(k-1)+1}.
c = coloring_rainbow_lower(2, 3)
print(f"\nB_{c.n} banded coloring: mono V(1,2) {find_monochromatic_any(c, make_v(1, 2)) is not None}, "
      f"rainbow A(3) {find_rainbow(c, antichain(3)) is not None}")
