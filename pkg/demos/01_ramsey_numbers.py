"""Boolean Ramsey numbers of V-shaped posets.

R(P_1, ..., P_k) is the least n such that every k-coloring of the subsets of
[n] has a copy of P_i in color i.  For k copies of V(m, n) the answer is
nk + 1: the layered coloring shows B_{nk} is not enough, and the exhaustive
search shows B_{nk+1} is.
"""
from vramsey import (coloring_layered_identical, find_monochromatic, make_v, ramsey_certificates,
                     SearchConfig)
from vramsey.render import to_dot

for (m, n, k) in [(1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 2, 2)]:
    targets = [make_v(m, n)] * k
    res = ramsey_certificates(targets, cfg=SearchConfig())
    layered = coloring_layered_identical(m, n, k)
    print(f"R_{k}(V({m},{n})) = {res.value}   (predicted {n * k + 1})")
    print(f"    upper bound: {res.upper.nodes_visited} search nodes on {res.upper.domain}, "
          f"symmetry {res.upper.symmetry}")
    print(f"    layered coloring of {layered.domain} good: {find_monochromatic(layered, targets) is None}")

# Without the layering a single color always holds V(1,1) on B_2:
from vramsey import Domain, constant_coloring
w = find_monochromatic(constant_coloring(Domain.full(2)), [make_v(1, 1)])
print("\none color on B_2 ->", w.to_json())

print("\nHasse diagram of the layered 2-coloring of B_2 (Graphviz):")
print(to_dot(Domain.full(2), coloring_layered_identical(1, 1, 2)))
