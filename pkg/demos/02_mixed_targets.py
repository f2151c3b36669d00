"""Different V shapes in different colors, and the lemma behind the upper bound.

R(V(m,m), V(n,n)) = m + n + 1.  The lower bound colors everything below
size m with color 1; the upper bound rests on a statement about 2-colorings
of B_{m+n+1} in which the empty set shares its color with some co-singleton.
"""
from vramsey import coloring_mixed, compute_ramsey, is_good, make_v, vmn_lemma_report

for m, n in [(1, 1), (1, 2), (2, 2)]:
    T = [make_v(m, m), make_v(n, n)]
    c = coloring_mixed(m, n)
    print(f"R(V({m},{m}), V({n},{n})) = {compute_ramsey(T)};  mixed coloring of B_{c.n} good: {is_good(c, T)}")

for m, n in [(1, 1), (1, 2), (2, 1)]:
    rep = vmn_lemma_report(m, n)
    print(f"lemma ({m},{n}): holds={rep.holds}, colorings covered={rep.colorings_covered}, "
          f"meeting the hypothesis={rep.hypothesis_colorings}")

# Weak copies: only order has to be kept, so fewer sets suffice.
from vramsey import as_targets
print("weak R(V(1,2), V(1,2)) =", compute_ramsey(as_targets([make_v(1, 2)] * 2, "weak")))
