"""Minimal Ramsey sub-posets of B_n.

A sub-domain is Ramsey for the targets when every coloring has the required
copy, and minimal when deleting any one more set breaks that.
"""
from vramsey import (Domain, classify_pair_removals, coloring_minimal_theorem3, enumerate_minimal_ramsey,
                     format_set, is_good, is_minimal_ramsey, make_v)

V11, V22 = make_v(1, 1), make_v(2, 2)

print("minimal for two copies of V(1,1) inside B_3:")
for d in enumerate_minimal_ramsey(3, [V11, V11]):
    print("   ", d)

print("B_4 - {[4]} minimal for three copies:", is_minimal_ramsey(Domain(4, frozenset({15})), [V11] * 3))

# Removing anything other than the top leaves a good coloring behind.
for S in range(7):
    c = coloring_minimal_theorem3(2, S)
    print(f"    B_3 - {{{format_set(S)}}}: explicit good coloring verified = {is_good(c, [V11, V11])}")

print("\nminimal for (V(1,1), V(2,2)) inside B_4, up to relabelling the ground set:")
for d in enumerate_minimal_ramsey(4, [V11, V22]):
    print("   ", d)

pc = classify_pair_removals(4, [V11, V22])
print(f"{len(pc.ramsey_pairs())} of {len(pc.pairs)} pairs {{S1, S2}} leave a Ramsey domain B_4 - {{S1, S2, [4]}}")
print("diagonal S1 = S2 (B_4 - {S, [4]}): Ramsey for all S, minimal for none:",
      all(r for r, _ in pc.diagonal.values()) and not any(m for _, m in pc.diagonal.values()))
