"""Finding a whole cube after throwing sets away.

Deleting a chain from B_n, or an antichain, still leaves a copy of B_{n-1};
peeling a family one antichain at a time leaves B_{n-h}, with h its longest
chain.
"""
from vramsey import (antichain_removal_embedding, chain_removal_embedding, cube, format_set, from_members,
                     is_embedding, iterated_removal_embedding, mirsky_antichain_partition)


def show(name, n, family, emb):
    d = len(emb.images).bit_length() - 1
    ok = is_embedding(cube(d), emb.images) and not set(family) & set(emb.images)
    print(f"{name}: B_{d} inside B_{n} minus {[format_set(x) for x in family]}  valid={ok}")
    print("    images:", " ".join(format_set(x) for x in emb.images))


C = [0, from_members([1]), from_members([1, 2])]
show("chain", 3, C, chain_removal_embedding(3, C))
A = [from_members([1, 2]), from_members([3])]
show("antichain", 4, A, antichain_removal_embedding(4, A))
F = [from_members(s) for s in ([1], [2], [1, 2], [3, 4], [1, 3, 4])]
print("Mirsky layers:", [[format_set(x) for x in part] for part in mirsky_antichain_partition(F)])
show("iterated", 5, F, iterated_removal_embedding(5, F))
