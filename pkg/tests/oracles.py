"""Independent reference implementations shared by the test modules."""
import itertools
from functools import lru_cache

import numpy as np

from vramsey.checker import find_v_in_class, is_good, is_good_rainbow
from vramsey.constructions import Coloring
from vramsey.lattice import from_members, full_set


def strong_cube_embedding(images, n):
    """Vectorised check that ``images`` is an order embedding of B_d into B_n."""
    imgs = np.asarray(images, dtype=np.int64)
    d = len(imgs).bit_length() - 1
    if len(imgs) != 1 << d or len(np.unique(imgs)) != len(imgs) or (imgs >> n).any():
        return False
    x = np.arange(1 << d, dtype=np.int64)
    dom = (x[:, None] & x[None, :]) == x[:, None]
    img = (imgs[:, None] & imgs[None, :]) == imgs[:, None]
    return bool((dom == img).all())


def height(fam):
    """Longest chain in a family of masks, by memoised recursion."""
    fam = list(set(fam))

    @lru_cache(maxsize=None)
    def longest_from(x):
        return 1 + max((longest_from(y) for y in fam if y != x and x & y == x), default=0)

    return max((longest_from(x) for x in fam), default=0)


def random_chain(rng, n):
    """A chain in B_n that does not hold both the empty set and [n]."""
    perm = rng.sample(range(1, n + 1), n)
    full = [from_members(perm[:i]) for i in range(n + 1)]
    pick = sorted(rng.sample(range(n + 1), rng.randint(0, n)))
    chain_ = [full[i] for i in pick]
    if 0 in chain_ and full_set(n) in chain_:
        chain_.remove(rng.choice([0, full_set(n)]))
    return chain_


def random_antichain(rng, n):
    fam = {rng.randrange(1 << n) for _ in range(rng.randint(0, 12))}
    return [x for x in fam if not any(y != x and y & x == y for y in fam)]


def random_family(rng, n, most=15):
    return {rng.randrange(1 << n) for _ in range(rng.randint(0, most))}


def good_coloring_exists(D, targets):
    """Plain enumeration of every k-coloring, judged by the checker alone."""
    elems = D.elements()
    k = len(targets)
    for colors in itertools.product(range(1, k + 1), repeat=len(elems)):
        table = [0] * (1 << D.n)
        for x, c in zip(elems, colors):
            table[x] = c
        if is_good(Coloring(D, tuple(table), k), targets):
            return True
    return False


def restricted_growth(length):
    def rec(prefix, top):
        if len(prefix) == length:
            yield prefix
            return
        for c in range(1, top + 2):
            yield from rec(prefix + [c], max(top, c))
    yield from rec([], 0)


def good_partition_coloring_exists(D, P, Q):
    elems = D.elements()
    for colors in restricted_growth(len(elems)):
        table = [0] * (1 << D.n)
        for x, c in zip(elems, colors):
            table[x] = c
        if is_good_rainbow(Coloring(D, tuple(table)), P, Q):
            return True
    return False


def lemma_by_enumeration(m, n):
    """(holds, number of colorings meeting the hypothesis) over all 2-colorings of B_{m+n+1}."""
    N = m + n + 1
    top = full_set(N)
    co = [top & ~(1 << i) for i in range(N)]
    everything = (1 << (1 << N)) - 1
    hyp = 0
    holds = True
    for bits in range(1 << (1 << N)):
        if not any((bits >> x & 1) == (bits & 1) for x in co):
            continue
        hyp += 1
        if find_v_in_class(N, bits, m, m) is None and find_v_in_class(N, everything & ~bits, n, n) is None:
            holds = False
    return holds, hyp


def qualifying_pairs(n=4):
    """Pairs {S1, S2} of distinct nonempty proper subsets with S1 = S2^c or |S1| = |S2| = 2."""
    top = full_set(n)
    return {(a, b) for a, b in itertools.combinations(range(1, top), 2)
            if a == top & ~b or bin(a).count("1") == bin(b).count("1") == 2}
