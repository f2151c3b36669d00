"""Finite target posets and their (strong or weak) embeddings into B_n."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import InvalidArguments, MalformedInput, NotFoundWithinBound, UnknownPattern
from .lattice import (Domain, MAX_EXHAUSTIVE_GROUND, format_set, is_subset, iter_bits,
                      lattice_tables)

STRONG = "strong"
WEAK = "weak"
MODES = (STRONG, WEAK)


@dataclass(frozen=True)
class Poset:
    """Elements ``0 .. size-1``; ``above[i]`` is the bitset of j with i < j."""

    size: int
    above: tuple[int, ...]
    label: str = "Custom"

    def __post_init__(self):
        object.__setattr__(self, "above", tuple(self.above))
        if len(self.above) != self.size:
            raise InvalidArguments("relation table does not match the element count")
        for i, ups in enumerate(self.above):
            if ups >> i & 1:
                raise InvalidArguments(f"element {i} is strictly above itself")
            if ups >> self.size:
                raise InvalidArguments("relation refers to missing elements")
            for j in iter_bits(ups):
                if self.above[j] >> i & 1:
                    raise InvalidArguments(f"{i} and {j} violate antisymmetry")
                if self.above[j] & ~ups:
                    raise InvalidArguments(f"relation is not transitive at {i} < {j}")

    @classmethod
    def from_relations(cls, size: int, pairs: Iterable[tuple[int, int]], label: str = "Custom") -> "Poset":
        """Transitive closure of the strict relations ``a < b`` in ``pairs``."""
        above = [0] * size
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise InvalidArguments(f"bad relation {a} < {b}")
            above[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(size):
                reach = above[i]
                for j in iter_bits(above[i]):
                    reach |= above[j]
                if reach != above[i]:
                    above[i] = reach
                    changed = True
        return cls(size, tuple(above), label)

    def lt(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j)

    def below(self, j: int) -> int:
        return sum(1 << i for i in range(self.size) if self.above[i] >> j & 1)

    def relation_count(self, i: int) -> int:
        return bin(self.above[i]).count("1") + bin(self.below(i)).count("1")

    def minimal_elements(self) -> list[int]:
        return [j for j in range(self.size) if not self.below(j)]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.size) if not self.above[i]]

    def height(self) -> int:
        if not self.size:
            return 0
        best = [1] * self.size
        for i in sorted(range(self.size), key=lambda t: bin(self.below(t)).count("1")):
            for j in iter_bits(self.above[i]):
                best[j] = max(best[j], best[i] + 1)
        return max(best)

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.size):
            for j in iter_bits(self.above[i]):
                if not any(self.above[t] >> j & 1 for t in iter_bits(self.above[i])):
                    out.append((i, j))
        return out

    def to_json(self) -> dict:
        return {"label": self.label, "size": self.size, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Poset":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(str(exc)) from exc
        try:
            size = int(data["size"])
            pairs = [(int(a), int(b)) for a, b in data.get("covers", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad poset JSON: {exc}") from exc
        return cls.from_relations(size, pairs, data.get("label", "Custom"))

    def __str__(self) -> str:
        return self.label


def make_v(m: int, n: int) -> Poset:
    """Root 0 below the chains 1 < ... < m and m+1 < ... < m+n."""
    if m < 1 or n < 1:
        raise InvalidArguments("V(m,n) needs m, n >= 1")
    pairs = []
    for branch in (range(1, m + 1), range(m + 1, m + n + 1)):
        prev = 0
        for b in branch:
            pairs.append((prev, b))
            prev = b
    return Poset.from_relations(m + n + 1, pairs, f"V({m},{n})")


def chain(k: int) -> Poset:
    if k < 1:
        raise InvalidArguments("chain needs k >= 1")
    return Poset.from_relations(k, [(i, i + 1) for i in range(k - 1)], f"C({k})")


def antichain(k: int) -> Poset:
    if k < 1:
        raise InvalidArguments("antichain needs k >= 1")
    return Poset(k, (0,) * k, f"A({k})")


def cube(m: int) -> Poset:
    """B_m as an abstract poset; element ``i`` is the mask ``i``."""
    if m < 0:
        raise InvalidArguments("cube needs m >= 0")
    t = lattice_tables(m)
    return Poset(1 << m, t.up, f"B({m})")


def induced(domain: Domain) -> Poset:
    """The subposet of B_n on the present elements, in level order."""
    elems = domain.elements()
    index = {x: i for i, x in enumerate(elems)}
    above = [0] * len(elems)
    for x, i in index.items():
        for y, j in index.items():
            if x != y and is_subset(x, y):
                above[i] |= 1 << j
    return Poset(len(elems), tuple(above), f"Induced({domain})")


def dual(P: Poset) -> Poset:
    above = tuple(P.below(i) for i in range(P.size))
    label = P.label[5:-1] if P.label.startswith("dual(") else f"dual({P.label})"
    return Poset(P.size, above, label)


_PATTERN_RE = re.compile(r"\s*([VCAB])\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*")


def parse_pattern(text: str) -> Poset:
    """``V(m,n)``, ``C(k)``, ``A(k)`` or ``B(m)``."""
    match = _PATTERN_RE.fullmatch(text)
    if not match:
        raise UnknownPattern(f"unknown pattern literal {text!r}")
    kind, a, b = match.group(1), int(match.group(2)), match.group(3)
    if (kind == "V") != (b is not None):
        raise UnknownPattern(f"wrong arity in {text!r}")
    try:
        if kind == "V":
            return make_v(a, int(b))
        return {"C": chain, "A": antichain, "B": cube}[kind](a)
    except InvalidArguments as exc:
        raise UnknownPattern(str(exc)) from exc


def parse_pattern_list(text: str) -> list[Poset]:
    items = re.findall(r"[^,()]*\([^)]*\)", text)
    rest = re.sub(r"[^,()]*\([^)]*\)", "", text).replace(",", "").strip()
    if not items or rest:
        raise UnknownPattern(f"cannot parse pattern list {text!r}")
    return [parse_pattern(item) for item in items]


# --- embeddings ---------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingMap:
    """``images[p]`` is the mask assigned to pattern element ``p``."""

    images: tuple[int, ...]
    mode: str = STRONG

    def to_json(self) -> dict:
        return {"mode": self.mode, "images": [format_set(x) for x in self.images]}


def is_embedding(P: Poset, images: Sequence[int], mode: str = STRONG,
                 domain: Optional[Domain] = None) -> bool:
    """Direct pairwise check of an embedding; independent of the search code."""
    if mode not in MODES:
        raise InvalidArguments(f"unknown mode {mode!r}")
    if len(images) != P.size or len(set(images)) != P.size:
        return False
    if domain is not None and not all(domain.present(x) for x in images):
        return False
    for a in range(P.size):
        for b in range(P.size):
            if a == b:
                continue
            ordered = is_subset(images[a], images[b])
            if P.lt(a, b) and not ordered:
                return False
            if mode == STRONG and ordered and not P.lt(a, b):
                return False
    return True


# Relation codes used by the compiled search plans.
_ABOVE, _BELOW, _INCOMPARABLE, _DISTINCT = 0, 1, 2, 3


@lru_cache(maxsize=None)
def _plan(P: Poset, mode: str, first: Optional[int]) -> tuple[tuple[int, ...], tuple[tuple[tuple[int, int], ...], ...]]:
    """Element order (most constrained first) and per-step constraints."""
    rank = [bin(P.below(i)).count("1") for i in range(P.size)]
    rest = list(range(P.size))
    order: list[int] = []
    if first is not None:
        order.append(first)
        rest.remove(first)
    while rest:
        def key(q):
            tied = sum(1 for r in order if P.lt(r, q) or P.lt(q, r))
            return (-tied, -P.relation_count(q), rank[q], q)
        q = min(rest, key=key)
        order.append(q)
        rest.remove(q)
    steps = []
    for pos, q in enumerate(order):
        cons = []
        for j in range(pos):
            r = order[j]
            if P.lt(r, q):
                cons.append((j, _ABOVE))
            elif P.lt(q, r):
                cons.append((j, _BELOW))
            else:
                cons.append((j, _INCOMPARABLE if mode == STRONG else _DISTINCT))
        steps.append(tuple(cons))
    return tuple(order), tuple(steps)


def search_embedding(P: Poset, n: int, allowed: int, mode: str = STRONG, *,
                     pinned: Optional[tuple[int, int]] = None,
                     color_of: Optional[Sequence[int]] = None,
                     classes: Optional[dict[int, int]] = None) -> Optional[tuple[int, ...]]:
    """Backtracking embedding of ``P`` into the elements of B_n in ``allowed``.

    ``pinned=(p, x)`` forces pattern element ``p`` onto mask ``x``.  With
    ``color_of``/``classes`` the images must carry pairwise distinct colors.
    Candidates are tried lowest mask first, so the result is the least
    embedding in the plan's element order.
    """
    if P.size == 0:
        return ()
    t = lattice_tables(n)
    up, down, comp = t.up, t.down, t.comparable
    first = pinned[0] if pinned else None
    order, steps = _plan(P, mode, first)
    imgs: list[int] = []
    rainbow = color_of is not None
    used_colors = 0  # union of color classes already used

    def rec(pos: int) -> bool:
        nonlocal used_colors
        if pos == len(order):
            return True
        if pos == 0 and pinned is not None:
            cand = allowed & (1 << pinned[1])
        else:
            cand = allowed
        for j, rel in steps[pos]:
            y = imgs[j]
            if rel == _ABOVE:
                cand &= up[y]
            elif rel == _BELOW:
                cand &= down[y]
            elif rel == _INCOMPARABLE:
                cand &= ~comp[y]
            else:
                cand &= ~(1 << y)
        if rainbow:
            cand &= ~used_colors
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            imgs.append(x)
            if rainbow:
                saved = used_colors
                used_colors |= classes[color_of[x]]
            if rec(pos + 1):
                return True
            if rainbow:
                used_colors = saved
            imgs.pop()
            cand ^= low
        return False

    if not rec(0):
        return None
    images = [0] * P.size
    for q, x in zip(order, imgs):
        images[q] = x
    return tuple(images)


def embed(P: Poset, D: Domain, mode: str = STRONG) -> Optional[EmbeddingMap]:
    """An embedding of ``P`` into the domain, or ``None`` if there is none."""
    if mode not in MODES:
        raise InvalidArguments(f"unknown mode {mode!r}")
    if P.size > len(D):
        return None
    images = search_embedding(P, D.n, D.bitset(), mode)
    return None if images is None else EmbeddingMap(images, mode)


def dim2(P: Poset, n_max: int = MAX_EXHAUSTIVE_GROUND) -> int:
    """Least n such that B_n contains P as a (strong) subposet."""
    for n in range(n_max + 1):
        if P.size > 1 << n or P.height() > n + 1:
            continue
        if embed(P, Domain.full(n)) is not None:
            return n
    raise NotFoundWithinBound(f"{P} does not embed in B_{n_max}")


def extremal_count(P: Poset) -> int:
    """Number of global extrema (minimum, maximum) present in P."""
    if P.size == 0:
        raise InvalidArguments("empty poset")
    everything = (1 << P.size) - 1
    has_min = any(P.above[i] | 1 << i == everything for i in range(P.size))
    has_max = any(P.below(j) | 1 << j == everything for j in range(P.size))
    return int(has_min) + int(has_max)


def antichain_dim2(k: int) -> int:
    """min{m : C(m, floor(m/2)) >= k}."""
    if k < 1:
        raise InvalidArguments("k >= 1 required")
    m = 0
    while comb(m, m // 2) < k:
        m += 1
    return m


# --- isomorphism --------------------------------------------------------------

CANONICAL_LIMIT = 8


def canonical_form(P: Poset) -> tuple[int, ...]:
    """Lexicographically least relabelled ``above`` table; sizes <= 8 only."""
    if P.size > CANONICAL_LIMIT:
        raise InvalidArguments("canonical_form is limited to 8 elements")
    best = None
    for perm in permutations(range(P.size)):
        table = [0] * P.size
        for i in range(P.size):
            bits = 0
            for j in iter_bits(P.above[i]):
                bits |= 1 << perm[j]
            table[perm[i]] = bits
        cand = tuple(table)
        if best is None or cand < best:
            best = cand
    return best or ()


def find_isomorphism(P: Poset, Q: Poset) -> Optional[tuple[int, ...]]:
    """Bijection ``f`` with ``a < b`` iff ``f(a) < f(b)``, by backtracking."""
    if P.size != Q.size:
        return None

    def signature(R, i):
        return (bin(R.above[i]).count("1"), bin(R.below(i)).count("1"))

    sp = [signature(P, i) for i in range(P.size)]
    sq = [signature(Q, i) for i in range(Q.size)]
    if sorted(sp) != sorted(sq):
        return None
    order = sorted(range(P.size), key=lambda i: (-P.relation_count(i), i))
    f = [-1] * P.size
    taken = [False] * Q.size

    def rec(pos):
        if pos == len(order):
            return True
        a = order[pos]
        for b in range(Q.size):
            if taken[b] or sq[b] != sp[a]:
                continue
            ok = True
            for c in order[:pos]:
                d = f[c]
                if P.lt(a, c) != Q.lt(b, d) or P.lt(c, a) != Q.lt(d, b):
                    ok = False
                    break
            if ok:
                f[a] = b
                taken[b] = True
                if rec(pos + 1):
                    return True
                taken[b] = False
        f[a] = -1
        return False

    return tuple(f) if rec(0) else None


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    if P.size != Q.size:
        return False
    if P.size <= CANONICAL_LIMIT:
        return canonical_form(P) == canonical_form(Q)
    return find_isomorphism(P, Q) is not None
