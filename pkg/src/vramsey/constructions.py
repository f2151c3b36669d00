"""Colorings of Boolean lattices and the removal embeddings behind the bounds.

Every map returned here embeds some B_d into B_n minus a forbidden family;
``images[x]`` is the image of the mask ``x`` of B_d.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import ceil
from typing import Callable, Iterable, Optional, Sequence

from .errors import InvalidArguments, MalformedInput
from .lattice import (Domain, GroundPermutation, apply_permutation, complement, format_set,
                      from_members, full_set, is_antichain, is_chain, is_subset, level_order,
                      members, parse_set, size)
from .poset import STRONG, EmbeddingMap, Poset, dim2, extremal_count

ABSENT = 0


@dataclass(frozen=True)
class Coloring:
    """``colors[x]`` is the color (>= 1) of mask ``x``, or 0 if ``x`` is absent."""

    domain: Domain
    colors: tuple[int, ...]
    k: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        d = self.domain
        if len(self.colors) != 1 << d.n:
            raise InvalidArguments("color table must cover every mask of B_n")
        for x, c in enumerate(self.colors):
            if d.present(x) and c < 1:
                raise InvalidArguments(f"present element {format_set(x)} has no color")
            if not d.present(x) and c != ABSENT:
                raise InvalidArguments(f"removed element {format_set(x)} carries a color")
            if self.k is not None and c > self.k:
                raise InvalidArguments(f"color {c} exceeds the declared bound {self.k}")

    @classmethod
    def from_rule(cls, domain: Domain, rule: Callable[[int], int], k: Optional[int] = None) -> "Coloring":
        return cls(domain, tuple(rule(x) if domain.present(x) else ABSENT
                                 for x in range(1 << domain.n)), k)

    @classmethod
    def from_mapping(cls, domain: Domain, colors: dict[int, int], k: Optional[int] = None) -> "Coloring":
        return cls.from_rule(domain, colors.__getitem__, k)

    @property
    def n(self) -> int:
        return self.domain.n

    def __getitem__(self, x: int) -> int:
        return self.colors[x]

    def palette(self) -> list[int]:
        return sorted({c for c in self.colors if c != ABSENT})

    def classes(self) -> dict[int, int]:
        """Color -> bitset of its elements."""
        out: dict[int, int] = {}
        for x, c in enumerate(self.colors):
            if c != ABSENT:
                out[c] = out.get(c, 0) | 1 << x
        return out

    def restricted(self, domain: Domain) -> "Coloring":
        if domain.n != self.n or any(not self.domain.present(x) for x in domain.elements()):
            raise InvalidArguments("restriction target is not a sub-domain")
        return Coloring.from_rule(domain, self.colors.__getitem__, self.k)

    def permuted(self, g: GroundPermutation) -> "Coloring":
        """The coloring ``x -> c(g^-1 x)`` on ``g`` applied to the domain."""
        table = [ABSENT] * len(self.colors)
        for x, c in enumerate(self.colors):
            table[apply_permutation(x, g)] = c
        return Coloring(self.domain.permuted(g), tuple(table), self.k)

    def recolored(self, mapping: dict[int, int]) -> "Coloring":
        k = self.k if self.k is None else max(self.k, max(mapping.values(), default=0))
        return Coloring(self.domain, tuple(mapping.get(c, c) if c else ABSENT for c in self.colors), k)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "colors": {format_set(x): self.colors[x] for x in self.domain.elements()},
            "k": self.k,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Coloring":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(str(exc)) from exc
        try:
            n = int(data["n"])
            table = {parse_set(s): int(c) for s, c in data["colors"].items()}
            k = data.get("k")
            k = None if k is None else int(k)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise MalformedInput(f"bad coloring JSON: {exc}") from exc
        return cls.from_mapping(Domain.from_members(n, table), table, k)


# --- removal embeddings ---------------------------------------------------------

def _spread(x: int, w: int) -> int:
    """Re-coordinatize a mask of B_{n-1} onto [n] - {w}, preserving order."""
    low = x & ((1 << (w - 1)) - 1)
    return low | (x >> (w - 1)) << w


def _check_family(n: int, family: Iterable[int]) -> list[int]:
    fam = sorted(set(family))
    if any(not 0 <= x < 1 << n for x in fam):
        raise InvalidArguments(f"family has sets outside B_{n}")
    return fam


def chain_removal_embedding(n: int, C: Iterable[int]) -> EmbeddingMap:
    """B_{n-1} into B_n - C for a chain C missing the bottom or the top."""
    if n < 1:
        raise InvalidArguments("need n >= 1")
    chain_ = _check_family(n, C)
    top = full_set(n)
    if not is_chain(chain_):
        raise InvalidArguments("family is not a chain")
    if 0 in chain_ and top in chain_:
        raise InvalidArguments("chain contains both the empty set and [n]")
    if not chain_:
        w, lift = n, 0
    elif min(chain_, key=size) != 0:
        # every member contains the least member's first element w
        w, lift = members(min(chain_, key=size))[0], 0
    else:
        # no member contains w, so adding w lands outside the chain
        w = members(complement(max(chain_, key=size), n))[0]
        lift = 1 << (w - 1)
    images = tuple(_spread(x, w) | lift for x in range(1 << (n - 1)))
    return EmbeddingMap(images, STRONG)


def antichain_removal_embedding(n: int, A: Iterable[int], w: Optional[int] = None) -> EmbeddingMap:
    """B_{n-1} into B_n - A: X stays put unless it contains a member of A, then X + {w}."""
    if n < 1:
        raise InvalidArguments("need n >= 1")
    anti = _check_family(n, A)
    if not is_antichain(anti):
        raise InvalidArguments("family is not an antichain")
    w = n if w is None else w
    if not 1 <= w <= n:
        raise InvalidArguments(f"expansion coordinate {w} outside [{n}]")
    bit = 1 << (w - 1)
    images = []
    for x in range(1 << (n - 1)):
        X = _spread(x, w)
        if any(is_subset(Y, X) for Y in anti):
            X |= bit
        images.append(X)
    return EmbeddingMap(tuple(images), STRONG)


def mirsky_antichain_partition(F: Iterable[int]) -> list[list[int]]:
    """Split F into antichains by the length of the longest chain ending at each set."""
    fam = level_order(set(F))
    rank: dict[int, int] = {}
    for x in fam:
        rank[x] = 1 + max((rank[y] for y in rank if y != x and is_subset(y, x)), default=0)
    parts: list[list[int]] = [[] for _ in range(max(rank.values(), default=0))]
    for x in fam:
        parts[rank[x] - 1].append(x)
    return parts


def longest_chain_length(F: Iterable[int]) -> int:
    return len(mirsky_antichain_partition(F))


def iterated_removal_embedding(n: int, F: Iterable[int], forbid_top: bool = False) -> EmbeddingMap:
    """B_{n-h} into B_n - F where h is the longest chain length of F.

    Peels F one Mirsky antichain at a time, pulling each antichain back
    through the embedding built so far.  ``forbid_top`` adds [n] to F.
    """
    fam = set(_check_family(n, F))
    if forbid_top:
        fam.add(full_set(n))
    parts = mirsky_antichain_partition(fam)
    if len(parts) > n:
        raise InvalidArguments(f"longest chain {len(parts)} exceeds n = {n}")
    images = list(range(1 << n))
    cur = n
    for part in parts:
        inverse = {y: x for x, y in enumerate(images)}
        pulled = [inverse[y] for y in part if y in inverse]
        step = antichain_removal_embedding(cur, pulled)
        images = [images[x] for x in step.images]
        cur -= 1
    return EmbeddingMap(tuple(images), STRONG)


# --- witness colorings ------------------------------------------------------------

def coloring_layered_identical(m: int, n: int, k: int, top_color: int = 1) -> Coloring:
    """B_{nk}: color floor(|X|/n) + 1, and [nk] gets ``top_color``."""
    if not 1 <= m <= n or k < 1:
        raise InvalidArguments("need 1 <= m <= n and k >= 1")
    if not 1 <= top_color <= k:
        raise InvalidArguments(f"top color {top_color} outside [{k}]")
    N = n * k
    top = full_set(N)
    return Coloring.from_rule(Domain.full(N), lambda x: top_color if x == top else size(x) // n + 1, k)


def coloring_mixed(m: int, n: int) -> Coloring:
    """B_{m+n}: color 1 below size m, color 2 from size m on."""
    if m < 1 or n < 1:
        raise InvalidArguments("need m, n >= 1")
    return Coloring.from_rule(Domain.full(m + n), lambda x: 1 if size(x) < m else 2, 2)


def coloring_minimal_theorem3(k: int, S: int) -> Coloring:
    """k-coloring of B_{k+1} - {S} without a monochromatic V(1,1).

    S is relabelled to [s]; the top [k+1] is comparable to everything, so it
    cannot sit in a V(1,1) and takes color k.
    """
    if k < 1:
        raise InvalidArguments("need k >= 1")
    n = k + 1
    top = full_set(n)
    if not 0 <= S < top:
        raise InvalidArguments("S must be a proper subset of [k+1]")
    domain = Domain(n, frozenset({S}))
    if S == 0:
        return Coloring.from_rule(domain, lambda x: min(size(x), k), k)
    s = size(S)
    inside = members(S)
    outside = [i for i in range(1, n + 1) if i not in inside]
    g = GroundPermutation(tuple(p - 1 for p in _inverse_order(inside + outside)))
    prefix = full_set(s)

    def rule(x):
        y = apply_permutation(x, g)
        if y == top:
            return k
        if is_subset(prefix, y):
            return size(y)
        if size(y) <= k - 1:
            return size(y) + 1
        return members(complement(y, n))[0]  # y = [k+1] - {i} with i <= s

    return Coloring.from_rule(domain, rule, k)


def _inverse_order(seq: Sequence[int]) -> list[int]:
    """Permutation (1-based images) sending ``seq[t]`` to ``t + 1``."""
    image = [0] * len(seq)
    for t, i in enumerate(seq):
        image[i - 1] = t + 1
    return image


def coloring_rainbow_lower(n: int, k: int) -> Coloring:
    """B_{n(k-1)+1}: ceil(|X|/n), with the bottom and top colored k."""
    if n < 2 or k < 2:
        raise InvalidArguments("need n >= 2 and k >= 2")
    N = n * (k - 1) + 1
    top = full_set(N)
    return Coloring.from_rule(Domain.full(N), lambda x: k if x in (0, top) else ceil(size(x) / n), k)


def coloring_prop8_lower(P: Poset) -> Coloring:
    """B_{dim2(P)+m(P)-1}: bottom 1, top 2, everything else 3."""
    if P.size < 2:
        raise InvalidArguments("P needs at least 2 elements")
    N = dim2(P) + extremal_count(P) - 1
    top = full_set(N)
    return Coloring.from_rule(Domain.full(N), lambda x: 1 if x == 0 else 2 if x == top else 3, 3)


def constant_coloring(domain: Domain, color: int = 1, k: Optional[int] = None) -> Coloring:
    return Coloring.from_rule(domain, lambda x: color, k)


def coloring_from_sets(n: int, classes: dict[int, Iterable[Iterable[int]]], k: Optional[int] = None) -> Coloring:
    """Build a coloring of B_n from ``{color: [[1, 2], [3], ...]}``."""
    table = {}
    for c, sets in classes.items():
        for s in sets:
            table[from_members(s)] = c
    return Coloring.from_mapping(Domain.from_members(n, table), table, k)
