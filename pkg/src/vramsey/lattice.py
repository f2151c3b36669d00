"""Bitmask model of the Boolean lattice B_n and its induced subposets.

A subset of the ground set [n] = {1, ..., n} is an ``int`` whose bit ``i - 1``
marks membership of ``i``.  Because masks index arrays directly, a family of
subsets of [n] (n <= 6 for exhaustive work) is itself an ``int`` bitset over
positions ``0 .. 2**n - 1``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArguments, MalformedInput

MAX_GROUND = 30
MAX_EXHAUSTIVE_GROUND = 6
MAX_TABLE_GROUND = 12


def full_set(n: int) -> int:
    return (1 << n) - 1


def size(x: int) -> int:
    return bin(x).count("1")


def members(x: int) -> list[int]:
    """1-based members of the mask ``x``."""
    out = []
    i = 1
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def from_members(items: Iterable[int]) -> int:
    x = 0
    for i in items:
        if i < 1:
            raise InvalidArguments(f"ground elements are 1-based, got {i}")
        x |= 1 << (i - 1)
    return x


def complement(x: int, n: int) -> int:
    """[n] - X."""
    return full_set(n) & ~x


def is_subset(x: int, y: int) -> bool:
    return x & y == x


def comparable(x: int, y: int) -> bool:
    return x & y == x or x & y == y


def format_set(x: int) -> str:
    return "{" + ",".join(str(i) for i in members(x)) + "}"


_SET_RE = re.compile(r"^\s*\{\s*(\d+(\s*,\s*\d+)*)?\s*\}\s*$")


def parse_set(text: str) -> int:
    """Inverse of :func:`format_set`; accepts ``"{}"`` and ``"{1, 3}"``."""
    if not isinstance(text, str) or not _SET_RE.match(text):
        raise MalformedInput(f"not a set literal: {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return 0
    return from_members(int(t) for t in body.split(","))


@dataclass(frozen=True)
class ElementSet:
    """A subset of [ground] kept together with its ground size."""

    bits: int
    ground: int

    def __post_init__(self):
        if not 0 <= self.ground <= MAX_GROUND:
            raise InvalidArguments(f"ground size {self.ground} outside 0..{MAX_GROUND}")
        if not 0 <= self.bits < (1 << self.ground):
            raise InvalidArguments(f"mask {self.bits} is not a subset of [{self.ground}]")

    @classmethod
    def of(cls, items: Iterable[int], ground: int) -> "ElementSet":
        return cls(from_members(items), ground)

    @classmethod
    def parse(cls, text: str, ground: int) -> "ElementSet":
        return cls(parse_set(text), ground)

    def complement(self) -> "ElementSet":
        return ElementSet(complement(self.bits, self.ground), self.ground)

    def members(self) -> list[int]:
        return members(self.bits)

    def __len__(self) -> int:
        return size(self.bits)

    def __le__(self, other: "ElementSet") -> bool:
        """Inclusion, not a total order."""
        return is_subset(self.bits, other.bits)

    def __lt__(self, other: "ElementSet") -> bool:
        return self.bits != other.bits and is_subset(self.bits, other.bits)

    def __str__(self) -> str:
        return format_set(self.bits)


def level_order(masks: Iterable[int]) -> list[int]:
    """Canonical enumeration order: cardinality first, then mask value."""
    return sorted(masks, key=lambda x: (size(x), x))


def interval_family(n: int, i: int, j: int) -> list[int]:
    """All X in B_n with i in X and j not in X (isomorphic to B_{n-2})."""
    if i == j:
        raise InvalidArguments("interval_family needs i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidArguments(f"indices {i}, {j} outside [{n}]")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    free = full_set(n) & ~(bi | bj)
    return level_order(bi | s for s in submasks(free))


def submasks(x: int) -> Iterator[int]:
    """All submasks of ``x``, including 0 and ``x``."""
    s = x
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & x


def is_chain(family: Sequence[int]) -> bool:
    fam = list(family)
    return all(comparable(a, b) for k, a in enumerate(fam) for b in fam[k + 1:])


def is_antichain(family: Sequence[int]) -> bool:
    fam = list(family)
    return all(not comparable(a, b) for k, a in enumerate(fam) for b in fam[k + 1:])


@dataclass(frozen=True)
class LatticeTables:
    """Strict up-/down-set bitsets of every element of B_n."""

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    comparable: tuple[int, ...]  # up | down | self


@lru_cache(maxsize=None)
def lattice_tables(n: int) -> LatticeTables:
    if not 0 <= n <= MAX_TABLE_GROUND:
        raise InvalidArguments(f"lattice tables need 0 <= n <= {MAX_TABLE_GROUND}")
    N = 1 << n
    top = N - 1
    up = [0] * N
    down = [0] * N
    for x in range(N):
        bits = 0
        for s in submasks(top & ~x):
            bits |= 1 << (x | s)
        up[x] = bits & ~(1 << x)
        bits = 0
        for s in submasks(x):
            bits |= 1 << s
        down[x] = bits & ~(1 << x)
    comp = tuple(up[x] | down[x] | (1 << x) for x in range(N))
    return LatticeTables(n, tuple(up), tuple(down), comp)


def iter_bits(bits: int) -> Iterator[int]:
    """Positions of set bits, lowest first."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class GroundPermutation:
    """Bijection of [n]; ``image[i]`` is the 0-based image of element ``i + 1``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidArguments(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "GroundPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "GroundPermutation":
        """From a 1-based dict such as ``{1: 3, 2: 2, 3: 1}``."""
        n = len(mapping)
        return cls(tuple(mapping[i + 1] - 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return apply_permutation(x, self)

    def inverse(self) -> "GroundPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return GroundPermutation(tuple(inv))


def apply_permutation(x: int, g: GroundPermutation) -> int:
    out = 0
    for i, j in enumerate(g.image):
        if x >> i & 1:
            out |= 1 << j
    if x >> g.n:
        raise InvalidArguments("set has members outside the permutation's ground")
    return out


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[GroundPermutation, ...]:
    if n > MAX_EXHAUSTIVE_GROUND + 2:
        raise InvalidArguments(f"refusing to list {n}! permutations")
    return tuple(GroundPermutation(p) for p in permutations(range(n)))


@lru_cache(maxsize=None)
def permutation_table(n: int) -> tuple[tuple[int, ...], ...]:
    """``table[g][x]`` = image of mask ``x`` under the ``g``-th permutation."""
    return tuple(tuple(apply_permutation(x, g) for x in range(1 << n)) for g in all_permutations(n))


@dataclass(frozen=True)
class Domain:
    """B_n with a family of elements removed."""

    n: int
    removed: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND:
            raise InvalidArguments(f"ground size {self.n} outside 0..{MAX_GROUND}")
        removed = frozenset(self.removed)
        bad = [x for x in removed if not 0 <= x < (1 << self.n)]
        if bad:
            raise InvalidArguments(f"removed masks {bad} are not subsets of [{self.n}]")
        object.__setattr__(self, "removed", removed)

    @classmethod
    def full(cls, n: int) -> "Domain":
        return cls(n)

    @classmethod
    def from_members(cls, n: int, present: Iterable[int]) -> "Domain":
        keep = set(present)
        return cls(n, frozenset(x for x in range(1 << n) if x not in keep))

    @property
    def removed_count(self) -> int:
        return len(self.removed)

    @property
    def top(self) -> int:
        return full_set(self.n)

    def present(self, x: int) -> bool:
        return 0 <= x < (1 << self.n) and x not in self.removed

    __contains__ = present

    def __len__(self) -> int:
        return (1 << self.n) - len(self.removed)

    def elements(self) -> list[int]:
        """Present masks in (cardinality, mask) order."""
        return [x for x in _level_order_all(self.n) if x not in self.removed]

    def bitset(self) -> int:
        bits = (1 << (1 << self.n)) - 1
        for x in self.removed:
            bits &= ~(1 << x)
        return bits

    def without(self, *xs: int) -> "Domain":
        return Domain(self.n, self.removed | frozenset(xs))

    def permuted(self, g: GroundPermutation) -> "Domain":
        return Domain(self.n, frozenset(apply_permutation(x, g) for x in self.removed))

    def stabilizer(self) -> list[GroundPermutation]:
        """Ground permutations mapping the removed family onto itself."""
        if self.n > MAX_EXHAUSTIVE_GROUND:
            raise InvalidArguments("stabilizer is only computed for n <= 6")
        return [g for g in all_permutations(self.n)
                if all(apply_permutation(x, g) in self.removed for x in self.removed)]

    def canonical(self) -> "Domain":
        """Representative of the orbit under ground permutations."""
        best = min(tuple(sorted(apply_permutation(x, g) for x in self.removed))
                   for g in all_permutations(self.n))
        return Domain(self.n, frozenset(best))

    def to_json(self) -> dict:
        return {"n": self.n, "removed": [format_set(x) for x in level_order(self.removed)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Domain":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(str(exc)) from exc
        try:
            n = int(data["n"])
            removed = frozenset(parse_set(s) for s in data.get("removed", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad domain JSON: {exc}") from exc
        return cls(n, removed)

    def __str__(self) -> str:
        if not self.removed:
            return f"B_{self.n}"
        return f"B_{self.n} - {{{', '.join(format_set(x) for x in level_order(self.removed))}}}"


@lru_cache(maxsize=None)
def _level_order_all(n: int) -> tuple[int, ...]:
    return tuple(level_order(range(1 << n)))
