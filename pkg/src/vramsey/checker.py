"""Exact detection of monochromatic and rainbow copies in a coloring."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from .constructions import Coloring
from .errors import InvalidArguments, MalformedInput
from .lattice import format_set, iter_bits, lattice_tables, parse_set
from .poset import MODES, STRONG, EmbeddingMap, Poset, parse_pattern, search_embedding


class Target(NamedTuple):
    poset: Poset
    mode: str = STRONG

    def to_json(self) -> dict:
        out = {"pattern": self.poset.label, "mode": self.mode}
        if self.poset.label == "Custom" or self.poset.label.startswith(("Induced", "dual")):
            out["poset"] = self.poset.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Target":
        try:
            mode = data.get("mode", STRONG)
            if "poset" in data:
                return cls(Poset.from_json(data["poset"]), mode)
            return cls(parse_pattern(data["pattern"]), mode)
        except (KeyError, AttributeError, TypeError) as exc:
            raise MalformedInput(f"bad target JSON: {exc}") from exc


def as_targets(targets: Iterable[Poset | Target | tuple], mode: Optional[str] = None) -> list[Target]:
    """Normalize a target list; target ``i`` is forbidden in color ``i + 1``."""
    out = []
    for t in targets:
        if isinstance(t, Poset):
            t = Target(t, mode or STRONG)
        else:
            t = Target(*t)
        if t.mode not in MODES:
            raise InvalidArguments(f"unknown mode {t.mode!r}")
        out.append(t)
    if not out:
        raise InvalidArguments("target list is empty")
    return out


@dataclass(frozen=True)
class Witness:
    kind: str  # "mono" or "rainbow"
    embedding: EmbeddingMap
    color: Optional[int] = None
    colors: tuple[int, ...] = ()

    @property
    def images(self) -> tuple[int, ...]:
        return self.embedding.images

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "mono":
            out["color"] = self.color
        out["images"] = [format_set(x) for x in self.images]
        if self.kind == "rainbow":
            out["colors"] = list(self.colors)
        return out

    @classmethod
    def from_json(cls, data: dict, mode: str = STRONG) -> "Witness":
        try:
            images = tuple(parse_set(s) for s in data["images"])
            return cls(data["kind"], EmbeddingMap(images, mode), data.get("color"),
                       tuple(data.get("colors", ())))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad witness JSON: {exc}") from exc


def find_monochromatic(c: Coloring, targets: Sequence[Poset | Target]) -> Optional[Witness]:
    """Witness for the least color i holding a copy of target i, if any."""
    classes = c.classes()
    for i, (P, mode) in enumerate(as_targets(targets), start=1):
        bits = classes.get(i, 0)
        if P.size > bin(bits).count("1"):
            continue
        images = search_embedding(P, c.n, bits, mode)
        if images is not None:
            return Witness("mono", EmbeddingMap(images, mode), color=i)
    return None


def find_rainbow(c: Coloring, Q: Poset, mode: str = STRONG) -> Optional[Witness]:
    """A copy of Q whose elements carry pairwise distinct colors."""
    classes = c.classes()
    if Q.size > len(classes):
        return None
    images = search_embedding(Q, c.n, c.domain.bitset(), mode, color_of=c.colors, classes=classes)
    if images is None:
        return None
    return Witness("rainbow", EmbeddingMap(images, mode), colors=tuple(c[x] for x in images))


def is_good(c: Coloring, targets: Sequence[Poset | Target]) -> bool:
    return find_monochromatic(c, targets) is None


def find_monochromatic_any(c: Coloring, P: Poset, mode: str = STRONG) -> Optional[Witness]:
    """Monochromatic P in whatever color, least color first."""
    for color, bits in sorted(c.classes().items()):
        if P.size <= bin(bits).count("1"):
            images = search_embedding(P, c.n, bits, mode)
            if images is not None:
                return Witness("mono", EmbeddingMap(images, mode), color=color)
    return None


def is_good_rainbow(c: Coloring, P: Poset, Q: Poset, mode: str = STRONG) -> bool:
    """No monochromatic P in any color and no rainbow Q."""
    return find_monochromatic_any(c, P, mode) is None and find_rainbow(c, Q, mode) is None


def verify_witness(c: Coloring, targets: Sequence[Poset | Target], w: Witness) -> bool:
    """Re-check a reported witness against the coloring by direct inspection."""
    from .poset import is_embedding

    if w.kind == "mono":
        tl = as_targets(targets)
        if w.color is None or not 1 <= w.color <= len(tl):
            return False
        P, mode = tl[w.color - 1]
        return (is_embedding(P, w.images, mode, c.domain)
                and all(c[x] == w.color for x in w.images))
    raise InvalidArguments("verify_witness handles monochromatic witnesses")


# --- specialised V(m,n) detector ------------------------------------------------

def _exact_chain_tables(S: int, up: Sequence[int], length: int) -> list[dict[int, int]]:
    """``tables[j-1][a]``: bitset of t in S reached from a in S by a chain of exactly j sets."""
    tables = [{a: 1 << a for a in iter_bits(S)}]
    for _ in range(length - 1):
        prev = tables[-1]
        tables.append({a: _union(prev[b] for b in iter_bits(S & up[a])) for a in prev})
    return tables


@lru_cache(maxsize=None)
def _upeq(n: int) -> tuple[int, ...]:
    return tuple(u | 1 << x for x, u in enumerate(lattice_tables(n).up))


def _union(bitsets: Iterable[int]) -> int:
    out = 0
    for b in bitsets:
        out |= b
    return out


def _chain_between(S: int, up: Sequence[int], tables: list[dict[int, int]], a: int, t: int) -> list[int]:
    out = [a]
    for j in range(len(tables) - 1, 0, -1):
        a = next(b for b in iter_bits(S & up[a]) if tables[j - 1][b] >> t & 1)
        out.append(a)
    return out


def find_v_in_class(n: int, S: int, m: int, k: int) -> Optional[tuple[int, ...]]:
    """Strong V(m,k) inside the family S of B_n, as images in make_v order.

    Root x, first-branch chain a..t (m sets) and second-branch chain b..u
    (k sets) above x.  Since the chains are nested, the branches are
    pairwise incomparable iff a is not below u and b is not below t.
    """
    up = lattice_tables(n).up
    upeq = _upeq(n)
    tables_m = _exact_chain_tables(S, up, m)
    tables_k = tables_m if k == m else _exact_chain_tables(S, up, k)
    tops_m, tops_k = tables_m[-1], tables_k[-1]
    for x in iter_bits(S):
        starts = S & up[x]
        for a in iter_bits(starts):
            for b in iter_bits(starts):
                left = tops_m[a] & ~upeq[b]
                right = tops_k[b] & ~upeq[a]
                if left and right:
                    t = (left & -left).bit_length() - 1
                    u = (right & -right).bit_length() - 1
                    ys = _chain_between(S, up, tables_m, a, t)
                    zs = _chain_between(S, up, tables_k, b, u)
                    return (x, *ys, *zs)
    return None


def find_monochromatic_v_fast(c: Coloring, m: int, n: int, color: int) -> Optional[Witness]:
    """Same answer as the generic search for a strong V(m,n) in one color class."""
    bits = c.classes().get(color, 0)
    images = find_v_in_class(c.n, bits, m, n)
    if images is None:
        return None
    return Witness("mono", EmbeddingMap(images, STRONG), color=color)
