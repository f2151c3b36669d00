"""Hasse diagrams of domains, optionally colored, as Graphviz text or plain SVG."""
from __future__ import annotations

from html import escape
from typing import Optional

from .constructions import Coloring
from .lattice import Domain, format_set, size

PALETTE = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999"]


def _fill(color: int) -> str:
    return PALETTE[(color - 1) % len(PALETTE)]


def hasse_edges(domain: Domain) -> list[tuple[int, int]]:
    """Cover pairs (x, y) of the induced order: x < y with nothing present strictly between."""
    present = domain.elements()
    keep = set(present)
    edges = []
    for y in present:
        below = [x for x in present if x != y and x & y == x]
        for x in below:
            if not any(z in keep and z not in (x, y) and x & z == x and z & y == z for z in below):
                edges.append((x, y))
    return edges


def _label(x: int) -> str:
    return "∅" if x == 0 else format_set(x)[1:-1].replace(",", "")


def to_dot(domain: Domain, coloring: Optional[Coloring] = None) -> str:
    lines = ["graph hasse {", "    rankdir=BT;", "    node [shape=circle, style=filled, fillcolor=white];"]
    by_level: dict[int, list[int]] = {}
    for x in domain.elements():
        by_level.setdefault(size(x), []).append(x)
        attrs = [f'label="{_label(x)}"']
        if coloring is not None:
            attrs.append(f'fillcolor="{_fill(coloring[x])}"')
        lines.append(f"    s{x} [{', '.join(attrs)}];")
    for level in sorted(by_level):
        lines.append("    { rank=same; " + " ".join(f"s{x};" for x in by_level[level]) + " }")
    for x, y in hasse_edges(domain):
        lines.append(f"    s{x} -- s{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(domain: Domain, coloring: Optional[Coloring] = None, dx: int = 56, dy: int = 80, r: int = 16) -> str:
    """Levels stacked bottom to top, each centered; no layout engine needed."""
    levels: dict[int, list[int]] = {}
    for x in domain.elements():
        levels.setdefault(size(x), []).append(x)
    widest = max((len(v) for v in levels.values()), default=1)
    width = widest * dx + 2 * r
    height = (domain.n + 1) * dy
    pos = {}
    for lv, xs in levels.items():
        offset = (width - len(xs) * dx) / 2 + dx / 2
        for i, x in enumerate(xs):
            pos[x] = (offset + i * dx, height - dy / 2 - lv * dy)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}">']
    for x, y in hasse_edges(domain):
        (x1, y1), (x2, y2) = pos[x], pos[y]
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="black"/>')
    for x, (cx, cy) in pos.items():
        fill = "white" if coloring is None else _fill(coloring[x])
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{r}" fill="{fill}" stroke="black"/>')
        out.append(f'<text x="{cx:.1f}" y="{cy + 4:.1f}" font-size="11" text-anchor="middle">'
                   f"{escape(_label(x))}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
