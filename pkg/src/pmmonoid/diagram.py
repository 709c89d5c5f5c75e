"""
Schematic SVG drawings of braid PM-monoid words.

Each layer of the word's image gets its own horizontal band, the first layer on top. Inside a band
the layer's strands are followed through the word, rightmost letter first (top of the band) to the
leftmost letter (bottom). At s_i the strand at position i passes over the strand at position i+1;
s_i^-1 reverses this. A crossing with a strand that belongs to another layer is not drawn: that strand
is absent from the band. Unused marked points are drawn hollow.
"""
from __future__ import annotations

from typing import Sequence

from .braid_pm import LayeredAut, phi_word
from .words import E, Letter, format_word

DX = 40
DY = 30
MARGIN = 20
BAND_GAP = 16
RADIUS = 3
GAP = 0.3


def _line(x1, y1, x2, y2, cls="strand") -> str:
    return f'<line class="{cls}" x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}"/>'


def _point(x, y, used: bool) -> str:
    fill = "black" if used else "white"
    return f'<circle cx="{x:g}" cy="{y:g}" r="{RADIUS}" fill="{fill}" stroke="black"/>'


def _band(word: Sequence[Letter], n: int, strands: frozenset[int], top: float) -> list[str]:
    """Draw one band; `strands` are the starting positions (layer domain) present in it."""
    out = []
    steps = list(reversed(word))
    pos = {p: p for p in strands}             # strand label -> current position

    def x(p):
        return MARGIN + (p - 1) * DX

    for p in range(1, n + 1):
        out.append(_point(x(p), top, p in strands))
    for k, letter in enumerate(steps):
        y0, y1 = top + k * DY, top + (k + 1) * DY
        if isinstance(letter, E):
            out.append(_line(x(1) - 8, (y0 + y1) / 2, x(n) + 8, (y0 + y1) / 2, "idempotent"))
            for p in pos.values():
                out.append(_line(x(p), y0, x(p), y1))
            continue
        i = letter.i
        at = {q: s for s, q in pos.items()}
        over_pos = i if letter.sign == 1 else i + 1
        for s, p in sorted(pos.items()):
            if p not in (i, i + 1):
                out.append(_line(x(p), y0, x(p), y1))
        movers = [(p, at[p]) for p in (i, i + 1) if p in at]
        for p, s in movers:
            q = i + 1 if p == i else i
            x0, x1 = x(p), x(q)
            if len(movers) == 2 and p != over_pos:
                xa, ya = x0 + (x1 - x0) * (0.5 - GAP / 2), y0 + DY * (0.5 - GAP / 2)
                xb, yb = x0 + (x1 - x0) * (0.5 + GAP / 2), y0 + DY * (0.5 + GAP / 2)
                out.append(_line(x0, y0, xa, ya))
                out.append(_line(xb, yb, x1, y1))
            else:
                out.append(_line(x0, y0, x1, y1))
        for p, s in movers:
            pos[s] = i + 1 if p == i else i
    if not steps:
        for p in sorted(pos.values()):
            out.append(_line(x(p), top, x(p), top + DY))
    bottom = top + max(len(steps), 1) * DY
    for p in range(1, n + 1):
        out.append(_point(x(p), bottom, p in pos.values()))
    return out


def render_svg(word: Sequence[Letter], n: int, image: LayeredAut | None = None) -> str:
    """
    Deterministic SVG text for the word.

    >>> render_svg((), 2).count('class="strand"')
    2
    """
    image = phi_word(word, n) if image is None else image
    band_h = max(len(word), 1) * DY
    width = 2 * MARGIN + (n - 1) * DX
    height = 2 * MARGIN + len(image.layers) * band_h + (len(image.layers) - 1) * BAND_GAP
    body = []
    for j, layer in enumerate(image.layers):
        top = MARGIN + j * (band_h + BAND_GAP)
        body.append(f'<g class="layer" data-layer="{j + 1}">')
        body.append(f'<rect class="band" x="{MARGIN / 2:g}" y="{top - MARGIN / 4:g}" '
                    f'width="{width - MARGIN:g}" height="{band_h + MARGIN / 2:g}"/>')
        body.extend(_band(word, n, frozenset(layer.domain), top))
        body.append("</g>")
    title = format_word(word) or "unit"
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
            f'viewBox="0 0 {width:g} {height:g}">')
    style = ("<style>.strand{stroke:black;stroke-width:2;fill:none}"
             ".idempotent{stroke:#999;stroke-dasharray:3 3}"
             ".band{fill:#f4f4f4;stroke:#ccc}</style>")
    return "\n".join([head, f"<title>{title} (n={n})</title>", style, *body, "</svg>"]) + "\n"
