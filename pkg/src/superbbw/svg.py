"""SVG rendering of the generic region of Q(3) in the coroot-pairing plane.

A lattice point (a, b) stands for every weight mu with <mu, a1^v> = a and
<mu, a2^v> = b; genericity only depends on these two numbers.  Every point
is emitted as one element carrying ``data-a``/``data-b`` and a class of
``generic`` or ``nongeneric`` so the picture can be checked mechanically.
"""
from __future__ import annotations

import math

from .errors import UnsupportedTypeError
from .regions import is_generic
from .root_data import Kind, RootDatum, dot_act, weyl_elements
from .regions import omega_w_bounds

CELL = 20


def representative(a: int, b: int) -> tuple[int, int, int]:
    return (a + b, b, 0)


def _apexes(d: RootDatum) -> list[tuple[int, int]]:
    """Corner of each translate w . Omega(w) in pairing coordinates."""
    out = []
    for w in weyl_elements(d):
        c = omega_w_bounds(d, w)
        corner = representative(c[1], c[2])
        out.append(d.pairings(dot_act(d, w, corner)))
    return sorted(out)


def render_generic_region(d: RootDatum, box: int = 9, hexagonal: bool = False) -> str:
    if d.kind is not Kind.Q or d.rank != 3:
        raise UnsupportedTypeError(
            f"region plots need exactly two simple coroots of type Q; got {d.super_type}")
    if box < 1:
        raise ValueError("box must be positive")

    def place(a, b):
        if hexagonal:
            x, y = a + b / 2, b * math.sqrt(3) / 2
        else:
            x, y = a, b
        return (x + 1.5 * box) * CELL, (1.0 * box - y + 1) * CELL

    width = round(3 * box * CELL) if hexagonal else round((2 * box + 2) * CELL)
    height = round((2 * box + 2) * CELL)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<title>Generic region of {d.super_type}, box [-{box},{box}]^2</title>',
        '<style>.generic{fill:#9e9e9e}.nongeneric{fill:#ffffff;stroke:#dddddd}'
        '.axis{stroke:#000;stroke-dasharray:4 3}.apex{fill:#000}</style>',
    ]
    x0, y0 = place(0, 0)
    for (a, b), label in (((box, 0), "ω1"), ((0, box), "ω2")):
        x1, y1 = place(a, b)
        lines.append(f'<line class="axis" x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}"/>')
        lines.append(f'<text x="{x1 + 4:.2f}" y="{y1 - 4:.2f}" font-size="12">{label}</text>')
    half = CELL * 0.45
    for b in range(box, -box - 1, -1):
        for a in range(-box, box + 1):
            cls = "generic" if is_generic(d, representative(a, b)) else "nongeneric"
            x, y = place(a, b)
            if hexagonal:
                lines.append(f'<circle class="{cls}" data-a="{a}" data-b="{b}" '
                             f'cx="{x:.2f}" cy="{y:.2f}" r="{half:.2f}"/>')
            else:
                lines.append(f'<rect class="{cls}" data-a="{a}" data-b="{b}" '
                             f'x="{x - half:.2f}" y="{y - half:.2f}" '
                             f'width="{2 * half:.2f}" height="{2 * half:.2f}"/>')
    for a, b in _apexes(d):
        if abs(a) <= box and abs(b) <= box:
            x, y = place(a, b)
            lines.append(f'<circle class="apex" data-a="{a}" data-b="{b}" '
                         f'cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
