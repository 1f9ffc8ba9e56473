"""Deterministic SVG drawing of the circle construction.

Point ``p_i`` sits at angle ``90° - (i - 1) · 360° / n``, so ``p_1`` is at the
top and indices increase clockwise.  All coordinates are printed with a fixed
number of decimals, so identical inputs give byte-identical files.
"""
from __future__ import annotations

import math

from .construction import CircleDiagram, build_diagram
from .palindromic import symmetry_points
from .words import format_letter

SIZE = 300
CENTRE = SIZE / 2
RADIUS = 100.0
LABEL_RADIUS = 122.0
LINE_RADIUS = 135.0


def _num(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def point_angle(i: int, n: int) -> float:
    """Angle of ``p_i`` in degrees, counter-clockwise from the positive x-axis."""
    return 90.0 - (i - 1) * 360.0 / n


def _xy(angle_deg: float, radius: float) -> tuple[str, str]:
    t = math.radians(angle_deg)
    # SVG y grows downwards
    return _num(CENTRE + radius * math.cos(t)), _num(CENTRE - radius * math.sin(t))


def render_svg(X: int, Y: int, first: int = 1) -> str:
    d: CircleDiagram = build_diagram(X, Y)
    n = d.n
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>circle construction X={X} Y={Y} first point {first}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
        f'<circle cx="{_num(CENTRE)}" cy="{_num(CENTRE)}" r="{_num(RADIUS)}" '
        'fill="none" stroke="#000000" stroke-width="1"/>',
    ]

    # with two symmetry points they are antipodal, so one line serves both
    sym = symmetry_points(X, Y)
    ang = point_angle(sym[0], n)
    x1, y1 = _xy(ang, LINE_RADIUS)
    x2, y2 = _xy(ang + 180.0, LINE_RADIUS)
    out.append(
        f'<line class="symmetry" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>'
    )
    for s in sym:
        cx, cy = _xy(point_angle(s, n), RADIUS)
        out.append(
            f'<circle class="symmetry-point" cx="{cx}" cy="{cy}" r="8" fill="none" '
            'stroke="#888888" stroke-width="1"/>'
        )

    order = d.visit_order(first)
    pts = " ".join(",".join(_xy(point_angle(i, n), RADIUS)) for i in order)
    out.append(
        f'<polygon class="visit" points="{pts}" fill="none" stroke="#3366cc" '
        'stroke-width="1"/>'
    )

    for i in range(1, n + 1):
        cx, cy = _xy(point_angle(i, n), RADIUS)
        lx, ly = _xy(point_angle(i, n), LABEL_RADIUS)
        fill = "#cc3333" if i == first else "#000000"
        out.append(f'<circle class="point" cx="{cx}" cy="{cy}" r="4" fill="{fill}"/>')
        out.append(
            f'<text x="{lx}" y="{ly}" font-family="sans-serif" font-size="14" '
            f'text-anchor="middle" dominant-baseline="middle">'
            f'{format_letter(d.label(i))}<tspan font-size="9">{i}</tspan></text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

