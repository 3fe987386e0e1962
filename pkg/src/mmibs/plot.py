"""Deterministic SVG drawings of wall arrangements for pairs of ideals."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import UnsupportedInput

SIZE = 400
MARGIN = 40


def _fmt(q: Fraction) -> str:
    milli = round(Fraction(q) * 1000)
    sign = "-" if milli < 0 else ""
    milli = abs(milli)
    return f"{sign}{milli // 1000}.{milli % 1000:03d}"


def _clip(coeffs, rhs, box_max: Fraction):
    """Endpoints of coeffs . z = rhs inside [0, box_max]^2, or None."""
    a, b = (Fraction(c) for c in coeffs)
    rhs = Fraction(rhs)
    pts = set()
    for x in (Fraction(0), box_max):
        if b:
            y = (rhs - a * x) / b
            if 0 <= y <= box_max:
                pts.add((x, y))
    for y in (Fraction(0), box_max):
        if a:
            x = (rhs - b * y) / a
            if 0 <= x <= box_max:
                pts.add((x, y))
    pts = sorted(pts)
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def wall_plot_svg(walls, box_max=1, points: Sequence = (), alpha=None, ray_points: Sequence = ()) -> str:
    box_max = Fraction(box_max)
    scale = Fraction(SIZE - 2 * MARGIN) / box_max

    def xy(p):
        return _fmt(MARGIN + p[0] * scale), _fmt(SIZE - MARGIN - p[1] * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE - 2 * MARGIN}" height="{SIZE - 2 * MARGIN}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for w in walls:
        seg = _clip(w.coeffs, w.rhs, box_max)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = xy(seg[0]), xy(seg[1])
        label = " + ".join(f"{c}*z{i + 1}" if c != 1 else f"z{i + 1}" for i, c in enumerate(w.coeffs) if c)
        label += f" = {w.rhs}"
        lines.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="steelblue" stroke-width="1.5">'
            f"<title>{label}</title></line>"
        )
    if alpha is not None:
        a1, a2 = (Fraction(a) for a in alpha)
        t = box_max / max(a1, a2)
        (x1, y1), (x2, y2) = xy((Fraction(0), Fraction(0))), xy((a1 * t, a2 * t))
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="gray" stroke-dasharray="4 3"/>')
        for p in ray_points:
            cx, cy = xy(p)
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="none" stroke="crimson" stroke-width="1.5"/>')
    for p in points:
        cx, cy = xy(p)
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="2.5" fill="crimson"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_wall_plot(walls, path, box_max=1, points: Sequence = (), alpha=None, ray_points: Sequence = (), ell: int = 2) -> Path:
    """Write the wall arrangement in [0, box_max]^2 with marked jumping points."""
    if ell != 2:
        raise UnsupportedInput(f"wall plots need exactly two ideals, got {ell}")
    path = Path(path)
    path.write_text(wall_plot_svg(walls, box_max, points, alpha, ray_points), encoding="utf-8")
    return path
