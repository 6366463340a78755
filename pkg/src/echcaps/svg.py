"""Static SVG figures for profiles and packings.

Coordinates are converted to floats here and only here; nothing computed from
these values flows back into the library.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .domains import ConcaveProfile
from .geometry import format_rational
from .weights import PlacedTriangle

_TRIANGLE_FILLS = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2")


def profile_svg(
    profile: ConcaveProfile,
    triangles: Sequence[PlacedTriangle] = (),
    width: int = 800,
    height: int = 600,
) -> str:
    """Render the boundary chain, axes, and optional packed triangles."""
    xs = [float(v.x) for v in profile.vertices]
    ys = [float(v.y) for v in profile.vertices]
    for tri in triangles:
        xs.extend(float(p.x) for p in tri.vertices)
        ys.extend(float(p.y) for p in tri.vertices)
    extent_x = max(xs + [1.0])
    extent_y = max(ys + [1.0])
    if profile.infinite_tail:
        extent_x = max(extent_x * 1.25, extent_x + float(profile.vertices[-1].y))

    margin = 40.0
    scale = min((width - 2 * margin) / extent_x, (height - 2 * margin) / extent_y)

    def px(x: float) -> float:
        return margin + x * scale

    def py(y: float) -> float:
        return height - margin - y * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{px(0):.2f}" y1="{py(0):.2f}" x2="{px(extent_x * 1.02):.2f}" '
        f'y2="{py(0):.2f}" stroke="#888" stroke-width="1"/>',
        f'<line x1="{px(0):.2f}" y1="{py(0):.2f}" x2="{px(0):.2f}" '
        f'y2="{py(extent_y * 1.02):.2f}" stroke="#888" stroke-width="1"/>',
    ]

    for index, tri in enumerate(triangles):
        points = " ".join(f"{px(float(p.x)):.2f},{py(float(p.y)):.2f}" for p in tri.vertices)
        fill = _TRIANGLE_FILLS[index % len(_TRIANGLE_FILLS)]
        parts.append(
            f'<polygon points="{points}" fill="{fill}" fill-opacity="0.45" '
            f'stroke="{fill}" stroke-width="1"/>'
        )
        cx = sum(float(p.x) for p in tri.vertices) / 3
        cy = sum(float(p.y) for p in tri.vertices) / 3
        label = format_rational(Fraction(tri.size))
        parts.append(
            f'<text x="{px(cx):.2f}" y="{py(cy):.2f}" font-size="12" '
            f'text-anchor="middle" fill="#222">{label}</text>'
        )

    chain = " ".join(f"{px(float(v.x)):.2f},{py(float(v.y)):.2f}" for v in profile.vertices)
    parts.append(
        f'<polyline points="{chain}" fill="none" stroke="#1f1f1f" stroke-width="2"/>'
    )
    if profile.infinite_tail:
        last = profile.vertices[-1]
        parts.append(
            f'<line x1="{px(float(last.x)):.2f}" y1="{py(float(last.y)):.2f}" '
            f'x2="{px(extent_x * 1.02):.2f}" y2="{py(float(last.y)):.2f}" '
            f'stroke="#1f1f1f" stroke-width="2" stroke-dasharray="6 4"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(content)
