"""SVG drawing of an arrangement and its bounded chambers.

Output is a deterministic string: elements are emitted in id order and
coordinates are decimal approximations rounded to a fixed precision. The
exact values are used for everything except the final formatting.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from html import escape
from typing import TYPE_CHECKING

from arrangement_lattice.geometry.predicates import bounding_box, clip_line

if TYPE_CHECKING:
    from pathlib import Path

    from arrangement_lattice.chambers.models import ChamberComplex
    from arrangement_lattice.geometry.models import Point

logger = logging.getLogger(__name__)

ns_svg = "http://www.w3.org/2000/svg"
CANVAS = 800
PRECISION = 3

# fill colour per n-gon size; larger polygons share the last one
NGON_FILLS = {3: "#f4a582", 4: "#92c5de", 5: "#b2df8a", 6: "#cab2d6"}
DEFAULT_FILL = "#fdbf6f"


def demangle(key: str) -> str:
    return key.rstrip("_").replace("_", "-")


def rounder(value: float) -> str:
    text = f"{value:.{PRECISION}f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def props_repr(props: dict[str, str | float]) -> str:
    parts = []
    for key, value in props.items():
        text = rounder(value) if isinstance(value, float) else escape(str(value))
        parts.append(f'{demangle(key)}="{text}"')
    return " ".join(parts)


def element(tag: str, content: str | None = None, **props: str | float) -> str:
    attrs = props_repr(props)
    opening = f"<{tag} {attrs}" if attrs else f"<{tag}"
    if content is None:
        return f"{opening}/>"
    return f"{opening}>{content}</{tag}>"


class Viewport:
    """Maps exact plane coordinates to SVG pixels, flipping the y axis."""

    def __init__(self, lo: Point, hi: Point, size: int = CANVAS) -> None:
        self.lo = lo
        self.hi = hi
        span = max(hi.x - lo.x, hi.y - lo.y)
        self.scale = Fraction(size) / span
        self.width = float((hi.x - lo.x) * self.scale)
        self.height = float((hi.y - lo.y) * self.scale)

    def __call__(self, point: Point) -> tuple[float, float]:
        return float((point.x - self.lo.x) * self.scale), float((self.hi.y - point.y) * self.scale)


def render_svg(cc: ChamberComplex) -> str:
    """Draw lines, shaded bounded chambers with labels, and vertices.

    Lines are clipped to a box containing every vertex with a margin.

    Args:
        cc: Chamber complex

    Returns:
        SVG document text
    """
    anchors = [v.point for v in cc.vertices] + [ln.foot_point() for ln in cc.arrangement]
    lo, hi = bounding_box(anchors)
    view = Viewport(lo, hi)
    body: list[str] = [element("rect", x=0.0, y=0.0, width=view.width, height=view.height, fill="white")]

    for chamber in cc.bounded_chambers():
        corners = " ".join(
            f"{rounder(x)},{rounder(y)}" for x, y in (view(cc.vertices[v].point) for v in chamber.vertex_cycle)
        )
        fill = NGON_FILLS.get(chamber.n_gon, DEFAULT_FILL)
        body.append(element("polygon", points=corners, fill=fill, stroke="none", class_="chamber"))

    for line in cc.arrangement:
        (x1, y1), (x2, y2) = (view(p) for p in clip_line(line, lo, hi))
        body.append(element("line", x1=x1, y1=y1, x2=x2, y2=y2, stroke="black", stroke_width=1.5, class_="line"))

    for vertex in cc.vertices:
        cx, cy = view(vertex.point)
        body.append(element("circle", cx=cx, cy=cy, r=4.0, fill="black", class_="vertex"))

    for chamber in cc.bounded_chambers():
        x, y = view(chamber.interior_point)
        label = f"C{chamber.id} ({chamber.n_gon}-gon)"
        body.append(
            element("text", escape(label), x=x, y=y, font_size=12.0, text_anchor="middle", class_="label")
        )

    svg = element(
        "svg",
        "\n" + "\n".join(body) + "\n",
        xmlns=ns_svg,
        width=view.width,
        height=view.height,
        viewBox=f"0 0 {rounder(view.width)} {rounder(view.height)}",
    )
    logger.debug(f"Rendered {len(cc.bounded_chamber_ids)} chambers and {len(cc.vertices)} vertices")
    return svg + "\n"


def write_svg(cc: ChamberComplex, path: Path) -> None:
    """Render and write an SVG file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_svg(cc), encoding="utf-8")
    logger.info(f"Wrote SVG to {path}")
