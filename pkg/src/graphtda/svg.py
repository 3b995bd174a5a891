"""Hand-emitted SVG rendering of persistence diagrams and extended-PBN heatmaps.

No plotting dependency: a fixed 600x600 viewport, linear scales with 5%
margins, and rounded coordinates keep the output byte-stable across runs.
"""

from __future__ import annotations

import math

SIZE = 600
MARGIN = 0.05

_DEGREE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _label(x: float) -> str:
    if x == math.inf:
        return "inf"
    if x == -math.inf:
        return "-inf"
    return f"{x:g}"


class _Scale:
    """Maps a data interval onto the padded viewport, y axis flipped."""

    def __init__(self, lo: float, hi: float):
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
            lo, hi = 0.0, 1.0
        self.lo, self.hi = lo, hi
        self.inner = SIZE * (1 - 2 * MARGIN)

    def clamp(self, x: float) -> float:
        return min(max(x, self.lo), self.hi)

    def x(self, v: float) -> float:
        t = (self.clamp(v) - self.lo) / (self.hi - self.lo)
        return SIZE * MARGIN + t * self.inner

    def y(self, v: float) -> float:
        t = (self.clamp(v) - self.lo) / (self.hi - self.lo)
        return SIZE * (1 - MARGIN) - t * self.inner


def _document(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _frame(scale: _Scale, fill: str = "white") -> list[str]:
    x0, x1 = _fmt(scale.x(scale.lo)), _fmt(scale.x(scale.hi))
    y0, y1 = _fmt(scale.y(scale.lo)), _fmt(scale.y(scale.hi))
    return [
        f'<rect x="{x0}" y="{y1}" width="{_fmt(scale.inner)}" height="{_fmt(scale.inner)}" '
        f'fill="{fill}" stroke="black" stroke-width="1"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>',
        f'<text x="{x0}" y="{_fmt(SIZE * (1 - MARGIN) + 16)}" font-size="12" '
        f'font-family="monospace">{_label(scale.lo)}</text>',
        f'<text x="{x1}" y="{_fmt(SIZE * (1 - MARGIN) + 16)}" font-size="12" '
        f'font-family="monospace" text-anchor="end">{_label(scale.hi)}</text>',
    ]


def _finite_coords(diagram_docs: list[dict]) -> list[float]:
    out = []
    for doc in diagram_docs:
        for p in doc.get("points", ()):
            for key in ("birth", "death"):
                v = p[key]
                if isinstance(v, (int, float)) and math.isfinite(v):
                    out.append(float(v))
        for e in doc.get("essential", ()):
            v = e["birth"]
            if isinstance(v, (int, float)) and math.isfinite(v):
                out.append(float(v))
    return out


def render_diagrams(diagram_docs: list[dict]) -> str:
    """Diagram plot: diagonal, proper points (area grows with multiplicity),
    essential births as upward rays. Degrees are overlaid, one color each."""
    coords = _finite_coords(diagram_docs)
    if coords:
        lo, hi = min(coords), max(coords)
        pad = (hi - lo) * 0.1 or 1.0
        scale = _Scale(lo - pad, hi + pad)
    else:
        scale = _Scale(0.0, 1.0)
    body = _frame(scale)
    top = SIZE * MARGIN
    for doc in diagram_docs:
        color = _DEGREE_COLORS[doc.get("dimension", 0) % len(_DEGREE_COLORS)]
        for e in doc.get("essential", ()):
            b = _decode_plot(e["birth"])
            px = _fmt(scale.x(b))
            body.append(
                f'<line x1="{px}" y1="{_fmt(scale.y(b))}" x2="{px}" y2="{_fmt(top)}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
            body.append(
                f'<circle cx="{px}" cy="{_fmt(top)}" r="{_fmt(3.0 * math.sqrt(e.get("multiplicity", 1)))}" '
                f'fill="{color}"/>'
            )
        for p in doc.get("points", ()):
            b = _decode_plot(p["birth"])
            d = _decode_plot(p["death"])
            r = 4.0 * math.sqrt(p.get("multiplicity", 1))
            body.append(
                f'<circle cx="{_fmt(scale.x(b))}" cy="{_fmt(scale.y(d))}" r="{_fmt(r)}" '
                f'fill="{color}" fill-opacity="0.75"/>'
            )
    return _document(body)


def _decode_plot(v) -> float:
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    return float(v)


def render_extended_grid(grid_doc: dict) -> str:
    """Heatmap of an extended-PBN sample grid over both half-planes.

    Cell shade scales linearly from white (0) to a dark blue at the grid
    maximum; the diagonal is drawn on top.
    """
    coords = [float(c) for c in grid_doc["coordinates"]]
    values = grid_doc["values"]
    if len(coords) < 2:
        raise ValueError("extended grid needs at least two sample coordinates")
    scale = _Scale(coords[0], coords[-1])
    vmax = max((v for row in values for v in row), default=0)
    bounds = [coords[0]]
    for a, b in zip(coords, coords[1:]):
        bounds.append((a + b) / 2)
    bounds.append(coords[-1])
    body = []
    for i, u in enumerate(coords):
        for j, _v in enumerate(coords):
            val = values[i][j]
            shade = 0.0 if vmax == 0 else val / vmax
            red = round(255 - 200 * shade)
            green = round(255 - 170 * shade)
            x0 = scale.x(bounds[i])
            x1 = scale.x(bounds[i + 1])
            y0 = scale.y(bounds[j + 1])
            y1 = scale.y(bounds[j])
            body.append(
                f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(x1 - x0)}" '
                f'height="{_fmt(y1 - y0)}" fill="rgb({red},{green},255)"/>'
            )
    body.extend(_frame(scale, fill="none"))
    return _document(body)
