"""SVG pictures of near-triangulations with a highlighted dominating set.

Vertices without input coordinates are placed by barycentric relaxation: the outer cycle
is pinned to a regular polygon and every other vertex moves to the average of its
neighbours, repeated a fixed number of times.
"""

import logging
from collections.abc import Iterable, Mapping
from xml.sax.saxutils import escape

import numpy as np

from .config import DEFAULT_CONFIG, SolverConfig
from .graph_core import NearTriangulation

logger = logging.getLogger(__name__)

SVG_HEADER = """<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="{size}" height="{size}" viewBox="0 0 {size} {size}" version="1.1" xmlns="http://www.w3.org/2000/svg">
"""
SVG_FOOTER = "</svg>\n"


def barycentric_layout(
    g: NearTriangulation, iterations: int | None = None, coords: Mapping[int, Iterable[float]] | None = None
) -> dict[int, np.ndarray]:
    """Positions in the unit square; given ``coords`` are kept and pinned."""
    iterations = DEFAULT_CONFIG.layout_iterations if iterations is None else iterations
    order = list(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    pos = np.zeros((g.n, 2))

    h = g.h
    angles = -np.pi / 2 + 2 * np.pi * np.arange(h) / h
    for i, v in enumerate(g.outer):
        pos[index[v]] = 0.5 + 0.45 * np.array([np.cos(angles[i]), np.sin(angles[i])])
    pinned = set(g.outer)
    if coords:
        for v, xy in coords.items():
            if v in index:
                pos[index[v]] = np.asarray(list(xy), dtype=float)
                pinned.add(v)
    free = [index[v] for v in order if v not in pinned]
    if free and iterations > 0:
        pos[free] = 0.5
        adjacency = np.zeros((g.n, g.n))
        for v in order:
            for u in g.neighbors(v):
                adjacency[index[v], index[u]] = 1.0
        weights = adjacency[free] / adjacency[free].sum(axis=1, keepdims=True)
        for _ in range(iterations):
            pos[free] = weights @ pos
    return {v: pos[index[v]] for v in order}


def _fit(positions: Mapping[int, np.ndarray], size: float, margin: float) -> dict[int, np.ndarray]:
    points = np.array(list(positions.values()))
    lo, hi = points.min(axis=0), points.max(axis=0)
    span = max(float((hi - lo).max()), 1e-9)
    scale = (size - 2 * margin) / span
    return {v: margin + (p - lo) * scale for v, p in positions.items()}


class SvgRenderer:
    """Draws edges, vertices with their labels, chosen vertices and their pairing arcs."""

    def __init__(
        self,
        size: int = 480,
        radius: float = 6.0,
        edge_color: str = "#999999",
        vertex_color: str = "#ffffff",
        chosen_color: str = "#d62728",
        arc_color: str = "#1f77b4",
        show_labels: bool = True,
    ):
        self.size = size
        self.radius = radius
        self.edge_color = edge_color
        self.vertex_color = vertex_color
        self.chosen_color = chosen_color
        self.arc_color = arc_color
        self.show_labels = show_labels

    def line(self, a: np.ndarray, b: np.ndarray, color: str, width: float) -> str:
        return f'  <line x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" style="stroke:{color};stroke-width:{width}"/>\n'

    def arc(self, a: np.ndarray, b: np.ndarray) -> str:
        mid = (a + b) / 2
        normal = np.array([a[1] - b[1], b[0] - a[0]])
        bend = mid + 0.25 * normal
        return (
            f'  <path d="M {a[0]:.2f} {a[1]:.2f} Q {bend[0]:.2f} {bend[1]:.2f} {b[0]:.2f} {b[1]:.2f}" '
            f'style="fill:none;stroke:{self.arc_color};stroke-width:2.5;stroke-dasharray:6,3"/>\n'
        )

    def dot(self, p: np.ndarray, color: str) -> str:
        return f'  <circle cx="{p[0]:.2f}" cy="{p[1]:.2f}" r="{self.radius}" style="stroke:black;stroke-width:1;fill:{color}"/>\n'

    def text(self, p: np.ndarray, label: str) -> str:
        x, y = p[0] + self.radius + 1, p[1] - self.radius - 1
        return f'  <text x="{x:.2f}" y="{y:.2f}" style="font-family:Verdana;font-size:11">{escape(label)}</text>\n'

    def render(self, g: NearTriangulation, positions: Mapping[int, np.ndarray], pairs: Iterable[Iterable[int]] = ()) -> str:
        pos = _fit(positions, self.size, margin=3 * self.radius)
        pairs = [tuple(p) for p in pairs]
        chosen = {v for p in pairs for v in p}
        parts = [SVG_HEADER.format(size=self.size)]
        parts += [self.line(pos[e.u], pos[e.v], self.edge_color, 1.5) for e in sorted(g.edges)]
        parts += [self.arc(pos[a], pos[b]) for a, b in pairs]
        for v in g.vertices:
            parts.append(self.dot(pos[v], self.chosen_color if v in chosen else self.vertex_color))
            if self.show_labels:
                parts.append(self.text(pos[v], g.labels.get(v, str(v))))
        parts.append(SVG_FOOTER)
        return "".join(parts)


def render_svg(
    g: NearTriangulation,
    pairs: Iterable[Iterable[int]] = (),
    coords: Mapping[int, Iterable[float]] | None = None,
    config: SolverConfig = DEFAULT_CONFIG,
) -> str:
    pairs = [tuple(p) for p in pairs]
    positions = barycentric_layout(g, config.layout_iterations, coords)
    logger.debug("rendering n=%d with %d highlighted pairs", g.n, len(pairs))
    return SvgRenderer().render(g, positions, pairs)
