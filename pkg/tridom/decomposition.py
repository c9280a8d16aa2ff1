"""Reducible edges, the regions cut out by the boundary subgraph, and terminal polygons.

Regions are read off the rotation system restricted to boundary vertices, so no geometry
is involved. Whether a region holds interior vertices is decided by flooding the inner
faces of the graph from the region's own darts without crossing any boundary-to-boundary
edge.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InternalAssertion, NotIrreducible, ensure
from .graph_core import EdgeRef, NearTriangulation, remove_vertices, trace_faces

logger = logging.getLogger(__name__)

MOP, REDUCIBLE, IRREDUCIBLE = "mop", "reducible", "irreducible"


def find_reducible_edge(g: NearTriangulation) -> EdgeRef | None:
    """The least boundary edge whose inner triangle has an interior apex."""
    if g.is_mop:
        return None
    boundary_edges = sorted(EdgeRef(v, g.outer_successor(v)) for v in g.outer)
    for e in boundary_edges:
        if g.apex(e) not in g.boundary:
            return e
    return None


def classify(g: NearTriangulation) -> str:
    """One of "mop", "reducible" or "irreducible"."""
    if g.is_mop:
        return MOP
    return REDUCIBLE if find_reducible_edge(g) is not None else IRREDUCIBLE


@dataclass(frozen=True)
class Region:
    polygon: tuple[int, ...]
    empty: bool

    @property
    def sides(self) -> tuple[EdgeRef, ...]:
        k = len(self.polygon)
        return tuple(EdgeRef(self.polygon[i], self.polygon[(i + 1) % k]) for i in range(k))


def _canonical(cycle) -> tuple[int, ...]:
    cycle = tuple(cycle)
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def region_interior(g: NearTriangulation, polygon) -> frozenset[int]:
    """Interior vertices of ``g`` lying inside ``polygon`` (traced like an inner face)."""
    face_of: dict[tuple[int, int], tuple[int, int, int]] = {}
    for f in g.inner_faces():
        for i in range(3):
            face_of[(f[i], f[(i + 1) % 3])] = f

    k = len(polygon)
    start = [face_of[(polygon[i], polygon[(i + 1) % k])] for i in range(k) if (polygon[i], polygon[(i + 1) % k]) in face_of]
    seen = set(start)
    queue = deque(start)
    found: set[int] = set()
    while queue:
        f = queue.popleft()
        for i in range(3):
            x, y = f[i], f[(i + 1) % 3]
            if x not in g.boundary:
                found.add(x)
            if x in g.boundary and y in g.boundary:
                continue
            nxt = face_of.get((y, x))
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(found)


def boundary_subgraph_regions(g: NearTriangulation) -> list[Region]:
    """Bounded faces of the subgraph induced by the outer cycle, each tagged empty or not."""
    restricted = {v: tuple(u for u in g.rotation[v] if u in g.boundary) for v in g.outer}
    outer = _canonical(g.outer)
    inner_triangles = {_canonical(f) for f in g.inner_faces()}
    regions = []
    for face in trace_faces(restricted):
        polygon = _canonical(face)
        if polygon == outer:
            continue
        empty = len(polygon) == 3 and polygon in inner_triangles
        if not empty and not region_interior(g, polygon):
            empty = True
        regions.append(Region(polygon=polygon, empty=empty))
    return regions


@dataclass(frozen=True)
class TerminalDecomposition:
    """A terminal polygon with the flank MOPs glued onto its sides.

    ``polygon`` is listed in clockwise boundary order starting at its least vertex; flank
    ``j`` lies beyond side ``v_j v_(j+1)`` and ``flank_paths[j]`` is its boundary path from
    ``v_j`` clockwise to ``v_(j+1)``.
    """

    polygon: tuple[int, ...]
    interior: frozenset[int]
    flank_vertices: tuple[frozenset[int], ...]
    flank_paths: tuple[tuple[int, ...], ...]
    special_index: int | None

    @property
    def k(self) -> int:
        return len(self.polygon)

    @cached_property
    def sides(self) -> tuple[EdgeRef, ...]:
        return tuple(EdgeRef(self.polygon[j], self.polygon[(j + 1) % self.k]) for j in range(self.k))

    @cached_property
    def flank_orders(self) -> tuple[int, ...]:
        return tuple(len(vs) for vs in self.flank_vertices)

    @cached_property
    def flank_is_mop(self) -> tuple[bool, ...]:
        return tuple(len(vs) == len(path) for vs, path in zip(self.flank_vertices, self.flank_paths))

    def endpoints(self, j: int) -> tuple[int, int]:
        return self.polygon[j % self.k], self.polygon[(j + 1) % self.k]

    def inner_flank_vertices(self, j: int) -> frozenset[int]:
        return self.flank_vertices[j] - set(self.endpoints(j))

    def is_plain(self, j: int) -> bool:
        """True when flank ``j`` is a MOP other than the special flank."""
        return j != self.special_index and self.flank_is_mop[j]


def flank_path(td: TerminalDecomposition, j: int) -> tuple[int, ...]:
    return td.flank_paths[j % td.k]


def flank_graph(g: NearTriangulation, td: TerminalDecomposition, j: int) -> NearTriangulation:
    """The near-triangulation beyond side ``j`` (a MOP unless ``j`` is the special index)."""
    keep = td.flank_vertices[j % td.k]
    return remove_vertices(g, set(g.rotation) - keep)


def inner_part(g: NearTriangulation, td: TerminalDecomposition, j: int) -> NearTriangulation:
    """The near-triangulation on the polygon's side of side ``j``."""
    return remove_vertices(g, td.inner_flank_vertices(j))


def _arc(g: NearTriangulation, a: int, b: int) -> tuple[int, ...]:
    path = [a]
    while path[-1] != b:
        path.append(g.outer_successor(path[-1]))
    return tuple(path)


def _flank(g: NearTriangulation, a: int, b: int) -> tuple[frozenset[int], tuple[int, ...]]:
    path = _arc(g, a, b)
    stop = {a, b}
    seen = set(path[1:-1])
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen and y not in stop:
                seen.add(y)
                queue.append(y)
    return frozenset(seen | stop), path


def _decompose(g: NearTriangulation, region: Region) -> TerminalDecomposition | None:
    polygon = tuple(sorted(region.polygon, key=lambda v: g.outer_index[v]))
    i = polygon.index(min(polygon))
    polygon = polygon[i:] + polygon[:i]
    flanks = [_flank(g, polygon[j], polygon[(j + 1) % len(polygon)]) for j in range(len(polygon))]
    loaded = [j for j, (vs, path) in enumerate(flanks) if len(vs) != len(path)]
    if len(loaded) > 1:
        return None
    return TerminalDecomposition(
        polygon=polygon,
        interior=region_interior(g, region.polygon),
        flank_vertices=tuple(vs for vs, _ in flanks),
        flank_paths=tuple(path for _, path in flanks),
        special_index=loaded[0] if loaded else None,
    )


def find_terminal_polygon(g: NearTriangulation) -> TerminalDecomposition:
    """The terminal polygon whose least vertex is smallest."""
    state = classify(g)
    if state != IRREDUCIBLE:
        raise NotIrreducible(f"graph is {state}", state=state)
    candidates = sorted((r for r in boundary_subgraph_regions(g) if not r.empty), key=lambda r: min(r.polygon))
    for region in candidates:
        td = _decompose(g, region)
        if td is not None:
            ensure(all(order >= 3 for order in td.flank_orders), "terminal polygon with a boundary side", polygon=td.polygon)
            logger.debug("terminal polygon %s with flank orders %s", td.polygon, td.flank_orders)
            return td
    raise InternalAssertion("irreducible graph without a terminal polygon", regions=[r.polygon for r in candidates])
