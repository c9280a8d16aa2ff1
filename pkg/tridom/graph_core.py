"""Near-triangulations as combinatorial embeddings.

Conventions used throughout the package:

* ``rotation[v]`` lists the neighbours of ``v`` in clockwise order.
* ``outer`` lists the boundary cycle clockwise.
* Faces are traced with the rule "after dart (u, v) comes (v, w), where w follows u in
  rotation[v]". Under this rule the outer face is traced as ``outer`` itself and every
  inner face is traced counterclockwise.

Vertex ids are stable labels. Surgery never renumbers survivors; new vertices get fresh
ids from ``next_label``.
"""

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import networkx as nx

from .errors import (
    EdgeNotPresent,
    EmbeddingError,
    NotContractible,
    NotReducibleEdge,
    PreconditionViolated,
    ResultNotNearTriangulation,
)

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class EdgeClass(StrEnum):
    BOUNDARY = "boundary"
    DIAGONAL = "diagonal"
    INTERIOR = "interior-edge"


class ViolationKind(StrEnum):
    NON_TRIANGULAR_INNER_FACE = "NonTriangularInnerFace"
    NOT_BICONNECTED = "NotBiconnected"
    NOT_PLANAR_EMBEDDING = "NotPlanarEmbedding"
    MULTI_EDGE = "MultiEdge"
    BAD_OUTER_CYCLE = "BadOuterCycle"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str = ""

    def __str__(self):
        return f"{self.kind}({self.detail})" if self.detail else str(self.kind)


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Unordered edge; stored with ``u < v`` so sorting gives the (min, max) order."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"loop edge at {self.u}")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def __iter__(self):
        yield self.u
        yield self.v

    def __contains__(self, x: int) -> bool:
        return x == self.u or x == self.v

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __str__(self):
        return f"{self.u}-{self.v}"


def edge(a: int, b: int) -> EdgeRef:
    return EdgeRef(a, b)


def _rotate_to_min(seq: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


@dataclass(frozen=True)
class RawEmbedding:
    """Unchecked embedding data, as read from a file or typed by hand."""

    rotation: Mapping[int, tuple[int, ...]]
    outer: tuple[int, ...]
    n: int | None = None
    labels: Mapping[int, str] | None = None


@dataclass(frozen=True, eq=False)
class NearTriangulation:
    rotation: Mapping[int, tuple[int, ...]]
    outer: tuple[int, ...]
    labels: Mapping[int, str] = field(default_factory=dict)
    parents: Mapping[int, tuple[int, int]] = field(default_factory=dict)
    next_label: int = -1

    def __post_init__(self):
        rotation = {v: _rotate_to_min(nbrs) for v, nbrs in sorted(self.rotation.items())}
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "outer", _rotate_to_min(self.outer))
        floor = max(rotation, default=-1) + 1
        object.__setattr__(self, "next_label", max(self.next_label, floor))

    def __eq__(self, other):
        if not isinstance(other, NearTriangulation):
            return NotImplemented
        return self.rotation == other.rotation and self.outer == other.outer

    __hash__ = None

    def __repr__(self):
        return f"NearTriangulation(n={self.n}, h={self.h}, m={self.m})"

    # -- sizes -------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    n = vertex_count

    @property
    def h(self) -> int:
        return len(self.outer)

    @property
    def m(self) -> int:
        return self.n - self.h

    @property
    def is_mop(self) -> bool:
        return self.h == self.n

    # -- derived views -----------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.rotation)

    @cached_property
    def boundary(self) -> frozenset[int]:
        return frozenset(self.outer)

    @cached_property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.rotation if v not in self.boundary)

    @cached_property
    def _neighbor_sets(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(nbrs) for v, nbrs in self.rotation.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, a: int, b: int) -> bool:
        return a in self._neighbor_sets and b in self._neighbor_sets[a]

    @cached_property
    def edges(self) -> frozenset[EdgeRef]:
        return frozenset(EdgeRef(u, v) for u, nbrs in self.rotation.items() for v in nbrs if u < v)

    @cached_property
    def outer_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.outer)}

    def outer_successor(self, v: int) -> int:
        return self.outer[(self.outer_index[v] + 1) % self.h]

    def outer_predecessor(self, v: int) -> int:
        return self.outer[(self.outer_index[v] - 1) % self.h]

    def is_boundary_edge(self, a: int, b: int) -> bool:
        if a not in self.boundary or b not in self.boundary:
            return False
        return self.outer_successor(a) == b or self.outer_successor(b) == a

    def successor(self, v: int, u: int) -> int:
        """The neighbour following ``u`` in the clockwise rotation at ``v``."""
        nbrs = self.rotation[v]
        return nbrs[(nbrs.index(u) + 1) % len(nbrs)]

    def face_apex(self, x: int, y: int) -> int:
        """Third vertex of the face traced by the dart x -> y."""
        return self.successor(y, x)

    def apex(self, e: EdgeRef) -> int:
        """Third vertex of the inner triangle on boundary edge ``e``."""
        a, b = e
        p, q = (a, b) if self.outer_successor(a) == b else (b, a)
        # the inner dart of a boundary edge runs against the outer cycle
        return self.face_apex(q, p)

    @cached_property
    def _faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(trace_faces(self.rotation))

    def inner_faces(self) -> tuple[tuple[int, int, int], ...]:
        """Inner triangles, each traced counterclockwise."""
        outer = self.outer
        return tuple(f for f in self._faces if _rotate_to_min(f) != outer)

    def as_networkx(self) -> nx.Graph:
        return self._nx_graph

    @cached_property
    def _nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.rotation)
        graph.add_edges_from((e.u, e.v) for e in self.edges)
        return graph

    def distances_from(self, x: int) -> dict[int, int]:
        return self._distance_rows.setdefault(x, nx.single_source_shortest_path_length(self._nx_graph, x))

    @cached_property
    def _distance_rows(self) -> dict[int, dict[int, int]]:
        return {}

    def to_raw(self) -> RawEmbedding:
        return RawEmbedding(rotation=dict(self.rotation), outer=self.outer, labels=dict(self.labels) or None)

    # -- construction --------------------------------------------------------

    @classmethod
    def from_triangles(
        cls,
        triangles: Iterable[tuple[int, int, int]],
        *,
        labels: Mapping[int, str] | None = None,
        parents: Mapping[int, tuple[int, int]] | None = None,
        next_label: int = -1,
        error: type[EmbeddingError] = ResultNotNearTriangulation,
    ) -> "NearTriangulation":
        """Builds and validates a near-triangulation from counterclockwise inner triangles."""
        triangles = [tuple(t) for t in triangles]
        darts: dict[tuple[int, int], int] = {}
        for t in triangles:
            if len(set(t)) != 3:
                raise error([Violation(ViolationKind.MULTI_EDGE, f"degenerate triangle {t}")])
            for i in range(3):
                dart = (t[i], t[(i + 1) % 3])
                if dart in darts:
                    raise error([Violation(ViolationKind.NOT_PLANAR_EMBEDDING, f"dart {dart} used twice")])
                darts[dart] = t[(i + 2) % 3]
        if not triangles:
            raise error([Violation(ViolationKind.BAD_OUTER_CYCLE, "no faces")])

        # outer darts are the reverses of unmatched inner darts
        outer_next: dict[int, int] = {}
        for x, y in darts:
            if (y, x) not in darts:
                if y in outer_next:
                    raise error([Violation(ViolationKind.NOT_BICONNECTED, f"boundary touches {y} twice")])
                outer_next[y] = x
        if not outer_next:
            raise error([Violation(ViolationKind.BAD_OUTER_CYCLE, "closed surface")])
        start = min(outer_next)
        outer = [start]
        while (nxt := outer_next[outer[-1]]) != start:
            if len(outer) > len(outer_next):
                raise error([Violation(ViolationKind.BAD_OUTER_CYCLE, "boundary does not close")])
            outer.append(nxt)
        if len(outer) != len(outer_next):
            raise error([Violation(ViolationKind.NOT_BICONNECTED, "boundary has several components")])

        succ: dict[int, dict[int, int]] = {}
        for (x, y), z in darts.items():
            # face (x, y, z): at y the neighbour after x is z
            succ.setdefault(y, {})[x] = z
        for i, q in enumerate(outer):
            p, r = outer[i - 1], outer[(i + 1) % len(outer)]
            succ.setdefault(q, {})[p] = r

        rotation: dict[int, tuple[int, ...]] = {}
        for v, table in succ.items():
            first = min(table)
            cycle = [first]
            while (nxt := table.get(cycle[-1])) != first:
                if nxt is None or len(cycle) > len(table):
                    raise error([Violation(ViolationKind.NOT_BICONNECTED, f"pinched at {v}")])
                cycle.append(nxt)
            if len(cycle) != len(table):
                raise error([Violation(ViolationKind.NOT_BICONNECTED, f"pinched at {v}")])
            rotation[v] = tuple(cycle)

        labels = {v: name for v, name in (labels or {}).items() if v in rotation}
        graph = cls(rotation=rotation, outer=tuple(outer), labels=labels, parents=dict(parents or {}), next_label=next_label)
        violations = check_embedding(graph.to_raw())
        if violations:
            raise error(violations)
        return graph


def trace_faces(rotation: Mapping[int, tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Traces every face of a symmetric rotation system."""
    position = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            x, y = u, v
            while (x, y) not in seen:
                seen.add((x, y))
                face.append(x)
                nbrs = rotation[y]
                x, y = y, nbrs[(position[y][x] + 1) % len(nbrs)]
            faces.append(tuple(face))
    return faces


def _coerce_raw(raw: RawEmbedding | Mapping[str, Any]) -> RawEmbedding:
    if isinstance(raw, RawEmbedding):
        return raw
    rotation = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in raw["rotation"].items()}
    return RawEmbedding(rotation=rotation, outer=tuple(int(v) for v in raw["outer"]), n=raw.get("n"), labels=raw.get("labels"))


def check_embedding(raw: RawEmbedding | Mapping[str, Any]) -> list[Violation]:
    """Every violated near-triangulation invariant of ``raw``; empty when valid."""
    raw = _coerce_raw(raw)
    rotation, outer = raw.rotation, tuple(raw.outer)
    violations: list[Violation] = []

    if raw.n is not None and set(rotation) != set(range(raw.n)):
        violations.append(Violation(ViolationKind.NOT_PLANAR_EMBEDDING, f"vertex ids are not 0..{raw.n - 1}"))

    structural = True
    for v, nbrs in rotation.items():
        if v in nbrs:
            violations.append(Violation(ViolationKind.MULTI_EDGE, f"loop at {v}"))
            structural = False
        if len(set(nbrs)) != len(nbrs):
            violations.append(Violation(ViolationKind.MULTI_EDGE, f"parallel edges at {v}"))
            structural = False
        for u in nbrs:
            if u not in rotation or v not in rotation[u]:
                violations.append(Violation(ViolationKind.NOT_PLANAR_EMBEDDING, f"asymmetric rotation {v}->{u}"))
                structural = False

    outer_ok = len(outer) >= 3 and len(set(outer)) == len(outer) and all(v in rotation for v in outer)
    if not outer_ok:
        violations.append(Violation(ViolationKind.BAD_OUTER_CYCLE, "not a simple cycle of at least 3 known vertices"))
    if not structural or not rotation:
        return violations

    connected = _is_connected(rotation)
    if not connected:
        violations.append(Violation(ViolationKind.NOT_BICONNECTED, "disconnected"))

    faces = trace_faces(rotation)
    edge_count = sum(len(nbrs) for nbrs in rotation.values()) // 2
    if connected and len(rotation) - edge_count + len(faces) != 2:
        violations.append(Violation(ViolationKind.NOT_PLANAR_EMBEDDING, "Euler characteristic is not 2"))

    outer_face = None
    if outer_ok:
        wanted = _rotate_to_min(outer)
        for i, f in enumerate(faces):
            if _rotate_to_min(f) == wanted:
                outer_face = i
                break
        if outer_face is None:
            reverse = _rotate_to_min(reversed(outer))
            hint = "listed counterclockwise" if any(_rotate_to_min(f) == reverse for f in faces) else "not a face"
            violations.append(Violation(ViolationKind.BAD_OUTER_CYCLE, hint))

    for i, f in enumerate(faces):
        if i == outer_face:
            continue
        if len(f) != 3:
            violations.append(Violation(ViolationKind.NON_TRIANGULAR_INNER_FACE, f"face {i}: {f}"))

    if connected and any(len(set(f)) != len(f) for f in faces):
        violations.append(Violation(ViolationKind.NOT_BICONNECTED, "a face boundary repeats a vertex"))
    return violations


def _is_connected(rotation: Mapping[int, tuple[int, ...]]) -> bool:
    start = next(iter(rotation))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in rotation[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(rotation)


def validate(raw: RawEmbedding | Mapping[str, Any]) -> NearTriangulation:
    """Checks raw embedding data; raises EmbeddingError listing every violation."""
    raw = _coerce_raw(raw)
    violations = check_embedding(raw)
    if violations:
        raise EmbeddingError(violations)
    return NearTriangulation(rotation=raw.rotation, outer=tuple(raw.outer), labels=dict(raw.labels or {}))


def _require_edge(g: NearTriangulation, e: EdgeRef) -> None:
    if not g.has_edge(e.u, e.v):
        raise EdgeNotPresent(f"edge {e} is not in the graph", edge=str(e))


def classify_edge(g: NearTriangulation, e: EdgeRef) -> EdgeClass:
    _require_edge(g, e)
    if e.u in g.boundary and e.v in g.boundary:
        return EdgeClass.BOUNDARY if g.is_boundary_edge(e.u, e.v) else EdgeClass.DIAGONAL
    return EdgeClass.INTERIOR


def _rebuild(g: NearTriangulation, triangles, *, error=ResultNotNearTriangulation, parents=None, next_label=None):
    return NearTriangulation.from_triangles(
        triangles,
        labels=g.labels,
        parents=g.parents if parents is None else parents,
        next_label=g.next_label if next_label is None else next_label,
        error=error,
    )


def remove_vertices(g: NearTriangulation, vs: Iterable[int]) -> NearTriangulation:
    doomed = frozenset(vs)
    missing = doomed - set(g.rotation)
    if missing:
        raise ResultNotNearTriangulation([Violation(ViolationKind.NOT_PLANAR_EMBEDDING, f"unknown vertices {sorted(missing)}")])
    kept = [t for t in g.inner_faces() if not doomed.intersection(t)]
    survivors = {v for t in kept for v in t}
    stranded = set(g.rotation) - doomed - survivors
    if stranded:
        raise ResultNotNearTriangulation([Violation(ViolationKind.NOT_BICONNECTED, f"stranded vertices {sorted(stranded)}")])
    return _rebuild(g, kept)


def remove_vertex(g: NearTriangulation, u: int) -> NearTriangulation:
    return remove_vertices(g, (u,))


def remove_edge(g: NearTriangulation, e: EdgeRef) -> NearTriangulation:
    """Deletes a reducible boundary edge; the order stays, one interior vertex surfaces."""
    _require_edge(g, e)
    if not g.is_boundary_edge(e.u, e.v):
        raise NotReducibleEdge(f"{e} is not a boundary edge", edge=str(e))
    w = g.apex(e)
    if w in g.boundary:
        raise NotReducibleEdge(f"the triangle on {e} has boundary apex {w}", edge=str(e))
    face = {e.u, e.v, w}
    result = _rebuild(g, [t for t in g.inner_faces() if set(t) != face])
    assert result.n == g.n and result.m == g.m - 1
    return result


def contract_edge(g: NearTriangulation, e: EdgeRef) -> NearTriangulation:
    """Merges the endpoints of ``e`` into the fresh vertex ``g.next_label``."""
    _require_edge(g, e)
    w = g.next_label
    triangles = []
    for t in g.inner_faces():
        if e.u in t and e.v in t:
            continue
        triangles.append(tuple(w if x in e else x for x in t))
    parents = {**g.parents, w: (e.u, e.v)}
    labels = g.labels
    result = NearTriangulation.from_triangles(triangles, labels=labels, parents=parents, next_label=w + 1, error=NotContractible)
    assert result.n == g.n - 1
    return result


def is_contractible(g: NearTriangulation, e: EdgeRef) -> bool:
    _require_edge(g, e)
    try:
        contract_edge(g, e)
    except NotContractible:
        return False
    return True


def contraction_parents(g: NearTriangulation, w: int) -> tuple[int, int] | None:
    return g.parents.get(w)


def attach_ear(g: NearTriangulation, a: int, b: int) -> tuple[NearTriangulation, int]:
    """Adds a new degree-2 vertex on boundary edge ab; returns the graph and the new id."""
    if not g.is_boundary_edge(a, b):
        raise ResultNotNearTriangulation([Violation(ViolationKind.BAD_OUTER_CYCLE, f"{a}-{b} is not a boundary edge")])
    p, q = (a, b) if g.outer_successor(a) == b else (b, a)
    x = g.next_label
    return _rebuild(g, list(g.inner_faces()) + [(p, q, x)], next_label=x + 1), x


def relabel(g: NearTriangulation, mapping: Mapping[int, int]) -> NearTriangulation:
    """Renames vertices; ids missing from ``mapping`` keep their name."""
    name = lambda v: mapping.get(v, v)  # noqa: E731
    images = [name(v) for v in g.rotation]
    if len(set(images)) != len(images):
        raise ValueError("relabelling is not injective")
    return NearTriangulation(
        rotation={name(v): tuple(name(u) for u in nbrs) for v, nbrs in g.rotation.items()},
        outer=tuple(name(v) for v in g.outer),
        labels={name(v): s for v, s in g.labels.items()},
        parents={name(w): (name(a), name(b)) for w, (a, b) in g.parents.items()},
        next_label=max(g.next_label, max(images) + 1),
    )


def distance(g: NearTriangulation, x: int, y: int) -> int:
    """Hop distance; raises PreconditionViolated for a vertex not in ``g`` or one out of reach."""
    for v in (x, y):
        if v not in g.rotation:
            raise PreconditionViolated(f"{v} is not a vertex", vertex=v)
    if x == y:
        return 0
    hops = g.distances_from(x).get(y)
    if hops is None:
        raise PreconditionViolated(f"{y} is not reachable from {x}", source=x, target=y)
    return hops
