"""Constant-size helpers on maximal outerplanar graphs (MOPs).

The size-2 sets are found by trying every pair in lexicographic order. The existence of a
qualifying pair is a known fact for these orders, so failing to find one is an internal
error rather than a user-facing one.
"""

from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from .errors import BadOrder, IsFamilyF, NotBoundaryEdge, NotMop, TooSmall, ensure
from .graph_core import EdgeRef, NearTriangulation, remove_vertices


@dataclass(frozen=True, order=True)
class Td2Set:
    """Two adjacent vertices that totally dominate their host MOP."""

    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def __contains__(self, v: int) -> bool:
        return v == self.a or v == self.b

    def other(self, v: int) -> int:
        return self.b if v == self.a else self.a


def is_mop(g: NearTriangulation) -> bool:
    return g.is_mop


def _require_mop(g: NearTriangulation, *orders: int) -> None:
    if orders and g.n not in orders:
        raise BadOrder(f"expected order {' or '.join(map(str, orders))}, got {g.n}", n=g.n)
    if not g.is_mop:
        raise NotMop(f"graph has {g.m} interior vertices", m=g.m)


def totally_dominates(g: NearTriangulation, pair) -> bool:
    chosen = set(pair)
    return all(g.neighbors(v) & chosen for v in g.vertices)


def _least_pair(g: NearTriangulation, accept: Callable[[int, int], bool], what: str) -> Td2Set:
    for a, b in combinations(g.vertices, 2):
        if g.has_edge(a, b) and accept(a, b) and totally_dominates(g, (a, b)):
            return Td2Set(a, b)
    ensure(False, f"no {what} in a MOP of order {g.n}", n=g.n)


def td2_pentagon(g: NearTriangulation, u: int) -> Td2Set:
    """A total dominating pair of an order-5 MOP containing ``u``."""
    _require_mop(g, 5)
    if u not in g.rotation:
        raise BadOrder(f"{u} is not a vertex of the pentagon", vertex=u)
    return _least_pair(g, lambda a, b: u in (a, b), f"total dominating pair through {u}")


def td2_hexagon(g: NearTriangulation, e: EdgeRef) -> Td2Set:
    """A total dominating pair of an order-6 MOP meeting ``e`` in exactly one endpoint."""
    _require_mop(g, 6)
    if not g.is_boundary_edge(e.u, e.v):
        raise NotBoundaryEdge(f"{e} is not a boundary edge", edge=str(e))
    return _least_pair(g, lambda a, b: (a in e) != (b in e), f"total dominating pair meeting {e} once")


def td2_heptagon(g: NearTriangulation) -> Td2Set:
    _require_mop(g, 7)
    return _least_pair(g, lambda a, b: True, "total dominating pair")


def semipd2_mop(g: NearTriangulation) -> tuple[int, int]:
    """The least dominating pair at distance at most 2 in a MOP of order 7, 8 or 9 outside the exceptional family."""
    from .family_f import is_in_family_f

    _require_mop(g, 7, 8, 9)
    if is_in_family_f(g):
        raise IsFamilyF("the exceptional order-9 MOPs have no semipaired dominating pair")
    for a, b in combinations(g.vertices, 2):
        if g.distances_from(a).get(b, 3) <= 2 and all(v in (a, b) or g.neighbors(v) & {a, b} for v in g.vertices):
            return a, b
    ensure(False, f"no semipaired dominating pair in a MOP of order {g.n}", n=g.n)


def fan_center(g: NearTriangulation) -> int:
    """The vertex adjacent to all others in an order-5 MOP."""
    _require_mop(g, 5)
    centers = [v for v in g.vertices if g.degree(v) == g.n - 1]
    ensure(len(centers) == 1, "an order-5 MOP has exactly one center", centers=centers)
    return centers[0]


def _apex_on_arc(g: NearTriangulation, arc: tuple[int, ...]) -> int:
    a, b = arc[0], arc[-1]
    hits = [i for i in range(1, len(arc) - 1) if g.has_edge(a, arc[i]) and g.has_edge(b, arc[i])]
    ensure(len(hits) == 1, "chord of a MOP bounds exactly one triangle on each side", chord=(a, b), hits=len(hits))
    return hits[0]


def split_by_diagonal(g: NearTriangulation, e: EdgeRef, l: int) -> tuple[EdgeRef, NearTriangulation]:
    """Cuts off a MOP of order ``l+1 .. 2l-1`` by a diagonal, away from boundary edge ``e``.

    Starts from the triangle on ``e`` and keeps stepping into the larger of the two pieces
    the triangle leaves behind until that piece is small enough.
    """
    _require_mop(g)
    if not g.is_boundary_edge(e.u, e.v):
        raise NotBoundaryEdge(f"{e} is not a boundary edge", edge=str(e))
    if g.n < 2 * l:
        raise TooSmall(f"order {g.n} is below {2 * l}", n=g.n, l=l)

    p, q = (e.u, e.v) if g.outer_successor(e.u) == e.v else (e.v, e.u)
    i = g.outer_index[q]
    arc = tuple(g.outer[(i + s) % g.h] for s in range(g.h))
    for _ in range(g.n):
        c = _apex_on_arc(g, arc)
        left, right = arc[: c + 1], arc[c:]
        arc = left if len(left) >= len(right) else right
        if len(arc) <= 2 * l - 1:
            ensure(len(arc) >= l + 1, "piece too small", order=len(arc), l=l)
            piece = remove_vertices(g, set(g.rotation) - set(arc))
            return EdgeRef(arc[0], arc[-1]), piece
    ensure(False, "diagonal walk did not terminate", n=g.n)
