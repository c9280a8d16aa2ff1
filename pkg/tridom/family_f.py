"""The exceptional order-9 MOPs: a hexagon triangulation with ears on three alternating sides.

These are exactly the MOPs of order at least 5 without a semipaired dominating set of
size 2/5 of their order, so the semipaired recursion has to route around them.
"""

import logging
from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .base import SemipairedDomSet
from .errors import NoSuchEdge, NotDegreeTwo, NotMop, ensure
from .graph_core import EdgeRef, NearTriangulation, attach_ear, remove_edge

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FamilyFMember:
    mop: NearTriangulation
    base_hexagon: tuple[int, ...]
    ears: tuple[tuple[int, tuple[int, int]], ...]
    phase: int

    @property
    def ear_vertices(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.ears)


def canonical_form(g: NearTriangulation) -> tuple[tuple[int, int], ...]:
    """Least sorted edge list over the relabellings that walk the outer cycle from any start, either way."""
    if not g.is_mop:
        raise NotMop("canonical forms are defined for MOPs only", m=g.m)
    h = g.h
    best = None
    for start in range(h):
        for step in (1, -1):
            name = {g.outer[(start + step * i) % h]: i for i in range(h)}
            code = tuple(sorted((min(name[e.u], name[e.v]), max(name[e.u], name[e.v])) for e in g.edges))
            if best is None or code < best:
                best = code
    return best


@cache
def _members() -> tuple[FamilyFMember, ...]:
    from .generators import enumerate_mops

    seen = set()
    members = []
    for hexagon in enumerate_mops(6):
        for phase in (0, 1):
            g, ears = hexagon, []
            for i in range(phase, 6, 2):
                a, b = i, (i + 1) % 6
                g, x = attach_ear(g, a, b)
                ears.append((x, (a, b)))
            code = canonical_form(g)
            if code not in seen:
                seen.add(code)
                members.append(FamilyFMember(mop=g, base_hexagon=tuple(range(6)), ears=tuple(ears), phase=phase))
    logger.debug("exceptional family has %d members up to isomorphism", len(members))
    return tuple(members)


@cache
def _member_codes() -> frozenset:
    return frozenset(canonical_form(m.mop) for m in _members())


def enumerate_family_f() -> list[FamilyFMember]:
    return list(_members())


def is_in_family_f(g: NearTriangulation) -> bool:
    if g.n != 9 or not g.is_mop:
        return False
    return canonical_form(g) in _member_codes()


def _near_pairs(g: NearTriangulation, u: int):
    dist_u = g.distances_from(u)
    others = [v for v in g.vertices if v != u]
    for v, w in combinations(others, 2):
        if dist_u.get(v) != 2 or dist_u.get(w) != 2:
            continue
        if g.distances_from(v).get(w, 3) > 2:
            continue
        if all(x in (v, w) or g.neighbors(x) & {v, w} for x in others):
            yield v, w


def near_domset_for_degree2(g: NearTriangulation | FamilyFMember, u: int) -> tuple[int, int]:
    """Two vertices at distance 2 from ``u`` and at most 2 apart that dominate everything but ``u``."""
    if isinstance(g, FamilyFMember):
        g = g.mop
    if u not in g.rotation or g.degree(u) != 2:
        raise NotDegreeTwo(f"{u} does not have degree 2", vertex=u)
    for pair in _near_pairs(g, u):
        return pair
    ensure(False, "no near-dominating pair for a degree-2 vertex", vertex=u)


def _is_semipd2(g: NearTriangulation, v: int, w: int) -> bool:
    if g.distances_from(v).get(w, 3) > 2:
        return False
    return all(x in (v, w) or g.neighbors(x) & {v, w} for x in g.vertices)


def semipd2_after_edge_restore(g: NearTriangulation) -> SemipairedDomSet:
    """A semipaired dominating pair of an order-9 graph that drops into the family when a boundary edge goes."""
    for e in sorted(EdgeRef(v, g.outer_successor(v)) for v in g.outer):
        if g.is_mop or g.apex(e) in g.boundary:
            continue
        h = remove_edge(g, e)
        if not is_in_family_f(h):
            continue
        u = e.u if h.degree(e.u) == 2 else e.v
        t = e.other(u)
        ensure(h.degree(u) == 2, "restored edge has a degree-2 endpoint", edge=str(e))
        ranked = sorted(_near_pairs(h, u), key=lambda p: (t not in p, p))
        for v, w in ranked:
            if _is_semipd2(g, v, w):
                logger.debug("restored edge %s: pair (%d, %d)", e, v, w)
                return SemipairedDomSet.of([(v, w)])
        for v, w in combinations(g.vertices, 2):
            if _is_semipd2(g, v, w):
                return SemipairedDomSet.of([(v, w)])
        ensure(False, "restored edge left no semipaired dominating pair", edge=str(e))
    raise NoSuchEdge("no boundary edge removal lands in the exceptional family", n=g.n)
