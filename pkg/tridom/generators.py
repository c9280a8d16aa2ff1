"""Seeded instance generators.

All randomness comes from :class:`SplitMix64`, so a (parameters, seed) pair names one
instance on every platform. Polygon triangulations use the convex-polygon labelling:
vertices ``0..n-1`` clockwise, triangle ``{i < j < k}`` traced as ``(i, k, j)``.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from math import comb
from typing import Any

from .config import DEFAULT_CONFIG, SolverConfig
from .decomposition import IRREDUCIBLE, classify
from .errors import BadOrder, InfeasibleMix, TooLarge, ensure
from .graph_core import NearTriangulation, attach_ear, relabel
from .ntri_io import CorpusItem

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
ENUMERATION_MAX = 15


class SplitMix64:
    """64-bit SplitMix generator; seed 1234567 starts 6457827717110365317, 3203168211198807973."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection.

        Bounds above 2**64 draw several words, most significant first.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        words = max(1, -(-(bound - 1).bit_length() // 64))
        span = 1 << (64 * words)
        limit = span - span % bound
        while True:
            r = 0
            for _ in range(words):
                r = (r << 64) | self.next_u64()
            if r < limit:
                return r % bound

    def choice(self, seq: Sequence[Any]) -> Any:
        return seq[self.below(len(seq))]

    def fork(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())


def _rng(seed: "int | SplitMix64") -> SplitMix64:
    return seed if isinstance(seed, SplitMix64) else SplitMix64(seed)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _oriented(t: Iterable[int]) -> tuple[int, int, int]:
    i, j, k = sorted(t)
    return i, k, j


def mop_from_triangulation(n: int, triangles: Iterable[Iterable[int]]) -> NearTriangulation:
    """The MOP of a triangulated convex ``n``-gon given as vertex triples."""
    triangles = [_oriented(t) for t in triangles]
    if len(triangles) != n - 2:
        raise BadOrder(f"a triangulated {n}-gon has {n - 2} triangles, got {len(triangles)}", n=n)
    return NearTriangulation.from_triangles(triangles)


def _triangulations(lo: int, hi: int) -> Iterator[list[tuple[int, int, int]]]:
    if hi - lo < 2:
        yield []
        return
    for k in range(lo + 1, hi):
        for left in _triangulations(lo, k):
            for right in _triangulations(k, hi):
                yield left + right + [(lo, k, hi)]


def enumerate_mops(n: int, dedupe: bool = False) -> Iterator[NearTriangulation]:
    """Every triangulation of the convex ``n``-gon, optionally one per isomorphism class."""
    if n < 3:
        raise BadOrder(f"a polygon needs at least 3 vertices, got {n}", n=n)
    if n > ENUMERATION_MAX:
        raise TooLarge(f"enumeration is capped at order {ENUMERATION_MAX}", n=n, cap=ENUMERATION_MAX)
    seen = set()
    for triangles in _triangulations(0, n - 1):
        g = mop_from_triangulation(n, triangles)
        if dedupe:
            from .family_f import canonical_form

            code = canonical_form(g)
            if code in seen:
                continue
            seen.add(code)
        yield g


def _random_polygon_triangles(n: int, rng: SplitMix64) -> list[tuple[int, int, int]]:
    triangles = []
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        r = rng.below(catalan(hi - lo - 1))
        for k in range(lo + 1, hi):
            weight = catalan(k - lo - 1) * catalan(hi - k - 1)
            if r < weight:
                break
            r -= weight
        triangles.append((lo, k, hi))
        stack.append((lo, k))
        stack.append((k, hi))
    return triangles


def random_mop(n: int, seed: "int | SplitMix64") -> NearTriangulation:
    """A uniformly random triangulation of the convex ``n``-gon."""
    if n < 3:
        raise BadOrder(f"a polygon needs at least 3 vertices, got {n}", n=n)
    return mop_from_triangulation(n, _random_polygon_triangles(n, _rng(seed)))


def _flip_candidates(triangles: list[tuple[int, int, int]], rng: SplitMix64) -> tuple[int, int] | None:
    i = rng.below(len(triangles))
    a, b, c = triangles[i]
    rot = rng.below(3)
    a, b, c = (a, b, c)[rot:] + (a, b, c)[:rot]
    for j, t in enumerate(triangles):
        if j != i and (b, a) in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            return i, j
    return None


def _flip(triangles: list[tuple[int, int, int]], i: int, j: int) -> bool:
    t1, t2 = triangles[i], triangles[j]
    darts1 = [(t1[s], t1[(s + 1) % 3], t1[(s + 2) % 3]) for s in range(3)]
    for a, b, c in darts1:
        if (b, a) in ((t2[0], t2[1]), (t2[1], t2[2]), (t2[2], t2[0])):
            d = next(x for x in t2 if x not in (a, b))
            break
    else:
        return False
    if c == d:
        return False
    for t in triangles:
        if c in t and d in t:
            return False
    triangles[i] = (a, d, c)
    triangles[j] = (d, b, c)
    return True


def random_near_triangulation(
    n: int, m: int, seed: "int | SplitMix64", flips: int | None = None, config: SolverConfig = DEFAULT_CONFIG
) -> NearTriangulation:
    """Random MOP of order ``n - m``, ``m`` vertex insertions, then random interior flips."""
    if m < 0 or n - m < 3:
        raise InfeasibleMix(f"cannot have {m} interior vertices among {n}", n=n, m=m)
    rng = _rng(seed)
    triangles = [_oriented(t) for t in _random_polygon_triangles(n - m, rng)]
    for x in range(n - m, n):
        a, b, c = triangles.pop(rng.below(len(triangles)))
        triangles += [(a, b, x), (b, c, x), (c, a, x)]
    budget = config.flips_per_vertex * n if flips is None else flips
    for _ in range(budget):
        picked = _flip_candidates(triangles, rng)
        if picked is not None:
            _flip(triangles, *picked)
    g = NearTriangulation.from_triangles(triangles)
    ensure(g.n == n and g.m == m, "generator lost track of the vertex mix", n=g.n, m=g.m)
    return g


def attach_mop(g: NearTriangulation, a: int, b: int, mop: NearTriangulation) -> tuple[NearTriangulation, tuple[int, ...]]:
    """Glues a convex-labelled MOP onto boundary edge ``ab``; returns the graph and the new vertices."""
    if not g.is_boundary_edge(a, b):
        raise BadOrder(f"{a}-{b} is not a boundary edge")
    p, q = (a, b) if g.outer_successor(a) == b else (b, a)
    r = mop.n
    fresh = {i: g.next_label + i - 1 for i in range(1, r - 1)}
    name = {0: p, r - 1: q, **fresh}
    glued = [tuple(name[x] for x in t) for t in mop.inner_faces()]
    result = NearTriangulation.from_triangles(
        list(g.inner_faces()) + glued, labels=g.labels, parents=g.parents, next_label=g.next_label + r - 2
    )
    return result, tuple(fresh.values())


FLANK_CHOICES = (3, 3, 4, 5, 5, 6, 7, 8, 9, 10, 12)


def wheel(k: int) -> NearTriangulation:
    """The cycle ``0..k-1`` (clockwise) around the hub ``k``; ``wheel(3)`` is K4."""
    if k < 3:
        raise BadOrder(f"a wheel needs at least 3 rim vertices, got {k}", k=k)
    return NearTriangulation.from_triangles([((i + 1) % k, i, k) for i in range(k)])


def attach_flanks(core: NearTriangulation, flank_orders: Sequence[int], seed: "int | SplitMix64") -> NearTriangulation:
    """Glues a random MOP of the given order on each boundary edge of ``core``, in outer-cycle order."""
    h = core.h
    if len(flank_orders) != h or any(r < 3 for r in flank_orders):
        raise InfeasibleMix(f"need {h} flank orders of at least 3", flank_orders=list(flank_orders))
    rng = _rng(seed)
    g = core
    for (p, q), r in zip([(v, core.outer_successor(v)) for v in core.outer], flank_orders):
        g, _ = attach_mop(g, p, q, random_mop(r, rng))
    return g


def random_flanked_near_triangulation(
    core_order: int,
    interior: int,
    flank_orders: Sequence[int] | None,
    seed: "int | SplitMix64",
    config: SolverConfig = DEFAULT_CONFIG,
) -> NearTriangulation:
    """A random core with interior vertices and a MOP glued on every core boundary edge.

    Every boundary edge of the result lies in a glued MOP, so the result is irreducible.
    """
    if interior < 1:
        raise InfeasibleMix("the core needs at least one interior vertex", interior=interior)
    rng = _rng(seed)
    core = random_near_triangulation(core_order, interior, rng, config=config)
    if flank_orders is None:
        flank_orders = [rng.choice(FLANK_CHOICES) for _ in range(core.h)]
    return attach_flanks(core, flank_orders, rng)


# rim size of the wheel core and flank orders that steer the dispatch into one case
CASE_SHAPES: dict[str, tuple[int, tuple[int, ...]]] = {
    "paired.case1": (3, (4, 3, 3)),
    "paired.case2": (4, (5, 3, 3, 3)),
    "paired.case3": (3, (6, 3, 3)),
    "paired.case4": (3, (7, 3, 3)),
    "paired.case5": (3, (8, 3, 3)),
    "paired.case6": (3, (3, 3, 3)),
    "paired.case7": (3, (5, 3, 5)),
    "paired.case8": (3, (5, 5, 5)),
    "semipaired.case1": (3, (4, 3, 3)),
    "semipaired.case2": (3, (6, 3, 3)),
    "semipaired.case3": (3, (7, 3, 3)),
    "semipaired.case4": (3, (10, 3, 3)),
    "semipaired.case5": (3, (3, 3, 3)),
    "semipaired.case6": (3, (5, 3, 5)),
    "semipaired.case7": (3, (5, 5, 5)),
}


def case_fixtures(seed: int = 0) -> dict[str, NearTriangulation]:
    """One irreducible instance per solver case, keyed like ``"paired.case3"``."""
    rng = SplitMix64(seed)
    return {name: attach_flanks(wheel(k), orders, rng.fork()) for name, (k, orders) in CASE_SHAPES.items()}


def irreducible_corpus(count: int, seed: int, n_max: int = 40, config: SolverConfig = DEFAULT_CONFIG) -> list[NearTriangulation]:
    """Irreducible instances drawn from both generators by rejection sampling."""
    rng = SplitMix64(seed)
    corpus: list[NearTriangulation] = []
    attempts = 0
    while len(corpus) < count:
        attempts += 1
        if rng.below(2):
            interior = 1 + rng.below(3)
            core_order = interior + 3 + rng.below(3)
            candidate = random_flanked_near_triangulation(core_order, interior, None, rng, config)
            if candidate.n > n_max:
                continue
        else:
            n = 7 + rng.below(max(1, n_max - 6))
            candidate = random_near_triangulation(n, 1 + rng.below(n - 3), rng, config=config)
        if classify(candidate) == IRREDUCIBLE:
            corpus.append(candidate)
    logger.debug("irreducible corpus: %d instances from %d draws", count, attempts)
    return corpus


def family_f_corpus() -> list[NearTriangulation]:
    from .family_f import enumerate_family_f

    return [member.mop for member in enumerate_family_f()]


def _fan_hexagon_member() -> tuple[NearTriangulation, dict[str, int]]:
    """The member built on the fan hexagon centred at 0, ears on sides 01, 23 and 45."""
    hexagon = mop_from_triangulation(6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)])
    g, e1 = attach_ear(hexagon, 0, 1)
    g, e2 = attach_ear(g, 2, 3)
    g, e3 = attach_ear(g, 4, 5)
    return g, {"e1": e1, "e2": e2, "e3": e3}


def _normalized(g: NearTriangulation, first: Sequence[int] = ()) -> NearTriangulation:
    """Relabels to ``0..n-1`` with ``first`` taking the smallest ids, the rest in id order."""
    order = list(first) + [v for v in g.vertices if v not in first]
    renamed = relabel(g, {v: i for i, v in enumerate(order)})
    return NearTriangulation(rotation=renamed.rotation, outer=renamed.outer)


def family_f_landings() -> dict[str, NearTriangulation]:
    """Instances whose semipaired recursion lands in the exceptional family at each of its three sites."""
    member, ears = _fan_hexagon_member()

    # a boundary edge from an ear to the vertex two steps along; removing it gives the member back
    reducible = NearTriangulation.from_triangles(list(member.inner_faces()) + [(ears["e1"], 1, 2)])
    reducible = _normalized(reducible, first=(ears["e1"], 2))

    # interior vertex in triangle (0, 1, 2) and a hexagon glued on side 12
    x = member.next_label
    faces = [t for t in member.inner_faces() if set(t) != {0, 1, 2}]
    a, b, c = next(t for t in member.inner_faces() if set(t) == {0, 1, 2})
    faces += [(a, b, x), (b, c, x), (c, a, x)]
    contracted = NearTriangulation.from_triangles(faces)
    contracted, _ = attach_mop(contracted, 1, 2, mop_from_triangulation(6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]))
    contracted = _normalized(contracted)

    # a new boundary vertex s over the path 1, 2, e2, 3, then a pentagon on 1s and an ear on s3
    s = member.next_label
    faces = list(member.inner_faces()) + [(1, 2, s), (2, ears["e2"], s), (ears["e2"], 3, s)]
    removed = NearTriangulation.from_triangles(faces)
    removed, _ = attach_mop(removed, 1, s, mop_from_triangulation(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4)]))
    removed, _ = attach_ear(removed, s, 3)
    removed = _normalized(removed, first=(1,))
    return {"reducible": reducible, "case2": contracted, "case6": removed}


GENERATOR_KINDS = ("mop", "ntri", "irreducible", "family-f", "enumerate")


def generate(
    kind: str, *, n: int | None = None, m: int = 0, count: int = 1, seed: int = 0, config: SolverConfig = DEFAULT_CONFIG
) -> list[CorpusItem]:
    """Instances of one generator kind, tagged with how they were made."""
    if kind not in GENERATOR_KINDS:
        raise BadOrder(f"unknown generator kind {kind!r}", kind=kind)
    if n is None and kind in ("mop", "ntri", "enumerate"):
        raise BadOrder(f"generator {kind!r} needs an order", kind=kind)

    rng = SplitMix64(seed)
    if kind == "mop":
        graphs = [random_mop(n, rng) for _ in range(count)]
    elif kind == "ntri":
        graphs = [random_near_triangulation(n, m, rng, config=config) for _ in range(count)]
    elif kind == "irreducible":
        graphs = irreducible_corpus(count, seed, n_max=n or 40, config=config)
    elif kind == "family-f":
        graphs = family_f_corpus()
    else:
        graphs = list(enumerate_mops(n))
    return [CorpusItem(graph=g, meta={"kind": kind, "seed": seed, "index": i}) for i, g in enumerate(graphs)]
