"""Semipaired dominating sets of size at most floor(2n/5) for near-triangulations outside the exceptional family.

Same shape as the paired solver: reduce, recurse, lift. The difference is that a reduced
instance may land in the exceptional family of order-9 MOPs, which has no set of the
required size. Each landing is answered with a near-dominating pair of the family member
plus a 2-set that reaches the one vertex the pair leaves out.
"""

import logging
from dataclasses import dataclass

from .base import CaseCoverage, PairBook, SemipairedDomSet
from .config import DEFAULT_CONFIG, SolverConfig
from .decomposition import TerminalDecomposition, find_reducible_edge, find_terminal_polygon, flank_graph, inner_part
from .errors import InternalAssertion, IsFamilyF, NotContractible, NotMop, PreconditionViolated, TooSmall, ensure
from .exact_oracle import check_semipaired, is_dominating, minimum_semipaired_set, semipaired_bound
from .family_f import is_in_family_f, near_domset_for_degree2, semipd2_after_edge_restore
from .graph_core import EdgeRef, NearTriangulation, attach_ear, contract_edge, distance, remove_edge, remove_vertices
from .paired_solver import case1_gadget, case6_gadget, contract_separator, least_boundary_edge, strip_vertices
from .small_mops import fan_center, semipd2_mop, split_by_diagonal, td2_hexagon

logger = logging.getLogger(__name__)

SEMIPAIRED_CASES = tuple(f"case{i}" for i in range(1, 8))
FAMILY_SITES = ("f.reducible", "f.case2", "f.case6")
CASE1_LIFTS = (
    "case1.a_in.none",
    "case1.a_in.y",
    "case1.a_in.x_near",
    "case1.a_in.x_far.full",
    "case1.a_in.x_far.spare",
    "case1.a_in.xy_together",
    "case1.a_in.xy_close",
    "case1.a_in.xy_far.full",
    "case1.a_in.xy_far.spare",
    "case1.a_out.x",
    "case1.a_out.y",
    "case1.a_out.xy_together",
    "case1.a_out.xy",
)
CASE5_LIFTS = ("case5.s_in", "case5.s_in.wp", "case5.s_out", "case5.s_out.wp")


def _within_two(g: NearTriangulation, a: int, b: int) -> bool:
    return distance(g, a, b) <= 2


@dataclass(frozen=True)
class Recombination:
    """Broken 2-sets regrouped around a contracted edge ``uv``.

    ``pairs`` join two vertices on the same side; ``mixed`` is the leftover ``(x, y)`` with
    ``x`` next to ``u`` and ``y`` next to ``v`` when the count is odd.
    """

    pairs: tuple[tuple[int, int], ...]
    mixed: tuple[int, int] | None = None


def recombine_pairs(g: NearTriangulation, u: int, v: int, broken) -> Recombination:
    """Regroups 2-sets that were within distance 2 only through the contracted vertex.

    Every broken 2-set has one vertex adjacent to ``u`` and the other adjacent to ``v``.
    Vertices on the same side are within distance 2 of each other through that side's
    endpoint, so same-side vertices are paired up and at most one mixed 2-set remains.
    """
    near_u, near_v = [], []
    nu, nv = g.neighbors(u), g.neighbors(v)
    for x, y in broken:
        if x in nu and y in nv:
            near_u.append(x)
            near_v.append(y)
        elif y in nu and x in nv:
            near_u.append(y)
            near_v.append(x)
        else:
            raise PreconditionViolated(f"2-set ({x}, {y}) does not straddle {u}-{v}", pair=(x, y), edge=(u, v))
    near_u.sort()
    near_v.sort()
    mixed = None
    if len(near_u) % 2:
        mixed = (near_u.pop(), near_v.pop())
    pairs = list(zip(near_u[::2], near_u[1::2])) + list(zip(near_v[::2], near_v[1::2]))
    return Recombination(pairs=tuple(pairs), mixed=mixed)


def lift_contracted_edge(
    g: NearTriangulation, sub: SemipairedDomSet, *, p: int, q: int, w: int, u_prime: int
) -> tuple[SemipairedDomSet, str]:
    """Lifts a set of ``g`` with ``pq`` merged into ``w``, adding the hexagon pair ``{p, u_prime}``."""
    w_pair = next((pair for pair in sub.pairs if w in pair), None)
    kept, broken = [], []
    for pair in sub.pairs:
        if pair is w_pair:
            continue
        (kept if _within_two(g, *pair) else broken).append(pair)
    rec = recombine_pairs(g, p, q, broken)
    result = kept + list(rec.pairs)

    if w_pair is None:
        if rec.mixed:
            x, y = rec.mixed
            result += [(x, u_prime), (y, p)]
            label = "contract.w_out.mixed"
        else:
            result.append((p, u_prime))
            label = "contract.w_out"
    else:
        z = w_pair[0] if w_pair[1] == w else w_pair[1]
        if _within_two(g, z, q):
            near, far = q, p
            label = "contract.w_in.q"
        else:
            ensure(_within_two(g, z, p), "partner of the merged vertex is near an endpoint", partner=z)
            near, far = p, q
            label = "contract.w_in.p"
        result.append((z, near))
        if rec.mixed:
            x, y = rec.mixed
            result += [(y, far), (x, u_prime)]
            label += ".mixed"
        else:
            result.append((far, u_prime))
    return SemipairedDomSet.of(result), label


def lift_case1_semipaired(
    g: NearTriangulation, gadget: NearTriangulation, sub: SemipairedDomSet, *, a: int, x: int, y: int, w1: int
) -> tuple[SemipairedDomSet, str]:
    """Lifts a set of the two-ear gadget; ``w1`` is the path neighbour of ``a`` in its order-4 flank."""
    book = PairBook(sub.pairs)
    taken = set(book)

    def spare(z: int) -> int | None:
        free = sorted(gadget.neighbors(z) - taken - {x, y})
        return free[0] if free else None

    if a in book:
        if x not in book and y not in book:
            label = "case1.a_in.none"
        elif x not in book:
            z = book.partner(y)
            book.discard(y)
            book.pair(w1, z)
            label = "case1.a_in.y"
        elif y not in book:
            z = book.partner(x)
            book.discard(x)
            if z in gadget.closed_neighborhood(a):
                book.pair(w1, z)
                label = "case1.a_in.x_near"
            elif (x2 := spare(z)) is None:
                book.discard(z)
                label = "case1.a_in.x_far.full"
            else:
                book.pair(x2, z)
                label = "case1.a_in.x_far.spare"
        elif book.partner(x) == y:
            book.discard(x, y)
            label = "case1.a_in.xy_together"
        else:
            z, z2 = book.partner(y), book.partner(x)
            book.discard(x, y)
            if _within_two(g, z, z2):
                book.pair(z, z2)
                label = "case1.a_in.xy_close"
            elif (x2 := spare(z2)) is None:
                book.discard(z2)
                book.pair(w1, z)
                label = "case1.a_in.xy_far.full"
            else:
                book.pair(w1, z)
                book.pair(x2, z2)
                label = "case1.a_in.xy_far.spare"
    elif y not in book:
        ensure(x in book, "one of the ears dominates the outer ear")
        z = book.partner(x)
        book.discard(x)
        book.pair(a, z)
        label = "case1.a_out.x"
    elif x not in book:
        z = book.partner(y)
        book.discard(y)
        book.pair(a, z)
        label = "case1.a_out.y"
    elif book.partner(x) == y:
        book.discard(x, y)
        book.pair(a, w1)
        label = "case1.a_out.xy_together"
    else:
        z, z2 = book.partner(y), book.partner(x)
        book.discard(x, y)
        book.pair(a, z2)
        book.pair(w1, z)
        label = "case1.a_out.xy"
    return book.freeze(SemipairedDomSet), label


def lift_case5_semipaired(sub: SemipairedDomSet, *, w1: int, w2: int, s: int, wp: int) -> tuple[SemipairedDomSet, str]:
    """Lifts a set of the ear-swap gadget used for two neighbouring order-3 flanks."""
    book = PairBook(sub.pairs)
    if s in book and wp not in book:
        label = "case5.s_in"
    elif s in book:
        z = book.partner(wp)
        book.discard(wp)
        book.pair(w2, z)
        label = "case5.s_in.wp"
    elif wp not in book:
        ensure(w1 in book, "w1 dominates the ear when s is not chosen")
        z = book.partner(w1)
        book.discard(w1)
        book.pair(s, z)
        label = "case5.s_out"
    else:
        z = book.partner(wp)
        book.discard(wp)
        book.pair(s, z)
        label = "case5.s_out.wp"
    return book.freeze(SemipairedDomSet), label


def case_dispatch_semipaired(g: NearTriangulation, td: TerminalDecomposition) -> tuple[int, int]:
    plain = [j for j in range(td.k) if td.is_plain(j)]
    orders = td.flank_orders
    single = (
        (1, lambda o: o == 4),
        (2, lambda o: o == 6),
        (3, lambda o: 7 <= o <= 9),
        (4, lambda o: o >= 10),
    )
    for case, applies in single:
        for j in plain:
            if applies(orders[j]):
                return case, j

    adjacent = [j for j in plain if td.is_plain((j + 1) % td.k)]
    double = ((5, {(3, 3)}), (6, {(5, 3), (3, 5)}), (7, {(5, 5)}))
    for case, patterns in double:
        for j in adjacent:
            if (orders[j], orders[(j + 1) % td.k]) in patterns:
                return case, j
    raise InternalAssertion("no case applies to the terminal polygon", polygon=td.polygon, orders=orders)


def _degree_two_near(g: NearTriangulation, reduced: NearTriangulation, *, touching: tuple[int, ...]) -> int:
    """The least degree-2 vertex of ``reduced`` adjacent in ``g`` (or ``reduced``) to every vertex in ``touching``."""
    for x in reduced.vertices:
        if reduced.degree(x) != 2:
            continue
        if all(t in reduced.neighbors(x) or (t in g.rotation and g.has_edge(x, t)) for t in touching):
            return x
    ensure(False, "no degree-2 vertex next to the reduction site", touching=touching)


def ear_at(member: NearTriangulation, v: int) -> int:
    """``v`` itself if it is an ear of the exceptional MOP ``member``, else the ear next to it.

    Every hexagon vertex of a family member touches exactly one ear.
    """
    if member.degree(v) == 2:
        return v
    ears = sorted(x for x in member.neighbors(v) if member.degree(x) == 2)
    ensure(len(ears) == 1, "hexagon vertex of an exceptional MOP touches one ear", vertex=v, ears=ears)
    return ears[0]


def pair_through_separator(piece: NearTriangulation, d: EdgeRef) -> tuple[int, int]:
    """A dominating 2-set ``(e, z)`` of ``piece`` with ``e`` an endpoint of the boundary edge ``d``.

    Takes a semipaired dominating pair of ``piece`` with an ear hung on ``d``. The pair has to
    reach the ear, so it holds an endpoint of ``d`` or the ear itself, which is then swapped for
    the endpoint next to its partner.
    """
    closed, y = attach_ear(piece, d.u, d.v)
    s, t = semipd2_mop(closed)
    if y in (s, t):
        z = t if s == y else s
        e = next((v for v in sorted(d) if v != z and (z in d or piece.has_edge(z, v))), None)
        ensure(e is not None, "partner of the ear is next to the separator", partner=z)
        return e, z
    e = s if s in d else t
    ensure(e in d, "pair reaching the ear holds an endpoint of the separator", pair=(s, t), edge=str(d))
    return e, (t if e == s else s)


def _beside(piece: NearTriangulation, s: int, e: int, far: int) -> bool:
    return s == far or piece.has_edge(s, far) or piece.has_edge(s, e)


def _join(book: PairBook, host: NearTriangulation, pair: tuple[int, int], avoid=()) -> int:
    """Adds ``pair`` to ``book``; returns how many of its vertices were already there.

    When one is, the other takes a free neighbour in ``host`` outside ``avoid`` as its partner.
    """
    shared = [v for v in pair if v in book]
    if not shared:
        book.pair(*pair)
    elif len(shared) == 1:
        o = pair[1] if pair[0] == shared[0] else pair[0]
        candidates = sorted(host.neighbors(o) - set(avoid) - set(book) - set(pair))
        ensure(bool(candidates), "no free neighbour for the added pair", vertex=o)
        book.pair(o, candidates[0])
    return len(shared)


def _arc_avoiding(mop: NearTriangulation, a: int, b: int, avoid: int) -> tuple[int, ...]:
    for step in (mop.outer_successor, mop.outer_predecessor):
        arc = [a]
        while arc[-1] != b:
            arc.append(step(arc[-1]))
        if avoid not in arc:
            return tuple(arc)
    ensure(False, "both arcs pass the avoided vertex", chord=(a, b), avoid=avoid)


class SemipairedSolver:
    def __init__(self, config: SolverConfig | None = None, coverage: CaseCoverage | None = None):
        self.config = config or DEFAULT_CONFIG
        self.coverage = coverage if coverage is not None else CaseCoverage()

    def solve(self, g: NearTriangulation) -> SemipairedDomSet:
        if is_in_family_f(g):
            raise IsFamilyF("graph belongs to the exceptional family; no semipaired set of size floor(2n/5) exists")
        if g.n < 5:
            raise TooSmall(f"semipaired domination needs order at least 5, got {g.n}", n=g.n)
        result = self._solve(g)
        logger.debug("semipaired set of size %d for n=%d (bound %d)", result.size, g.n, semipaired_bound(g.n))
        return result

    def _checked(self, g: NearTriangulation, result: SemipairedDomSet, where: str) -> SemipairedDomSet:
        if self.config.check_lifts:
            problems = check_semipaired(g, result.pairs)
            ensure(not problems, f"{where} produced an invalid semipaired set", problems=problems)
        ensure(result.size <= semipaired_bound(g.n), f"{where} exceeded the size bound", size=result.size, n=g.n)
        return result

    def _child(self, parent: NearTriangulation, child: NearTriangulation) -> SemipairedDomSet:
        ensure((child.n, child.m) < (parent.n, parent.m), "recursion must shrink the instance", parent=(parent.n, parent.m), child=(child.n, child.m))
        ensure(child.n >= 5, "recursion reached order below 5", n=child.n)
        ensure(not is_in_family_f(child), "recursion landed in the exceptional family", n=child.n)
        return self._solve(child)

    def _solve(self, g: NearTriangulation) -> SemipairedDomSet:
        host = g
        while True:
            if g.is_mop:
                return self._checked(host, self.mop_semipaired(g), "mop")
            e = find_reducible_edge(g)
            if e is None:
                break
            stripped = remove_edge(g, e)
            if is_in_family_f(stripped):
                self.coverage.hit("f.reducible")
                logger.debug("removing %s lands in the exceptional family", e)
                return self._checked(host, semipd2_after_edge_restore(g), "edge restore")
            self.coverage.hit("reducible")
            g = stripped

        td = find_terminal_polygon(g)
        case, j = case_dispatch_semipaired(g, td)
        logger.debug("n=%d m=%d: case %d on flank %d of %s", g.n, g.m, case, j, td.polygon)
        self.coverage.hit(f"case{case}")
        handler = getattr(self, f"_case{case}")
        return self._checked(host, handler(g, td, j), f"case {case}")

    def mop_semipaired(self, g: NearTriangulation) -> SemipairedDomSet:
        if not g.is_mop:
            raise NotMop("expected a MOP", m=g.m)
        if is_in_family_f(g):
            raise IsFamilyF("MOP belongs to the exceptional family")
        if g.n < 5:
            raise TooSmall(f"order {g.n} is below 5", n=g.n)
        if g.n <= self.config.semipaired_mop_oracle_max:
            self.coverage.hit("mop.oracle")
            return minimum_semipaired_set(g, cap=self.config.semipaired_mop_oracle_max)
        self.coverage.hit("mop.split")
        d, piece = split_by_diagonal(g, least_boundary_edge(g), 5)
        return self._piece(g, d, piece)

    # -- pieces cut off by a diagonal ---------------------------------------

    def _piece(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> SemipairedDomSet:
        """Handles an order 6..9 MOP hanging off ``d``."""
        ensure(6 <= piece.n <= 9, "piece order outside 6..9", order=piece.n)
        if piece.n == 6:
            return self._hexagon_piece(g, d, piece)
        if is_in_family_f(piece):
            return self._family_piece(g, d, piece)
        rest = strip_vertices(g, set(piece.vertices) - set(d))
        if is_in_family_f(rest):
            return self._family_rest(g, d, piece, rest)
        book = PairBook(self._child(g, rest).pairs)
        shared = _join(book, piece, semipd2_mop(piece), avoid=d)
        self.coverage.hit(f"piece.shared{shared}")
        return book.freeze(SemipairedDomSet)

    def _family_rest(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation, rest: NearTriangulation) -> SemipairedDomSet:
        """The part left after cutting off ``piece`` is exceptional; only happens for orders 14 to 16.

        With room for three 2-sets the rest gets a near-dominating pair plus its ear. At order 14
        the piece is a heptagon and one of its 2-sets goes through the endpoint of ``d`` next to
        an ear of the rest, which is all the near-dominating pair leaves out.
        """
        logger.debug("cutting off an order %d piece at %s leaves an exceptional rest", piece.n, d)
        if semipaired_bound(g.n) >= 6:
            x = min(v for v in rest.vertices if rest.degree(v) == 2)
            book = PairBook([near_domset_for_degree2(rest, x), (x, min(rest.neighbors(x)))])
            _join(book, piece, semipd2_mop(piece), avoid=d)
            self.coverage.hit("rest.family.wide")
            return book.freeze(SemipairedDomSet)

        ensure(piece.n == 7, "exceptional rest under a tight bound needs a heptagon piece", order=piece.n)
        e, z = pair_through_separator(piece, d)
        book = PairBook([near_domset_for_degree2(rest, ear_at(rest, e))])
        _join(book, piece, (e, z))
        self.coverage.hit("rest.family.ear")
        return book.freeze(SemipairedDomSet)

    def _hexagon_piece(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> SemipairedDomSet:
        rest = strip_vertices(g, set(piece.vertices) - set(d))
        w = rest.next_label
        reduced = contract_separator(rest, d)
        if is_in_family_f(reduced):
            return self._hexagon_family(g, d, piece, reduced, w)
        extra = td2_hexagon(piece, d)
        p = extra.a if extra.a in d else extra.b
        result, label = lift_contracted_edge(g, self._child(g, reduced), p=p, q=d.other(p), w=w, u_prime=extra.other(p))
        self.coverage.hit(label)
        return result

    def _hexagon_family(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation, reduced: NearTriangulation, w: int) -> SemipairedDomSet:
        """Contracting ``d`` gave an exceptional MOP (order 14 only).

        The near-dominating pair of the ear at the merged vertex ``w`` misses that ear and the
        hexagon; a pair through the endpoint of ``d`` next to the ear covers both.
        """
        logger.debug("contracting %s after cutting off a hexagon lands in the exceptional family", d)
        x = ear_at(reduced, w)
        e = min(d) if x == w else min(v for v in d if g.has_edge(x, v))
        far = d.other(e)
        s = next((s for s in sorted(piece.vertices) if s != e and _beside(piece, s, e, far) and is_dominating(piece, (e, s))), None)
        ensure(s is not None, "hexagon has no dominating pair through the separator endpoint", endpoint=e)
        a, b = near_domset_for_degree2(reduced, x)
        if _within_two(g, a, b):
            self.coverage.hit("hexagon.family")
            return SemipairedDomSet.of([(a, b), (e, s)])

        # a and b were 2 apart only through w, so one sits next to each endpoint
        ensure(x != w, "pair around the merged vertex cannot straddle it", pair=(a, b))
        by_far = a if g.has_edge(a, far) else b
        by_e = b if by_far == a else a
        ensure(g.has_edge(by_e, e) and g.has_edge(by_far, far), "broken pair straddles the separator", pair=(a, b), edge=str(d))
        self.coverage.hit("hexagon.family.split")
        if piece.has_edge(s, e):
            return SemipairedDomSet.of([(by_far, e), (by_e, s)])
        return SemipairedDomSet.of([(by_e, e), (by_far, s)])

    def _family_piece(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> SemipairedDomSet:
        """An exceptional piece: cut again along a diagonal at ``d`` leaving an order 6..8 piece."""
        self.coverage.hit("piece.family")
        for a in sorted(d):
            avoid = d.other(a)
            for b in sorted(piece.neighbors(a)):
                if b == avoid or piece.is_boundary_edge(a, b):
                    continue
                arc = _arc_avoiding(piece, a, b, avoid)
                if 6 <= len(arc) <= 8:
                    sub_piece = remove_vertices(piece, set(piece.vertices) - set(arc))
                    return self._piece(g, EdgeRef(a, b), sub_piece)
        ensure(False, "exceptional piece without a usable diagonal", edge=str(d))

    # -- terminal polygon cases ---------------------------------------------

    def _case1(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        path = td.flank_paths[j]
        flank = flank_graph(g, td, j)
        if flank.degree(path[0]) == 3:
            a, v, w1 = path[0], g.outer_predecessor(path[0]), path[1]
        else:
            a, v, w1 = path[-1], g.outer_successor(path[-1]), path[2]
        t_j = remove_edge(inner_part(g, td, j), td.sides[j])
        gadget, x, y = case1_gadget(t_j, v, a)
        result, label = lift_case1_semipaired(g, gadget, self._child(g, gadget), a=a, x=x, y=y, w1=w1)
        self.coverage.hit(label)
        return result

    def _case2(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        d = td.sides[j]
        flank = flank_graph(g, td, j)
        extra = td2_hexagon(flank, d)
        p = extra.a if extra.a in d else extra.b
        t_j = inner_part(g, td, j)
        w = t_j.next_label

        reduced = q = None
        for v in sorted(u for u in t_j.neighbors(p) if u in td.interior):
            try:
                reduced, q = contract_edge(t_j, EdgeRef(p, v)), v
            except NotContractible:
                continue
            break
        if reduced is None:
            reduced, q = contract_separator(t_j, d), d.other(p)

        if is_in_family_f(reduced):
            self.coverage.hit("f.case2")
            x = _degree_two_near(g, reduced, touching=(w, p))
            a, b = near_domset_for_degree2(reduced, x)
            ensure(w not in (a, b), "near-dominating pair avoids the merged vertex")
            sub = SemipairedDomSet.of([(a, b)])
        else:
            sub = self._child(g, reduced)
        result, label = lift_contracted_edge(g, sub, p=p, q=q, w=w, u_prime=extra.other(p))
        self.coverage.hit(label)
        return result

    def _case3(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        return self._piece(g, td.sides[j], flank_graph(g, td, j))

    def _case4(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        d, piece = split_by_diagonal(flank_graph(g, td, j), td.sides[j], 5)
        return self._piece(g, d, piece)

    def _case5(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        _, w1, s = td.flank_paths[j]
        _, w2, far = td.flank_paths[(j + 1) % td.k]
        gadget, wp = case6_gadget(g, w1, w2, s, far)
        result, label = lift_case5_semipaired(self._child(g, gadget), w1=w1, w2=w2, s=s, wp=wp)
        self.coverage.hit(label)
        return result

    def _case6(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        nxt = (j + 1) % td.k
        pent, ear = (j, nxt) if td.flank_orders[j] == 5 else (nxt, j)
        path = td.flank_paths[pent]
        s = path[-1] if pent == j else path[0]
        doomed = td.inner_flank_vertices(pent) | td.inner_flank_vertices(ear) | {s}
        reduced = strip_vertices(g, doomed)
        ensure(reduced.n >= 5, "too little left after removing the flanks", n=reduced.n)
        if is_in_family_f(reduced):
            self.coverage.hit("f.case6")
            x = _degree_two_near(g, reduced, touching=(s,))
            sub = SemipairedDomSet.of([near_domset_for_degree2(reduced, x)])
        else:
            sub = self._child(g, reduced)
        book = PairBook(sub.pairs)
        book.pair(s, path[2])
        return book.freeze(SemipairedDomSet)

    def _case7(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> SemipairedDomSet:
        nxt = (j + 1) % td.k
        flank_a, flank_b = flank_graph(g, td, j), flank_graph(g, td, nxt)
        z, z2 = fan_center(flank_a), fan_center(flank_b)
        ensure(_within_two(g, z, z2), "fan centres of neighbouring pentagons are close", centers=(z, z2))
        reduced = strip_vertices(g, td.inner_flank_vertices(j) | td.inner_flank_vertices(nxt))
        book = PairBook(self._child(g, reduced).pairs)
        if z == z2:
            if z not in book:
                book.pair(z, td.flank_paths[j][1])
            self.coverage.hit("case7.same_center")
        elif z in book and z2 in book:
            self.coverage.hit("case7.both")
        elif z not in book and z2 not in book:
            book.pair(z, z2)
            self.coverage.hit("case7.neither")
        else:
            c, fan = (z, flank_a) if z not in book else (z2, flank_b)
            mates = sorted(fan.neighbors(c) - set(book))
            ensure(bool(mates), "fan centre has a free neighbour", center=c)
            book.pair(c, mates[0])
            self.coverage.hit("case7.one")
        return book.freeze(SemipairedDomSet)


def compute_semipaired(g: NearTriangulation, config: SolverConfig | None = None, coverage: CaseCoverage | None = None) -> SemipairedDomSet:
    return SemipairedSolver(config, coverage).solve(g)


def mop_semipaired(g: NearTriangulation, config: SolverConfig | None = None) -> SemipairedDomSet:
    return SemipairedSolver(config).mop_semipaired(g)
