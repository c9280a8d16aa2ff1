"""Paired dominating sets of size at most 2*floor(n/4) in near-triangulations of order n >= 4.

The solver peels the input down to a smaller near-triangulation, solves that recursively and
lifts the answer back. Every recursion strictly lowers (order, interior count), so the
recursion is well founded even where a gadget keeps the order unchanged. Each lifted set is
re-checked in its host graph unless ``check_lifts`` is turned off.
"""

import logging

from .base import CaseCoverage, PairBook, PairedDomSet
from .config import DEFAULT_CONFIG, SolverConfig
from .decomposition import TerminalDecomposition, find_reducible_edge, find_terminal_polygon, flank_graph, inner_part
from .errors import InternalAssertion, NotContractible, NotMop, ResultNotNearTriangulation, TooSmall, ensure
from .exact_oracle import check_paired, minimum_paired_set, paired_bound
from .graph_core import EdgeRef, NearTriangulation, attach_ear, contract_edge, is_contractible, remove_edge, remove_vertex, remove_vertices
from .small_mops import split_by_diagonal, td2_heptagon, td2_hexagon, td2_pentagon

logger = logging.getLogger(__name__)

PAIRED_CASES = tuple(f"case{i}" for i in range(1, 9))
CASE1_LIFTS = (
    "case1.a_in.none",
    "case1.a_in.y",
    "case1.a_in.x_with_a",
    "case1.a_in.x_with_v.spare",
    "case1.a_in.x_with_v.full",
    "case1.a_in.xy_together",
    "case1.a_in.xy_split",
    "case1.a_out.x",
    "case1.a_out.xy",
)
CASE6_LIFTS = (
    "case6.wp_with_s",
    "case6.wp_with_w1.s_in",
    "case6.wp_with_w1.s_out",
    "case6.s_in",
    "case6.s_out",
)


def least_boundary_edge(g: NearTriangulation) -> EdgeRef:
    return min(EdgeRef(v, g.outer_successor(v)) for v in g.outer)


def path_neighbor(mop: NearTriangulation, a: int, b: int) -> int:
    """The outer-cycle neighbour of ``a`` other than ``b`` in a MOP where ``ab`` is a boundary edge."""
    nxt = mop.outer_successor(a)
    return mop.outer_predecessor(a) if nxt == b else nxt


def fresh_neighbor(mop: NearTriangulation, v: int, taken) -> int:
    """A neighbour of ``v`` in ``mop`` outside ``taken``, preferring outer-cycle neighbours."""
    around = [mop.outer_predecessor(v), mop.outer_successor(v)]
    rest = sorted(mop.neighbors(v) - set(around))
    for u in sorted(around) + rest:
        if u not in taken:
            return u
    ensure(False, f"every neighbour of {v} is already used", vertex=v)


def strip_vertices(g: NearTriangulation, vs) -> NearTriangulation:
    try:
        return remove_vertices(g, vs)
    except ResultNotNearTriangulation as exc:
        raise InternalAssertion("deleting a flank did not leave a near-triangulation", removed=sorted(vs)) from exc


def contract_separator(g: NearTriangulation, e: EdgeRef) -> NearTriangulation:
    try:
        return contract_edge(g, e)
    except NotContractible as exc:
        raise InternalAssertion(f"separating edge {e} is not contractible", edge=str(e)) from exc


def case1_gadget(t_j: NearTriangulation, v: int, a: int) -> tuple[NearTriangulation, int, int]:
    """Two stacked ears on the boundary edge ``va`` of ``t_j`` (with the polygon side already removed).

    Returns the new graph, the ear ``x`` on ``va`` and the ear ``y`` on ``xa``.
    """
    g, x = attach_ear(t_j, v, a)
    g, y = attach_ear(g, x, a)
    return g, x, y


def case6_gadget(g: NearTriangulation, w1: int, w2: int, s: int, far: int) -> tuple[NearTriangulation, int]:
    """Drops the ear ``w2`` on ``s far``, removes the now reducible side and hangs an ear on ``w1 s``."""
    g = remove_vertex(g, w2)
    g = remove_edge(g, EdgeRef(s, far))
    return attach_ear(g, w1, s)


def lift_case1(
    g: NearTriangulation, sub: PairedDomSet, *, a: int, v: int, x: int, y: int, w1: int, w2: int
) -> tuple[PairedDomSet, str]:
    """Translates a paired dominating set of the two-ear gadget back into ``g``.

    ``a`` is the flank endpoint of degree 3 in its flank, ``v`` its boundary neighbour
    outside the flank, ``w1`` its path neighbour in the flank and ``w2`` the other inner
    flank vertex.
    """
    book = PairBook(sub.pairs)
    if a in book:
        if x not in book and y not in book:
            label = "case1.a_in.none"
        elif y in book and x not in book:
            book.discard(y)
            book.pair(a, w1)
            label = "case1.a_in.y"
        elif x in book and y not in book:
            mate = book.partner(x)
            book.discard(x)
            if mate == a:
                book.pair(a, w2)
                label = "case1.a_in.x_with_a"
            else:
                ensure(mate == v, "ear x is paired with a or v", mate=mate)
                spare = [u for u in sorted(g.neighbors(v)) if u not in book]
                if spare:
                    book.pair(v, spare[0])
                    label = "case1.a_in.x_with_v.spare"
                else:
                    book.discard(v)
                    label = "case1.a_in.x_with_v.full"
        elif book.partner(x) == y:
            book.discard(x, y)
            label = "case1.a_in.xy_together"
        else:
            ensure(book.partner(x) == v and book.partner(y) == a, "split ears pair with v and a")
            book.discard(x, y)
            book.pair(v, a)
            label = "case1.a_in.xy_split"
    elif y not in book:
        ensure(book.partner(x) == v, "ear x must dominate a")
        book.discard(x)
        book.pair(v, a)
        label = "case1.a_out.x"
    else:
        book.discard(x, y)
        book.pair(a, w2)
        label = "case1.a_out.xy"
    return book.freeze(PairedDomSet), label


def lift_case6(g: NearTriangulation, sub: PairedDomSet, *, v_j: int, w1: int, w2: int, s: int, wp: int) -> tuple[PairedDomSet, str]:
    """Translates a set of the case-6 gadget back; ``wp`` is the ear added on ``w1 s``."""
    book = PairBook(sub.pairs)
    if wp in book:
        mate = book.partner(wp)
        book.discard(wp)
        if mate == s:
            book.pair(s, w2)
            label = "case6.wp_with_s"
        elif s in book:
            book.discard(w1)
            label = "case6.wp_with_w1.s_in"
        else:
            book.discard(w1)
            book.pair(s, w2)
            label = "case6.wp_with_w1.s_out"
    elif s in book:
        label = "case6.s_in"
    else:
        ensure(book.partner(w1) == v_j, "w1 is paired with v_j when neither s nor the ear is chosen")
        book.discard(w1)
        book.pair(v_j, s)
        label = "case6.s_out"
    return book.freeze(PairedDomSet), label


def case_dispatch_paired(g: NearTriangulation, td: TerminalDecomposition) -> tuple[int, int]:
    """The first applicable case and the flank index it applies to."""
    plain = [j for j in range(td.k) if td.is_plain(j)]
    orders = td.flank_orders

    def contractible(j: int) -> bool:
        return is_contractible(inner_part(g, td, j), td.sides[j])

    single = (
        (1, lambda j: orders[j] == 4),
        (2, lambda j: orders[j] == 5 and contractible(j)),
        (3, lambda j: orders[j] == 6),
        (4, lambda j: orders[j] == 7),
        (5, lambda j: orders[j] >= 8),
    )
    for case, applies in single:
        for j in plain:
            if applies(j):
                return case, j

    adjacent = [j for j in plain if td.is_plain((j + 1) % td.k)]
    double = ((6, {(3, 3)}), (7, {(5, 3), (3, 5)}), (8, {(5, 5)}))
    for case, patterns in double:
        for j in adjacent:
            if (orders[j], orders[(j + 1) % td.k]) in patterns:
                return case, j
    raise InternalAssertion("no case applies to the terminal polygon", polygon=td.polygon, orders=orders)


class PairedSolver:
    def __init__(self, config: SolverConfig | None = None, coverage: CaseCoverage | None = None):
        self.config = config or DEFAULT_CONFIG
        self.coverage = coverage if coverage is not None else CaseCoverage()

    def solve(self, g: NearTriangulation) -> PairedDomSet:
        if g.n < 4:
            raise TooSmall(f"paired domination needs order at least 4, got {g.n}", n=g.n)
        result = self._solve(g)
        logger.debug("paired set of size %d for n=%d (bound %d)", result.size, g.n, paired_bound(g.n))
        return result

    def _checked(self, g: NearTriangulation, result: PairedDomSet, where: str) -> PairedDomSet:
        if self.config.check_lifts:
            problems = check_paired(g, result.pairs)
            ensure(not problems, f"{where} produced an invalid paired set", problems=problems)
        ensure(result.size <= paired_bound(g.n), f"{where} exceeded the size bound", size=result.size, n=g.n)
        return result

    def _child(self, parent: NearTriangulation, child: NearTriangulation) -> PairedDomSet:
        ensure((child.n, child.m) < (parent.n, parent.m), "recursion must shrink the instance", parent=(parent.n, parent.m), child=(child.n, child.m))
        ensure(child.n >= 4, "recursion reached order below 4", n=child.n)
        return self._solve(child)

    def _solve(self, g: NearTriangulation) -> PairedDomSet:
        host = g
        while True:
            if g.n <= 6:
                self.coverage.hit("base.oracle")
                return self._checked(host, minimum_paired_set(g, cap=self.config.exact_cap), "base")
            if g.is_mop:
                return self._checked(host, self.mop_paired(g), "mop")
            e = find_reducible_edge(g)
            if e is None:
                break
            logger.debug("removing reducible edge %s", e)
            self.coverage.hit("reducible")
            g = remove_edge(g, e)

        td = find_terminal_polygon(g)
        case, j = case_dispatch_paired(g, td)
        logger.debug("n=%d m=%d: case %d on flank %d of %s", g.n, g.m, case, j, td.polygon)
        self.coverage.hit(f"case{case}")
        handler = getattr(self, f"_case{case}")
        return self._checked(host, handler(g, td, j), f"case {case}")

    def mop_paired(self, g: NearTriangulation) -> PairedDomSet:
        if not g.is_mop:
            raise NotMop("expected a MOP", m=g.m)
        if g.n < 4:
            raise TooSmall(f"order {g.n} is below 4", n=g.n)
        if g.n <= self.config.paired_mop_oracle_max:
            self.coverage.hit("mop.oracle")
            return minimum_paired_set(g, cap=self.config.paired_mop_oracle_max)
        self.coverage.hit("mop.split")
        d, piece = split_by_diagonal(g, least_boundary_edge(g), 4)
        return self._piece(g, d, piece)

    # -- pieces cut off by a diagonal ---------------------------------------

    def _piece(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> PairedDomSet:
        handler = {5: self._pentagon, 6: self._hexagon, 7: self._heptagon}.get(piece.n)
        ensure(handler is not None, "piece order outside 5..7", order=piece.n)
        return handler(g, d, piece)

    def _pentagon(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> PairedDomSet:
        rest = strip_vertices(g, set(piece.vertices) - set(d))
        w = rest.next_label
        sub = self._child(g, contract_separator(rest, d))
        book = PairBook(sub.pairs)
        if w not in book:
            book.pair(*td2_pentagon(piece, d.u))
            label = "pentagon.w_out"
        else:
            z = book.partner(w)
            book.discard(w)
            b = d.v if g.has_edge(d.v, z) else d.u
            ensure(g.has_edge(b, z), "partner of the merged vertex sees an endpoint", partner=z)
            a = d.other(b)
            extra = td2_pentagon(piece, a)
            book.pair(b, z)
            if b not in extra:
                book.pair(*extra)
                label = "pentagon.w_in.b_free"
            else:
                book.pair(a, path_neighbor(piece, a, b))
                label = "pentagon.w_in.b_used"
        self.coverage.hit(label)
        return book.freeze(PairedDomSet)

    def _hexagon(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> PairedDomSet:
        sub = self._child(g, strip_vertices(g, set(piece.vertices) - set(d)))
        extra = td2_hexagon(piece, d)
        u = extra.a if extra.a in d else extra.b
        v = extra.other(u)
        book = PairBook(sub.pairs)
        if u not in book:
            book.pair(u, v)
            label = "hexagon.disjoint"
        else:
            book.pair(v, fresh_neighbor(piece, v, set(book) | {u, v}))
            label = "hexagon.shared"
        self.coverage.hit(label)
        return book.freeze(PairedDomSet)

    def _heptagon(self, g: NearTriangulation, d: EdgeRef, piece: NearTriangulation) -> PairedDomSet:
        sub = self._child(g, strip_vertices(g, set(piece.vertices) - set(d)))
        extra = td2_heptagon(piece)
        book = PairBook(sub.pairs)
        shared = [v for v in extra if v in book]
        if not shared:
            book.pair(*extra)
        elif len(shared) == 1:
            o = extra.other(shared[0])
            book.pair(o, fresh_neighbor(piece, o, set(book) | set(extra)))
        self.coverage.hit(f"heptagon.shared{len(shared)}")
        return book.freeze(PairedDomSet)

    # -- terminal polygon cases ---------------------------------------------

    def _case1(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        path = td.flank_paths[j]
        flank = flank_graph(g, td, j)
        if flank.degree(path[0]) == 3:
            a, v, w1, w2 = path[0], g.outer_predecessor(path[0]), path[1], path[2]
        else:
            a, v, w1, w2 = path[-1], g.outer_successor(path[-1]), path[2], path[1]
        ensure(flank.degree(a) == 3, "one flank endpoint carries the chord", path=path)
        t_j = remove_edge(inner_part(g, td, j), td.sides[j])
        gadget, x, y = case1_gadget(t_j, v, a)
        result, label = lift_case1(g, self._child(g, gadget), a=a, v=v, x=x, y=y, w1=w1, w2=w2)
        self.coverage.hit(label)
        return result

    def _case2(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        return self._pentagon(g, td.sides[j], flank_graph(g, td, j))

    def _case3(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        return self._hexagon(g, td.sides[j], flank_graph(g, td, j))

    def _case4(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        return self._heptagon(g, td.sides[j], flank_graph(g, td, j))

    def _case5(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        d, piece = split_by_diagonal(flank_graph(g, td, j), td.sides[j], 4)
        return self._piece(g, d, piece)

    def _case6(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        v_j, w1, s = td.flank_paths[j]
        _, w2, far = td.flank_paths[(j + 1) % td.k]
        gadget, wp = case6_gadget(g, w1, w2, s, far)
        result, label = lift_case6(g, self._child(g, gadget), v_j=v_j, w1=w1, w2=w2, s=s, wp=wp)
        self.coverage.hit(label)
        return result

    def _case7(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        nxt = (j + 1) % td.k
        if td.flank_orders[j] == 5:
            pent, ear = j, nxt
            path = td.flank_paths[j]
            s, f, s1 = path[-1], path[0], path[-2]
        else:
            pent, ear = nxt, j
            path = td.flank_paths[nxt]
            s, f, s1 = path[0], path[-1], path[1]
        doomed = td.inner_flank_vertices(pent) | td.inner_flank_vertices(ear) | {s}
        book = PairBook(self._child(g, strip_vertices(g, doomed)).pairs)
        extra = td2_pentagon(flank_graph(g, td, pent), s)
        if f in book and f in extra:
            book.pair(s, s1)
            self.coverage.hit("case7.shared")
        else:
            book.pair(*extra)
            self.coverage.hit("case7.disjoint")
        return book.freeze(PairedDomSet)

    def _case8(self, g: NearTriangulation, td: TerminalDecomposition, j: int) -> PairedDomSet:
        nxt = (j + 1) % td.k
        path_a, path_b = td.flank_paths[j], td.flank_paths[nxt]
        s = path_a[-1]
        f = path_a[0]
        t0 = strip_vertices(g, td.inner_flank_vertices(j) | td.inner_flank_vertices(nxt))
        reduced = None
        for v in sorted(u for u in t0.neighbors(s) if u in td.interior):
            try:
                reduced = remove_vertices(t0, {s, v})
            except ResultNotNearTriangulation:
                continue
            break
        ensure(reduced is not None, "no interior neighbour of the shared vertex can go with it", shared=s)

        book = PairBook(self._child(g, reduced).pairs)
        extra = td2_pentagon(flank_graph(g, td, j), s)
        if f in book and f in extra:
            book.pair(s, path_a[-2])
            self.coverage.hit("case8.shared")
        else:
            book.pair(*extra)
            self.coverage.hit("case8.disjoint")
        book.pair(path_b[2], path_b[3])
        return book.freeze(PairedDomSet)


def compute_paired(g: NearTriangulation, config: SolverConfig | None = None, coverage: CaseCoverage | None = None) -> PairedDomSet:
    return PairedSolver(config, coverage).solve(g)


def mop_paired(g: NearTriangulation, config: SolverConfig | None = None) -> PairedDomSet:
    return PairedSolver(config).mop_paired(g)
