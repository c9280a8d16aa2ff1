"""Brute-force domination numbers used as ground truth.

Subsets are enumerated by increasing size. Within one size, candidates are chosen in
increasing vertex order, and a branch dies as soon as the lowest undominated vertex can no
longer be reached by any later candidate. Pair feasibility is a perfect-matching question,
answered by networkx's blossom matching on the induced graph (paired) or on the
"distance at most 2" graph (semipaired).
"""

import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict

from .base import PairedDomSet, SemipairedDomSet
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import IsFamilyF, TooLarge, TooSmall
from .graph_core import NearTriangulation

logger = logging.getLogger(__name__)


def is_dominating(g: NearTriangulation, s: Iterable[int]) -> bool:
    chosen = set(s)
    return all(v in chosen or g.neighbors(v) & chosen for v in g.vertices)


def is_total_dominating(g: NearTriangulation, s: Iterable[int]) -> bool:
    chosen = set(s)
    return all(g.neighbors(v) & chosen for v in g.vertices)


def perfect_matching(vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """A perfect matching of the given graph, or None."""
    if len(vertices) % 2:
        return None
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    if 2 * len(matching) != len(vertices):
        return None
    return sorted((min(a, b), max(a, b)) for a, b in matching)


def pairings(vertices: Sequence[int], adjacent: Callable[[int, int], bool]) -> Iterator[list[tuple[int, int]]]:
    """Every perfect pairing of ``vertices`` using only adjacent pairs (reference enumerator)."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for i, mate in enumerate(rest):
        if adjacent(first, mate):
            remaining = rest[:i] + rest[i + 1 :]
            for tail in pairings(remaining, adjacent):
                yield [(first, mate)] + tail


def _within_two(g: NearTriangulation, a: int, b: int) -> bool:
    return g.distances_from(a).get(b, 3) <= 2


def is_paired_feasible(g: NearTriangulation, s: Iterable[int]) -> list[tuple[int, int]] | None:
    chosen = sorted(set(s))
    edges = [(a, b) for i, a in enumerate(chosen) for b in chosen[i + 1 :] if g.has_edge(a, b)]
    return perfect_matching(chosen, edges)


def is_semipaired_feasible(g: NearTriangulation, s: Iterable[int]) -> list[tuple[int, int]] | None:
    chosen = sorted(set(s))
    edges = [(a, b) for i, a in enumerate(chosen) for b in chosen[i + 1 :] if _within_two(g, a, b)]
    return perfect_matching(chosen, edges)


def _check_pairs(g: NearTriangulation, pairs, ok: Callable[[int, int], bool], relation: str) -> list[str]:
    problems = []
    seen: set[int] = set()
    for pair in pairs:
        if len(pair) != 2:
            problems.append(f"{list(pair)} is not a pair")
            continue
        a, b = pair
        for v in (a, b):
            if v not in g.rotation:
                problems.append(f"{v} is not a vertex")
            elif v in seen:
                problems.append(f"{v} appears in two pairs")
            seen.add(v)
        if a in g.rotation and b in g.rotation and a != b and not ok(a, b):
            problems.append(f"{a} and {b} are not {relation}")
        if a == b:
            problems.append(f"{a} is paired with itself")
    if not is_dominating(g, seen & set(g.rotation)):
        missed = [v for v in g.vertices if v not in seen and not g.neighbors(v) & seen]
        problems.append(f"not dominating: {missed} undominated")
    return problems


def check_paired(g: NearTriangulation, pairs: Iterable[Sequence[int]]) -> list[str]:
    """Violations of the paired domination definition; empty when the certificate holds."""
    return _check_pairs(g, list(pairs), g.has_edge, "adjacent")


def check_semipaired(g: NearTriangulation, pairs: Iterable[Sequence[int]]) -> list[str]:
    return _check_pairs(g, list(pairs), lambda a, b: _within_two(g, a, b), "within distance 2")


class _Enumerator:
    """Dominating sets of a fixed size, in increasing index order."""

    def __init__(self, g: NearTriangulation):
        self.order = list(g.vertices)
        index = {v: i for i, v in enumerate(self.order)}
        self.closed = [0] * len(self.order)
        self.reach = [0] * len(self.order)
        for v, i in index.items():
            for u in g.closed_neighborhood(v):
                self.closed[i] |= 1 << index[u]
                self.reach[i] = max(self.reach[i], index[u])
        self.full = (1 << len(self.order)) - 1

    def dominating_sets(self, k: int) -> Iterator[list[int]]:
        picked: list[int] = []

        def extend(start: int, covered: int) -> Iterator[list[int]]:
            if len(picked) == k:
                if covered == self.full:
                    yield [self.order[i] for i in picked]
                return
            if covered == self.full:
                limit = len(self.order) - (k - len(picked))
            else:
                lowest = (~covered & self.full & -(~covered & self.full)).bit_length() - 1
                limit = min(self.reach[lowest], len(self.order) - (k - len(picked)))
            for i in range(start, limit + 1):
                picked.append(i)
                yield from extend(i + 1, covered | self.closed[i])
                picked.pop()

        yield from extend(0, 0)


def _check_cap(g: NearTriangulation, cap: int | None) -> None:
    cap = DEFAULT_CONFIG.exact_cap if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"order {g.n} exceeds the oracle cap {cap}", n=g.n, cap=cap)


def minimum_dominating_set(g: NearTriangulation, cap: int | None = None) -> list[int]:
    _check_cap(g, cap)
    enum = _Enumerator(g)
    for k in range(1, g.n + 1):
        for s in enum.dominating_sets(k):
            return s
    raise AssertionError("the whole vertex set dominates")


def _minimum_pairs(g: NearTriangulation, cap: int | None, feasible) -> list[tuple[int, int]]:
    _check_cap(g, cap)
    enum = _Enumerator(g)
    for k in range(2, g.n + 1, 2):
        for s in enum.dominating_sets(k):
            pairs = feasible(g, s)
            if pairs is not None:
                return pairs
    raise TooSmall(f"no pairable dominating set in a graph of order {g.n}", n=g.n)


def minimum_paired_set(g: NearTriangulation, cap: int | None = None) -> PairedDomSet:
    return PairedDomSet.of(_minimum_pairs(g, cap, is_paired_feasible))


def minimum_semipaired_set(g: NearTriangulation, cap: int | None = None) -> SemipairedDomSet:
    return SemipairedDomSet.of(_minimum_pairs(g, cap, is_semipaired_feasible))


def exact_gamma(g: NearTriangulation, cap: int | None = None) -> int:
    return len(minimum_dominating_set(g, cap))


def exact_gamma_pr(g: NearTriangulation, cap: int | None = None) -> int:
    return minimum_paired_set(g, cap).size


def exact_gamma_pr2(g: NearTriangulation, cap: int | None = None) -> int:
    return minimum_semipaired_set(g, cap).size


def paired_bound(n: int) -> int:
    return 2 * (n // 4)


def semipaired_bound(n: int) -> int:
    return (2 * n) // 5


class DominationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: int | None = None
    n: int
    m: int
    gamma: int
    gamma_pr: int
    gamma_pr2: int
    witnesses: dict[str, list[Any]]
    in_family_f: bool
    constructive_pr: int | None = None
    constructive_pr2: int | None = None
    bound_pr: int
    bound_pr2: int
    slack: dict[str, int | None]


def exact_report(g: NearTriangulation, cap: int | None = None, config: SolverConfig | None = None, index: int | None = None) -> DominationReport:
    """Exact values plus the constructive sizes for one instance."""
    from .family_f import is_in_family_f
    from .paired_solver import PairedSolver
    from .semipaired_solver import SemipairedSolver

    config = config or DEFAULT_CONFIG
    cap = config.exact_cap if cap is None else cap
    dom = minimum_dominating_set(g, cap)
    pr = minimum_paired_set(g, cap)
    pr2 = minimum_semipaired_set(g, cap)

    constructive_pr = constructive_pr2 = None
    if g.n >= 4:
        constructive_pr = PairedSolver(config).solve(g).size
    try:
        constructive_pr2 = SemipairedSolver(config).solve(g).size
    except (IsFamilyF, TooSmall) as exc:
        logger.debug("no constructive semipaired set: %s", exc.message)

    bound_pr, bound_pr2 = paired_bound(g.n), semipaired_bound(g.n)
    return DominationReport(
        index=index,
        n=g.n,
        m=g.m,
        gamma=len(dom),
        gamma_pr=pr.size,
        gamma_pr2=pr2.size,
        witnesses={"gamma": sorted(dom), "gamma_pr": [list(p) for p in pr.pairs], "gamma_pr2": [list(p) for p in pr2.pairs]},
        in_family_f=is_in_family_f(g),
        constructive_pr=constructive_pr,
        constructive_pr2=constructive_pr2,
        bound_pr=bound_pr,
        bound_pr2=bound_pr2,
        slack={
            "pr": None if constructive_pr is None else bound_pr - constructive_pr,
            "pr2": None if constructive_pr2 is None else bound_pr2 - constructive_pr2,
            "pr_exact": bound_pr - pr.size,
            "pr2_exact": bound_pr2 - pr2.size,
        },
    )


def find_tightness_witnesses(n: int, parameter: str, cap: int | None = None) -> list[NearTriangulation]:
    """Non-isomorphic MOPs of order ``n`` whose exact value meets the bound ("pr" or "pr2")."""
    from .generators import enumerate_mops

    exact, bound = {"pr": (exact_gamma_pr, paired_bound), "pr2": (exact_gamma_pr2, semipaired_bound)}[parameter]
    return [g for g in enumerate_mops(n, dedupe=True) if exact(g, cap) == bound(n)]
