from itertools import islice

import pytest
from hypothesis import assume, given

from tridom import semipaired_solver
from tridom.base import CaseCoverage, SemipairedDomSet
from tridom.config import DEFAULT_CONFIG
from tridom.decomposition import find_terminal_polygon
from tridom.errors import IsFamilyF, NotMop, PreconditionViolated, TooSmall
from tridom.exact_oracle import check_semipaired, is_dominating, minimum_semipaired_set, semipaired_bound
from tridom.family_f import enumerate_family_f, is_in_family_f
from tridom.generators import attach_mop, enumerate_mops, random_mop, wheel
from tridom.graph_core import EdgeRef, NearTriangulation, attach_ear, distance, remove_vertices
from tridom.paired_solver import case1_gadget
from tridom.semipaired_solver import (
    CASE5_LIFTS,
    FAMILY_SITES,
    SEMIPAIRED_CASES,
    SemipairedSolver,
    case_dispatch_semipaired,
    compute_semipaired,
    ear_at,
    lift_case1_semipaired,
    lift_case5_semipaired,
    lift_contracted_edge,
    mop_semipaired,
    pair_through_separator,
    recombine_pairs,
)

from .strategies import irreducible_near_triangulations, mops, near_triangulations


def assert_within_bound(g: NearTriangulation, result: SemipairedDomSet):
    assert check_semipaired(g, result.pairs) == []
    assert result.size <= semipaired_bound(g.n)


def test_family_members_are_refused():
    for member in enumerate_family_f():
        with pytest.raises(IsFamilyF) as info:
            compute_semipaired(member.mop)
        assert info.value.exit_code == 2


def test_order_four_is_too_small(k4):
    with pytest.raises(TooSmall):
        compute_semipaired(k4)


def test_mop_semipaired_needs_a_mop(w4):
    with pytest.raises(NotMop):
        mop_semipaired(w4)


@pytest.mark.parametrize("n", range(5, 11))
def test_every_small_mop_outside_the_family(n):
    for g in enumerate_mops(n):
        if is_in_family_f(g):
            continue
        assert_within_bound(g, compute_semipaired(g))


@pytest.mark.slow
@pytest.mark.parametrize("n", [11, 12])
def test_every_mop_up_to_order_twelve(n):
    for g in enumerate_mops(n):
        assert_within_bound(g, compute_semipaired(g))


def test_mop_split_on_order_twelve():
    coverage = CaseCoverage()
    graphs = [g for g, _ in zip(enumerate_mops(12, dedupe=True), range(60))]
    for g in graphs:
        assert_within_bound(g, compute_semipaired(g, coverage=coverage))
    assert coverage.counts["mop.split"] == len(graphs)


LOW_CAP = DEFAULT_CONFIG.replace(exact_cap=10)
LANDING_SITES = ("rest.family.ear", "rest.family.wide", "hexagon.family", "hexagon.family.split")


@pytest.mark.parametrize("n", range(12, 17))
def test_mop_sweep_stays_constructive_above_the_cap(n, monkeypatch):
    orders = []

    def recording_oracle(g, cap):
        orders.append(g.n)
        return minimum_semipaired_set(g, cap=cap)

    monkeypatch.setattr(semipaired_solver, "minimum_semipaired_set", recording_oracle)
    coverage = CaseCoverage()
    solver = SemipairedSolver(LOW_CAP, coverage)
    for seed in range(40):
        g = random_mop(n, seed)
        assert_within_bound(g, solver.solve(g))
    assert max(orders, default=0) <= LOW_CAP.semipaired_mop_oracle_max
    assert coverage.counts["mop.split"] >= 40


@pytest.mark.parametrize("seed", [568, 729])
def test_order_fourteen_mops_whose_splits_land_in_the_family(seed):
    g = random_mop(14, seed)
    coverage = CaseCoverage()
    assert_within_bound(g, SemipairedSolver(LOW_CAP, coverage).solve(g))
    assert sum(coverage.counts[site] for site in LANDING_SITES) >= 1


def _boundary_edges(g: NearTriangulation):
    return [EdgeRef(v, g.outer_successor(v)) for v in g.outer]


@pytest.mark.parametrize("order", [7, 8, 9])
def test_pieces_hanging_off_a_family_member(order):
    shapes = [p for p in islice(enumerate_mops(order), 4) if not is_in_family_f(p)]
    coverage = CaseCoverage()
    solver = SemipairedSolver(LOW_CAP, coverage)
    runs = 0
    for member in enumerate_family_f():
        for d in _boundary_edges(member.mop):
            for shape in shapes:
                g, _ = attach_mop(member.mop, d.u, d.v, shape)
                piece = remove_vertices(g, set(member.mop.vertices) - set(d))
                assert_within_bound(g, solver._piece(g, d, piece))
                runs += 1
    assert runs > 0
    assert coverage.counts["rest.family.ear" if order == 7 else "rest.family.wide"] == runs


def test_hexagons_whose_contraction_lands_in_the_family():
    coverage = CaseCoverage()
    solver = SemipairedSolver(LOW_CAP, coverage)
    runs = 0
    for member in enumerate_family_f():
        for side in _boundary_edges(member.mop):
            # contracting either edge of the new ear gives the member back
            rest, y = attach_ear(member.mop, side.u, side.v)
            for d in (EdgeRef(side.u, y), EdgeRef(side.v, y)):
                for hexagon in enumerate_mops(6):
                    g, _ = attach_mop(rest, d.u, d.v, hexagon)
                    piece = remove_vertices(g, set(rest.vertices) - set(d))
                    assert_within_bound(g, solver._piece(g, d, piece))
                    runs += 1
    assert coverage.counts["hexagon.family"] + coverage.counts["hexagon.family.split"] == runs


def test_ear_at_finds_the_ear_next_to_each_vertex():
    for member in enumerate_family_f():
        f = member.mop
        for v in f.vertices:
            x = ear_at(f, v)
            assert f.degree(x) == 2
            assert x == v or f.has_edge(x, v)


def test_pair_through_separator_on_heptagons():
    for h in enumerate_mops(7):
        for d in _boundary_edges(h):
            e, z = pair_through_separator(h, d)
            assert e in d
            assert distance(h, e, z) <= 2
            assert is_dominating(h, (e, z))


@pytest.mark.parametrize("case", SEMIPAIRED_CASES)
def test_case_fixture_dispatch(fixtures, case):
    g = fixtures[f"semipaired.{case}"]
    assert case_dispatch_semipaired(g, find_terminal_polygon(g))[0] == int(case.removeprefix("case"))


@pytest.mark.parametrize("case", SEMIPAIRED_CASES)
def test_case_fixture_solves(fixtures, case):
    g = fixtures[f"semipaired.{case}"]
    coverage = CaseCoverage()
    result = SemipairedSolver(DEFAULT_CONFIG, coverage).solve(g)
    assert_within_bound(g, result)
    assert coverage.counts[case] >= 1


@pytest.mark.parametrize("site, name", list(zip(FAMILY_SITES, ["reducible", "case2", "case6"])))
def test_family_landings(landings, site, name):
    g = landings[name]
    coverage = CaseCoverage()
    result = SemipairedSolver(DEFAULT_CONFIG, coverage).solve(g)
    assert_within_bound(g, result)
    assert coverage.counts[site] >= 1


def test_recombine_pairs_same_side():
    g = wheel(6)
    rec = recombine_pairs(g, 6, 0, [(2, 1), (3, 5)])
    assert rec.pairs == ((2, 3), (1, 5))
    assert rec.mixed is None


def test_recombine_pairs_leaves_one_mixed_pair():
    rec = recombine_pairs(wheel(6), 6, 0, [(2, 1)])
    assert rec.pairs == ()
    assert rec.mixed == (2, 1)


def test_recombine_pairs_needs_straddling_pairs():
    with pytest.raises(PreconditionViolated):
        recombine_pairs(wheel(6), 0, 1, [(3, 4)])


def test_lift_contracted_edge_without_the_merged_vertex():
    result, label = lift_contracted_edge(wheel(6), SemipairedDomSet.of([(1, 3)]), p=4, q=5, w=99, u_prime=0)
    assert label == "contract.w_out"
    assert result.pairs == ((0, 4), (1, 3))


def test_lift_contracted_edge_with_the_merged_vertex():
    result, label = lift_contracted_edge(wheel(6), SemipairedDomSet.of([(99, 2)]), p=0, q=1, w=99, u_prime=4)
    assert label == "contract.w_in.q"
    assert result.pairs == ((0, 4), (1, 2))


def _gadget():
    # ears x = 5 on 0-1 and y = 6 on 5-1 over the wheel with rim 0..3 and hub 4; a = 1, w1 = 7
    gadget, x, y = case1_gadget(wheel(4), 0, 1)
    assert (x, y) == (5, 6)
    return gadget


CASE1_SUBSETS = {
    "case1.a_in.none": ([(1, 4)], [(1, 4)]),
    "case1.a_in.y": ([(1, 4), (6, 3)], [(1, 4), (3, 7)]),
    "case1.a_in.x_near": ([(1, 4), (5, 0)], [(0, 7), (1, 4)]),
    "case1.a_in.x_far.spare": ([(1, 4), (5, 3)], [(0, 3), (1, 4)]),
    "case1.a_in.x_far.full": ([(1, 4), (5, 3), (0, 2)], [(0, 2), (1, 4)]),
    "case1.a_in.xy_together": ([(1, 4), (5, 6)], [(1, 4)]),
    "case1.a_in.xy_close": ([(1, 4), (5, 0), (6, 2)], [(0, 2), (1, 4)]),
    "case1.a_out.x": ([(5, 3)], [(1, 3)]),
    "case1.a_out.y": ([(6, 3)], [(1, 3)]),
    "case1.a_out.xy_together": ([(5, 6)], [(1, 7)]),
    "case1.a_out.xy": ([(5, 2), (6, 3)], [(1, 2), (3, 7)]),
}


@pytest.mark.parametrize("label", sorted(CASE1_SUBSETS))
def test_lift_case1_semipaired(label):
    gadget = _gadget()
    sub, expected = CASE1_SUBSETS[label]
    result, got = lift_case1_semipaired(gadget, gadget, SemipairedDomSet.of(sub), a=1, x=5, y=6, w1=7)
    assert got == label
    assert result.pairs == SemipairedDomSet.of(expected).pairs


# w1 = 1, s = 2, w2 = 3, ear w' = 9
CASE5_SUBSETS = {
    "case5.s_in": ([(2, 4)], [(2, 4)]),
    "case5.s_in.wp": ([(2, 4), (9, 6)], [(2, 4), (3, 6)]),
    "case5.s_out": ([(1, 6)], [(2, 6)]),
    "case5.s_out.wp": ([(9, 6)], [(2, 6)]),
}


@pytest.mark.parametrize("label", CASE5_LIFTS)
def test_lift_case5_semipaired(label):
    sub, expected = CASE5_SUBSETS[label]
    result, got = lift_case5_semipaired(SemipairedDomSet.of(sub), w1=1, w2=3, s=2, wp=9)
    assert got == label
    assert result.pairs == SemipairedDomSet.of(expected).pairs


@given(mops(min_order=12, max_order=16))
def test_random_mops(g: NearTriangulation):
    assume(not is_in_family_f(g))
    assert_within_bound(g, compute_semipaired(g))


@given(near_triangulations(min_order=5, max_order=24))
def test_random_near_triangulations(g: NearTriangulation):
    assume(not is_in_family_f(g))
    assert_within_bound(g, compute_semipaired(g))


@given(irreducible_near_triangulations())
def test_random_irreducible_instances(g: NearTriangulation):
    assert_within_bound(g, compute_semipaired(g))
