import pytest
from hypothesis import given
from hypothesis import strategies as st

from tridom.errors import BadOrder, IsFamilyF, NotBoundaryEdge, NotMop, TooSmall
from tridom.exact_oracle import is_dominating
from tridom.family_f import enumerate_family_f, is_in_family_f
from tridom.generators import enumerate_mops, mop_from_triangulation
from tridom.graph_core import EdgeRef, NearTriangulation, distance
from tridom.small_mops import (
    fan_center,
    semipd2_mop,
    split_by_diagonal,
    td2_heptagon,
    td2_hexagon,
    td2_pentagon,
    totally_dominates,
)

from .strategies import mops, seeds


def _boundary_edges(g: NearTriangulation):
    return [EdgeRef(v, g.outer_successor(v)) for v in g.outer]


def test_every_pentagon_vertex_anchors_a_pair():
    for g in enumerate_mops(5):
        for u in g.vertices:
            pair = td2_pentagon(g, u)
            assert u in pair
            assert g.has_edge(*pair)
            assert totally_dominates(g, pair)


def test_every_hexagon_side_meets_a_pair_once():
    for g in enumerate_mops(6, dedupe=True):
        for e in _boundary_edges(g):
            pair = td2_hexagon(g, e)
            assert (pair.a in e) != (pair.b in e)
            assert g.has_edge(*pair)
            assert totally_dominates(g, pair)


def test_every_heptagon_has_a_pair():
    for g in enumerate_mops(7, dedupe=True):
        pair = td2_heptagon(g)
        assert g.has_edge(*pair)
        assert totally_dominates(g, pair)


def test_td2_order_and_shape_checks(fan5, w4):
    with pytest.raises(BadOrder):
        td2_pentagon(mop_from_triangulation(6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]), 0)
    with pytest.raises(NotMop):
        td2_pentagon(w4, 0)
    with pytest.raises(BadOrder):
        td2_pentagon(fan5, 7)
    hexagon = mop_from_triangulation(6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)])
    with pytest.raises(NotBoundaryEdge):
        td2_hexagon(hexagon, EdgeRef(0, 2))


def test_td2_set_other():
    g = mop_from_triangulation(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4)])
    pair = td2_pentagon(g, 0)
    assert pair.other(pair.a) == pair.b
    assert pair.other(pair.b) == pair.a


def test_fan_center(fan5):
    assert fan_center(fan5) == 0


@pytest.mark.parametrize("n", [7, 8, 9])
def test_semipd2_mop_outside_the_family(n):
    for g in enumerate_mops(n, dedupe=True):
        if is_in_family_f(g):
            continue
        a, b = semipd2_mop(g)
        assert distance(g, a, b) <= 2
        assert is_dominating(g, (a, b))


def test_semipd2_mop_refuses_the_family():
    member = enumerate_family_f()[0].mop
    with pytest.raises(IsFamilyF):
        semipd2_mop(member)


def test_split_needs_room(fan5):
    with pytest.raises(TooSmall):
        split_by_diagonal(fan5, EdgeRef(0, 1), 4)


def test_split_fan_from_the_tip():
    fan = mop_from_triangulation(8, [(0, i, i + 1) for i in range(1, 7)])
    d, piece = split_by_diagonal(fan, EdgeRef(0, 1), 4)
    assert 5 <= piece.n <= 7
    assert not fan.is_boundary_edge(d.u, d.v)
    assert piece.is_boundary_edge(d.u, d.v)
    assert not {0, 1} <= set(piece.vertices)


@given(mops(min_order=8, max_order=16), st.sampled_from([4, 5]), seeds)
def test_split_by_diagonal(g: NearTriangulation, l: int, pick: int):
    if g.n < 2 * l:
        return
    edges = _boundary_edges(g)
    e = edges[pick % len(edges)]
    d, piece = split_by_diagonal(g, e, l)
    assert l + 1 <= piece.n <= 2 * l - 1
    assert piece.is_mop
    assert g.has_edge(d.u, d.v) and not g.is_boundary_edge(d.u, d.v)
    assert piece.is_boundary_edge(d.u, d.v)
    assert not (e.u in piece.rotation and e.v in piece.rotation)
