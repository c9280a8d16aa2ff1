import pytest

from tridom.errors import NoSuchEdge, NotDegreeTwo, NotMop
from tridom.exact_oracle import check_semipaired, exact_gamma_pr2, semipaired_bound
from tridom.family_f import (
    canonical_form,
    enumerate_family_f,
    is_in_family_f,
    near_domset_for_degree2,
    semipd2_after_edge_restore,
)
from tridom.generators import enumerate_mops
from tridom.graph_core import EdgeRef, distance, relabel, remove_edge


def test_members_are_order_nine_mops():
    members = enumerate_family_f()
    assert members
    for member in members:
        assert member.mop.n == 9 and member.mop.is_mop
        assert len(member.ears) == 3
        assert member.phase in (0, 1)
        assert all(member.mop.degree(x) == 2 for x in member.ear_vertices)
        assert is_in_family_f(member.mop)


def test_member_count_matches_the_order_nine_census():
    census = [g for g in enumerate_mops(9, dedupe=True) if is_in_family_f(g)]
    assert len(census) == len(enumerate_family_f())


def test_order_nine_census_splits_on_gamma_pr2():
    for g in enumerate_mops(9, dedupe=True):
        expected = 4 if is_in_family_f(g) else 2
        assert exact_gamma_pr2(g) == expected
        assert (exact_gamma_pr2(g) > semipaired_bound(9)) == is_in_family_f(g)


def test_membership_ignores_vertex_names():
    member = enumerate_family_f()[-1].mop
    assert is_in_family_f(relabel(member, {v: v + 100 for v in member.vertices}))


def test_non_members(fan9, w4):
    assert not is_in_family_f(fan9)
    assert not is_in_family_f(w4)


def test_canonical_form_is_for_mops_only(w4):
    with pytest.raises(NotMop):
        canonical_form(w4)


def test_canonical_form_is_rotation_invariant(fan9):
    shifted = relabel(fan9, {v: (v + 3) % 9 for v in fan9.vertices})
    assert canonical_form(shifted) == canonical_form(fan9)


def test_near_domset_for_every_ear():
    for member in enumerate_family_f():
        g = member.mop
        for u in member.ear_vertices:
            v, w = near_domset_for_degree2(member, u)
            assert distance(g, u, v) == 2
            assert distance(g, u, w) == 2
            assert distance(g, v, w) <= 2
            assert all(x in (u, v, w) or g.neighbors(x) & {v, w} for x in g.vertices)


def test_near_domset_needs_degree_two():
    member = enumerate_family_f()[0]
    hub = max(member.mop.vertices, key=member.mop.degree)
    with pytest.raises(NotDegreeTwo):
        near_domset_for_degree2(member, hub)


def test_edge_restore_on_the_reducible_landing(landings):
    g = landings["reducible"]
    assert not g.is_mop
    result = semipd2_after_edge_restore(g)
    assert result.size == 2
    assert check_semipaired(g, result.pairs) == []


def test_reducible_landing_drops_into_the_family(landings):
    g = landings["reducible"]
    reducible = [e for e in (EdgeRef(v, g.outer_successor(v)) for v in g.outer) if g.apex(e) not in g.boundary]
    assert any(is_in_family_f(remove_edge(g, e)) for e in reducible)


def test_edge_restore_needs_a_landing(fan9):
    with pytest.raises(NoSuchEdge):
        semipd2_after_edge_restore(fan9)
