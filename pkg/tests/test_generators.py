import pytest
from hypothesis import given
from hypothesis import strategies as st

from tridom.decomposition import IRREDUCIBLE, classify
from tridom.errors import BadOrder, InfeasibleMix, TooLarge
from tridom.family_f import enumerate_family_f, is_in_family_f
from tridom.generators import (
    CASE_SHAPES,
    GENERATOR_KINDS,
    SplitMix64,
    attach_flanks,
    attach_mop,
    case_fixtures,
    catalan,
    enumerate_mops,
    family_f_corpus,
    generate,
    irreducible_corpus,
    mop_from_triangulation,
    random_flanked_near_triangulation,
    random_mop,
    random_near_triangulation,
    wheel,
)
from tridom.graph_core import check_embedding

from .strategies import seeds


def test_splitmix_vector():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


@given(seeds, st.integers(min_value=1, max_value=1000))
def test_below_stays_in_range(seed: int, bound: int):
    rng = SplitMix64(seed)
    assert all(0 <= rng.below(bound) < bound for _ in range(20))


def test_below_rejects_empty_ranges():
    with pytest.raises(ValueError):
        SplitMix64(0).below(0)


@pytest.mark.parametrize("bound", [2**64 + 1, catalan(37), catalan(58), 3 * 2**130])
def test_below_draws_several_words_for_wide_bounds(bound):
    rng = SplitMix64(99)
    assert all(0 <= rng.below(bound) < bound for _ in range(20))


def test_below_keeps_the_one_word_stream():
    assert SplitMix64(7).below(2**64) == SplitMix64(7).next_u64()


def test_catalan():
    assert [catalan(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.mark.parametrize("n", range(3, 10))
def test_enumeration_count_is_catalan(n):
    graphs = list(enumerate_mops(n))
    assert len(graphs) == catalan(n - 2)
    assert all(g.is_mop and g.n == n for g in graphs)


def test_enumeration_up_to_isomorphism():
    assert len(list(enumerate_mops(4, dedupe=True))) == 1
    assert len(list(enumerate_mops(5, dedupe=True))) == 1
    assert len(list(enumerate_mops(6, dedupe=True))) == 3


def test_enumeration_limits():
    with pytest.raises(BadOrder):
        list(enumerate_mops(2))
    with pytest.raises(TooLarge):
        list(enumerate_mops(16))


def test_mop_from_triangulation_counts_triangles():
    with pytest.raises(BadOrder):
        mop_from_triangulation(5, [(0, 1, 2)])


@given(st.integers(min_value=3, max_value=30), seeds)
def test_random_mop_is_deterministic(n: int, seed: int):
    g = random_mop(n, seed)
    assert g.is_mop and g.n == n
    assert random_mop(n, seed) == g


@pytest.mark.parametrize("n", [39, 60])
def test_generators_past_order_thirty_eight(n):
    g = random_mop(n, 5)
    assert g.is_mop and g.n == n
    h = random_near_triangulation(n, n // 4, 5)
    assert (h.n, h.m) == (n, n // 4)
    assert check_embedding(h.to_raw()) == []


@given(st.integers(min_value=4, max_value=40), st.data())
def test_random_near_triangulation_mix(n: int, data):
    m = data.draw(st.integers(min_value=0, max_value=n - 3))
    seed = data.draw(seeds)
    g = random_near_triangulation(n, m, seed)
    assert (g.n, g.m) == (n, m)
    assert check_embedding(g.to_raw()) == []
    assert random_near_triangulation(n, m, seed) == g


def test_random_near_triangulation_rejects_bad_mixes():
    with pytest.raises(InfeasibleMix):
        random_near_triangulation(6, 4, 0)
    with pytest.raises(InfeasibleMix):
        random_near_triangulation(6, -1, 0)


def test_wheel():
    k4 = wheel(3)
    assert (k4.n, k4.m) == (4, 1)
    assert all(k4.degree(v) == 3 for v in k4.vertices)
    assert wheel(6).degree(6) == 6
    with pytest.raises(BadOrder):
        wheel(2)


def test_attach_mop_glues_new_vertices(k4, fan5):
    g, fresh = attach_mop(k4, 0, 1, fan5)
    assert fresh == (4, 5, 6)
    assert (g.n, g.h) == (7, 6)
    with pytest.raises(BadOrder):
        attach_mop(k4, 0, 3, fan5)


def test_attach_flanks_needs_one_order_per_side(k4):
    with pytest.raises(InfeasibleMix):
        attach_flanks(k4, (3, 3), 0)
    with pytest.raises(InfeasibleMix):
        attach_flanks(k4, (3, 3, 2), 0)


def test_case_fixtures_are_irreducible(fixtures):
    assert set(fixtures) == set(CASE_SHAPES)
    for name, g in fixtures.items():
        k, orders = CASE_SHAPES[name]
        assert classify(g) == IRREDUCIBLE
        assert g.n == k + 1 + sum(r - 2 for r in orders)
    again = case_fixtures()
    assert all(again[name] == g for name, g in fixtures.items())


@given(st.integers(min_value=4, max_value=6), seeds)
def test_flanked_instances_are_irreducible(core_order: int, seed: int):
    g = random_flanked_near_triangulation(core_order, 1, None, seed)
    assert classify(g) == IRREDUCIBLE


def test_irreducible_corpus():
    corpus = irreducible_corpus(6, seed=11, n_max=30)
    assert len(corpus) == 6
    assert all(classify(g) == IRREDUCIBLE for g in corpus)
    assert all(a == b for a, b in zip(corpus, irreducible_corpus(6, seed=11, n_max=30)))


def test_family_corpus():
    corpus = family_f_corpus()
    assert len(corpus) == len(enumerate_family_f())
    assert all(is_in_family_f(g) for g in corpus)


def test_landings(landings):
    assert set(landings) == {"reducible", "case2", "case6"}
    assert landings["reducible"].n == 9
    assert landings["case2"].n == 14
    assert landings["case6"].n == 14
    assert all(not is_in_family_f(g) for g in landings.values())


def test_generate_enumerate():
    items = generate("enumerate", n=6, seed=0)
    assert len(items) == 14
    assert [item.meta["index"] for item in items] == list(range(14))
    assert all(item.meta["kind"] == "enumerate" for item in items)


@pytest.mark.parametrize("kind, n", [("mop", 9), ("ntri", 9), ("irreducible", 20), ("family-f", None), ("enumerate", 6)])
def test_generate_every_kind(kind, n):
    items = generate(kind, n=n, m=2, count=2, seed=5)
    assert items
    for item in items:
        assert item.meta["seed"] == 5
        assert check_embedding(item.graph.to_raw()) == []


def test_generate_rejects_bad_requests():
    assert "spiral" not in GENERATOR_KINDS
    with pytest.raises(BadOrder):
        generate("spiral", n=6)
    with pytest.raises(BadOrder):
        generate("mop")
