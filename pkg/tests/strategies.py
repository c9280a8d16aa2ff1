from hypothesis import strategies as st

from tridom.generators import random_flanked_near_triangulation, random_mop, random_near_triangulation

seeds = st.integers(min_value=0, max_value=2**64 - 1)


@st.composite
def mops(draw: st.DrawFn, min_order: int = 4, max_order: int = 12):
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    return random_mop(n, draw(seeds))


@st.composite
def near_triangulations(draw: st.DrawFn, min_order: int = 5, max_order: int = 14, min_interior: int = 0):
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    m = draw(st.integers(min_value=min(min_interior, n - 3), max_value=n - 3))
    return random_near_triangulation(n, m, draw(seeds))


@st.composite
def irreducible_near_triangulations(draw: st.DrawFn):
    """Small cores with one or two interior vertices and random flanks on every side."""
    core_order = draw(st.integers(min_value=4, max_value=5))
    interior = draw(st.integers(min_value=1, max_value=core_order - 3))
    return random_flanked_near_triangulation(core_order, interior, None, draw(seeds))
