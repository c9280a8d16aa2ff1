from dataclasses import replace

import numpy as np
import pytest

from tridom.config import DEFAULT_CONFIG
from tridom.generators import wheel
from tridom.render import SvgRenderer, barycentric_layout, render_svg


def test_k4_picture(k4):
    svg = render_svg(k4, [(0, 3)])
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 4
    assert svg.count("<path") == 1
    assert svg.count("<line") == 6
    assert svg.count("#d62728") == 2


def test_no_pairs_means_no_arcs(w4):
    svg = render_svg(w4)
    assert "<path" not in svg
    assert svg.count("<circle") == 5


@pytest.mark.parametrize("k", [3, 4, 6, 9])
def test_hub_sits_in_the_middle(k):
    positions = barycentric_layout(wheel(k))
    assert np.allclose(positions[k], [0.5, 0.5], atol=1e-6)


def test_outer_cycle_is_on_a_circle(w4):
    positions = barycentric_layout(w4)
    radii = [np.linalg.norm(positions[v] - 0.5) for v in w4.outer]
    assert np.allclose(radii, 0.45)


def test_given_coordinates_are_pinned(w4):
    positions = barycentric_layout(w4, coords={4: (0.2, 0.3)})
    assert np.allclose(positions[4], [0.2, 0.3])


def test_labels_are_escaped(k4):
    g = replace(k4, labels={0: "<a&b>"})
    svg = SvgRenderer().render(g, barycentric_layout(g), [])
    assert "<a&b>" not in svg
    assert "&lt;a&amp;b&gt;" in svg


def test_zero_iterations_keeps_free_vertices_unplaced(w4):
    config = DEFAULT_CONFIG.replace(layout_iterations=0)
    positions = barycentric_layout(w4, config.layout_iterations)
    assert np.allclose(positions[4], [0.0, 0.0])
