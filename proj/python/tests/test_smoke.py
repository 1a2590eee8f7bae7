import xml.dom.minidom

import pytest

import tsurf


def test_l_tromino_is_genus_two():
    a = tsurf.analyze(tsurf.construct("three-square"))
    assert a["genus"] == 2
    assert a["stratum"] == [2]


def test_c3_graph_and_comparison():
    c3 = tsurf.construct("c3")
    assert len(tsurf.graph(c3)["edges"]) == 6
    assert tsurf.graph_stats(c3) == (2, 1)
    assert tsurf.compare(c3, tsurf.construct("c3-noncrossing")) == {
        "equivalent": False,
        "reason": "pattern mismatch",
    }
    assert tsurf.compare(c3, c3)["equivalent"]


def test_extremal_witnesses():
    assert tsurf.graph_stats(tsurf.construct("edges-min", genus=2, radius=0.3)) == (8, 0)
    assert tsurf.graph_stats(tsurf.construct("nine-loops")) == (0, 9)


def test_realize_on_three_squares():
    result = tsurf.realize(tsurf.construct("three-square"), tsurf.construct("c3"), seed=2, attempts=16)
    assert result["status"] == "found"
    assert result["residual"] <= 1e-8
    assert tsurf.compare(result["packing"], tsurf.construct("c3"))["equivalent"]


def test_search_is_reproducible():
    a = tsurf.search(50, seed=3, strategy="cone_plus_regular", threads=1)
    b = tsurf.search(50, seed=3, strategy="cone_plus_regular", threads=2)
    assert a == b
    assert a["discarded"] + a["rejected"] + a["accepted"] == 50
    forced = tsurf.search(10, seed=3, inject=True)
    assert (forced["max_multiedges_found"], forced["max_multiloops_found"]) == (8, 9)


def test_render_is_svg():
    svg = tsurf.render(tsurf.construct("c3"))
    doc = xml.dom.minidom.parseString(svg)
    assert doc.documentElement.tagName == "svg"
    assert svg.count('class="tangency"') == 6


def test_errors():
    with pytest.raises(tsurf.DomainError):
        tsurf.search(0)
    with pytest.raises(tsurf.StructuralError):
        tsurf.graph("{")
    with pytest.raises(tsurf.StructuralError):
        tsurf.construct("dodecahedron")
    with pytest.raises(tsurf.Error):
        tsurf.construct("ngon", sides=7)
