"""Property-based checks with hypothesis: structural invariants that must hold
on every graph, not just the worked examples."""

from hypothesis import given, settings, strategies as st

from chibound.codec import (
    graph_from_graph6,
    graph_from_json,
    graph_to_graph6,
    graph_to_json,
)
from chibound.coloring import chi_p, chromatic_number, star_chromatic_number
from chibound.graphs import Graph, blow_up, induced_subgraph, orientations, subdivide_exact
from chibound.invariants import biclique_number, clique_number
from chibound.treedepth import tree_depth


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
    return Graph(n, edges)


common = settings(max_examples=60, deadline=None)


@common
@given(graphs(max_n=8))
def test_codec_roundtrip(g):
    assert graph_from_graph6(graph_to_graph6(g)) == g
    assert graph_from_json(graph_to_json(g)) == g


@common
@given(graphs(max_n=6), st.integers(min_value=0, max_value=3))
def test_subdivision_counting(g, p):
    s = subdivide_exact(g, p)
    assert s.n == g.n + p * g.m
    assert s.m == (p + 1) * g.m


@common
@given(graphs(max_n=5))
def test_every_orientation_covers_each_edge_once(g):
    for d in orientations(g):
        assert d.is_oriented
        assert len(d.arcs) == g.m
        for u, v in g.edges:
            assert ((u, v) in d.arcs) != ((v, u) in d.arcs)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=6), st.integers(min_value=1, max_value=3))
def test_blow_up_clique_number_multiplies(g, k):
    assert clique_number(blow_up(g, k)).value == k * clique_number(g).value


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6), st.data())
def test_vertex_deletion_is_monotone(g, data):
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    rest = [u for u in range(g.n) if u != v]
    sub, _ = induced_subgraph(g, rest)
    assert chromatic_number(sub).value <= chromatic_number(g).value
    assert star_chromatic_number(sub).value <= star_chromatic_number(g).value
    assert chi_p(sub, 3).value <= chi_p(g, 3).value
    assert tree_depth(sub).value <= tree_depth(g).value
    assert clique_number(sub).value <= clique_number(g).value
    assert biclique_number(sub).value <= biclique_number(g).value


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6))
def test_chain_and_floor(g):
    chi = chromatic_number(g).value
    chi2 = star_chromatic_number(g).value
    chi3 = chi_p(g, 3).value
    td = tree_depth(g).value
    assert chi <= chi2 <= chi3 <= td
    assert chi_p(g, g.n).value == td
    assert biclique_number(g).value >= clique_number(g).value // 2
