import pytest

from chibound.corpus import are_isomorphic
from chibound.errors import ParameterError, SizeCapError, ValidationError
from chibound.generators import complete, complete_bipartite, cycle, path, star
from chibound.graphs import (
    Graph,
    acyclic_orientation,
    blow_up,
    connected_components,
    disjoint_union,
    girth,
    induced_subgraph,
    orientations,
    power,
    subdivide,
    subdivide_exact,
)


def test_graph_validation():
    with pytest.raises(ValidationError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValidationError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValidationError):
        Graph(3, [(0, 1), (1, 0)])


def test_graph_immutable():
    g = complete(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_subdivide_profile_must_cover_edges():
    g = complete(3)
    with pytest.raises(ParameterError):
        subdivide(g, {(0, 1): 1})
    with pytest.raises(ParameterError):
        subdivide(g, {(0, 1): 1, (0, 2): 1, (1, 2): 0, (0, 3): 0})


def test_subdivide_counts():
    k4 = subdivide_exact(complete(4), 1)
    assert (k4.n, k4.m) == (10, 12)
    g = complete(4)
    assert subdivide_exact(g, 0) == g
    # n + p*m vertices and (p+1)*m edges
    for p in range(4):
        s = subdivide_exact(g, p)
        assert s.n == g.n + p * g.m
        assert s.m == (p + 1) * g.m


def test_subdivide_triangle_gives_c5():
    g = subdivide(complete(3), {(0, 1): 1, (0, 2): 1, (1, 2): 0})
    assert are_isomorphic(g, cycle(5))
    assert are_isomorphic(subdivide_exact(complete(3), 1), cycle(6))


def test_original_vertices_keep_indices():
    g = subdivide_exact(path(3), 2)
    assert g.has_edge(0, 3) and g.has_edge(4, 1)
    assert not g.has_edge(0, 1)


def test_blow_up():
    assert blow_up(cycle(5), 1) == cycle(5)
    b = blow_up(cycle(5), 2)
    assert (b.n, b.m) == (10, 25)
    with pytest.raises(ParameterError):
        blow_up(cycle(5), 0)


def test_power():
    assert are_isomorphic(power(path(3), 2), complete(3))
    g = cycle(6)
    assert power(g, 1) == g
    sq = power(cycle(6), 2)
    assert all(sq.degree(v) == 4 for v in range(6))


def test_orientations():
    assert len(list(orientations(complete(2)))) == 2
    assert len(list(orientations(path(3)))) == 4
    digs = list(orientations(complete(3)))
    assert len(digs) == 8
    cyclic = [d for d in digs if all((v, (v + 1) % 3) in d.arcs for v in range(3))
              or all(((v + 1) % 3, v) in d.arcs for v in range(3))]
    assert len(cyclic) == 2
    for d in digs:
        assert d.is_oriented
        for u, v in complete(3).edges:
            assert ((u, v) in d.arcs) != ((v, u) in d.arcs)


def test_orientations_cap():
    with pytest.raises(SizeCapError):
        next(orientations(complete(7)))  # 21 edges


def test_acyclic_orientation():
    t3 = acyclic_orientation(complete(3), [0, 1, 2])
    assert t3.arcs == frozenset({(0, 1), (0, 2), (1, 2)})
    d = acyclic_orientation(cycle(4), [0, 1, 2, 3])
    # no directed cycle: some vertex has no outgoing arc along every walk
    from chibound.homomorphism import longest_directed_path_order

    assert longest_directed_path_order(d) is not None
    with pytest.raises(ParameterError):
        acyclic_orientation(cycle(4), [0, 1, 2])


def test_girth():
    assert girth(cycle(5)) == 5
    assert girth(path(9)) is None
    assert girth(complete(4)) == 3
    assert girth(complete_bipartite(2, 3)) == 4


def test_components_and_union():
    g = disjoint_union([cycle(3), path(2)])
    assert g.n == 5 and g.m == 4
    assert [len(c) for c in connected_components(g)] == [3, 2]
    sub, verts = induced_subgraph(g, [3, 4])
    assert sub == complete(2) and verts == [3, 4]


def test_star_generator():
    s = star(4)
    assert s.n == 5 and s.m == 4 and s.degree(0) == 4
