import pytest

from chibound.corpus import are_isomorphic
from chibound.errors import SizeCapError
from chibound.generators import complete, complete_bipartite, cycle, path, star
from chibound.graphs import Graph, subdivide_exact
from chibound.invariants import clique_number
from chibound.coloring import chromatic_number_value
from chibound.minors import (
    chi_TM,
    critical_patterns,
    enumerate_ITM_exact,
    find_subdivided_clique,
    find_topo_embedding,
    is_induced_exact_subdivision,
    omega_TM,
    validate_topo_embedding,
)


def test_subdivided_triangle_in_c5():
    emb = find_subdivided_clique(cycle(5), 3, 1)
    assert emb is not None
    ok, why = validate_topo_embedding(cycle(5), emb, 1)
    assert ok, why


def test_identity_instances():
    for n, p in [(3, 1), (4, 1), (3, 2)]:
        gs = subdivide_exact(complete(n), p)
        emb = find_subdivided_clique(gs, n, p)
        assert emb is not None
        ok, why = validate_topo_embedding(gs, emb, p)
        assert ok, why
        assert find_subdivided_clique(gs, 3, p - 1) is None


def test_trees_have_no_subdivided_triangle():
    for tree in (path(6), star(5)):
        assert find_subdivided_clique(tree, 3, 4) is None


def test_omega_tm_values():
    assert omega_TM(cycle(5), 1) == 3
    assert omega_TM(complete_bipartite(4, 4), 1) == 4
    k99 = omega_TM(complete_bipartite(9, 9), 1)
    assert k99 == 7 and k99 * k99 >= 9  # well above the sqrt(s) floor


def test_omega_tm_depth_zero_is_clique_number(small_connected):
    for g in small_connected[::4]:
        assert omega_TM(g, 0) == clique_number(g).value


def test_omega_tm_monotone_in_depth(small_connected):
    for g in small_connected[::12]:
        values = [omega_TM(g, r) for r in range(3)]
        assert values == sorted(values)


def test_induced_exact_subdivision():
    emb = is_induced_exact_subdivision(complete(3), 1, cycle(6))
    assert emb is not None
    ok, why = validate_topo_embedding(cycle(6), emb, 1, exact=True, induced=True)
    assert ok, why
    assert is_induced_exact_subdivision(complete(3), 1, complete(6)) is None
    host = subdivide_exact(complete(4), 1)
    emb = is_induced_exact_subdivision(complete(4), 1, host)
    assert emb is not None
    ok, why = validate_topo_embedding(host, emb, 1, exact=True, induced=True)
    assert ok, why


def test_enumerate_itm():
    found = enumerate_ITM_exact(cycle(6), 1, 4)
    assert any(are_isomorphic(h, complete(3)) for h in found.patterns)
    k5 = enumerate_ITM_exact(complete(5), 1, 4)
    assert all(h.m == 0 for h in k5.patterns)
    host = subdivide_exact(complete(4), 1)
    stats = enumerate_ITM_exact(host, 1, 4)
    assert stats.max_average_degree == 3  # K_4 itself is the densest pattern


def test_itm_members_reembed():
    host = cycle(6)
    for h in enumerate_ITM_exact(host, 1, 4).patterns:
        assert is_induced_exact_subdivision(h, 1, host) is not None


def test_chi_tm():
    host = subdivide_exact(complete(4), 1)
    res = chi_TM(host, 1, 4)
    assert res.value == 4 and not res.exact  # cap 4 < 10 vertices
    res = chi_TM(host, 1, host.n)
    assert res.value == 4 and res.exact
    assert chi_TM(path(6), 3, 6).value <= 2


def test_chi_tm_depth_zero_is_chromatic(small_connected):
    for g in small_connected[::6]:
        assert chi_TM(g, 0, g.n).value == chromatic_number_value(g)


def test_critical_patterns():
    threes = critical_patterns(3, 7)
    assert sorted((h.n, h.m) for h in threes) == [(3, 3), (5, 5), (7, 7)]
    fours = critical_patterns(4, 5)
    assert [(h.n, h.m) for h in fours] == [(4, 6)]
    assert all(
        chromatic_number_value(Graph(h.n, h.edges - {e})) == 3
        for h in fours
        for e in h.edges
    )


def test_downward_closure_of_embeddings(small_connected):
    # if H embeds, so does H minus one edge (restriction of the same search)
    for g in small_connected[::15]:
        emb = find_subdivided_clique(g, 3, 1)
        if emb is None:
            continue
        h = emb.pattern
        for e in list(h.edges)[:1]:
            smaller = Graph(h.n, h.edges - {e})
            assert find_topo_embedding(smaller, g, 1) is not None


def test_host_cap():
    with pytest.raises(SizeCapError):
        find_topo_embedding(complete(3), complete(9), 1, host_cap=8)
    with pytest.raises(SizeCapError):
        find_subdivided_clique(cycle(5), 9, 1)
