import pytest

from chibound import corpus
from chibound.errors import BudgetError, ParameterError, SizeCapError, WalkLoopError
from chibound.generators import SplitMix64, complete, cycle, path
from chibound.graphs import Digraph, orientations
from chibound.homomorphism import (
    directed_cycle,
    directed_path,
    h_coloring_with_witness,
    hom_exists,
    homomorphism,
    longest_directed_path_order,
    symmetric_digraph,
    transitive_tournament,
    validate_homomorphism,
    verify_restricted_dual,
    walk_power,
)
from oracles import walk_count_matrix


def _random_digraph(rng, n, p):
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.uniform() < p
    ]
    return Digraph(n, arcs)


def test_directed_path_levels():
    assert homomorphism(directed_path(3), transitive_tournament(2)) is None
    hom = homomorphism(directed_path(3), transitive_tournament(3))
    assert hom is not None
    assert validate_homomorphism(directed_path(3), transitive_tournament(3), hom)[0]


def test_identity_and_cycles():
    d = directed_cycle(5)
    hom = homomorphism(d, d)
    assert hom is not None
    for k in range(1, 7):
        assert homomorphism(directed_cycle(5), transitive_tournament(k)) is None


def test_transitive_tournament_shape():
    t4 = transitive_tournament(4)
    assert t4.m == 6 and t4.is_oriented
    assert longest_directed_path_order(t4) == 4
    assert longest_directed_path_order(directed_cycle(3)) is None


def test_gallai_roy_on_small_orientations():
    # hom into T_k exists iff every directed path has at most k vertices
    samples = []
    for n in range(1, 5):
        for g in corpus.all_graphs(n):
            samples.extend(orientations(g))
    rng = SplitMix64(12)
    samples += [_random_digraph(rng, 5, 0.3) for _ in range(60)]
    samples += [_random_digraph(rng, 6, 0.25) for _ in range(40)]
    for d in samples:
        longest = longest_directed_path_order(d)
        for k in range(1, 5):
            expected = longest is not None and longest <= k
            assert hom_exists(d, transitive_tournament(k)) == expected


def test_hom_composability():
    rng = SplitMix64(14)
    checked = 0
    while checked < 10:
        f = _random_digraph(rng, 4, 0.3)
        g = _random_digraph(rng, 5, 0.5)
        h = _random_digraph(rng, 5, 0.7)
        fg = homomorphism(f, g)
        gh = homomorphism(g, h)
        if fg is None or gh is None:
            continue
        composed = tuple(gh.mapping[x] for x in fg.mapping)
        from chibound.homomorphism import HomMapping

        assert validate_homomorphism(f, h, HomMapping(composed))[0]
        checked += 1


def test_walk_power_examples():
    with pytest.raises(WalkLoopError) as info:
        walk_power(directed_cycle(3), 3)
    assert len(info.value.walk) == 4
    assert info.value.walk[0] == info.value.walk[-1]

    wp = walk_power(directed_cycle(4), 3)
    assert wp.arcs == frozenset({(0, 3), (1, 0), (2, 1), (3, 2)})
    wp = walk_power(transitive_tournament(3), 2)
    assert wp.arcs == frozenset({(0, 2)})


def test_walk_power_matches_matrix_oracle():
    rng = SplitMix64(15)
    for _ in range(25):
        d = _random_digraph(rng, 6, 0.3)
        for length in (2, 3, 4):
            counts = walk_count_matrix(d, length)
            looped = any(counts[v][v] > 0 for v in range(d.n))
            try:
                wp = walk_power(d, length)
            except WalkLoopError:
                assert looped
                continue
            assert not looped
            expected = {
                (u, v)
                for u in range(d.n)
                for v in range(d.n)
                if u != v and counts[u][v] > 0
            }
            assert wp.arcs == frozenset(expected)


def test_restricted_dual_verdicts():
    samples = []
    for n in range(1, 5):
        for g in corpus.all_graphs(n):
            samples.extend(orientations(g))
    report = verify_restricted_dual(directed_path(2), transitive_tournament(1), samples)
    assert report.verdict
    # F == D gives an immediate premise failure
    report = verify_restricted_dual(
        transitive_tournament(2), transitive_tournament(2), samples
    )
    assert not report.premise_ok and not report.verdict
    # the directed triangle against T_2 fails on the sample T_3
    report = verify_restricted_dual(
        directed_cycle(3), transitive_tournament(2), [transitive_tournament(3)]
    )
    assert report.premise_ok and not report.verdict
    assert report.violation["f_to_g"] is False and report.violation["g_to_d"] is False


def test_h_coloring_witness_for_dense_input():
    out = h_coloring_with_witness(
        complete(5), complete(4), clique_threshold=5, degeneracy_threshold=3
    )
    assert out.kind == "witness" and len(out.witness) == 5


def test_h_coloring_mapping_for_sparse_input():
    out = h_coloring_with_witness(
        cycle(5), complete(3), clique_threshold=4, degeneracy_threshold=2
    )
    assert out.kind == "mapping" and out.mapping is not None
    out = h_coloring_with_witness(
        path(6), complete(2), clique_threshold=3, degeneracy_threshold=1
    )
    assert out.kind == "mapping"


def test_h_coloring_never_both_and_revalidates():
    out = h_coloring_with_witness(
        cycle(5), complete(2), clique_threshold=3, degeneracy_threshold=2
    )
    # odd cycle is not 2-colorable: sparse path must fall back to a witness
    assert out.kind == "witness"
    assert out.mapping is None
    sub_g, _ = __import__("chibound.graphs", fromlist=["induced_subgraph"]).induced_subgraph(
        cycle(5), out.witness
    )
    assert not hom_exists(symmetric_digraph(sub_g), symmetric_digraph(complete(2)))


def test_h_coloring_unsound_thresholds_raise():
    with pytest.raises(ParameterError):
        h_coloring_with_witness(
            complete(5), complete(6), clique_threshold=5, degeneracy_threshold=3
        )


def test_dual_synthesis_finds_tournament_dual():
    from chibound.homomorphism import search_restricted_dual

    samples = []
    for n in range(1, 4):
        for g in corpus.all_graphs(n):
            samples.extend(orientations(g))
    found = search_restricted_dual(directed_path(2), samples, max_size=2)
    # single-arc exclusion: the arcless single vertex is the canonical dual
    assert found is not None and found.n == 1 and found.m == 0
    found = search_restricted_dual(directed_path(3), samples, max_size=2)
    assert found is not None
    assert verify_restricted_dual(directed_path(3), found, samples).verdict


def test_budget_error():
    rng = SplitMix64(16)
    d = _random_digraph(rng, 8, 0.4)
    with pytest.raises(BudgetError):
        homomorphism(d, transitive_tournament(8), budget=1)


def test_hom_cap():
    with pytest.raises(SizeCapError):
        homomorphism(directed_path(13), transitive_tournament(13))
