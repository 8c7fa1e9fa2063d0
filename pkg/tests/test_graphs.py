"""Core graph machinery: construction, components, scoring, twins,
redundancy, and the universal-vertex peel."""

import pytest
from hypothesis import given, settings

from conftest import (
    brute_force_wvi,
    complete,
    cycle,
    path,
    random_graph,
    star,
    weighted_graphs,
)
from vintegrity import (
    WeightedGraph,
    are_twins,
    connected_components,
    evaluate,
    is_redundant,
    is_simplicial,
    peel_universal,
    simplicial_vertices,
    strip_redundant,
    twin_classes,
    wvi_exact,
)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(3, [(1, 1)])

    def test_rejects_parallel_edges(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(3, [(0, 1), (1, 0)])

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(2, [], [1, 0])

    def test_rejects_total_weight_overflow(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(2, [], [2**63, 2**63])

    def test_normalizes_endpoint_order(self):
        g = WeightedGraph.build(3, [(2, 0), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))

    def test_total_weight_cached(self):
        g = WeightedGraph.build(3, [], [2, 3, 4])
        assert g.W == 9


class TestComponents:
    def test_path_split(self):
        g = path(4)
        assert connected_components(g, {1}) == [frozenset({0}), frozenset({2, 3})]

    def test_complete_graph_is_one_component(self):
        assert connected_components(complete(5)) == [frozenset(range(5))]

    def test_removing_everything(self):
        assert connected_components(complete(5), range(5)) == []

    def test_rejects_foreign_vertices(self):
        with pytest.raises(ValueError):
            connected_components(path(3), {7})


class TestEvaluate:
    def test_star_center(self):
        sol = evaluate(star(4), {0})
        assert sol.objective == 2
        assert sol.max_component_weight == 1

    def test_path_middle(self):
        # vi(P_4) = 3; {1} attains it (checked against the brute force below).
        assert evaluate(path(4), {1}).objective == 3
        assert brute_force_wvi(path(4))[0] == 3

    def test_delete_all(self):
        g = path(4, [2, 3, 4, 5])
        sol = evaluate(g, range(4))
        assert sol.objective == g.W
        assert sol.max_component_weight == 0

    def test_empty_deletion_scores_heaviest_component(self):
        g = WeightedGraph.build(4, [(0, 1)], [5, 6, 7, 8])
        assert evaluate(g, ()).objective == 11

    @given(weighted_graphs())
    @settings(max_examples=60)
    def test_objective_identity(self, g):
        sol = evaluate(g, range(0, g.n, 2))
        assert sol.objective == sol.deleted_weight + sol.max_component_weight


class TestTwins:
    def test_cycle4_opposite_pairs(self):
        part = twin_classes(cycle(4))
        assert part.classes == (frozenset({0, 2}), frozenset({1, 3}))

    def test_complete_graph_single_class(self):
        assert twin_classes(complete(6)).classes == (frozenset(range(6)),)

    def test_path4_all_singletons(self):
        assert len(twin_classes(path(4)).classes) == 4

    @given(weighted_graphs())
    @settings(max_examples=60)
    def test_partition_and_maximality(self, g):
        part = twin_classes(g)
        seen = set()
        for cls in part.classes:
            assert not (cls & seen)
            seen |= cls
            for u in cls:
                for v in cls:
                    if u < v:
                        assert are_twins(g, u, v)
        assert seen == set(range(g.n))
        # merging any two classes breaks the twin predicate
        for i in range(len(part.classes)):
            for j in range(i + 1, len(part.classes)):
                u = min(part.classes[i])
                v = min(part.classes[j])
                assert not are_twins(g, u, v)


class TestRedundancy:
    def test_leaf_with_deleted_neighbor(self):
        g = star(4)
        assert is_redundant(g, {0, 1}, 1)

    def test_cut_vertex_is_irredundant(self):
        assert not is_redundant(path(4), {1}, 1)

    def test_simplicial_is_redundant(self):
        assert is_redundant(complete(3), {0}, 0)

    def test_rejects_vertex_outside_set(self):
        with pytest.raises(ValueError):
            is_redundant(path(4), {1}, 2)

    def test_strip_clique_vertex(self):
        assert strip_redundant(complete(3), {0}) == frozenset()

    def test_strip_keeps_cut_vertex(self):
        assert strip_redundant(path(4), {1}) == frozenset({1})

    def test_strip_recomputes_after_each_removal(self):
        # From {0, 1} on a path, 0 goes first (all neighbors deleted); after
        # that 0 rejoins the graph as its own component, so 1 touches two
        # components and stays.
        assert strip_redundant(path(4), {0, 1}) == frozenset({1})

    @given(weighted_graphs())
    @settings(max_examples=80, deadline=None)
    def test_strip_never_hurts_and_kills_simplicial(self, g):
        import random

        r = random.Random(g.n * 7919 + g.m)
        s = frozenset(v for v in range(g.n) if r.random() < 0.5)
        stripped = strip_redundant(g, s)
        assert stripped <= s
        assert evaluate(g, stripped).objective <= evaluate(g, s).objective
        assert not (stripped & simplicial_vertices(g))


class TestSimplicial:
    def test_clique_vertices(self):
        assert simplicial_vertices(complete(4)) == frozenset(range(4))

    def test_path_endpoints(self):
        assert simplicial_vertices(path(4)) == frozenset({0, 3})

    def test_star_leaves(self):
        assert simplicial_vertices(star(3)) == frozenset({1, 2, 3})
        assert not is_simplicial(star(3), 0)


class TestPeelUniversal:
    def test_complete_graph_peels_to_one_vertex(self):
        peeled, offset = peel_universal(complete(3))
        assert peeled.n == 1
        assert offset == 2

    def test_no_universal_vertex(self):
        peeled, offset = peel_universal(path(4))
        assert peeled == path(4)
        assert offset == 0

    def test_star_center(self):
        peeled, offset = peel_universal(star(3))
        assert offset == 1
        assert peeled.n == 3
        assert peeled.m == 0

    def test_wvi_additivity(self, rng):
        # Appending a universal vertex adds exactly its weight.
        for _ in range(25):
            n = rng.randint(1, 7)
            g = random_graph(rng, n, 0.4, max_weight=4)
            w = rng.randint(1, 5)
            edges = list(g.edges) + [(v, n) for v in range(n)]
            gu = WeightedGraph.build(n + 1, edges, list(g.weight) + [w])
            assert wvi_exact(gu).objective == wvi_exact(g).objective + w
