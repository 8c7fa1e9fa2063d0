"""Twin-class enumeration solvers against the oracle."""

import pytest

from conftest import complete, cycle, empty, path, random_graph, star
from vintegrity import (
    SizeCapError,
    SolverInputError,
    WeightedGraph,
    evaluate,
    twin_cover,
    wvi_exact,
    wvi_nd,
    wvi_tc,
)


class TestNd:
    def test_cycle4(self):
        sol = wvi_nd(cycle(4))
        assert sol.objective == 3
        assert sol.deleted == frozenset({0, 2})

    def test_weighted_edge(self):
        assert wvi_nd(WeightedGraph.build(2, [(0, 1)], [5, 7])).objective == 12

    def test_isolated_unit_vertices(self):
        sol = wvi_nd(empty(3))
        assert sol.objective == 1
        assert sol.deleted == frozenset()

    def test_cap(self):
        # P_10 has 10 twin classes; a cap below that must refuse.
        with pytest.raises(SizeCapError):
            wvi_nd(path(10), nd_cap=9)

    def test_matches_oracle_even_with_huge_weights(self, rng):
        for _ in range(25):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, rng.choice([0.3, 0.7]))
            big = WeightedGraph.build(
                n, g.edges, [rng.randint(1, 2**40) for _ in range(n)]
            )
            assert wvi_nd(big).objective == wvi_exact(big).objective


class TestTc:
    def test_star_with_center_cover(self):
        assert wvi_tc(star(3), {0}).objective == 2

    def test_complete_graph_empty_cover(self):
        assert wvi_tc(complete(4), set()).objective == 4

    def test_path4_cover(self):
        assert wvi_tc(path(4), {1, 2}).objective == 3

    def test_rejects_invalid_cover(self):
        with pytest.raises(SolverInputError):
            wvi_tc(path(4), {0})

    def test_matches_nd_for_every_valid_cover(self, rng):
        for _ in range(20):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, 0.5, max_weight=4)
            for k in range(n + 1):
                cover = twin_cover(g, k)
                if cover is not None:
                    break
            assert wvi_tc(g, cover).objective == wvi_nd(g).objective

    def test_contraction_certificate_scores_identically(self, rng):
        # The expanded certificate re-scored on the original graph must
        # reproduce the contracted objective exactly.
        for _ in range(15):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, 0.4, max_weight=3)
            for k in range(n + 1):
                cover = twin_cover(g, k)
                if cover is not None:
                    break
            sol = wvi_tc(g, cover)
            assert evaluate(g, sol.deleted).objective == sol.objective
