"""Limit square root census: linear-algebra path against the brute oracle."""

import random

import pytest
from hypothesis import given

from graph_strategies import small_graphs
from spincensus.corpus import banana, double_edge_star, random_parity
from spincensus.dual_graph import DualGraph
from spincensus.oracle import brute_admissible, parity_convolve
from spincensus.reduction import reduction_graph
from spincensus.root_census import (
    ParityModel,
    admissible_subgraphs,
    class_count,
    count_admissible,
    full_census,
    parity_census,
    satisfies_parity_condition,
    support_multiplicity,
)
from spincensus.theta_counts import CurveProfile, n_even, n_odd


def cusp_graph(g, gamma):
    return reduction_graph(CurveProfile(g, 0, gamma, 0)).graph


def tacnode_graph(g, tau):
    return reduction_graph(CurveProfile(g, tau, 0, 0)).graph


class TestAdmissibleSubgraphs:
    def test_banana_even_parity(self):
        g = banana()
        parity = {0: 0, 1: 0}
        got = admissible_subgraphs(g, parity)
        assert got == brute_admissible(g, parity)
        assert set(got) == {frozenset(), frozenset({0, 1})}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_double_edge_star_pair_closed(self, n):
        g = double_edge_star(n)
        family = set(admissible_subgraphs(g, g.omega_parity()))
        pairs = [frozenset({2 * i, 2 * i + 1}) for i in range(n)]
        expected = set()
        for mask in range(1 << n):
            subset = frozenset()
            for i in range(n):
                if mask >> i & 1:
                    subset |= pairs[i]
            expected.add(subset)
        assert family == expected

    @pytest.mark.parametrize("gamma", [1, 2, 3])
    def test_cusp_graph_forces_all_edges(self, gamma):
        g = cusp_graph(gamma + 2, gamma)
        got = admissible_subgraphs(g, g.omega_parity())
        assert got == brute_admissible(g, g.omega_parity())
        assert got == [frozenset(range(gamma))]

    def test_parity_domain_mismatch(self):
        with pytest.raises(ValueError):
            admissible_subgraphs(banana(), {0: 0})

    def test_ordering_by_bitmask(self):
        g = double_edge_star(2)
        masks = [sum(1 << i for i in s) for s in admissible_subgraphs(g, g.omega_parity())]
        assert masks == sorted(masks)


class TestCountAdmissible:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_double_edge_star(self, n):
        g = double_edge_star(n)
        assert count_admissible(g, g.omega_parity()) == 2 ** n

    def test_tree_all_zero(self):
        path = DualGraph(((0, 0), (1, 0), (2, 0)), ((0, 1), (1, 2)))
        assert count_admissible(path, {0: 0, 1: 0, 2: 0}) == 1

    def test_unsolvable(self):
        single = DualGraph(((0, 0),), ())
        assert count_admissible(single, {0: 1}) == 0


class TestClassCount:
    def test_banana_both_edges(self):
        assert class_count(banana(1, 1), {0, 1}) == 16

    @pytest.mark.parametrize("g", range(0, 5))
    def test_smooth_curve(self, g):
        single = DualGraph(((0, g),), ())
        assert class_count(single, frozenset()) == 4 ** g

    def test_double_edge_star_all_edges(self):
        genera = [2, 1, 0, 3]
        g = double_edge_star(3, center_genus=2, satellite_genera=genera[1:])
        assert class_count(g, range(6)) == 2 ** (2 * sum(genera))

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            class_count(banana(), {9})


class TestSupportMultiplicity:
    def test_empty_support(self):
        assert support_multiplicity(double_edge_star(4), frozenset()) == 1

    @pytest.mark.parametrize("r", range(0, 5))
    def test_double_edge_star_pairs(self, r):
        g = double_edge_star(5)
        assert support_multiplicity(g, range(2 * r)) == 2 ** r

    def test_banana(self):
        assert support_multiplicity(banana(), {0, 1}) == 2


class TestParityCensus:
    def test_cusp_graph_all_edges(self):
        gt, gamma = 2, 3
        g = gt + gamma
        graph = cusp_graph(g, gamma)
        odd, even, model = parity_census(graph, frozenset(range(gamma)))
        # oracle route: convolve the smooth per-component counts
        pairs = [(n_odd(gt), n_even(gt))] + [(1, 3)] * gamma
        assert (odd, even) == parity_convolve(pairs)
        assert (odd, even) == (n_odd(g), n_even(g)) == (496, 528)
        assert model is ParityModel.EXACT_COMPACT

    def test_tacnode_graph_empty_support(self):
        gt = 2
        graph = tacnode_graph(gt + 2, 1)
        odd, even, model = parity_census(graph, frozenset())
        assert odd == even == 4 ** (gt + 1) == 64
        assert model is ParityModel.HARRIS_SPLIT

    @pytest.mark.parametrize("g", range(0, 5))
    def test_smooth_vertex(self, g):
        single = DualGraph(((0, g),), ())
        assert parity_census(single, frozenset()) == (
            n_odd(g),
            n_even(g),
            ParityModel.EXACT_COMPACT,
        )

    def test_loop_component_splits_evenly(self):
        graph = DualGraph(((0, 1),), ((0, 0),))
        odd, even, model = parity_census(graph, frozenset())
        assert model is ParityModel.HARRIS_SPLIT
        assert odd == even == class_count(graph, frozenset()) // 2

    def test_inadmissible_support_rejected(self):
        with pytest.raises(ValueError):
            parity_census(banana(), {0})

    def test_totals(self):
        graph = tacnode_graph(5, 1)
        for support in admissible_subgraphs(graph, graph.omega_parity()):
            odd, even, _ = parity_census(graph, support)
            assert odd + even == class_count(graph, support)


class TestFullCensus:
    def test_banana_genus_one_vertices(self):
        entries = full_census(banana(1, 1), {0: 0, 1: 0})
        assert [(e.support_mask, e.class_count, e.multiplicity) for e in entries] == [
            (0, 32, 1),
            (3, 16, 2),
        ]
        assert entries[0].parity_model is ParityModel.HARRIS_SPLIT
        assert entries[1].parity_model is ParityModel.EXACT_COMPACT
        assert (entries[1].odd, entries[1].even) == (6, 10)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_double_edge_star(self, n):
        g = double_edge_star(n)
        entries = full_census(g, g.omega_parity())
        assert len(entries) == 2 ** n
        first_pairs = frozenset(range(2 * (n - 1)))
        matching = [e for e in entries if e.support == first_pairs]
        assert matching and matching[0].multiplicity == 2 ** (n - 1)

    def test_unsolvable_parity_is_empty(self):
        single = DualGraph(((0, 0),), ())
        assert full_census(single, {0: 1}) == []

    def test_non_canonical_parity_gets_sentinel(self):
        g = banana(1, 1)
        entries = full_census(g, {0: 1, 1: 1})
        assert entries, "odd parity on a banana is solvable"
        assert all(e.parity_model is ParityModel.NOT_COMPUTED for e in entries)
        assert all(e.odd == e.even == 0 for e in entries)


class TestProperties:
    @given(small_graphs())
    def test_weighted_degree_identity(self, graph):
        parity = graph.omega_parity()
        total = sum(
            support_multiplicity(graph, s) * class_count(graph, s)
            for s in admissible_subgraphs(graph, parity)
        )
        assert total == 4 ** graph.arithmetic_genus()

    @given(small_graphs(max_edges=6))
    def test_solver_matches_brute_force(self, graph):
        rng = random.Random(graph.betti1() * 1000 + len(graph.edges))
        for parity in (graph.omega_parity(), random_parity(rng, graph)):
            fast = admissible_subgraphs(graph, parity)
            assert set(fast) == set(brute_admissible(graph, parity))
            assert count_admissible(graph, parity) == len(fast)
            assert len(fast) in (0, 2 ** graph.betti1())

    @given(small_graphs(max_edges=6))
    def test_outputs_satisfy_parity_condition(self, graph):
        parity = graph.omega_parity()
        for support in admissible_subgraphs(graph, parity):
            assert satisfies_parity_condition(graph, support, parity)
