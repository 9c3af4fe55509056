"""Static ranking strategies: degree, closeness, betweenness."""

from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from fragility import (Graph, betweenness_ranking, betweenness_scores,
                       closeness_ranking, closeness_scores, cycle_graph,
                       degree_ranking, path_graph, star_graph,
                       static_removal_schedule)

from conftest import oracle_betweenness, random_graph_edges


# ----- degree --------------------------------------------------------------

class TestDegree:
    def test_star(self, star4):
        r = degree_ranking(star4)
        assert r.scores[0] == 4.0
        assert r.order == (0, 1, 2, 3, 4)

    def test_no_strike_excluded(self, star4):
        r = degree_ranking(star4, no_strike={0, 2})
        assert set(r.scores) == {1, 3, 4}
        assert r.order == (1, 3, 4)

    def test_ties_by_ascending_id(self):
        g = cycle_graph(5)
        assert degree_ranking(g).order == (0, 1, 2, 3, 4)

    def test_unknown_no_strike(self, star4):
        with pytest.raises(ValueError, match="unknown node id"):
            degree_ranking(star4, no_strike={7})


# ----- closeness -----------------------------------------------------------

class TestCloseness:
    def test_star_center(self, star4):
        # center: 4 peers at distance 1 -> (4/4) * (4/4) = 1
        # leaf: distances 1,2,2,2 = 7 -> (4/4) * (4/7)
        s = closeness_scores(star4)
        assert s[0] == 1.0
        assert s[1] == pytest.approx(4 / 7)

    def test_path4(self, path4):
        s = closeness_scores(path4)
        # ends: 1+2+3=6 -> 3/6; middles: 1+1+2=4 -> 3/4
        assert s[0] == pytest.approx(3 / 6)
        assert s[1] == pytest.approx(3 / 4)
        assert closeness_ranking(path4).order == (1, 2, 0, 3)

    def test_disconnected_component_adjustment(self, two_disjoint_edges):
        # each node reaches 1 of 3 peers at distance 1: (1/3) * 1 = 1/3
        s = closeness_scores(two_disjoint_edges)
        assert s == [pytest.approx(1 / 3)] * 4
        assert closeness_ranking(two_disjoint_edges).order == (0, 1, 2, 3)

    def test_isolated_node_scores_zero(self):
        g = Graph(3, [(0, 1)])
        assert closeness_scores(g)[2] == 0.0

    def test_small_component_outranked(self):
        # a tight pair should not outrank the hub of a large star just
        # because its average internal distance is 1
        g = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 6)])
        s = closeness_scores(g)
        assert s[0] > s[5]


# ----- betweenness ---------------------------------------------------------

class TestBetweenness:
    def test_star_center_carries_all_pairs(self, star4):
        s = betweenness_scores(star4)
        assert s[0] == pytest.approx(6.0)  # C(4,2) leaf pairs
        assert s[1] == 0.0

    def test_path4_interiors(self, path4):
        s = betweenness_scores(path4)
        assert s[0] == 0.0
        assert s[1] == pytest.approx(2.0)  # pairs (0,2), (0,3)
        assert s[2] == pytest.approx(2.0)

    def test_cycle_even_split(self):
        # on a 4-cycle each opposite pair has two shortest paths, each
        # interior node carries half a pair
        s = betweenness_scores(cycle_graph(4))
        assert s == [pytest.approx(0.5)] * 4

    def test_matches_enumeration_oracle(self):
        rng = random.Random(0xB0B)
        for _ in range(100):
            n = rng.randint(2, 8)
            edges = random_graph_edges(rng, n, rng.uniform(0.2, 0.8))
            got = betweenness_scores(Graph(n, edges))
            want = oracle_betweenness(n, edges)
            assert got == pytest.approx(want, abs=1e-9)

    def test_ranking_order(self, double_star8):
        r = betweenness_ranking(double_star8)
        assert r.order[:2] == (0, 1)  # hubs first


# ----- schedules -----------------------------------------------------------

class TestSchedule:
    def test_prefix_sets(self, star4):
        r = degree_ranking(star4)
        assert static_removal_schedule(r, 0) == frozenset()
        assert static_removal_schedule(r, 2) == {0, 1}

    def test_rejects_negative(self, star4):
        with pytest.raises(ValueError, match="non-negative"):
            static_removal_schedule(degree_ranking(star4), -1)

    def test_rejects_overrun(self, star4):
        r = degree_ranking(star4, no_strike={0})
        with pytest.raises(ValueError, match="targetable"):
            static_removal_schedule(r, 5)

    def test_budget_prefix_nesting(self, double_star10):
        r = betweenness_ranking(double_star10)
        prev: frozenset[int] = frozenset()
        for m in range(len(r.order) + 1):
            cur = static_removal_schedule(r, m)
            assert prev <= cur
            prev = cur


# ----- randomized properties ----------------------------------------------

@st.composite
def _graphs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return n, [p for p, keep in zip(pairs, mask) if keep]


class TestProperties:
    @settings(max_examples=50, deadline=None)
    @given(_graphs())
    def test_orders_are_permutations(self, ne):
        n, edges = ne
        g = Graph(n, edges)
        for rank in (degree_ranking(g), closeness_ranking(g),
                     betweenness_ranking(g)):
            assert sorted(rank.order) == list(range(n))
            assert set(rank.scores) == set(range(n))

    @settings(max_examples=50, deadline=None)
    @given(_graphs())
    def test_scores_sorted_descending_along_order(self, ne):
        n, edges = ne
        g = Graph(n, edges)
        for rank in (degree_ranking(g), closeness_ranking(g),
                     betweenness_ranking(g)):
            vals = [rank.scores[i] for i in rank.order]
            assert vals == sorted(vals, reverse=True)

    @settings(max_examples=50, deadline=None)
    @given(_graphs())
    def test_nonnegative_scores(self, ne):
        n, edges = ne
        g = Graph(n, edges)
        assert all(v >= 0 for v in closeness_scores(g))
        assert all(v >= 0 for v in betweenness_scores(g))

    @settings(max_examples=30, deadline=None)
    @given(_graphs())
    def test_betweenness_total_is_pair_excess(self, ne):
        # summed betweenness counts, per connected pair, the interior length
        # of the shortest path(s): sum = sum over pairs (dist - 1)
        n, edges = ne
        g = Graph(n, edges)
        total = sum(betweenness_scores(g))
        from conftest import oracle_betweenness
        assert total == pytest.approx(sum(oracle_betweenness(n, edges)), abs=1e-9)

    def test_no_strike_does_not_change_scores(self, double_star8):
        full = betweenness_ranking(double_star8)
        masked = betweenness_ranking(double_star8, no_strike={0, 3})
        for i in masked.scores:
            assert masked.scores[i] == full.scores[i]
        assert all(i not in masked.scores for i in (0, 3))
