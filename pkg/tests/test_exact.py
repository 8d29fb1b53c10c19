"""Tests for the exact clique, coloring-free quadratic optimum, and {1,2} solvers."""

import itertools
import random
from fractions import Fraction

import pytest

from hyperlag import (
    Hypergraph,
    complete,
    evaluate,
    kkt_residual,
    lagrangian12_exact,
    max_clique,
    max_complete_12_order,
    maximize,
    motzkin_straus_value,
    uniform_relation_check,
)

from conftest import brute_force_clique_number


def random_graph(rng, n, p=0.5):
    edges = [
        frozenset(pair)
        for pair in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < p
    ]
    return Hypergraph(n, edges)


class TestMaxClique:
    def test_triangle(self):
        res = max_clique(complete(3, {2}))
        assert res.size == 3
        assert res.witness == (1, 2, 3)

    def test_path(self):
        assert max_clique(Hypergraph(3, [{1, 2}, {2, 3}])).size == 2

    def test_complement_of_perfect_matching(self):
        # complement of 3 disjoint edges on 6 vertices: complete tripartite,
        # brute force gives clique number 3
        matching = {frozenset({1, 2}), frozenset({3, 4}), frozenset({5, 6})}
        edges = [
            frozenset(p)
            for p in itertools.combinations(range(1, 7), 2)
            if frozenset(p) not in matching
        ]
        g = Hypergraph(6, edges)
        assert brute_force_clique_number(g) == 3
        assert max_clique(g).size == 3

    def test_single_vertex(self):
        res = max_clique(Hypergraph(1))
        assert res.size == 1
        assert res.witness == (1,)

    def test_rejects_non_two_uniform(self):
        with pytest.raises(ValueError, match="within"):
            max_clique(complete(3, {1, 2}))

    def test_witness_is_lexicographically_smallest(self):
        # two maximum cliques {2,3,4} and {3,4,5}: expect {2,3,4}
        g = Hypergraph(
            5, [{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}]
        )
        res = max_clique(g)
        assert res.size == 3
        assert res.witness == (2, 3, 4)

    def test_agrees_with_brute_force(self):
        rng = random.Random(321)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 12))
            res = max_clique(g)
            assert res.size == brute_force_clique_number(g)
            assert all(
                frozenset(p) in g.edges
                for p in itertools.combinations(res.witness, 2)
            )


class TestMotzkinStraus:
    def test_k4(self):
        assert motzkin_straus_value(complete(4, {2})) == Fraction(3, 8)

    def test_bipartite(self):
        assert motzkin_straus_value(Hypergraph(4, [{1, 3}, {1, 4}, {2, 3}])) == Fraction(1, 4)

    def test_edgeless(self):
        assert motzkin_straus_value(Hypergraph(3)) == Fraction(0)


class TestMaxComplete12Order:
    def test_complete_5(self):
        assert max_complete_12_order(complete(5, {1, 2})) == 5

    def test_singleton_apart_from_pair(self):
        h = Hypergraph(3, [{1}, {2, 3}])
        # exhaustive check: no 2-subset carries both singletons and the pair
        best = 0
        for r in range(1, 4):
            for sub in itertools.combinations(range(1, 4), r):
                ok = all(frozenset({v}) in h.edges for v in sub) and all(
                    frozenset(p) in h.edges for p in itertools.combinations(sub, 2)
                )
                if ok:
                    best = max(best, r)
        assert best == 1
        assert max_complete_12_order(h) == 1

    def test_no_singletons(self):
        assert max_complete_12_order(complete(3, {2})) == 0

    def test_rejects_larger_edges(self):
        with pytest.raises(ValueError, match="within"):
            max_complete_12_order(Hypergraph(3, [{1, 2, 3}]))


class TestLagrangian12Exact:
    def test_complete_3(self):
        res = lagrangian12_exact(complete(3, {1, 2}))
        assert res.value == Fraction(5, 3)
        assert res.case_tag == "all-singletons"
        assert res.witness == (Fraction(1, 3),) * 3

    def test_one_heavy_singleton(self):
        h = Hypergraph(2, [{1}, {1, 2}])
        # brute-force oracle: maximize a + 2a(1-a) on a grid
        best = max(a / 10000 + 2 * (a / 10000) * (1 - a / 10000) for a in range(10001))
        res = lagrangian12_exact(h)
        assert res.value == Fraction(9, 8)
        assert abs(float(res.value) - best) < 1e-7
        assert res.case_tag == "one-heavy-singleton"
        assert res.witness == (Fraction(3, 4), Fraction(1, 4))
        assert maximize(h).value == pytest.approx(9 / 8, abs=1e-6)

    def test_no_singletons(self):
        res = lagrangian12_exact(complete(4, {2}))
        assert res.value == Fraction(3, 4)
        assert res.case_tag == "no-singletons"

    def test_single_vertex_case(self):
        res = lagrangian12_exact(Hypergraph(3, [{2}]))
        assert res.value == Fraction(1)
        assert res.case_tag == "single-vertex"
        assert res.witness[1] == 1

    def test_empty(self):
        res = lagrangian12_exact(Hypergraph(2))
        assert res.value == 0
        assert res.case_tag == "empty"

    def test_rejects_larger_edges(self):
        with pytest.raises(ValueError, match="within"):
            lagrangian12_exact(Hypergraph(3, [{1, 2, 3}]))

    def test_witness_is_feasible_and_stationary(self):
        rng = random.Random(99)
        for _ in range(40):
            n = rng.randint(1, 7)
            edges = [frozenset({v}) for v in range(1, n + 1) if rng.random() < 0.5]
            edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, n + 1), 2)
                if rng.random() < 0.5
            ]
            h = Hypergraph(n, edges)
            res = lagrangian12_exact(h)
            w = res.witness_weighting
            assert sum(res.witness) == 1
            assert abs(evaluate(h, w) - float(res.value)) <= 1e-12
            assert kkt_residual(h, w) <= 1e-9

    def test_value_is_in_the_closed_family(self):
        rng = random.Random(5)
        family = {Fraction(0)}
        for k in range(1, 9):
            family.add(Fraction(2) - Fraction(1, k))
            family.add(Fraction(1) - Fraction(1, k))
            family.add(Fraction(5, 4) - Fraction(1, 4 * k))
        for _ in range(60):
            n = rng.randint(1, 8)
            edges = [frozenset({v}) for v in range(1, n + 1) if rng.random() < 0.4]
            edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, n + 1), 2)
                if rng.random() < 0.5
            ]
            assert lagrangian12_exact(Hypergraph(n, edges)).value in family

    def test_all_singletons_dominates_when_order_at_least_2(self):
        rng = random.Random(17)
        seen = 0
        for _ in range(80):
            n = rng.randint(2, 7)
            edges = [frozenset({v}) for v in range(1, n + 1) if rng.random() < 0.6]
            edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, n + 1), 2)
                if rng.random() < 0.6
            ]
            h = Hypergraph(n, edges)
            if max_complete_12_order(h) >= 2:
                seen += 1
                assert lagrangian12_exact(h).case_tag == "all-singletons"
        assert seen > 10

    def test_exhaustive_agreement_with_numeric_n3(self):
        singles = [frozenset({v}) for v in (1, 2, 3)]
        pairs = [frozenset(p) for p in itertools.combinations((1, 2, 3), 2)]
        for smask in range(8):
            for pmask in range(8):
                edges = [singles[i] for i in range(3) if smask >> i & 1]
                edges += [pairs[i] for i in range(3) if pmask >> i & 1]
                h = Hypergraph(3, edges)
                assert abs(
                    float(lagrangian12_exact(h).value) - maximize(h).value
                ) <= 1e-6


class TestUniformRelation:
    def test_triangle(self):
        lhs, rhs = uniform_relation_check(complete(3, {2}), [1 / 3] * 3)
        assert lhs == pytest.approx(2 / 3)
        assert rhs == pytest.approx(2 / 3)
        assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_single_pair(self):
        lhs, rhs = uniform_relation_check(Hypergraph(2, [{1, 2}]), [0.5, 0.5])
        assert lhs == rhs == pytest.approx(0.5)

    def test_single_singleton(self):
        lhs, rhs = uniform_relation_check(Hypergraph(1, [{1}]), [1.0])
        assert lhs == rhs == 1.0

    def test_rejects_non_uniform(self):
        with pytest.raises(ValueError, match="not uniform"):
            uniform_relation_check(complete(2, {1, 2}), [0.5, 0.5])

    def test_edgeless(self):
        assert uniform_relation_check(Hypergraph(2), [0.5, 0.5]) == (0.0, 0.0)
