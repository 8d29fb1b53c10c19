"""Tests for homomorphism search and the blowup characterization."""

import itertools
import random

import pytest

from hyperlag import (
    Hypergraph,
    blowup_witness,
    chromatic_number,
    complete,
    exists_hom,
    is_hom_free,
    is_subgraph,
    level,
)

from conftest import brute_force_hom, graphs12


def cycle(n):
    return Hypergraph(n, [frozenset({v, v % n + 1}) for v in range(1, n + 1)])


def assert_valid_hom(f, g, mapping):
    assert set(mapping) == set(range(1, f.n + 1))
    for e in f.edges:
        image = {mapping[v] for v in e}
        assert len(image) == len(e)
        assert frozenset(image) in g.edges


class TestExistsHom:
    def test_c5_into_triangle(self):
        f, g = cycle(5), complete(3, {2})
        mapping = exists_hom(f, g)
        assert mapping is not None
        assert_valid_hom(f, g, mapping)
        assert brute_force_hom(f, g)

    def test_triangle_into_edge(self):
        assert exists_hom(complete(3, {2}), Hypergraph(2, [{1, 2}])) is None

    def test_complete_3_into_complete_2(self):
        assert exists_hom(complete(3, {1, 2}), complete(2, {1, 2})) is None

    def test_edgeless_source_always_maps(self):
        assert exists_hom(Hypergraph(3), Hypergraph(1)) is not None

    def test_agrees_with_brute_force(self):
        rng = random.Random(41)
        singles = lambda n: [frozenset({v}) for v in range(1, n + 1)]
        for _ in range(60):
            nf, ng = rng.randint(1, 3), rng.randint(1, 3)
            f_edges = [e for e in singles(nf) if rng.random() < 0.4]
            f_edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, nf + 1), 2)
                if rng.random() < 0.5
            ]
            g_edges = [e for e in singles(ng) if rng.random() < 0.4]
            g_edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, ng + 1), 2)
                if rng.random() < 0.5
            ]
            f, g = Hypergraph(nf, f_edges), Hypergraph(ng, g_edges)
            got = exists_hom(f, g)
            assert (got is not None) == brute_force_hom(f, g)
            if got is not None:
                assert_valid_hom(f, g, got)

    def test_monotone_in_host_edges(self):
        f = cycle(5)
        small = Hypergraph(3, [{1, 2}, {2, 3}])
        big = complete(3, {2})
        assert exists_hom(f, small) is None or exists_hom(f, big) is not None
        assert exists_hom(f, big) is not None


class TestIsHomFree:
    def test_complete_2_is_free_of_complete_3(self):
        assert is_hom_free(complete(2, {1, 2}), complete(3, {1, 2}))

    def test_containment_implies_not_hom_free(self):
        f = Hypergraph(2, [{1, 2}])
        g = complete(3, {2})
        assert is_subgraph(f, g)
        assert not is_hom_free(g, f)

    def test_exhaustive_containment_implication(self):
        # subgraph containment implies a homomorphism, on sampled pairs of
        # {1,2}-graphs with at most 3 vertices
        small = []
        for n in (1, 2, 3):
            pool = [frozenset({v}) for v in range(1, n + 1)]
            pool += [frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)]
            for mask in range(1 << len(pool)):
                small.append(Hypergraph(n, [pool[i] for i in range(len(pool)) if mask >> i & 1]))
        rng = random.Random(8)
        sample = rng.sample(small, 20)
        for f in sample:
            for g in sample:
                if is_subgraph(f, g):
                    assert not is_hom_free(g, f)

    def test_complete_host_freeness_matches_chromatic_number(self):
        # for a source with non-bipartite pair level, the complete {1,2}-graph
        # of order l admits no homomorphic image iff l < chi(pair level)
        sources = [
            complete(3, {1, 2}),
            Hypergraph(5, [frozenset({v, v % 5 + 1}) for v in range(1, 6)] + [frozenset({1})]),
            complete(4, {2}),
            Hypergraph(5, [{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {3, 5}]),
        ]
        for h in sources:
            chi = chromatic_number(level(h, 2).graph)
            assert chi >= 3
            for l in range(1, 6):
                assert is_hom_free(complete(l, {1, 2}), h) == (l <= chi - 1)


class TestBlowupWitness:
    def test_c5_into_triangle_blowup(self):
        assert blowup_witness(cycle(5), complete(3, {2})) == 2

    def test_triangle_into_edge_blowups(self):
        assert blowup_witness(complete(3, {2}), Hypergraph(2, [{1, 2}])) is None

    def test_subgraph_gives_one(self):
        assert blowup_witness(Hypergraph(2, [{1, 2}]), complete(3, {2})) == 1

    def test_matches_hom_existence_on_samples(self):
        rng = random.Random(13)
        for _ in range(40):
            nf, ng = rng.randint(1, 4), rng.randint(1, 3)
            f_edges = [frozenset({v}) for v in range(1, nf + 1) if rng.random() < 0.4]
            f_edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, nf + 1), 2)
                if rng.random() < 0.5
            ]
            g_edges = [frozenset({v}) for v in range(1, ng + 1) if rng.random() < 0.4]
            g_edges += [
                frozenset(p)
                for p in itertools.combinations(range(1, ng + 1), 2)
                if rng.random() < 0.5
            ]
            f, g = Hypergraph(nf, f_edges), Hypergraph(ng, g_edges)
            assert (blowup_witness(f, g) is not None) == (exists_hom(f, g) is not None)
