"""Shared hypothesis strategies and small brute-force oracles."""

import itertools

from hypothesis import strategies as st

from hyperlag import Hypergraph


@st.composite
def hypergraphs(draw, max_n=6, max_size=3):
    """Random hypergraph: n up to max_n, each candidate edge of size up to
    max_size kept independently."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = [
        frozenset(c)
        for k in range(1, min(max_size, n) + 1)
        for c in itertools.combinations(range(1, n + 1), k)
    ]
    keep = draw(st.lists(st.booleans(), min_size=len(pool), max_size=len(pool)))
    return Hypergraph(n, [e for e, k in zip(pool, keep) if k])


@st.composite
def graphs12(draw, max_n=6):
    """Random {1,2}-graph."""
    return draw(hypergraphs(max_n=max_n, max_size=2))


@st.composite
def weightings(draw, n):
    """Random point of the n-simplex with positive mass everywhere."""
    raw = draw(
        st.lists(
            st.floats(min_value=0.01, max_value=1.0, allow_nan=False),
            min_size=n,
            max_size=n,
        )
    )
    total = sum(raw)
    return [r / total for r in raw]


def brute_force_clique_number(g: Hypergraph) -> int:
    """Largest pairwise-adjacent vertex subset, by checking all subsets."""
    adj = {v: set() for v in range(1, g.n + 1)}
    for e in g.edges:
        a, b = sorted(e)
        adj[a].add(b)
        adj[b].add(a)
    best = 0
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(1, g.n + 1), r):
            if all(b in adj[a] for a, b in itertools.combinations(sub, 2)):
                return r
    return best


def brute_force_chromatic(g: Hypergraph) -> int:
    """Smallest k admitting a proper coloring, by checking all assignments."""
    edges = [tuple(sorted(e)) for e in g.edges]
    for k in range(1, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[a - 1] != coloring[b - 1] for a, b in edges):
                return k
    return g.n


def brute_force_hom(f: Hypergraph, g: Hypergraph) -> bool:
    """Homomorphism existence by trying every vertex map."""
    f_edges = [tuple(sorted(e)) for e in f.edges]
    g_edges = {frozenset(e) for e in g.edges}
    for mapping in itertools.product(range(1, g.n + 1), repeat=f.n):
        ok = True
        for e in f_edges:
            image = {mapping[v - 1] for v in e}
            if len(image) != len(e) or frozenset(image) not in g_edges:
                ok = False
                break
        if ok:
            return True
    return False
