"""Hypergraph homomorphisms and the blowup characterization of hom-freeness.

A homomorphism maps vertices so that every edge lands on an edge of the same
size; in particular it is injective on each edge, though distinct vertices
from different edges may collide.  Under this convention a homomorphism into
G exists exactly when some uniform blowup of G contains the source as a
subgraph, because blowup edges take one vertex per vertex class.
"""

from __future__ import annotations

from .core import Hypergraph, blowup, is_subgraph


def exists_hom(f: Hypergraph, g: Hypergraph) -> dict | None:
    """A vertex map realizing a homomorphism from ``f`` to ``g``, or None.

    Backtracking over f-vertices in descending degree order; a partial
    assignment is pruned as soon as some edge image repeats a vertex or
    fits inside no same-size edge of ``g``.
    """
    return _find_hom(f, g.n, g.edges)


def _find_hom(f: Hypergraph, g_n: int, g_edges) -> dict | None:
    by_size = {}
    for e in g_edges:
        by_size.setdefault(len(e), set()).add(e)
    for e in f.edges:
        if len(e) not in by_size:
            return None
    incident = {v: [] for v in range(1, f.n + 1)}
    for e in f.edges:
        for v in e:
            incident[v].append(e)
    order = sorted(range(1, f.n + 1), key=lambda v: len(incident[v]), reverse=True)
    assign = {}

    def consistent(v):
        for e in incident[v]:
            image = [assign[u] for u in e if u in assign]
            image_set = set(image)
            if len(image_set) != len(image):
                return False
            if all(u in assign for u in e):
                if frozenset(image_set) not in by_size[len(e)]:
                    return False
            else:
                if not any(image_set <= host_e for host_e in by_size[len(e)]):
                    return False
        return True

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for target in range(1, g_n + 1):
            assign[v] = target
            if consistent(v) and extend(i + 1):
                return True
            del assign[v]
        return False

    if extend(0):
        return dict(assign)
    return None


def is_hom_free(g: Hypergraph, f: Hypergraph) -> bool:
    """True iff no homomorphism from ``f`` to ``g`` exists."""
    return exists_hom(f, g) is None


def blowup_witness(f: Hypergraph, g: Hypergraph) -> int | None:
    """Smallest s with ``f`` a subgraph of the uniform blowup of ``g`` by s, or None.

    Only s up to the number of vertices of ``f`` need checking: a
    homomorphism's largest preimage class bounds the blowup size it needs,
    so beyond that nothing new appears.
    """
    for s in range(1, f.n + 1):
        if is_subgraph(f, blowup(g, [s] * g.n)):
            return s
    return None
