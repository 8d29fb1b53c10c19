"""Exact combinatorial solvers: maximum clique, the clique-number value of the
quadratic simplex program (Motzkin-Straus), and the closed-form optimum of the
edge polynomial for hypergraphs whose edges have size 1 or 2.

The {1,2} solver rests on the structure of optimal weightings with minimal
support: the support must be pairwise joined by edges, hence a clique of the
pair level, and the number of support vertices carrying singleton edges can
only be 0, 1, or all of them.  Each case pins the weighting and yields a
rational value:

    all k support vertices have singletons   ->  2 - 1/k
    no support vertex has a singleton        ->  1 - 1/k
    exactly one (weight 1/2 + 1/(2k), rest 1/(2k))  ->  5/4 - 1/(4k)

so the optimum is the best of these over the relevant clique orders.  All
candidate values are exact rationals; floats appear only at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Hypergraph, edge_types
from .numeric import evaluate_uniform, evaluate


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple


@dataclass(frozen=True)
class Exact12Result:
    """Exact optimum of the edge polynomial of a {1,2}-graph.

    ``witness`` is the optimal weighting as exact rationals;
    ``case_tag`` names which support structure attains the value.
    """

    value: Fraction
    witness: tuple
    case_tag: str

    @property
    def witness_weighting(self) -> np.ndarray:
        return np.array([float(w) for w in self.witness])


def _require_types(h: Hypergraph, allowed: set, what: str):
    extra = edge_types(h) - allowed
    if extra:
        raise ValueError(f"{what} requires edge sizes within {sorted(allowed)}, found {sorted(extra)}")


def _adjacency(g: Hypergraph) -> dict:
    _require_types(g, {2}, "operation")
    adj = {v: set() for v in range(1, g.n + 1)}
    for e in g.edges:
        a, b = sorted(e)
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _clique_number(adj: dict, verts) -> int:
    """Exact clique number of the graph induced on ``verts``.

    Branch and bound: candidates are greedily colored and scanned in
    decreasing color, pruning whenever the clique so far plus the color
    bound cannot beat the incumbent.
    """
    verts = list(verts)
    if not verts:
        return 0
    best = 1
    order = sorted(verts, key=lambda v: len(adj[v]), reverse=True)

    def expand(size, cand):
        nonlocal best
        if size > best:
            best = size
        if not cand:
            return
        color = {}
        classes = []
        for v in cand:
            for ci, cl in enumerate(classes):
                if adj[v].isdisjoint(cl):
                    cl.add(v)
                    color[v] = ci + 1
                    break
            else:
                classes.append({v})
                color[v] = len(classes)
        ordered = sorted(cand, key=lambda v: color[v])
        for idx in range(len(ordered) - 1, -1, -1):
            v = ordered[idx]
            if size + color[v] <= best:
                return
            expand(size + 1, [u for u in ordered[:idx] if u in adj[v]])

    expand(0, order)
    return best


def _lex_clique(adj: dict, verts, size: int, must_hit=None) -> tuple | None:
    """Lexicographically smallest clique of the given size within ``verts``.

    Depth-first over ascending labels, so the first completion found is the
    smallest.  With ``must_hit`` the clique must contain at least one vertex
    from that set.
    """
    verts = sorted(verts)

    def search(chosen, cand, hit):
        if len(chosen) == size:
            return tuple(chosen) if hit else None
        need = size - len(chosen)
        for idx, v in enumerate(cand):
            if len(cand) - idx < need:
                return None
            v_hit = hit or must_hit is None or v in must_hit
            rest = [u for u in cand[idx + 1 :] if u in adj[v]]
            if not v_hit and not any(u in must_hit for u in rest):
                continue
            found = search(chosen + [v], rest, v_hit)
            if found is not None:
                return found
        return None

    return search([], verts, must_hit is None)


def max_clique(g: Hypergraph) -> CliqueResult:
    """Exact maximum clique of a 2-uniform hypergraph.

    A single vertex is a clique of order 1, so the size is at least 1.  The
    witness is the lexicographically smallest maximum clique.
    """
    adj = _adjacency(g)
    verts = range(1, g.n + 1)
    size = _clique_number(adj, verts)
    witness = _lex_clique(adj, verts, size)
    return CliqueResult(size, witness)


def motzkin_straus_value(g: Hypergraph) -> Fraction:
    """Optimum of the plain quadratic edge sum over the simplex, via the clique number.

    Equals (1 - 1/l)/2 for clique number l (Motzkin-Straus); 0 for an
    edgeless graph.
    """
    _require_types(g, {2}, "operation")
    if not g.edges:
        return Fraction(0)
    l = max_clique(g).size
    return Fraction(l - 1, 2 * l)


def max_complete_12_order(h: Hypergraph) -> int:
    """Largest t such that some t vertices carry all t singletons and all pairs.

    Equals the clique number of the pair level induced on the vertices that
    have singleton edges; 0 when no vertex has a singleton.
    """
    _require_types(h, {1, 2}, "operation")
    singles = _singleton_vertices(h)
    if not singles:
        return 0
    return _clique_number(_pair_adjacency(h), singles)


def _singleton_vertices(h: Hypergraph) -> list:
    return sorted(v for v in range(1, h.n + 1) if frozenset({v}) in h.edges)


def _pair_adjacency(h: Hypergraph) -> dict:
    adj = {v: set() for v in range(1, h.n + 1)}
    for e in h.edges:
        if len(e) == 2:
            a, b = sorted(e)
            adj[a].add(b)
            adj[b].add(a)
    return adj


def lagrangian12_exact(h: Hypergraph) -> Exact12Result:
    """Exact optimum of the edge polynomial for a {1,2}-graph, with witness.

    Takes the best of the three support-structure candidates (see module
    docstring): complete order t gives 2 - 1/t (order 1 is a lone singleton
    vertex of value 1), the pair-level clique number w gives 1 - 1/w, and
    the largest pair-level clique touching a singleton vertex, of order k,
    gives 5/4 - 1/(4k) at the one-heavy weighting.  Edgeless input is 0.
    """
    _require_types(h, {1, 2}, "operation")
    n = h.n
    if not h.edges:
        return Exact12Result(Fraction(0), tuple([Fraction(1, n)] * n), "empty")

    singles = _singleton_vertices(h)
    adj = _pair_adjacency(h)
    candidates = []

    t_star = 0
    if singles:
        sub_adj = {v: adj[v] & set(singles) for v in singles}
        t_star = max(1, _clique_number(sub_adj, singles))
        tag = "all-singletons" if t_star >= 2 else "single-vertex"
        candidates.append((Fraction(2) - Fraction(1, t_star), tag, ("complete", t_star, sub_adj)))

    omega = _clique_number(adj, range(1, n + 1))
    if omega >= 2:
        candidates.append((Fraction(1) - Fraction(1, omega), "no-singletons", ("clique", omega, None)))

    k_star = 0
    for v in singles:
        if adj[v]:
            nb = {u: adj[u] & adj[v] for u in adj[v]}
            k_star = max(k_star, 1 + _clique_number(nb, adj[v]))
    if k_star >= 2:
        candidates.append(
            (Fraction(5, 4) - Fraction(1, 4 * k_star), "one-heavy-singleton", ("hit", k_star, None))
        )

    value, tag, (kind, order, sub_adj) = max(candidates, key=lambda c: c[0])
    weights = [Fraction(0)] * n
    if kind == "complete":
        support = _lex_clique(sub_adj, singles, order)
        for v in support:
            weights[v - 1] = Fraction(1, order)
    elif kind == "clique":
        support = _lex_clique(adj, range(1, n + 1), order)
        for v in support:
            weights[v - 1] = Fraction(1, order)
    else:
        support = _lex_clique(adj, range(1, n + 1), order, must_hit=set(singles))
        heavy = min(v for v in support if v in set(singles))
        for v in support:
            weights[v - 1] = Fraction(order + 1, 2 * order) if v == heavy else Fraction(1, 2 * order)
    return Exact12Result(value, tuple(weights), tag)


def uniform_relation_check(g: Hypergraph, x):
    """Pair (edge polynomial, k! times the plain monomial sum) for uniform ``g``.

    The two components agree identically; exposed as a numeric cross-check.
    """
    sizes = edge_types(g)
    if len(sizes) > 1:
        raise ValueError(f"hypergraph is not uniform, edge sizes {sorted(sizes)}")
    lhs = evaluate(g, x)
    if not sizes:
        return (lhs, 0.0)
    k = next(iter(sizes))
    rhs = math.factorial(k) * evaluate_uniform(g, x)
    return (lhs, rhs)
