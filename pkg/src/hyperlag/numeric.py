"""Weighted edge-polynomial evaluation and maximization over the simplex.

The objective for a hypergraph H and weight vector x on the simplex is

    sum over edge sizes j of  j! * sum over size-j edges e of  prod_{i in e} x_i

For a k-uniform graph this is k! times the plain monomial sum, so the
2-uniform case is the classical quadratic clique polynomial scaled by 2.
Maximization uses projected gradient ascent with backtracking line search
and seeded random restarts; the best value found is a lower bound on the
true maximum (evaluation itself is exact up to floating point).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import Hypergraph, LevelGraph

SUPPORT_EPS = 1e-9
_MIN_STEP = 1e-20


def _as_weights(x, n: int) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (n,):
        raise ValueError(f"weight vector has length {arr.size}, expected {n}")
    return arr


def _edge_terms(h: Hypergraph):
    """Precompute 0-based edge index lists grouped for fast evaluation.

    Returns (singles, pairs, higher) where higher is a list of
    (factorial, edge tuples) for sizes >= 3.
    """
    singles = []
    pairs = []
    by_size = {}
    for e in h.edges:
        k = len(e)
        if k == 1:
            singles.append(next(iter(e)) - 1)
        elif k == 2:
            a, b = sorted(e)
            pairs.append((a - 1, b - 1))
        else:
            by_size.setdefault(k, []).append(tuple(sorted(v - 1 for v in e)))
    singles.sort()
    pairs.sort()
    higher = [(float(math.factorial(k)), sorted(es)) for k, es in sorted(by_size.items())]
    return singles, pairs, higher


def _make_value_grad(h: Hypergraph):
    singles, pairs, higher = _edge_terms(h)
    n = h.n

    def value(xl):
        total = 0.0
        for i in singles:
            total += xl[i]
        for i, j in pairs:
            total += 2.0 * xl[i] * xl[j]
        for fact, es in higher:
            for e in es:
                p = fact
                for i in e:
                    p *= xl[i]
                total += p
        return total

    def grad(xl):
        g = [0.0] * n
        for i in singles:
            g[i] += 1.0
        for i, j in pairs:
            g[i] += 2.0 * xl[j]
            g[j] += 2.0 * xl[i]
        for fact, es in higher:
            for e in es:
                for skip in range(len(e)):
                    p = fact
                    for q, i in enumerate(e):
                        if q != skip:
                            p *= xl[i]
                    g[e[skip]] += p
        return g

    return value, grad


def evaluate(h: Hypergraph, x) -> float:
    """Edge polynomial of ``h`` at weights ``x`` (size-j edges weighted by j!)."""
    arr = _as_weights(x, h.n)
    value, _ = _make_value_grad(h)
    return value(arr.tolist())


def evaluate_uniform(g, x) -> float:
    """Plain monomial sum (no factorial weight) of a uniform hypergraph at ``x``."""
    h = g.graph if isinstance(g, LevelGraph) else g
    sizes = {len(e) for e in h.edges}
    if len(sizes) > 1:
        raise ValueError(f"hypergraph is not uniform, edge sizes {sorted(sizes)}")
    arr = _as_weights(x, h.n)
    xl = arr.tolist()
    total = 0.0
    for e in h.edges:
        p = 1.0
        for v in e:
            p *= xl[v - 1]
        total += p
    return total


def gradient(h: Hypergraph, x) -> np.ndarray:
    """Partial derivatives of the edge polynomial at ``x``.

    Component i is the sum over edges containing i of j! times the product
    of the other weights in the edge; for a {1,2}-graph this reduces to
    [i has a singleton] + 2 * sum of neighbor weights.
    """
    arr = _as_weights(x, h.n)
    _, grad = _make_value_grad(h)
    return np.asarray(grad(arr.tolist()))


def project_to_simplex(v) -> np.ndarray:
    """Euclidean projection onto {x : x >= 0, sum x = 1} by sort and threshold."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    u = np.sort(arr)[::-1]
    css = np.cumsum(u)
    ranks = np.arange(1, arr.size + 1)
    rho = np.nonzero(u * ranks > css - 1.0)[0][-1]
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(arr - theta, 0.0)


@dataclass(frozen=True, eq=False)
class LagrangianResult:
    """Outcome of a maximization run.

    ``value`` is the best objective found (a lower bound on the optimum),
    ``support`` the 1-based vertices with weight above the support
    threshold, and ``kkt_residual`` the largest pairwise gap between
    support partial derivatives (zero at an optimal weighting).
    """

    value: float
    weighting: np.ndarray
    support: frozenset
    iterations: int
    converged: bool
    kkt_residual: float


def _ascend(x: np.ndarray, value, grad, tol: float, max_iter: int):
    """Projected gradient ascent from ``x``; returns (point, iterations, converged).

    Step size starts at 1.0 each iteration and halves until the objective
    strictly increases.  If no step helps, the point is stationary to
    floating-point precision and the run stops with zero movement.
    """
    fx = value(x.tolist())
    for it in range(1, max_iter + 1):
        g = np.asarray(grad(x.tolist()))
        step = 1.0
        moved = None
        while step > _MIN_STEP:
            cand = project_to_simplex(x + step * g)
            fc = value(cand.tolist())
            if fc > fx:
                moved = cand
                fx = fc
                break
            step *= 0.5
        if moved is None:
            return x, it, True
        delta = float(np.max(np.abs(moved - x)))
        x = moved
        if delta < tol:
            return x, it, True
    return x, max_iter, False


def maximize(
    h: Hypergraph,
    restarts: int = 16,
    tol: float = 1e-10,
    seed: int = 0,
    max_iter: int = 10000,
) -> LagrangianResult:
    """Best weighting found by projected gradient ascent with restarts.

    The first start is the uniform weighting; the remaining ``restarts - 1``
    are independent exponential samples normalized onto the simplex, drawn
    from a generator seeded with ``seed``.  Restart results reduce by
    highest value, ties going to the earliest restart, so output is
    deterministic per seed.  Edgeless input returns value 0 at the uniform
    weighting.
    """
    if restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {restarts}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    n = h.n
    if not h.edges:
        return LagrangianResult(0.0, np.full(n, 1.0 / n), frozenset(), 0, True, 0.0)
    value, grad = _make_value_grad(h)
    rng = np.random.default_rng(seed)
    best = None
    for r in range(restarts):
        if r == 0:
            start = np.full(n, 1.0 / n)
        else:
            sample = rng.exponential(size=n)
            start = sample / sample.sum()
        point, iters, conv = _ascend(start, value, grad, tol, max_iter)
        val = value(point.tolist())
        if best is None or val > best[0]:
            best = (val, point, iters, conv)
    val, point, iters, conv = best
    support = frozenset(int(i) + 1 for i in np.nonzero(point > SUPPORT_EPS)[0])
    residual = kkt_residual(h, point)
    return LagrangianResult(val, point, support, iters, conv, residual)


def kkt_residual(h: Hypergraph, x) -> float:
    """Largest gap between partial derivatives over the support of ``x``.

    At any optimal weighting all support partials agree, so this is a
    stationarity diagnostic; it is 0 when the support has one vertex.
    """
    arr = _as_weights(x, h.n)
    g = gradient(h, arr)
    sup = np.nonzero(arr > SUPPORT_EPS)[0]
    if sup.size <= 1:
        return 0.0
    vals = g[sup]
    return float(vals.max() - vals.min())


def refine_support(h: Hypergraph, x) -> np.ndarray:
    """Shrink the support of ``x`` until every support pair shares an edge.

    While two support vertices lie in no common edge, all weight of the one
    with the smaller partial derivative moves onto the other.  Because the
    pair has no joint edge the mixed second derivative vanishes, so the
    objective never decreases; each transfer removes one support vertex.
    """
    arr = _as_weights(x, h.n).copy()
    covered = set()
    for e in h.edges:
        for pair in itertools.combinations(sorted(e), 2):
            covered.add(pair)
    while True:
        sup = [i for i in range(h.n) if arr[i] > SUPPORT_EPS]
        uncovered = None
        for a in range(len(sup)):
            for b in range(a + 1, len(sup)):
                if (sup[a] + 1, sup[b] + 1) not in covered:
                    uncovered = (sup[a], sup[b])
                    break
            if uncovered:
                break
        if uncovered is None:
            return arr
        i, j = uncovered
        g = gradient(h, arr)
        if g[i] >= g[j]:
            arr[i] += arr[j]
            arr[j] = 0.0
        else:
            arr[j] += arr[i]
            arr[i] = 0.0
