"""Lubell density, chromatic number, the {1,2} density formula, and finite-n
extremal search over forbidden-subgraph and forbidden-homomorphism hosts.

Finite-n extremal values are data points, not densities: the search reports
the exact (or locally best) maximum Lubell value of an admissible host on n
vertices.  The closed-form density 2 - 1/(chi - 1) is attached only where it
applies, namely {1,2}-graphs whose pair level is non-bipartite.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .core import Hypergraph, _embed, edge_types, parse, remove_edge, serialize, sorted_edges
from .exact import _adjacency, _clique_number, lagrangian12_exact
from .hom import _find_hom


class OutOfHypothesisError(ValueError):
    """Input outside the hypotheses of a closed-form result."""


class SearchBudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


def lubell(g: Hypergraph) -> Fraction:
    """Exact Lubell density: per size k, the fraction of all possible k-edges present."""
    counts = {}
    for e in g.edges:
        counts[len(e)] = counts.get(len(e), 0) + 1
    return sum(
        (Fraction(c, math.comb(g.n, k)) for k, c in counts.items()),
        Fraction(0),
    )


def chromatic_number(g: Hypergraph) -> int:
    """Exact chromatic number of a 2-uniform hypergraph.

    Iterative deepening between the clique lower bound and a greedy upper
    bound; each k is decided by backtracking with canonical color order
    (a new color may only be the next unused one).
    """
    adj = _adjacency(g)
    if not g.edges:
        return 1
    order = sorted(range(1, g.n + 1), key=lambda v: len(adj[v]), reverse=True)
    lower = _clique_number(adj, range(1, g.n + 1))
    greedy = {}
    upper = 1
    for v in order:
        taken = {greedy[u] for u in adj[v] if u in greedy}
        c = 1
        while c in taken:
            c += 1
        greedy[v] = c
        upper = max(upper, c)
    for k in range(lower, upper):
        if _k_colorable(adj, order, k):
            return k
    return upper


def _k_colorable(adj: dict, order: list, k: int) -> bool:
    colors = {}

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[u] for u in adj[v] if u in colors}
        for c in range(1, min(k, used + 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c)):
                return True
            del colors[v]
        return False

    return assign(0, 0)


def turan_density_12(h: Hypergraph) -> Fraction:
    """Density 2 - 1/(chi(pair level) - 1) for a {1,2}-graph with non-bipartite pairs.

    Inputs outside that hypothesis fail loudly rather than extrapolate.
    """
    extra = edge_types(h) - {1, 2}
    if extra:
        raise ValueError(f"operation requires edge sizes within [1, 2], found {sorted(extra)}")
    pair_level = Hypergraph(h.n, frozenset(e for e in h.edges if len(e) == 2))
    if not pair_level.edges:
        raise OutOfHypothesisError("H2 empty: density formula needs a non-bipartite pair level")
    chi = chromatic_number(pair_level)
    if chi <= 2:
        raise OutOfHypothesisError("H2 bipartite: density formula needs chromatic number at least 3")
    return Fraction(2) - Fraction(1, chi - 1)


@dataclass(frozen=True)
class ExtremalRecord:
    """Best admissible host found for one (forbidden graph, n, mode) query."""

    forbidden: Hypergraph
    n: int
    mode: str
    search: str
    max_lubell: Fraction
    witness: Hypergraph
    seed: int = 0


@dataclass(frozen=True)
class DensityEstimate:
    """Finite-n extremal values for one forbidden graph, with the closed-form
    density attached when the forbidden graph is within its hypotheses."""

    values: tuple
    formula_value: Fraction | None
    records: tuple = ()


def _candidate_edges(n: int, types) -> list:
    cand = []
    for k in sorted(types):
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"edge types must be positive integers, got {k!r}")
        cand.extend(frozenset(c) for c in itertools.combinations(range(1, n + 1), k))
    weights = {e: Fraction(1, math.comb(n, len(e))) for e in cand}
    cand.sort(key=lambda e: (-weights[e], len(e), tuple(sorted(e))))
    return cand, weights


def _make_blocked(f: Hypergraph, n: int, mode: str):
    if mode == "free":
        return lambda host: _embed(f, n, host) is not None
    return lambda host: _find_hom(f, n, host) is not None


def _witness_key(host) -> str:
    lines = sorted((tuple(sorted(e)) for e in host), key=lambda t: (len(t), t))
    return "\n".join("e " + " ".join(str(v) for v in t) for t in lines)


def _search_block(f, n, mode, cand, weights, prefix, best_val):
    """Exhaustive DFS over hosts whose first len(prefix) edge decisions match
    ``prefix``; returns (value, witness key, witness edges) or None.

    Include branches are cut when the grown host stops being admissible
    (containment and homomorphism presence are both monotone in host edges),
    and any branch whose optimistic bound falls strictly below the incumbent
    dies.  Ties on value keep the lexicographically smallest witness.
    """
    blocked = _make_blocked(f, n, mode)
    wlist = [weights[e] for e in cand]
    suffix = [Fraction(0)] * (len(cand) + 1)
    for i in range(len(cand) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + wlist[i]
    host = set()
    val = Fraction(0)
    for i, bit in enumerate(prefix):
        if bit:
            e = cand[i]
            if blocked(host | {e}):
                return None
            host.add(e)
            val += wlist[i]
    best = [best_val, None, None]

    def rec(i, val):
        if best[0] is not None and val + suffix[i] < best[0]:
            return
        if i == len(cand):
            if best[0] is None or val > best[0]:
                best[0], best[1], best[2] = val, _witness_key(host), frozenset(host)
            elif val == best[0]:
                key = _witness_key(host)
                if best[1] is None or key < best[1]:
                    best[1], best[2] = key, frozenset(host)
            return
        e = cand[i]
        if not blocked(host | {e}):
            host.add(e)
            rec(i + 1, val + wlist[i])
            host.discard(e)
        rec(i + 1, val)

    rec(len(prefix), val)
    if best[2] is None:
        return None
    return best[0], best[1], best[2]


def _search_block_task(args):
    return _search_block(*args)


def _local_search(f, n, mode, cand, weights, seed, restarts=16, sweeps=3):
    """Seeded hill climbing: greedy maximal hosts from random edge orders,
    improved by remove-one / refill sweeps.  Returns (value, key, edges)."""
    rng = random.Random(seed)
    blocked = _make_blocked(f, n, mode)
    idx = list(range(len(cand)))
    best = None
    for _ in range(max(1, restarts)):
        rng.shuffle(idx)
        host = set()
        val = Fraction(0)
        for i in idx:
            e = cand[i]
            if not blocked(host | {e}):
                host.add(e)
                val += weights[e]
        for _ in range(sweeps):
            improved = False
            for e in sorted(host, key=lambda t: rng.random()):
                if e not in host:
                    continue
                trial = set(host)
                trial.discard(e)
                tval = val - weights[e]
                rng.shuffle(idx)
                for i in idx:
                    c = cand[i]
                    if c in trial or c == e:
                        continue
                    if not blocked(trial | {c}):
                        trial.add(c)
                        tval += weights[c]
                if not blocked(trial | {e}):
                    trial.add(e)
                    tval += weights[e]
                if tval > val:
                    host, val = trial, tval
                    improved = True
            if not improved:
                break
        key = _witness_key(host)
        if best is None or val > best[0] or (val == best[0] and key < best[1]):
            best = (val, key, frozenset(host))
    return best


def extremal_search(
    f: Hypergraph,
    n: int,
    mode: str = "free",
    search: str = "exhaustive",
    seed: int = 0,
    types=None,
    budget: int = 22,
    cache_path=None,
    jobs: int = 1,
) -> ExtremalRecord:
    """Maximum-Lubell host on n vertices avoiding ``f`` (as subgraph or
    homomorphism image, per ``mode``).

    ``exhaustive`` enumerates every host over the candidate edge universe
    (sizes default to the edge types of ``f``) with branch-and-bound
    pruning and is exact; it refuses to start past ``budget`` candidate
    edges.  ``local`` is seeded hill climbing and yields a lower bound.
    Completed exhaustive queries are memoized in the JSON-lines cache at
    ``cache_path`` when given.
    """
    if mode not in ("free", "hom-free"):
        raise ValueError(f"mode must be 'free' or 'hom-free', got {mode!r}")
    if search not in ("exhaustive", "local"):
        raise ValueError(f"search must be 'exhaustive' or 'local', got {search!r}")
    default_universe = types is None
    if types is None:
        types = edge_types(f)
    types = set(types)
    if not types:
        raise ValueError("forbidden hypergraph has no edges and no host edge types were given")
    cand, weights = _candidate_edges(n, types)

    if search == "local":
        val, key, host = _local_search(f, n, mode, cand, weights, seed)
        record = ExtremalRecord(f, n, mode, search, val, Hypergraph(n, host), seed)
        if cache_path and default_universe:
            _cache_append(cache_path, record)
        return record

    if len(cand) > budget:
        raise SearchBudgetError(
            f"{len(cand)} candidate edges exceed the exhaustive budget of {budget}"
        )
    if cache_path and default_universe:
        cached = _cache_lookup(cache_path, f, n, mode)
        if cached is not None:
            return cached

    incumbent = _local_search(f, n, mode, cand, weights, seed=0, restarts=8)
    prime = incumbent[0] if incumbent else None
    if jobs <= 1:
        found = _search_block(f, n, mode, cand, weights, (), prime)
        results = [found]
    else:
        depth = min((jobs - 1).bit_length(), 8, len(cand))
        prefixes = list(itertools.product((1, 0), repeat=depth))
        tasks = [(f, n, mode, cand, weights, p, prime) for p in prefixes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_block_task, tasks))
    results = [r for r in results if r is not None]
    if not results:
        raise AssertionError("exhaustive search found no admissible host")
    val, key, host = min(results, key=lambda r: (-r[0], r[1]))
    record = ExtremalRecord(f, n, mode, search, val, Hypergraph(n, host), seed)
    if cache_path and default_universe:
        _cache_append(cache_path, record)
    return record


def _cache_lookup(path, f: Hypergraph, n: int, mode: str):
    want = serialize(f)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            continue
        if (
            rec.get("forbidden_serialized") == want
            and rec.get("n") == n
            and rec.get("mode") == mode
            and rec.get("search") == "exhaustive"
        ):
            return ExtremalRecord(
                f,
                n,
                mode,
                "exhaustive",
                Fraction(rec["max_lubell"]),
                parse(rec["witness_serialized"]),
                int(rec.get("seed", 0)),
            )
    return None


def _cache_append(path, record: ExtremalRecord):
    entry = {
        "forbidden_serialized": serialize(record.forbidden),
        "n": record.n,
        "mode": record.mode,
        "search": record.search,
        "max_lubell": str(record.max_lubell),
        "witness_serialized": serialize(record.witness),
        "seed": record.seed,
        "timestamp": time.time(),
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry, sort_keys=True) + "\n")


def density_sequence(f: Hypergraph, n_range, mode: str = "free", **kwargs) -> DensityEstimate:
    """Extremal values for each n in ascending ``n_range``; keyword arguments
    pass through to ``extremal_search``."""
    ns = list(n_range)
    if not ns:
        raise ValueError("n_range must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_range must be strictly ascending")
    records = tuple(extremal_search(f, n, mode=mode, **kwargs) for n in ns)
    try:
        formula = turan_density_12(f)
    except ValueError:
        formula = None
    return DensityEstimate(
        values=tuple((r.n, r.max_lubell) for r in records),
        formula_value=formula,
        records=records,
    )


def dense_report(g: Hypergraph):
    """Denseness diagnosis: (is_dense, base value, per-edge deletion values,
    uncovered vertices).

    The graph is dense iff every vertex lies in some edge and every single
    edge deletion strictly lowers the exact optimum.  One-edge deletions
    suffice for the edge direction because the optimum is monotone under
    edge removal; a vertex in no edge already gives an equal-value proper
    subgraph, so coverage is checked separately.
    """
    base = lagrangian12_exact(g).value
    covered = set()
    for e in g.edges:
        covered |= e
    uncovered = sorted(set(range(1, g.n + 1)) - covered)
    drops = []
    for e in sorted_edges(g):
        value_without = lagrangian12_exact(remove_edge(g, e)).value
        drops.append((e, value_without))
    dense = bool(g.edges) and not uncovered and all(v < base for _, v in drops)
    return dense, base, drops, uncovered


def is_dense(g: Hypergraph) -> bool:
    """True iff every proper subgraph has a strictly smaller exact optimum."""
    return dense_report(g)[0]


def pi_lower_via_lagrangian(f: Hypergraph, max_n: int, budget: int = 16) -> Fraction:
    """Best exact optimum over hosts on up to ``max_n`` vertices that are
    hom-free for ``f`` and use only its edge types; a certified lower bound
    on the Turan density of ``f``."""
    extra = edge_types(f) - {1, 2}
    if extra:
        raise ValueError(f"operation requires edge sizes within [1, 2], found {sorted(extra)}")
    types = edge_types(f)
    if not types:
        raise ValueError("forbidden hypergraph has no edges")
    best = Fraction(0)
    for n in range(1, max_n + 1):
        cand, _ = _candidate_edges(n, types)
        if len(cand) > budget:
            raise SearchBudgetError(
                f"{len(cand)} candidate edges at n={n} exceed the enumeration budget of {budget}"
            )
        blocked = _make_blocked(f, n, "hom-free")
        host = set()

        def rec(i):
            nonlocal best
            if i == len(cand):
                if host:
                    val = lagrangian12_exact(Hypergraph(n, frozenset(host))).value
                    if val > best:
                        best = val
                return
            e = cand[i]
            if not blocked(host | {e}):
                host.add(e)
                rec(i + 1)
                host.discard(e)
            rec(i + 1)

        rec(0)
    return best
