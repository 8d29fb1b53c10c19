"""Non-uniform hypergraphs: construction, structural queries, and text I/O.

Vertices are the integers 1..n.  Edges are nonempty vertex sets of any
cardinality; the set of cardinalities occurring in a hypergraph is its set
of edge types.  Instances are immutable and hashable, so they are safe to
share across workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = frozenset


class ParseError(ValueError):
    """Malformed hypergraph text.  Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertex set {1..n} with a finite set of nonempty edges.

    Edges have set semantics: duplicates passed to the constructor collapse
    silently (the parser, in contrast, rejects duplicate edge lines).
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        norm = frozenset(frozenset(e) for e in self.edges)
        for e in norm:
            if not e:
                raise ValueError("edges must be nonempty")
            for v in e:
                if not isinstance(v, int) or not 1 <= v <= self.n:
                    raise ValueError(f"edge {sorted(e)} is not within vertex range 1..{self.n}")
        object.__setattr__(self, "edges", norm)


@dataclass(frozen=True)
class LevelGraph:
    """The k-uniform slice of a hypergraph: all of its edges of size k."""

    k: int
    graph: Hypergraph


def edge_types(h: Hypergraph) -> set:
    """Set of edge cardinalities occurring in ``h`` (empty for an edgeless graph)."""
    return {len(e) for e in h.edges}


def sorted_edges(h: Hypergraph) -> list:
    """Edges as sorted tuples, ordered by (size, lexicographic); the canonical order."""
    return sorted((tuple(sorted(e)) for e in h.edges), key=lambda t: (len(t), t))


def level(h: Hypergraph, k: int) -> LevelGraph:
    """The size-k slice of ``h`` on the same vertex set (edgeless if no size-k edges)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level must be a positive integer, got {k!r}")
    return LevelGraph(k, Hypergraph(h.n, frozenset(e for e in h.edges if len(e) == k)))


def complete(n: int, types: Iterable[int]) -> Hypergraph:
    """Complete hypergraph on n vertices: every vertex subset whose size is in ``types``."""
    ts = sorted(set(types))
    for r in ts:
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"edge types must be positive integers, got {r!r}")
        if r > n:
            raise ValueError(f"edge type {r} exceeds vertex count {n}")
    edges = [frozenset(c) for r in ts for c in itertools.combinations(range(1, n + 1), r)]
    return Hypergraph(n, frozenset(edges))


def blowup(h: Hypergraph, sizes: Sequence[int]) -> Hypergraph:
    """Replace vertex i by a class of ``sizes[i-1]`` fresh vertices.

    Each edge becomes all transversals of its classes (one vertex per class),
    so an edge e contributes the product of its class sizes.  Classes are the
    contiguous label ranges [1..s_1], [s_1+1..s_1+s_2], ... which makes the
    result reproducible bit for bit.
    """
    sizes = list(sizes)
    if len(sizes) != h.n:
        raise ValueError(f"need {h.n} class sizes, got {len(sizes)}")
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"class sizes must be positive integers, got {s!r}")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    classes = [range(starts[i] + 1, starts[i + 1] + 1) for i in range(h.n)]
    edges = []
    for e in h.edges:
        for combo in itertools.product(*(classes[v - 1] for v in sorted(e))):
            edges.append(frozenset(combo))
    return Hypergraph(starts[-1], frozenset(edges))


def remove_edge(h: Hypergraph, e: Iterable[int]) -> Hypergraph:
    """Copy of ``h`` without edge ``e``; the edge must be present."""
    edge = frozenset(e)
    if edge not in h.edges:
        raise ValueError(f"edge {sorted(edge)} not present")
    return Hypergraph(h.n, h.edges - {edge})


def is_subgraph(f: Hypergraph, g: Hypergraph) -> bool:
    """True iff some injective vertex map sends every edge of ``f`` onto an edge of ``g``.

    Non-induced containment: extra edges of ``g`` are irrelevant.  Isolated
    vertices of ``f`` still consume distinct targets, so ``f.n <= g.n`` is
    necessary.
    """
    return _embed(f, g.n, g.edges) is not None


def _embed(f: Hypergraph, g_n: int, g_edges) -> dict | None:
    """Injective embedding of ``f`` into a host given as raw (n, edge set), or None.

    Backtracks over f-vertices in descending degree order, checking each
    f-edge as soon as it is fully assigned and pruning partial edges whose
    image is contained in no host edge of the right size.
    """
    if f.n > g_n:
        return None
    by_size = {}
    for e in g_edges:
        by_size.setdefault(len(e), set()).add(e)
    f_sizes = {}
    for e in f.edges:
        f_sizes[len(e)] = f_sizes.get(len(e), 0) + 1
    for k, cnt in f_sizes.items():
        if cnt > len(by_size.get(k, ())):
            return None
    incident = {v: [] for v in range(1, f.n + 1)}
    for e in f.edges:
        for v in e:
            incident[v].append(e)
    order = sorted(range(1, f.n + 1), key=lambda v: len(incident[v]), reverse=True)
    pos = {v: i for i, v in enumerate(order)}
    assign = {}
    used = set()

    def consistent(v):
        for e in incident[v]:
            image = {assign[u] for u in e if u in assign}
            if all(u in assign for u in e):
                if frozenset(image) not in by_size.get(len(e), ()):
                    return False
            else:
                if not any(image <= host_e for host_e in by_size.get(len(e), ())):
                    return False
        return True

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for target in range(1, g_n + 1):
            if target in used:
                continue
            assign[v] = target
            used.add(target)
            if consistent(v) and extend(i + 1):
                return True
            del assign[v]
            used.discard(target)
        return False

    if extend(0):
        return dict(assign)
    return None


def parse(text: str) -> Hypergraph:
    """Parse the line-oriented hypergraph format.

    First non-comment line is ``n <count>``; each following line is
    ``e <v1> ... <vk>`` with distinct 1-based labels.  ``#`` starts a
    comment.  Duplicate edges, out-of-range or repeated vertices, empty
    edges, and unknown directives are errors that name the line.
    """
    n = None
    edges = []
    seen = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError("duplicate vertex-count line", lineno)
            if len(tokens) != 2:
                raise ParseError("vertex-count line must be 'n <count>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {tokens[1]!r}", lineno) from None
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before vertex-count line", lineno)
            if len(tokens) < 2:
                raise ParseError("empty edge", lineno)
            verts = []
            for tok in tokens[1:]:
                try:
                    v = int(tok)
                except ValueError:
                    raise ParseError(f"vertex label is not an integer: {tok!r}", lineno) from None
                if not 1 <= v <= n:
                    raise ParseError(f"vertex {v} out of range 1..{n}", lineno)
                verts.append(v)
            edge = frozenset(verts)
            if len(edge) != len(verts):
                raise ParseError("repeated vertex within edge", lineno)
            if edge in seen:
                raise ParseError(f"duplicate edge {sorted(edge)}", lineno)
            seen.add(edge)
            edges.append(edge)
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing vertex-count line", max(lineno, 1))
    return Hypergraph(n, frozenset(edges))


def serialize(h: Hypergraph) -> str:
    """Canonical text form; ``parse(serialize(h)) == h``."""
    lines = [f"n {h.n}"]
    for e in sorted_edges(h):
        lines.append("e " + " ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"
