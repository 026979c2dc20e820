"""Simple labelled graphs and the bowtie machinery.

Provides the graph value type, degree extraction, bowtie-subgraph detection,
a deterministic constructive realizer (repeated lay-off run in reverse), an
exhaustive enumerator of labelled realizations for small sequences, and the
brute-force oracle built on it.  The oracle is deliberately independent of
the rule-based decision procedure in the characterize module so the two can
cross-validate each other.

A bowtie is two triangles sharing one vertex: a centre c with four distinct
neighbours a, b, d, e such that ab and de are edges.  Equivalently it is the
5-vertex complete graph minus the edges of a 4-cycle (the tests verify that
isomorphism by brute force).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .sequences import DegreeSequence, LayoffTrace, is_graphic, lay_off

ENUMERATION_LIMIT = 10


class ZeroDegreeVertex(ValueError):
    """A graph with an isolated vertex has no positive degree sequence."""


class NotGraphic(ValueError):
    """The sequence admits no realization at all."""


class TooLarge(ValueError):
    """Exhaustive enumeration is capped at ENUMERATION_LIMIT vertices."""


class TraceMismatch(ValueError):
    """The graph's degrees do not fit the lay-off trace being inverted."""


class SimpleGraph:
    """Immutable labelled simple graph on vertices 0..vertex_count-1."""

    __slots__ = ("_n", "_edges")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be >= 0, got {vertex_count}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            normalized.add((u, v) if u < v else (v, u))
        self._n = vertex_count
        self._edges = frozenset(normalized)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def degrees(self) -> list[int]:
        degs = [0] * self._n
        for u, v in self._edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self._n)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SimpleGraph):
            return self._n == other._n and self._edges == other._edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self._n}, {self.sorted_edges()!r})"


@dataclass(frozen=True)
class BowtieWitness:
    """Vertices of an embedded bowtie: centre plus two disjoint wing pairs."""

    center: int
    wing1: tuple[int, int]
    wing2: tuple[int, int]

    def edges(self) -> list[tuple[int, int]]:
        c = self.center
        a, b = self.wing1
        d, e = self.wing2
        pairs = [(c, a), (c, b), (c, d), (c, e), (a, b), (d, e)]
        return [(u, v) if u < v else (v, u) for u, v in pairs]


def degree_sequence(graph: SimpleGraph) -> DegreeSequence:
    """The graph's degrees as a DegreeSequence; isolated vertices are errors."""
    degs = graph.degrees()
    for v, d in enumerate(degs):
        if d == 0:
            raise ZeroDegreeVertex(f"vertex {v} is isolated")
    return DegreeSequence(degs)


def contains_bowtie(graph: SimpleGraph) -> BowtieWitness | None:
    """Find the least bowtie embedding, or None.

    Centres are scanned in increasing order; for each centre the adjacent
    neighbour pairs are scanned in lexicographic order, and the first
    disjoint pair of pairs wins.  The result is therefore the minimum
    witness under (center, wing1, wing2) tuple order, and adding edges to
    the graph can never lose it.
    """
    adj = graph.adjacency()
    for center in range(graph.vertex_count):
        neighbours = sorted(adj[center])
        if len(neighbours) < 4:
            continue
        pairs = [
            (a, b)
            for a, b in combinations(neighbours, 2)
            if b in adj[a]
        ]
        for i, first in enumerate(pairs):
            for second in pairs[i + 1 :]:
                if first[0] in second or first[1] in second:
                    continue
                return BowtieWitness(center=center, wing1=first, wing2=second)
    return None


def attach_by_degrees(graph: SimpleGraph, neighbour_degrees: Iterable[int]) -> SimpleGraph:
    """Add one vertex adjacent to distinct vertices with the given degrees.

    For each required degree (largest first) the lowest-index unused vertex
    currently of that degree is chosen; required zeros create fresh isolated
    vertices first.  This inverts a lay-off step at the degree level and is
    shared by the constructive realizer and the trace-based reattach.
    """
    targets = sorted(neighbour_degrees, reverse=True)
    current = graph.degrees()
    used = [False] * graph.vertex_count
    edges = list(graph.edges)
    next_fresh = graph.vertex_count
    picks: list[int] = []
    for target in targets:
        if target == 0:
            picks.append(next_fresh)
            next_fresh += 1
            continue
        for v, d in enumerate(current):
            if d == target and not used[v]:
                used[v] = True
                picks.append(v)
                break
        else:
            raise TraceMismatch(f"no unused vertex of degree {target}")
    new_vertex = next_fresh
    edges.extend((v, new_vertex) for v in picks)
    return SimpleGraph(new_vertex + 1, edges)


def havel_hakimi_realize(seq: DegreeSequence) -> SimpleGraph:
    """Build one deterministic realization by inverting repeated lay-off.

    The sequence is laid off down to the empty sequence, then rebuilt one
    vertex at a time with attach_by_degrees.  Raises NotGraphic when the
    sequence has no realization.
    """
    if not is_graphic(seq):
        raise NotGraphic(f"{seq} is not graphic")
    traces: list[LayoffTrace] = []
    current = seq
    while len(current) > 0:
        trace = lay_off(current)
        traces.append(trace)
        current = trace.child
    graph = SimpleGraph(0)
    for trace in reversed(traces):
        graph = attach_by_degrees(graph, trace.decremented_degrees)
    return graph


def _erdos_gallai_ok(residual: list[int]) -> bool:
    """Whether the residual demands (zeros allowed) extend to a simple graph."""
    degs = sorted((d for d in residual if d > 0), reverse=True)
    if sum(degs) % 2 != 0:
        return False
    m = len(degs)
    if m and degs[0] >= m:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += degs[k - 1]
        tail = sum(min(d, k) for d in degs[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def enumerate_realizations(
    seq: DegreeSequence, budget: int = 0
) -> Iterator[SimpleGraph]:
    """Yield every labelled realization of the sequence, deterministically.

    Vertex i carries the i-th term of the (nonincreasing) sequence.
    Vertices choose their higher-indexed neighbour sets in lexicographic
    order, with an exact feasibility prune on the remaining demands, so the
    stream is duplicate-free, exhaustive, and identical between runs.

    ``budget`` > 0 caps the number of graphs yielded (0 means unlimited).
    Raises TooLarge beyond ENUMERATION_LIMIT vertices and NotGraphic for
    sequences with no realization.
    """
    n = len(seq)
    if n > ENUMERATION_LIMIT:
        raise TooLarge(f"enumeration is limited to {ENUMERATION_LIMIT} vertices, got {n}")
    if not is_graphic(seq):
        raise NotGraphic(f"{seq} is not graphic")

    residual = list(seq.terms)
    edges: list[tuple[int, int]] = []

    def assign(u: int) -> Iterator[SimpleGraph]:
        if u == n:
            yield SimpleGraph(n, edges)
            return
        need = residual[u]
        if need == 0:
            yield from assign(u + 1)
            return
        candidates = [v for v in range(u + 1, n) if residual[v] > 0]
        if len(candidates) < need:
            return
        for chosen in combinations(candidates, need):
            for v in chosen:
                residual[v] -= 1
            residual[u] = 0
            if _erdos_gallai_ok(residual[u + 1 :]):
                edges.extend((u, v) for v in chosen)
                yield from assign(u + 1)
                del edges[-need:]
            residual[u] = need
            for v in chosen:
                residual[v] += 1

    emitted = 0
    for graph in assign(0):
        yield graph
        emitted += 1
        if budget > 0 and emitted >= budget:
            return


def oracle_has_bowtie_realization(seq: DegreeSequence) -> bool:
    """Brute-force ground truth: does any realization contain a bowtie?

    Walks the exhaustive enumeration and stops at the first witness.  Usable
    only within the enumeration limit; the characterize module's rules are
    validated against this oracle.
    """
    for graph in enumerate_realizations(seq):
        if contains_bowtie(graph) is not None:
            return True
    return False


def edge_list_text(graph: SimpleGraph, witness: BowtieWitness | None = None) -> str:
    """Edge list wire format: one "u v" line per edge, 0-based, sorted.

    A witness, when given, is recorded as a leading '#' comment line.
    """
    lines: list[str] = []
    if witness is not None:
        lines.append(
            f"# bowtie center {witness.center}"
            f" wings {witness.wing1[0]},{witness.wing1[1]}"
            f" {witness.wing2[0]},{witness.wing2[1]}"
        )
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def dot_text(graph: SimpleGraph, witness: BowtieWitness | None = None) -> str:
    """Undirected DOT rendering with plain integer node ids."""
    lines = ["graph {"]
    if witness is not None:
        lines.append(
            f"  // bowtie center {witness.center}"
            f" wings {witness.wing1[0]},{witness.wing1[1]}"
            f" {witness.wing2[0]},{witness.wing2[1]}"
        )
    touched = [False] * graph.vertex_count
    for u, v in graph.sorted_edges():
        touched[u] = touched[v] = True
    for v, seen in enumerate(touched):
        if not seen:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in graph.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
