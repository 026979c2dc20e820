"""Constructive realizations containing a bowtie, for accepted sequences.

``realize_with_bowtie`` mirrors the inductive structure of the decision
procedure: small sequences take the first witness from the exhaustive
enumerator; otherwise one lay-off step reduces to a shorter accepted
sequence whose realization is extended back by ``reattach``; and when the
lay-off child is rejected, the sequence must belong to one of eleven
closed families with a direct parameterized construction.

Every family constructor places the bowtie on vertices 0..4 (centre 0) and
completes the remaining degree demands with paths, cycles, chord matchings,
and pendant edges.  Constructions are validated after building: the degree
sequence must match exactly and the bowtie detector must succeed.  A
validation failure, or an accepted sequence that fits no branch, raises
InternalExhaustion: that alarm firing means the characterization itself has
been falsified and must never be swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .characterize import check_potentially
from .graphs import (
    SimpleGraph,
    TraceMismatch,
    ZeroDegreeVertex,
    attach_by_degrees,
    contains_bowtie,
    degree_sequence,
    enumerate_realizations,
    ENUMERATION_LIMIT,
)
from .sequences import DegreeSequence, LayoffTrace, lay_off


class BadParams(ValueError):
    """Family parameters are outside the family's valid range."""


class NotPotentially(ValueError):
    """The sequence has no bowtie-containing realization."""


class InternalExhaustion(RuntimeError):
    """An accepted sequence defeated every construction branch.

    This is a falsification alarm for the characterization, not a normal
    error; it must be allowed to propagate.
    """


class FamilyId(Enum):
    """The eleven closed families the inductive step bottoms out in.

    Digits name the degree values in the family's sequence shape, e.g.
    F11_4321 is the shape (4, 3^a, 2^b, 1^c).
    """

    F1_433 = "F1_433"      # (4, 4, 4, 3^(n-3)), n odd >= 7
    F2_43 = "F2_43"        # (4, 4, 3^(n-2)), n even >= 6
    F3_4 = "F3_4"          # (4, 3^(n-1)), n odd >= 5
    F4_432 = "F4_432"      # (4, 4, 3^a, 2^(n-2-a)), a >= 2 even
    F7_432 = "F7_432"      # (4, 3^a, 2^(n-1-a)), a >= 2 even
    F11_4321 = "F11_4321"  # (4, 3^a, 2^b, 1^(n-1-a-b))
    F18_431 = "F18_431"    # (4, 3^a, 1^(n-1-a)), a >= 4
    C3_TAIL = "C3_TAIL"    # (n-2, n-3, 2^(n-3), 1), n >= 6
    SQ_42 = "SQ_42"        # (4, 4, 2^(n-2)), n >= 7
    S_42 = "S_42"          # (4, 2^(n-1)), n = 5 or n >= 8
    S_4221 = "S_4221"      # (4, 2^a, 1^(n-1-a)), a >= 4


@dataclass(frozen=True)
class FamilyPattern:
    """One family member: the family id plus its free parameters.

    ``a`` and ``b`` are run lengths where the family has them (see
    FamilyId comments); remaining run lengths are determined by ``n``.
    """

    id: FamilyId
    n: int
    a: int | None = None
    b: int | None = None


def family_sequence(pattern: FamilyPattern) -> DegreeSequence:
    """The degree sequence a pattern denotes (without validating ranges)."""
    f, n, a, b = pattern.id, pattern.n, pattern.a, pattern.b
    if f is FamilyId.F1_433:
        return DegreeSequence((4, 4, 4) + (3,) * (n - 3))
    if f is FamilyId.F2_43:
        return DegreeSequence((4, 4) + (3,) * (n - 2))
    if f is FamilyId.F3_4:
        return DegreeSequence((4,) + (3,) * (n - 1))
    if f is FamilyId.F4_432:
        assert a is not None
        return DegreeSequence((4, 4) + (3,) * a + (2,) * (n - 2 - a))
    if f is FamilyId.F7_432:
        assert a is not None
        return DegreeSequence((4,) + (3,) * a + (2,) * (n - 1 - a))
    if f is FamilyId.F11_4321:
        assert a is not None and b is not None
        return DegreeSequence((4,) + (3,) * a + (2,) * b + (1,) * (n - 1 - a - b))
    if f is FamilyId.F18_431:
        assert a is not None
        return DegreeSequence((4,) + (3,) * a + (1,) * (n - 1 - a))
    if f is FamilyId.C3_TAIL:
        return DegreeSequence((n - 2, n - 3) + (2,) * (n - 3) + (1,))
    if f is FamilyId.SQ_42:
        return DegreeSequence((4, 4) + (2,) * (n - 2))
    if f is FamilyId.S_42:
        return DegreeSequence((4,) + (2,) * (n - 1))
    if f is FamilyId.S_4221:
        assert a is not None
        return DegreeSequence((4,) + (2,) * a + (1,) * (n - 1 - a))
    raise BadParams(f"unknown family {f!r}")


def match_family(seq: DegreeSequence) -> FamilyPattern | None:
    """Classify a sequence into a family, or None.

    The tail family (n-2, n-3, 2^(n-3), 1) is tried first because at n = 6
    it coincides with the (4, 3^a, 2^b, 1^c) shape; after that, the shapes
    are disjoint and are recognized from the run lengths of values 4..1.
    """
    terms = seq.terms
    n = len(terms)
    if n >= 6 and terms == (n - 2, n - 3) + (2,) * (n - 3) + (1,):
        return FamilyPattern(FamilyId.C3_TAIL, n)
    if n == 0 or terms[0] != 4:
        return None
    c4 = terms.count(4)
    c3 = terms.count(3)
    c2 = terms.count(2)
    c1 = terms.count(1)
    if (c4, c3, c2, c1) == (3, n - 3, 0, 0):
        return FamilyPattern(FamilyId.F1_433, n)
    if (c4, c3, c2, c1) == (2, n - 2, 0, 0):
        return FamilyPattern(FamilyId.F2_43, n)
    if (c4, c3, c2, c1) == (1, n - 1, 0, 0):
        return FamilyPattern(FamilyId.F3_4, n)
    if c4 == 2 and c3 >= 1 and c2 >= 1 and c1 == 0:
        return FamilyPattern(FamilyId.F4_432, n, a=c3)
    if c4 == 1 and c3 >= 1 and c2 >= 1 and c1 >= 1:
        return FamilyPattern(FamilyId.F11_4321, n, a=c3, b=c2)
    if c4 == 1 and c3 >= 1 and c2 >= 1 and c1 == 0:
        return FamilyPattern(FamilyId.F7_432, n, a=c3)
    if c4 == 1 and c3 >= 1 and c2 == 0 and c1 >= 1:
        return FamilyPattern(FamilyId.F18_431, n, a=c3)
    if (c4, c3, c2, c1) == (2, 0, n - 2, 0):
        return FamilyPattern(FamilyId.SQ_42, n)
    if (c4, c3, c2, c1) == (1, 0, n - 1, 0):
        return FamilyPattern(FamilyId.S_42, n)
    if c4 == 1 and c3 == 0 and c2 >= 1 and c1 >= 1:
        return FamilyPattern(FamilyId.S_4221, n, a=c2)
    return None


# Completion building blocks.  All functions return edge lists; the bowtie
# itself always sits on vertices 0..4 with centre 0.  The straight wing
# pairing is (1,2),(3,4); the cross pairing (1,3),(2,4) is used by a few
# small cases that need the 1-2 pair free for the completion.


def _bowtie_edges(cross: bool = False) -> list[tuple[int, int]]:
    spokes = [(0, 1), (0, 2), (0, 3), (0, 4)]
    wings = [(1, 3), (2, 4)] if cross else [(1, 2), (3, 4)]
    return spokes + wings


def _path_edges(nodes: list[int]) -> list[tuple[int, int]]:
    return [(nodes[i], nodes[i + 1]) for i in range(len(nodes) - 1)]


def _cycle_edges(nodes: list[int]) -> list[tuple[int, int]]:
    assert len(nodes) >= 3
    return _path_edges(nodes) + [(nodes[-1], nodes[0])]


def _matching_edges(nodes: list[int]) -> list[tuple[int, int]]:
    assert len(nodes) % 2 == 0
    return [(nodes[i], nodes[i + 1]) for i in range(0, len(nodes), 2)]


def _cycle_with_stubs(cycle: list[int], sources: list[int]) -> list[tuple[int, int]]:
    """Degree-3 completion of a cycle: every cycle vertex gets one extra
    edge, either a stub from ``sources`` or a chord to another cycle vertex.

    Requires len(cycle) >= 3 and an even surplus r = len(cycle) -
    len(sources) >= 0; for r = 2 at least one source (the chord pair is
    then placed around one receiver so it never duplicates a cycle edge).
    """
    t, s = len(cycle), len(sources)
    r = t - s
    assert t >= 3 and r >= 0 and r % 2 == 0
    edges = _cycle_edges(cycle)
    if r == 0:
        receivers = cycle[:]
    elif r == 2:
        # The chord skips one vertex, so the cycle must have length >= 4
        # for it not to duplicate a cycle edge.
        assert s >= 1 and t >= 4
        receivers = cycle[: s - 1] + [cycle[s]]
        edges.append((cycle[s - 1], cycle[s + 1]))
    else:
        receivers = cycle[:s]
        arc = cycle[s:]
        half = r // 2
        edges.extend((arc[j], arc[j + half]) for j in range(half))
    edges.extend(zip(sources, receivers))
    return edges


def _build_f1_433(n: int) -> SimpleGraph:
    # Targets: 0,1,2 of degree 4; everyone else 3.
    if n == 7:
        edges = _bowtie_edges() + [(1, 5), (1, 6), (2, 5), (2, 6), (3, 5), (4, 6)]
    else:
        tail = list(range(5, n))
        edges = _bowtie_edges() + [(1, 3), (2, 4)]
        edges += _cycle_with_stubs(tail, [1, 2])
    return SimpleGraph(n, edges)


def _build_f2_43(n: int) -> SimpleGraph:
    # Targets: 0,1 of degree 4; everyone else 3.
    if n == 6:
        edges = _bowtie_edges() + [(1, 3), (1, 5), (2, 5), (4, 5)]
    else:
        tail = list(range(5, n))
        edges = _bowtie_edges() + [(1, 3)]
        edges += _cycle_with_stubs(tail, [1, 2, 4])
    return SimpleGraph(n, edges)


def _build_f3_4(n: int) -> SimpleGraph:
    # Targets: 0 of degree 4; everyone else 3.
    edges = _bowtie_edges()
    if n == 7:
        edges += [(1, 5), (2, 5), (5, 6), (3, 6), (4, 6)]
    else:
        edges += [(1, 3), (2, 4)]
        if n >= 9:
            edges += _cycle_with_stubs(list(range(5, n)), [])
    return SimpleGraph(n, edges)


def _build_f4_432(n: int, a: int) -> SimpleGraph:
    # Targets: 0,1 of degree 4; a vertices of degree 3; rest degree 2.
    if a == 2:
        if n == 5:
            edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]
        elif n == 6:
            edges = _bowtie_edges() + [(1, 3), (1, 5), (2, 5)]
        else:
            # Wings 2 and 3 are the degree-3 vertices; the second degree-4
            # vertex 1 rides the two-path as an interior stop.
            edges = _bowtie_edges()
            edges += _path_edges([2, 5, 1] + list(range(6, n)) + [3])
        return SimpleGraph(n, edges)
    # a >= 4: wings 1 (degree 4), 2, 3, 4 (degree 3); the remaining a - 3
    # degree-3 vertices form a block on the path, decorated with wing 4's
    # stub and chords.
    block = list(range(5, 5 + a - 3))
    twos = list(range(5 + a - 3, n))
    edges = _bowtie_edges()
    edges += _path_edges([2] + block + [1] + twos + [3])
    q = len(block) - 1
    if q == 0:
        edges.append((4, block[0]))
    elif q == 2:
        edges.append((4, block[1]))
        edges.append((block[0], block[2]))
    else:
        edges.append((4, block[-1]))
        arc = block[:-1]
        half = q // 2
        edges.extend((arc[j], arc[j + half]) for j in range(half))
    return SimpleGraph(n, edges)


def _build_f7_432(n: int, a: int) -> SimpleGraph:
    # Targets: 0 of degree 4; a vertices of degree 3; rest degree 2.
    c = n - 1 - a
    if a == 2:
        if c == 2:
            edges = _bowtie_edges(cross=True) + [(1, 2)]
        else:
            edges = _bowtie_edges() + _path_edges([1] + list(range(5, n)) + [2])
        return SimpleGraph(n, edges)
    if a == 4:
        if c == 1:
            edges = _bowtie_edges(cross=True) + [(3, 4), (1, 5), (2, 5)]
        else:
            twos = list(range(5, n))
            edges = _bowtie_edges()
            edges += _path_edges([1, twos[0], 2])
            edges += _path_edges([3] + twos[1:] + [4])
        return SimpleGraph(n, edges)
    # a >= 6: split the a - 4 extra degree-3 vertices across two paths and
    # pair them off with cross edges.
    m = a - 4
    h = m // 2
    extra = list(range(5, 5 + m))
    twos = list(range(5 + m, n))
    edges = _bowtie_edges()
    edges += _path_edges([1] + extra[:h] + twos + [2])
    edges += _path_edges([3] + extra[h:] + [4])
    edges += [(extra[j], extra[j + h]) for j in range(h)]
    return SimpleGraph(n, edges)


def _build_f11_4321(n: int, a: int, b: int) -> SimpleGraph:
    # Targets: 0 of degree 4; a threes, b twos, c ones.
    c = n - 1 - a - b
    threes = list(range(1, 1 + a))
    twos = list(range(1 + a, 1 + a + b))
    leaves = list(range(1 + a + b, n))
    if a == 1:
        # Wings: the three, plus three of the twos.
        tail_twos = twos[3:]
        edges = _bowtie_edges() + _path_edges([1] + tail_twos + [leaves[0]])
        edges += _matching_edges(leaves[1:])
    elif a == 2:
        tail_twos = twos[2:]
        if not tail_twos:
            edges = _bowtie_edges(cross=True) + [(1, 2)]
        else:
            edges = _bowtie_edges() + _path_edges([1] + tail_twos + [2])
        edges += _matching_edges(leaves)
    elif a == 3:
        tail_twos = twos[1:]
        if not tail_twos:
            edges = _bowtie_edges(cross=True) + [(1, 2)]
        else:
            edges = _bowtie_edges() + _path_edges([1] + tail_twos + [2])
        edges += [(3, leaves[0])]
        edges += _matching_edges(leaves[1:])
    elif a == 4:
        edges = _bowtie_edges()
        if b == 1:
            edges += _path_edges([1, twos[0], 2])
            edges += [(3, leaves[0]), (4, leaves[1])]
            edges += _matching_edges(leaves[2:])
        else:
            edges += _path_edges([1, twos[0], 2])
            edges += _path_edges([3] + twos[1:] + [4])
            edges += _matching_edges(leaves)
    else:
        m = a - 4
        h = m // 2
        extra = threes[4:]
        edges = _bowtie_edges()
        edges += [(extra[j], extra[j + h]) for j in range(h)]
        if m % 2 == 0:
            edges += _path_edges([1] + extra[:h] + twos + [2])
            edges += _path_edges([3] + extra[h:] + [4])
            edges += _matching_edges(leaves)
        else:
            straggler = extra[-1]
            edges += _path_edges([1] + extra[:h] + [straggler, 2])
            edges += _path_edges([3] + extra[h : 2 * h] + twos + [4])
            edges += [(straggler, leaves[0])]
            edges += _matching_edges(leaves[1:])
    return SimpleGraph(n, edges)


def _build_f18_431(n: int, a: int) -> SimpleGraph:
    # Targets: 0 of degree 4; a threes; the rest pendant ones.
    m = a - 4
    extra = list(range(5, 5 + m))
    leaves = list(range(5 + m, n))
    edges = _bowtie_edges()
    if m == 0:
        edges += [(1, 3), (2, 4)]
        edges += _matching_edges(leaves)
    elif m == 1:
        edges += [(1, extra[0]), (2, extra[0]), (3, extra[0]), (4, leaves[0])]
        edges += _matching_edges(leaves[1:])
    elif m == 2:
        edges += [(1, extra[0]), (2, extra[0]), (3, extra[0]), (4, extra[1])]
        edges += [(extra[1], leaves[0]), (extra[1], leaves[1])]
        edges += _matching_edges(leaves[2:])
    elif m == 3:
        edges += _path_edges(extra)
        edges += [(1, extra[0]), (2, extra[0]), (3, extra[2]), (4, extra[2])]
        edges += [(extra[1], leaves[0])]
        edges += _matching_edges(leaves[1:])
    else:
        edges += _path_edges(extra)
        edges += [(1, extra[0]), (2, extra[0]), (3, extra[-1]), (4, extra[-1])]
        interior = extra[1:-1]
        k = min(len(leaves), len(interior))
        q = len(interior) - k
        if q == 0:
            fed = interior
        elif q == 2:
            fed = interior[:-3] + [interior[-2]]
            edges.append((interior[-3], interior[-1]))
        else:
            fed = interior[:k]
            arc = interior[k:]
            half = q // 2
            edges.extend((arc[j], arc[j + half]) for j in range(half))
        edges += [(v, leaf) for v, leaf in zip(fed, leaves)]
        edges += _matching_edges(leaves[len(fed) :])
    return SimpleGraph(n, edges)


def _build_c3_tail(n: int) -> SimpleGraph:
    # Targets: 0 of degree n-2, 1 of degree n-3, a pendant at n-1, twos between.
    edges = _bowtie_edges()
    edges += [(0, j) for j in range(5, n - 1)]
    edges += [(1, j) for j in range(5, n - 1)]
    edges += [(1, n - 1)]
    return SimpleGraph(n, edges)


def _build_sq_42(n: int) -> SimpleGraph:
    # Targets: 0 and 1 of degree 4; everyone else 2.  Vertex 1 doubles as a
    # bowtie wing and as a stop on the long cycle.
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (1, 4)]
    edges += _cycle_edges([1] + list(range(5, n)))
    return SimpleGraph(n, edges)


def _build_s_42(n: int) -> SimpleGraph:
    edges = _bowtie_edges()
    if n > 5:
        edges += _cycle_edges(list(range(5, n)))
    return SimpleGraph(n, edges)


def _build_s_4221(n: int, a: int) -> SimpleGraph:
    # Targets: 0 of degree 4; a twos; the rest pendant ones.
    twos = list(range(5, 1 + a))
    leaves = list(range(1 + a, n))
    edges = _bowtie_edges()
    if twos:
        edges += _path_edges([leaves[0]] + twos + [leaves[1]])
        edges += _matching_edges(leaves[2:])
    else:
        edges += _matching_edges(leaves)
    return SimpleGraph(n, edges)


def _validate_params(pattern: FamilyPattern) -> None:
    f, n, a, b = pattern.id, pattern.n, pattern.a, pattern.b
    ok = True
    if f is FamilyId.F1_433:
        ok = n >= 7 and n % 2 == 1
    elif f is FamilyId.F2_43:
        ok = n >= 6 and n % 2 == 0
    elif f is FamilyId.F3_4:
        ok = n >= 5 and n % 2 == 1
    elif f is FamilyId.F4_432:
        ok = a is not None and a >= 2 and a % 2 == 0 and n - 2 - a >= 1
    elif f is FamilyId.F7_432:
        ok = a is not None and a >= 2 and a % 2 == 0 and n - 1 - a >= 1
    elif f is FamilyId.F11_4321:
        ok = (
            a is not None
            and b is not None
            and a >= 1
            and b >= 1
            and a + b >= 4
            and n - 1 - a - b >= 1
            and (a + (n - 1 - a - b)) % 2 == 0
        )
    elif f is FamilyId.F18_431:
        ok = a is not None and a >= 4 and n - 1 - a >= 1 and (a + (n - 1 - a)) % 2 == 0
    elif f is FamilyId.C3_TAIL:
        ok = n >= 6
    elif f is FamilyId.SQ_42:
        ok = n >= 7
    elif f is FamilyId.S_42:
        ok = n == 5 or n >= 8
    elif f is FamilyId.S_4221:
        ok = a is not None and a >= 4 and n - 1 - a >= 2 and (n - 1 - a) % 2 == 0
    if not ok:
        raise BadParams(f"invalid parameters {pattern!r}")


_BUILDERS = {
    FamilyId.F1_433: lambda p: _build_f1_433(p.n),
    FamilyId.F2_43: lambda p: _build_f2_43(p.n),
    FamilyId.F3_4: lambda p: _build_f3_4(p.n),
    FamilyId.F4_432: lambda p: _build_f4_432(p.n, p.a),
    FamilyId.F7_432: lambda p: _build_f7_432(p.n, p.a),
    FamilyId.F11_4321: lambda p: _build_f11_4321(p.n, p.a, p.b),
    FamilyId.F18_431: lambda p: _build_f18_431(p.n, p.a),
    FamilyId.C3_TAIL: lambda p: _build_c3_tail(p.n),
    FamilyId.SQ_42: lambda p: _build_sq_42(p.n),
    FamilyId.S_42: lambda p: _build_s_42(p.n),
    FamilyId.S_4221: lambda p: _build_s_4221(p.n, p.a),
}


def construct_family(pattern: FamilyPattern) -> SimpleGraph:
    """Build the canonical bowtie-containing realization of a family member.

    Raises BadParams when the parameters fall outside the family's range
    (which includes denoting a sequence the decision procedure rejects),
    and InternalExhaustion if a built graph fails post-validation.
    """
    _validate_params(pattern)
    expected = family_sequence(pattern)
    if not check_potentially(expected).potentially:
        raise BadParams(f"{pattern!r} denotes the rejected sequence {expected}")
    graph = _BUILDERS[pattern.id](pattern)
    if not _realizes_with_bowtie(graph, expected):
        raise InternalExhaustion(
            f"family construction for {pattern!r} failed validation"
        )
    return graph


def _realizes_with_bowtie(graph: SimpleGraph, expected: DegreeSequence) -> bool:
    """Post-validation: right degrees (no isolated vertices) and a bowtie."""
    try:
        actual = degree_sequence(graph)
    except ZeroDegreeVertex:
        return False
    return actual == expected and contains_bowtie(graph) is not None


def reattach(graph: SimpleGraph, trace: LayoffTrace) -> SimpleGraph:
    """Invert one lay-off step on a concrete realization.

    The graph must realize ``trace.child`` (TraceMismatch otherwise).  One
    vertex is added, joined to the lowest-index vertex of each decremented
    degree; required zeros first restore vertices the lay-off dropped.  Any
    bowtie in the input survives because edges are only added.
    """
    child_degrees = tuple(sorted(graph.degrees(), reverse=True))
    if child_degrees != trace.child.terms:
        raise TraceMismatch(
            f"graph degrees {child_degrees} do not realize child {trace.child}"
        )
    return attach_by_degrees(graph, trace.decremented_degrees)


def _oracle_witness(seq: DegreeSequence) -> SimpleGraph:
    for graph in enumerate_realizations(seq):
        if contains_bowtie(graph) is not None:
            return graph
    raise InternalExhaustion(
        f"accepted sequence {seq} has no bowtie realization within the oracle"
    )


def realize_with_bowtie(seq: DegreeSequence) -> SimpleGraph:
    """Construct a realization of an accepted sequence containing a bowtie.

    Raises NotPotentially for rejected sequences.  For accepted input the
    construction always succeeds; InternalExhaustion would mean the
    decision procedure itself is wrong.
    """
    report = check_potentially(seq)
    if not report.potentially:
        detail = report.failure.value if report.failure is not None else "rejected"
        raise NotPotentially(f"{seq} is not potentially bowtie-graphic ({detail})")

    pending: list[LayoffTrace] = []
    current = seq
    graph: SimpleGraph | None = None
    while len(current) > ENUMERATION_LIMIT:
        trace = lay_off(current)
        if check_potentially(trace.child).potentially:
            pending.append(trace)
            current = trace.child
            continue
        pattern = match_family(current)
        if pattern is None:
            raise InternalExhaustion(
                f"accepted sequence {current} has a rejected lay-off child "
                "and matches no family"
            )
        graph = construct_family(pattern)
        break
    if graph is None:
        graph = _oracle_witness(current)
    for trace in reversed(pending):
        graph = reattach(graph, trace)
    if not _realizes_with_bowtie(graph, seq):
        raise InternalExhaustion(f"realization of {seq} failed final validation")
    return graph
