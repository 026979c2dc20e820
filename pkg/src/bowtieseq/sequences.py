"""Degree sequences: parsing, run-length formatting, lay-off, graphicality.

A degree sequence is a nonincreasing tuple of positive integers.  Values are
immutable; every operation returns a new value.  The empty sequence is
admitted as a degenerate value: it is the degree sequence of the graph with
no vertices, counts as graphic, and is the terminal state of repeated
lay-offs (laying off (1, 1) leaves nothing).  The text grammar never
produces it.

The lay-off operation removes the smallest term d and decrements the d
largest remaining terms.  It preserves graphicality in both directions,
which makes repeated lay-off a complete graphicality test and, run in
reverse, a constructive realization procedure (see the graphs module).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Sequence text does not follow the run-length grammar."""


class LayoffImpossible(ValueError):
    """The smallest term exceeds the number of other terms, so the
    decrement set does not exist (the sequence cannot be graphic)."""


class DegreeSequence:
    """Nonincreasing sequence of positive integer degrees.

    Construction sorts the terms, so callers may pass them in any order.
    Terms larger than ``len(seq) - 1`` are representable (such a sequence
    simply is not graphic); zero or negative terms are rejected.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[int] = ()) -> None:
        items = tuple(sorted(terms, reverse=True))
        for t in items:
            if not isinstance(t, int) or isinstance(t, bool):
                raise ValueError(f"degree terms must be integers, got {t!r}")
            if t < 1:
                raise ValueError(f"degree terms must be positive, got {t}")
        self._terms = items

    @property
    def terms(self) -> tuple[int, ...]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __getitem__(self, index: int) -> int:
        return self._terms[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeSequence):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"DegreeSequence({format_sequence(self)!r})"

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class LayoffTrace:
    """Record of one lay-off step, sufficient to invert it.

    ``decremented_positions`` indexes into the parent sequence with its last
    term removed; the lay-off always decrements the first ``removed_degree``
    positions of that prefix.  The parent itself is kept so the decremented
    degree values can be recovered when reattaching a vertex.
    """

    parent: DegreeSequence
    removed_degree: int
    decremented_positions: tuple[int, ...]
    child: DegreeSequence

    @property
    def decremented_degrees(self) -> tuple[int, ...]:
        """Degrees the reattached vertex's neighbours must have (may be 0)."""
        return tuple(self.parent[i] - 1 for i in self.decremented_positions)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse run-length sequence text such as ``"4^2,2^3"`` or ``"4,3,2"``.

    Each comma-separated item is ``d`` or ``d^count`` with d >= 1 and
    count >= 1.  Whitespace around items is tolerated.  Raises ParseError
    for anything else, including empty input and zero or negative degrees.
    """
    if not text or not text.strip():
        raise ParseError("empty sequence text")
    terms: list[int] = []
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            raise ParseError(f"empty item in sequence text {text!r}")
        degree_part, _, count_part = item.partition("^")
        try:
            degree = int(degree_part)
        except ValueError:
            raise ParseError(f"bad degree {degree_part!r} in {text!r}") from None
        if degree < 1:
            raise ParseError(f"degrees must be positive, got {degree} in {text!r}")
        if count_part or "^" in item:
            try:
                count = int(count_part)
            except ValueError:
                raise ParseError(f"bad run count {count_part!r} in {text!r}") from None
            if count < 1:
                raise ParseError(f"run counts must be positive, got {count} in {text!r}")
        else:
            count = 1
        terms.extend([degree] * count)
    return DegreeSequence(terms)


def format_sequence(seq: DegreeSequence) -> str:
    """Render canonical run-length text: maximal runs, no whitespace.

    (4, 3, 3, 3, 3) becomes ``"4,3^4"``; runs of length one omit the caret.
    """
    parts: list[str] = []
    terms = seq.terms
    i = 0
    while i < len(terms):
        j = i
        while j < len(terms) and terms[j] == terms[i]:
            j += 1
        run = j - i
        parts.append(str(terms[i]) if run == 1 else f"{terms[i]}^{run}")
        i = j
    return ",".join(parts)


def sigma(seq: DegreeSequence) -> int:
    """Sum of the terms (twice the edge count of any realization)."""
    return sum(seq.terms)


def lay_off(seq: DegreeSequence) -> LayoffTrace:
    """Remove the smallest term d and decrement the d largest remaining terms.

    The child is re-sorted and zeros are dropped.  Raises LayoffImpossible
    when d exceeds the number of remaining terms (in particular for empty
    and single-term sequences); that situation certifies the sequence is
    not graphic.
    """
    n = len(seq)
    if n == 0:
        raise LayoffImpossible("empty sequence has no term to lay off")
    removed = seq[n - 1]
    if removed > n - 1:
        raise LayoffImpossible(
            f"smallest term {removed} exceeds the {n - 1} remaining positions"
        )
    rest = list(seq.terms[:-1])
    for i in range(removed):
        rest[i] -= 1
    child = DegreeSequence(t for t in rest if t > 0)
    return LayoffTrace(
        parent=seq,
        removed_degree=removed,
        decremented_positions=tuple(range(removed)),
        child=child,
    )


def is_graphic(seq: DegreeSequence) -> bool:
    """Whether some simple graph has exactly these degrees.

    Total function: False when the sum is odd, when any term reaches the
    length, or when repeated lay-off gets stuck; True otherwise (and for
    the empty sequence).  The repeated lay-off is the normative test.
    """
    terms = list(seq.terms)
    if sum(terms) % 2 != 0:
        return False
    if terms and terms[0] >= len(terms):
        return False
    while terms:
        terms.sort(reverse=True)
        d = terms.pop()
        if d > len(terms):
            return False
        for i in range(d):
            terms[i] -= 1
        terms = [t for t in terms if t > 0]
    return True
