"""Exhaustive empirical verification of the decision procedure.

For a fixed length n this module enumerates every graphic sequence with
positive terms, runs the six-condition decision procedure on each, and
compares against the brute-force oracle that enumerates realizations.
It also recomputes the extremal degree-sum threshold empirically: the
smallest even bound such that every graphic sequence at or above it is
accepted.  Feasible for n up to the enumeration limit (the oracle visits
every labeled realization); the acceptance suite runs n = 5..8.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .characterize import SigmaReport, check_potentially
from .graphs import ENUMERATION_LIMIT, oracle_has_bowtie_realization
from .sequences import DegreeSequence, is_graphic, sigma


class CharacterizationMismatch(RuntimeError):
    """The decision procedure disagreed with the exhaustive oracle.

    Raised only from the threshold computation, which cannot return a
    trustworthy bound once a disagreement exists.  The full sweep in
    ``verify_characterization`` reports mismatches in its summary instead
    of raising, so callers can inspect all of them.
    """


@dataclass(frozen=True)
class Mismatch:
    """One sequence on which the decision procedure and oracle disagree."""

    sequence: DegreeSequence
    checker_verdict: bool
    oracle_verdict: bool


@dataclass(frozen=True)
class VerificationSummary:
    """Outcome of comparing the decision procedure against the oracle.

    ``potentially_count`` counts the sequences both routes accepted plus
    any the decision procedure alone accepted (all of which then appear in
    ``mismatches``; an empty mismatch list means full agreement).
    """

    n: int
    sequences_tested: int
    mismatches: tuple[Mismatch, ...]
    potentially_count: int

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def rejected_count(self) -> int:
        return self.sequences_tested - self.potentially_count


def enumerate_graphic_sequences(n: int) -> Iterator[DegreeSequence]:
    """Yield every graphic sequence of length n with positive terms.

    Emission order is decreasing lexicographic on the sorted terms, which
    makes downstream reports and tie-breaks reproducible.
    """
    if n < 1:
        return

    prefix: list[int] = []

    def extend(remaining: int, cap: int) -> Iterator[DegreeSequence]:
        if remaining == 0:
            candidate = DegreeSequence(prefix)
            if is_graphic(candidate):
                yield candidate
            return
        for degree in range(cap, 0, -1):
            prefix.append(degree)
            yield from extend(remaining - 1, degree)
            prefix.pop()

    yield from extend(n, n - 1)


def _check_range(n: int) -> None:
    if not 5 <= n <= ENUMERATION_LIMIT:
        raise ValueError(
            f"exhaustive verification needs 5 <= n <= {ENUMERATION_LIMIT}, got {n}"
        )


def verify_characterization(n: int) -> VerificationSummary:
    """Compare the decision procedure against the oracle on every graphic
    sequence of length n, returning all disagreements."""
    _check_range(n)
    tested = 0
    accepted = 0
    mismatches: list[Mismatch] = []
    for seq in enumerate_graphic_sequences(n):
        tested += 1
        checker = check_potentially(seq).potentially
        oracle = oracle_has_bowtie_realization(seq)
        if checker:
            accepted += 1
        if checker != oracle:
            mismatches.append(Mismatch(seq, checker, oracle))
    return VerificationSummary(n, tested, tuple(mismatches), accepted)


def sigma_empirical(n: int) -> SigmaReport:
    """Recompute the extremal threshold by exhaustive scan.

    The result's ``bound`` is the smallest even s such that every graphic
    length-n sequence with degree sum >= s is accepted; ``witness`` is the
    first rejected sequence of maximal sum (so its sum is bound - 2).

    The decision procedure locates the largest rejected degree sum; the
    boundary (that sum and the next even value) is then re-decided by the
    exhaustive oracle so the reported threshold does not rest on the
    decision procedure alone.  Raises CharacterizationMismatch if the
    boundary check disagrees.
    """
    _check_range(n)
    worst_sum = -1
    worst: DegreeSequence | None = None
    for seq in enumerate_graphic_sequences(n):
        if not check_potentially(seq).potentially and sigma(seq) > worst_sum:
            worst_sum = sigma(seq)
            worst = seq
    if worst is None:  # cannot happen for n >= 5, guarded for safety
        raise CharacterizationMismatch(f"no rejected sequence of length {n} found")
    bound = worst_sum + 2
    for seq in enumerate_graphic_sequences(n):
        if sigma(seq) not in (worst_sum, bound):
            continue
        checker = check_potentially(seq).potentially
        oracle = oracle_has_bowtie_realization(seq)
        if checker != oracle:
            raise CharacterizationMismatch(
                f"decision procedure and oracle disagree on {seq}: "
                f"checker={checker}, oracle={oracle}"
            )
    return SigmaReport(n=n, bound=bound, witness=worst)
