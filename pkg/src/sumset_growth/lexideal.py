"""Lexideals realizing an admissible growth sequence as a Hilbert function.

Given ``d_0 = 1, d_1 = n, d_2, ..., d_D`` with ``d_{i+1} <= d_i^<i>``, the
degree-i slice of the ideal is the top ``|M_i| - d_i`` lexsegment of the
degree-i monomials in ``n`` variables. Only segment sizes and minimal
generators are stored; slices are enumerated on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Sequence

from .macaulay import BoundSequence, macaulay_upper, num_monomials, validate_sequence
from .monomial import (
    Lexsegment,
    Monomial,
    divides,
    iter_degree,
    max_index,
    min_index,
    quotient,
    rank_in_degree,
    shadow,
)


class InvalidSequenceError(ValueError):
    """Raised when a sequence fails the Macaulay admissibility conditions."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report).splitlines()[0])


@dataclass(frozen=True)
class LexIdeal:
    n: int
    D: int
    sequence: BoundSequence
    # segment_sizes[i] = |L ∩ M_i| for i = 0..D
    segment_sizes: tuple[int, ...]
    # generators[i] = minimal generators of degree i, descending
    generators: tuple[tuple[Monomial, ...], ...]

    def all_generators(self) -> list[Monomial]:
        return [g for gs in self.generators for g in gs]

    def segment(self, i: int) -> Lexsegment:
        return Lexsegment(self.n, i, self.segment_sizes[i])

    def slice(self, i: int) -> list[Monomial]:
        """``L ∩ M_i`` in descending order."""
        return self.segment(i).members()

    def generator_counts(self) -> tuple[int, ...]:
        """``|G_i|`` for i = 1..D."""
        return tuple(len(self.generators[i]) for i in range(1, self.D + 1))

    def __contains__(self, u: Monomial) -> bool:
        return membership(u, self)


def build_lexideal(seq: BoundSequence | Sequence[int]) -> LexIdeal:
    if not isinstance(seq, BoundSequence):
        seq = BoundSequence(tuple(seq))
    report = validate_sequence(seq)
    if not report.valid:
        raise InvalidSequenceError(report)
    if seq.D < 1:
        raise ValueError("need at least d_0 and d_1")
    n = seq[1]
    if n == 0:
        raise ValueError("d_1 = 0 leaves no variables to build on")

    sizes = [num_monomials(n, i) - seq[i] for i in range(seq.D + 1)]
    gens: list[tuple[Monomial, ...]] = [(), ()]
    for i in range(2, seq.D + 1):
        # G_i = L_i minus the shadow of L_{i-1}; both are lexsegments
        below = shadow(Lexsegment(n, i - 1, sizes[i - 1])).size
        if sizes[i] < below:
            raise AssertionError(f"degree {i}: segment {sizes[i]} misses shadow {below}")
        gens.append(tuple(islice(iter_degree(n, i), below, sizes[i])))
    return LexIdeal(n, seq.D, seq, tuple(sizes), tuple(gens[: seq.D + 1]))


def minimal_generators(L: LexIdeal) -> list[Monomial]:
    return L.all_generators()


def _check_degree(u: Monomial, L: LexIdeal):
    if u.n != L.n:
        raise ValueError(f"ambient mismatch: n={u.n} vs n={L.n}")
    if u.degree > L.D:
        raise ValueError(f"degree {u.degree} exceeds the certified cap D={L.D}")


def membership(u: Monomial, L: LexIdeal) -> bool:
    """Divisibility by some minimal generator."""
    _check_degree(u, L)
    return any(divides(g, u) for gs in L.generators[: u.degree + 1] for g in gs)


def membership_by_position(u: Monomial, L: LexIdeal) -> bool:
    """Same answer as ``membership``, read off the grlex rank within the slice."""
    _check_degree(u, L)
    return rank_in_degree(u) < L.segment_sizes[u.degree]


def hilbert_function(L: LexIdeal, h: int) -> int:
    if not 0 <= h <= L.D:
        raise ValueError(f"h={h} outside 0..{L.D}")
    return num_monomials(L.n, h) - L.segment_sizes[h]


def ek_factorize(u: Monomial, L: LexIdeal) -> tuple[Monomial, Monomial]:
    """The factorization ``u = v * w`` with ``v`` a minimal generator and
    ``max_index(v) <= min_index(w)`` (``min_index(1)`` counts as infinite).

    Every candidate is tried; finding zero or several raises, since lexideals
    are stable and the factorization must be unique.
    """
    if not membership(u, L):
        raise ValueError(f"{u} is not in the ideal")
    found = []
    for v in L.all_generators():
        if not divides(v, u):
            continue
        w = quotient(u, v)
        if w.is_one() or max_index(v) <= min_index(w):
            found.append((v, w))
    if len(found) != 1:
        raise AssertionError(f"{u}: expected one canonical factorization, found {found}")
    return found[0]


def check_invariants(L: LexIdeal) -> list[str]:
    """Structural checks on a built lexideal; returns a list of problems."""
    problems = []
    d = L.sequence
    if L.segment_sizes[1] != 0:
        problems.append(f"c_1 = {L.segment_sizes[1]} != 0")
    for i in range(1, L.D):
        want = macaulay_upper(d[i], i) - d[i + 1]
        got = len(L.generators[i + 1])
        if want != got:
            problems.append(f"|G_{i + 1}| = {got}, expected {want}")
    gens = L.all_generators()
    for a in gens:
        for b in gens:
            if a != b and divides(a, b):
                problems.append(f"{a} divides {b}")
    if all(v >= 1 for v in d):
        for g in gens:
            if min_index(g) > L.n - 1:
                problems.append(f"generator {g} has min index {min_index(g)} = n")
    return problems
