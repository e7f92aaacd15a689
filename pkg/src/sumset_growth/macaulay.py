"""Binomial representations, the Macaulay operator and growth-sequence checks.

Everything here is exact integer arithmetic. The Macaulay operator
``a -> a^<h>`` bounds ``|(h+1)A|`` in terms of ``|hA|`` for any finite
subset ``A`` of an abelian semigroup; Plünnecke's inequality is provided
alongside for comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Sequence


def binom(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 whenever k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom expects nonnegative arguments")
    return comb(n, k)


def num_monomials(n: int, d: int) -> int:
    """Number of monomials of degree d in n variables."""
    if d == 0:
        return 1
    if n == 0:
        return 0
    return comb(n - 1 + d, d)


@dataclass(frozen=True)
class BinomialRep:
    """An h-binomial representation ``sum C(a_j, j)`` for j = h..1.

    ``parts`` lists ``(a_j, j)`` pairs with j running from h down to 1.
    """

    h: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.parts) != self.h:
            raise ValueError(f"expected {self.h} parts, got {len(self.parts)}")
        idx = [j for _, j in self.parts]
        if idx != list(range(self.h, 0, -1)):
            raise ValueError(f"part indices must run {self.h}..1, got {idx}")
        tops = [a for a, _ in self.parts]
        if any(a < 0 for a in tops):
            raise ValueError("binomial tops must be nonnegative")
        if any(x <= y for x, y in zip(tops, tops[1:])):
            raise ValueError(f"binomial tops must be strictly decreasing: {tops}")

    @property
    def value(self) -> int:
        return rep_value(self)

    def shifted(self) -> tuple[tuple[int, int], ...]:
        """Parts ``(a_j + 1, j + 1)``; they sum to ``value^<h>``."""
        return tuple((a + 1, j + 1) for a, j in self.parts)

    def __str__(self):
        return " + ".join(f"C({a},{j})" for a, j in self.parts)


def _largest_top(target: int, j: int) -> int:
    """Largest x with C(x, j) <= target."""
    # C(x, j) is 0 for x < j and strictly increasing from x = j - 1 on
    lo = j - 1
    if comb(j, j) > target:
        return lo
    hi = j
    while comb(hi, j) <= target:
        lo = hi
        hi *= 2
    # invariant: C(lo, j) <= target < C(hi, j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, j) <= target:
            lo = mid
        else:
            hi = mid
    return lo


def h_binomial_rep(a: int, h: int) -> BinomialRep:
    """Greedy h-binomial representation of ``a >= 1``.

    >>> h_binomial_rep(1000, 6).parts
    ((12, 6), (8, 5), (6, 4), (4, 3), (2, 2), (0, 1))
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if a < 1:
        raise ValueError("the h-binomial representation is defined for a >= 1")
    parts = []
    rest = a
    for j in range(h, 0, -1):
        top = _largest_top(rest, j)
        parts.append((top, j))
        rest -= comb(top, j)
    assert rest == 0
    return BinomialRep(h, tuple(parts))


def rep_value(r: BinomialRep) -> int:
    return sum(comb(a, j) for a, j in r.parts)


def macaulay_upper(a: int, h: int) -> int:
    """The Macaulay operator ``a^<h>`` (with ``0^<h> = 0``)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if a < 0:
        raise ValueError("a must be nonnegative")
    if a == 0:
        return 0
    return sum(comb(top + 1, j + 1) for top, j in h_binomial_rep(a, h).parts)


def macaulay_lower_inverse(target: int, h: int) -> int:
    """Least ``a >= 1`` with ``a^<h> >= target``.

    If ``|(h+1)A| = target`` then ``|hA|`` is at least this value.
    """
    if target < 1:
        raise ValueError("target must be >= 1")
    # a^<h> >= a, so the answer lies in [1, target]
    lo, hi = 1, target
    while lo < hi:
        mid = (lo + hi) // 2
        if macaulay_upper(mid, h) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def iroot(x: int, k: int) -> int:
    """Largest m with m**k <= x."""
    if x < 0 or k < 1:
        raise ValueError("iroot expects x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    hi = 1 << (x.bit_length() // k + 1)
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid
    return lo


def plunnecke_upper(d_i: int, i: int, h: int) -> int:
    """Plünnecke upper bound ``floor(d_i^(h/i))`` on ``|hA|`` given ``|iA| = d_i``."""
    if not 1 <= i <= h:
        raise ValueError(f"need 1 <= i <= h, got i={i}, h={h}")
    if d_i < 1:
        raise ValueError("d_i must be positive")
    return iroot(d_i**h, i)


def plunnecke_lower(d_h: int, h: int, i: int) -> int:
    """Least ``a`` with ``a^(h/i) >= d_h``: Plünnecke's lower bound on ``|iA|``
    given ``|hA| = d_h`` and ``i <= h``."""
    if not 1 <= i <= h:
        raise ValueError(f"need 1 <= i <= h, got i={i}, h={h}")
    if d_h < 1:
        raise ValueError("d_h must be positive")
    need = d_h**i
    m = iroot(need, h)
    return m if m**h >= need else m + 1


@dataclass(frozen=True)
class BoundSequence:
    """A finite prefix ``d_0, ..., d_D`` of a growth sequence."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("sequence entries must be nonnegative")

    @property
    def D(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))


def parse_sequence(text: str) -> BoundSequence:
    """Parse ``"1,5,13"`` (whitespace tolerated) into a BoundSequence."""
    items = [t.strip() for t in text.replace(" ", ",").split(",") if t.strip()]
    if not items:
        raise ValueError("empty sequence")
    try:
        return BoundSequence(tuple(int(t) for t in items))
    except ValueError as exc:
        raise ValueError(f"malformed sequence {text!r}: {exc}") from None


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violation_index: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    all_positive: bool = False
    zero_tail: bool = True
    monotone: bool = True

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violation_index": self.violation_index,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "all_positive": self.all_positive,
            "monotone": self.monotone,
        }

    def __str__(self):
        if self.valid:
            lines = ["valid"]
        elif self.violation_index == 0:
            lines = [f"invalid: d_0 = {self.lhs}, expected {self.rhs}"]
        else:
            i = self.violation_index
            lines = [
                f"invalid at index {i}: d_{i} = {self.lhs} > d_{i - 1}^<{i - 1}> = {self.rhs}"
            ]
        lines.append(f"all positive: {'yes' if self.all_positive else 'no'}")
        if not self.monotone:
            lines.append("not monotone: cannot arise from a subset of a group")
        return "\n".join(lines)


def validate_sequence(seq: BoundSequence | Sequence[int]) -> ValidationReport:
    """Check ``d_0 = 1`` and ``d_{i+1} <= d_i^<i>`` for ``1 <= i < D``."""
    if not isinstance(seq, BoundSequence):
        seq = BoundSequence(tuple(seq))
    d = seq.values
    if not d:
        raise ValueError("empty sequence")
    all_positive = all(v >= 1 for v in d)
    first_zero = next((i for i, v in enumerate(d) if v == 0), None)
    zero_tail = first_zero is None or all(v == 0 for v in d[first_zero:])
    monotone = all(x <= y for x, y in zip(d, d[1:]))
    extra = dict(all_positive=all_positive, zero_tail=zero_tail, monotone=monotone)
    if d[0] != 1:
        return ValidationReport(False, 0, d[0], 1, **extra)
    for i in range(1, len(d) - 1):
        bound = macaulay_upper(d[i], i)
        if d[i + 1] > bound:
            return ValidationReport(False, i + 1, d[i + 1], bound, **extra)
    return ValidationReport(True, **extra)


def random_admissible_sequence(
    rng: random.Random, D: int, max_n: int = 5, positive: bool = True
) -> BoundSequence:
    """Sample ``d_1`` in ``[1, max_n]`` then ``d_{i+1}`` uniformly in
    ``[1, d_i^<i>]`` (``[0, ...]`` when ``positive`` is false)."""
    low = 1 if positive else 0
    d = [1, rng.randint(1, max_n)]
    for i in range(1, D):
        bound = macaulay_upper(d[i], i)
        d.append(rng.randint(min(low, bound), bound))
    return BoundSequence(tuple(d[: D + 1]))

