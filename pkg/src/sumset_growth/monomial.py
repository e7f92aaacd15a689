"""Monomials under the graded lexicographic order, degree slices and lexsegments.

Variables are ``X_1 > X_2 > ... > X_n``. Indices are 1-based wherever they
leave this module (text format, ``min_index``/``max_index``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import islice
from math import comb
from typing import Iterable, Iterator

from .macaulay import macaulay_upper, num_monomials


@total_ordering
@dataclass(frozen=True, eq=False)
class Monomial:
    """Dense exponent vector; ``exponents[j - 1]`` is the power of ``X_j``."""

    exponents: tuple[int, ...]
    degree: int = field(init=False, repr=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, j: int) -> Monomial:
        """The variable ``X_j`` (1-based)."""
        if not 1 <= j <= n:
            raise ValueError(f"variable index {j} out of range 1..{n}")
        e = [0] * n
        e[j - 1] = 1
        return cls(tuple(e))

    @classmethod
    def parse(cls, text: str, n: int) -> Monomial:
        """Inverse of ``str``: ``"x1^2*x3"`` -> exponents ``(2, 0, 1, ...)``."""
        text = text.strip()
        e = [0] * n
        if text == "1":
            return cls(tuple(e))
        for factor in text.split("*"):
            m = _FACTOR.fullmatch(factor.strip())
            if m is None:
                raise ValueError(f"malformed monomial factor {factor!r} in {text!r}")
            j = int(m.group(1))
            if not 1 <= j <= n:
                raise ValueError(f"variable x{j} out of range for n={n}")
            e[j - 1] += int(m.group(2) or 1)
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def _key(self):
        return (self.degree, self.exponents)

    def _check(self, other: Monomial):
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"ambient mismatch: n={self.n} vs n={other.n}")
        return None

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._key() < other._key()

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        return quotient(self, other)

    def is_one(self) -> bool:
        return self.degree == 0

    def __str__(self):
        if self.degree == 0:
            return "1"
        out = []
        for j, e in enumerate(self.exponents, 1):
            if e == 1:
                out.append(f"x{j}")
            elif e > 1:
                out.append(f"x{j}^{e}")
        return "*".join(out)

    def __repr__(self):
        return f"Monomial({self})"


_FACTOR = re.compile(r"[xX](\d+)(?:\^(\d+))?")


def grlex_compare(u: Monomial, v: Monomial) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: n={u.n} vs n={v.n}")
    if u.degree != v.degree:
        return 1 if u.degree > v.degree else -1
    for a, b in zip(u.exponents, v.exponents):
        if a != b:
            return 1 if a > b else -1
    return 0


def min_index(u: Monomial) -> int:
    """Smallest 1-based j with X_j dividing u."""
    for j, e in enumerate(u.exponents, 1):
        if e:
            return j
    raise ValueError("min_index is undefined for the constant monomial")


def max_index(u: Monomial) -> int:
    """Largest 1-based j with X_j dividing u."""
    for j in range(u.n, 0, -1):
        if u.exponents[j - 1]:
            return j
    raise ValueError("max_index is undefined for the constant monomial")


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff u | v."""
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: n={u.n} vs n={v.n}")
    return all(a <= b for a, b in zip(u.exponents, v.exponents))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return u * v


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """``v / u``; requires ``u | v``."""
    if not divides(u, v):
        raise ValueError(f"{u} does not divide {v}")
    return Monomial(tuple(b - a for a, b in zip(u.exponents, v.exponents)))


def gcd_mono(u: Monomial, v: Monomial) -> Monomial:
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: n={u.n} vs n={v.n}")
    return Monomial(tuple(map(min, u.exponents, v.exponents)))


def lcm_mono(u: Monomial, v: Monomial) -> Monomial:
    if u.n != v.n:
        raise ValueError(f"ambient mismatch: n={u.n} vs n={v.n}")
    return Monomial(tuple(map(max, u.exponents, v.exponents)))


def variables(n: int) -> list[Monomial]:
    return [Monomial.var(n, j) for j in range(1, n + 1)]


def iter_degree(n: int, d: int) -> Iterator[Monomial]:
    """Yield the degree-d monomials in n variables, largest first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    e = [0] * n
    e[0] = d
    while True:
        yield Monomial(tuple(e))
        # next smaller: move one unit from the last nonzero slot before the
        # final position one step right, and sweep the tail into that slot
        i = n - 2
        while i >= 0 and e[i] == 0:
            i -= 1
        if i < 0:
            return
        tail = sum(e[i + 1 :])
        e[i] -= 1
        e[i + 1 :] = [tail + 1] + [0] * (n - i - 2)


def enumerate_degree(n: int, d: int) -> list[Monomial]:
    """``M_d`` as a list in strictly descending graded-lex order."""
    return list(iter_degree(n, d))


def rank_in_degree(u: Monomial) -> int:
    """Number of monomials of the same degree that are strictly greater than u.

    ``u`` belongs to the top-c lexsegment of its degree iff this is < c.
    """
    n = u.n
    rank = 0
    rem = u.degree
    for j in range(n - 1):
        # monomials agreeing with u before slot j and larger at slot j
        rest_vars = n - j - 1
        for t in range(u.exponents[j] + 1, rem + 1):
            rank += comb(rem - t + rest_vars - 1, rest_vars - 1)
        rem -= u.exponents[j]
    return rank


@dataclass(frozen=True)
class Lexsegment:
    """The ``size`` largest monomials of degree ``degree`` in ``n`` variables."""

    n: int
    degree: int
    size: int

    def __post_init__(self):
        total = num_monomials(self.n, self.degree)
        if not 0 <= self.size <= total:
            raise ValueError(
                f"lexsegment size {self.size} out of range 0..{total} "
                f"for n={self.n}, degree={self.degree}"
            )

    @property
    def complement_size(self) -> int:
        return num_monomials(self.n, self.degree) - self.size

    def members(self) -> list[Monomial]:
        return list(islice(iter_degree(self.n, self.degree), self.size))

    def last(self) -> Monomial | None:
        if self.size == 0:
            return None
        return self.members()[-1]

    def __contains__(self, u: Monomial) -> bool:
        return u.n == self.n and u.degree == self.degree and rank_in_degree(u) < self.size


def lexsegment_take(n: int, i: int, c: int) -> Lexsegment:
    return Lexsegment(n, i, c)


def shadow_set(monos: Iterable[Monomial], n: int) -> set[Monomial]:
    """``M_1 * C`` computed by direct multiplication."""
    xs = variables(n)
    return {u * x for u in monos for x in xs}


def is_lexsegment(monos: Iterable[Monomial], n: int, d: int) -> bool:
    """Whether a set of degree-d monomials is an initial run of ``M_d``."""
    s = set(monos)
    if any(u.degree != d for u in s):
        return False
    return s == set(islice(iter_degree(n, d), len(s)))


def shadow_size(n: int, i: int, c: int) -> int:
    """``|M_1 * C|`` for the top-c lexsegment ``C`` of ``M_i``, by the Macaulay operator."""
    complement = num_monomials(n, i) - c
    if i == 0:
        # M_1 * {1} = M_1, M_1 * {} = {}
        return n if c else 0
    return num_monomials(n, i + 1) - macaulay_upper(complement, i)


def shadow(seg: Lexsegment) -> Lexsegment:
    """The shadow ``M_1 * C`` of a lexsegment, materialized and checked."""
    up = shadow_set(seg.members(), seg.n)
    if not is_lexsegment(up, seg.n, seg.degree + 1):
        raise AssertionError(f"shadow of {seg} is not a lexsegment")
    expected = shadow_size(seg.n, seg.degree, seg.size)
    if len(up) != expected:
        raise AssertionError(f"shadow size {len(up)} != {expected} for {seg}")
    return Lexsegment(seg.n, seg.degree + 1, len(up))


def lex_compress(monos: Iterable[Monomial]) -> Lexsegment:
    """The lexsegment with as many elements as the given same-degree set."""
    s = set(monos)
    if not s:
        raise ValueError("lex_compress needs a nonempty set to fix the degree")
    degrees = {u.degree for u in s}
    ns = {u.n for u in s}
    if len(degrees) != 1 or len(ns) != 1:
        raise ValueError("lex_compress expects monomials of a single degree and ambient")
    return Lexsegment(ns.pop(), degrees.pop(), len(s))
