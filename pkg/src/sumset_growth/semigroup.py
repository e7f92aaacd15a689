"""Direct simulation of iterated product sets and sumsets.

Three semigroups are simulated frontier-style (``A^{h+1}`` from ``A^h`` times
the generators): monomials modulo a lexideal (with an absorbing zero),
monomials modulo a certified binomial basis, and plain sumsets of integer
points, which serve as an independent oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .groebner import BinomialBasis, NotGroebnerError, leading_ideal_agrees, normal_form
from .lexideal import LexIdeal, hilbert_function, membership
from .macaulay import macaulay_upper, plunnecke_upper
from .monomial import Monomial, enumerate_degree, lex_compress, variables

ZERO = "0"
"""The absorbing element of a monomial quotient."""


@dataclass(frozen=True)
class PowerSeries:
    """``(|A^0|, |A^1|, ..., |A^D|)``."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes or self.sizes[0] != 1:
            raise ValueError(f"|A^0| must be 1, got {self.sizes[:1]}")
        if any(s < 1 for s in self.sizes):
            raise ValueError(f"power sets are never empty: {self.sizes}")

    @property
    def D(self) -> int:
        return len(self.sizes) - 1

    def __getitem__(self, h):
        return self.sizes[h]

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)


def _element_key(x) -> str:
    return x if x is ZERO else str(x)


def monomial_quotient_powers(L: LexIdeal) -> PowerSeries:
    """Sizes of ``A^h`` for ``A = {x_1..x_n}`` in the monomials modulo ``L``.

    Computed both from the Hilbert function (plus one for the zero class
    whenever the degree slice of ``L`` is nonempty) and by multiplying out
    the power sets; the two must agree.
    """
    formula = [1] + [
        hilbert_function(L, h) + (1 if L.segment_sizes[h] > 0 else 0) for h in range(1, L.D + 1)
    ]

    xs = variables(L.n)
    frontier = {_element_key(Monomial.one(L.n)): Monomial.one(L.n)}
    simulated = [1]
    for _ in range(L.D):
        nxt = {}
        for m in frontier.values():
            for x in xs:
                if m is ZERO:
                    prod = ZERO
                else:
                    prod = m * x
                    if membership(prod, L):
                        prod = ZERO
                nxt[_element_key(prod)] = prod
        frontier = nxt
        simulated.append(len(frontier))

    if formula != simulated:
        raise AssertionError(f"formula {formula} disagrees with simulation {simulated}")
    return PowerSeries(tuple(simulated))


def binomial_power_sets(basis: BinomialBasis, n: int, D: int) -> list[set[Monomial]]:
    """Normal-form representatives of ``A^0 .. A^D``."""
    if not basis.certified:
        raise NotGroebnerError("simulation needs a certified basis")
    xs = variables(n)
    level = {Monomial.one(n)}
    out = [level]
    for _ in range(D):
        level = {normal_form(m * x, basis) for m in level for x in xs}
        out.append(level)
    return out


def binomial_quotient_powers(basis: BinomialBasis, L: LexIdeal) -> PowerSeries:
    """Sizes of ``A^h`` for ``A = {x_1..x_n}`` modulo the binomial ideal."""
    levels = binomial_power_sets(basis, L.n, L.D)
    sizes = tuple(len(s) for s in levels)
    if leading_ideal_agrees(basis, L):
        want = tuple(hilbert_function(L, h) for h in range(L.D + 1))
        if sizes != want:
            raise AssertionError(f"simulated {sizes} but Hilbert function is {want}")
    return PowerSeries(sizes)


def _normalize_points(points: Iterable) -> list[tuple[int, ...]]:
    pts = [(p,) if isinstance(p, int) else tuple(p) for p in points]
    if not pts:
        raise ValueError("A must be nonempty")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise ValueError("points must share a dimension")
    # translate into the nonnegative orthant; cardinalities are unchanged
    lows = [min(c) for c in zip(*pts)]
    return sorted({tuple(c - lo for c, lo in zip(p, lows)) for p in pts})


def sumset(X: Iterable[tuple[int, ...]], Y: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    Y = list(Y)
    return {tuple(a + b for a, b in zip(x, y)) for x in X for y in Y}


def naive_sumset_powers(A: Iterable, D: int) -> PowerSeries:
    """``(|0A|, |1A|, ..., |DA|)`` by repeated pairwise addition.

    Points are integers or equal-length integer tuples.
    """
    pts = _normalize_points(A)
    if D < 0:
        raise ValueError("D must be nonnegative")
    level = {tuple(0 for _ in pts[0])}
    sizes = [1]
    for _ in range(D):
        level = sumset(level, pts)
        sizes.append(len(level))
    return PowerSeries(tuple(sizes))


@dataclass
class AdditiveCheckReport:
    n: int
    h: int
    mode: str
    tested: int = 0
    violations: list = field(default_factory=list)
    seed: int | None = None
    # largest observed |A+B| - |A^lex+B| and a subset achieving it
    max_gap: int = 0
    max_gap_example: list | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "mode": self.mode,
            "seed": self.seed,
            "tested": self.tested,
            "violations": len(self.violations),
            "violation_examples": self.violations[:5],
            "max_gap": self.max_gap,
            "max_gap_example": self.max_gap_example,
        }


EXHAUSTIVE_CAP = 24


def _units(n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]


def _lexify(A: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seg = lex_compress(Monomial(a) for a in A)
    return [m.exponents for m in seg.members()]


def additive_macaulay_check(
    n: int,
    h: int,
    mode: str = "exhaustive",
    count: int = 1000,
    seed: int | None = None,
) -> AdditiveCheckReport:
    """Test ``|A + B| >= |A_lex + B|`` for subsets ``A`` of ``hB``, ``B = {e_1..e_n}``.

    The empty subset is counted and holds vacuously.
    """
    if n < 1 or h < 1:
        raise ValueError("n and h must be positive")
    B = _units(n)
    hB = [m.exponents for m in enumerate_degree(n, h)]
    report = AdditiveCheckReport(n, h, mode)

    def test(A):
        report.tested += 1
        if not A:
            return
        lhs = len(sumset(A, B))
        rhs = len(sumset(_lexify(A), B))
        if lhs < rhs:
            report.violations.append({"A": [list(a) for a in A], "lhs": lhs, "rhs": rhs})
        if lhs - rhs > report.max_gap or report.max_gap_example is None:
            report.max_gap = max(report.max_gap, lhs - rhs)
            report.max_gap_example = [list(a) for a in A]

    if mode == "exhaustive":
        if len(hB) > EXHAUSTIVE_CAP:
            raise ValueError(f"|hB| = {len(hB)} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
        for k in range(len(hB) + 1):
            for A in combinations(hB, k):
                test(list(A))
    elif mode == "sampled":
        if seed is None:
            seed = random.randrange(2**32)
        report.seed = seed
        rng = random.Random(seed)
        for _ in range(count):
            test([p for p in hB if rng.random() < 0.5])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


@dataclass(frozen=True)
class BoundRow:
    h: int
    size: int
    next_size: int
    macaulay: int
    plunnecke: int | None

    @property
    def holds(self) -> bool:
        return self.next_size <= self.macaulay


def bound_report(series: PowerSeries | Sequence[int]) -> list[BoundRow]:
    """One row per consecutive pair ``(d_h, d_{h+1})``, h >= 1."""
    d = list(series)
    rows = []
    for h in range(1, len(d) - 1):
        plun = plunnecke_upper(d[h], h, h + 1) if d[h] >= 1 else None
        rows.append(BoundRow(h, d[h], d[h + 1], macaulay_upper(d[h], h), plun))
    return rows
