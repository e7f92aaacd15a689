"""Difference binomials ``u - v`` and Buchberger machinery closed over them.

Every polynomial that shows up here is a difference of two monomials of the
same degree, so coefficients are never stored: reduction is pure monomial
rewriting ``m -> (m / lead) * trail`` and the ground field plays no role.
A binomial and its negative generate the same ideal, so differences are
always normalized with the larger monomial in front.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .lexideal import LexIdeal, membership
from .monomial import Monomial, divides, gcd_mono, min_index, quotient

DEFORMED = "deformed-from-lexideal"
COMPLETED = "completed"


class NotGroebnerError(RuntimeError):
    pass


@dataclass(frozen=True)
class DiffBinomial:
    """``lead - trail`` with ``lead > trail`` in graded-lex order."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if self.lead.degree != self.trail.degree:
            raise ValueError(f"inhomogeneous binomial {self.lead} - {self.trail}")
        if not self.lead > self.trail:
            raise ValueError(f"lead {self.lead} must exceed trail {self.trail}")

    @classmethod
    def of(cls, a: Monomial, b: Monomial) -> DiffBinomial | None:
        """``a - b`` up to sign; ``None`` when the two terms cancel."""
        if a == b:
            return None
        return cls(a, b) if a > b else cls(b, a)

    @classmethod
    def parse(cls, text: str, n: int) -> DiffBinomial:
        left, sep, right = text.partition(" - ")
        if not sep:
            raise ValueError(f"malformed binomial {text!r}")
        return cls(Monomial.parse(left, n), Monomial.parse(right, n))

    def __str__(self):
        return f"{self.lead} - {self.trail}"


Polynomial = DiffBinomial | Monomial | None


@dataclass(frozen=True)
class BinomialBasis:
    """Binomials kept sorted by descending lead, which fixes divisor choice."""

    elements: tuple[DiffBinomial, ...]
    provenance: str = DEFORMED
    certified: bool = False

    def __post_init__(self):
        ordered = tuple(sorted(set(self.elements), key=lambda f: f.lead, reverse=True))
        object.__setattr__(self, "elements", ordered)

    @property
    def leads(self) -> list[Monomial]:
        return [f.lead for f in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


def phi(u: Monomial) -> Monomial:
    """``u * X_n / X_min(u)``."""
    if u.is_one():
        raise ValueError("phi is undefined on the constant monomial")
    e = list(u.exponents)
    e[min_index(u) - 1] -= 1
    e[-1] += 1
    return Monomial(tuple(e))


def deform(L: LexIdeal) -> BinomialBasis:
    """``{g - phi(g)}`` over the minimal generators of ``L``."""
    elements = []
    for g in L.all_generators():
        if min_index(g) >= L.n:
            raise ValueError(
                f"generator {g} is a power of x{L.n}; the sequence has a zero "
                "and admits no binomial deformation"
            )
        elements.append(DiffBinomial(g, phi(g)))
    return BinomialBasis(tuple(elements), DEFORMED)


def s_poly(f: DiffBinomial, g: DiffBinomial) -> DiffBinomial | None:
    """``(lead_g / v) f - (lead_f / v) g`` with ``v = gcd(lead_f, lead_g)``.

    The lcm terms cancel, leaving ``(lead_f / v) trail_g - (lead_g / v) trail_f``.
    """
    v = gcd_mono(f.lead, g.lead)
    a = quotient(f.lead, v) * g.trail
    b = quotient(g.lead, v) * f.trail
    return DiffBinomial.of(a, b)


Chooser = Callable[[list[DiffBinomial]], DiffBinomial]


def _first(candidates: list[DiffBinomial]) -> DiffBinomial:
    return candidates[0]


def random_chooser(rng: random.Random) -> Chooser:
    return rng.choice


def _rewrite_step(m: Monomial, basis: Sequence[DiffBinomial], choose: Chooser) -> Monomial | None:
    candidates = [f for f in basis if divides(f.lead, m)]
    if not candidates:
        return None
    f = choose(candidates)
    return quotient(m, f.lead) * f.trail


def reduce(f: Polynomial, basis: BinomialBasis | Sequence[DiffBinomial], choose: Chooser = _first) -> Polynomial:
    """Full division of a monomial or difference binomial by ``basis``.

    Returns ``None`` (zero), an irreducible monomial, or a difference
    binomial whose terms are both irreducible.
    """
    elems = basis.elements if isinstance(basis, BinomialBasis) else tuple(basis)
    if f is None:
        return None
    if isinstance(f, Monomial):
        m = f
        while (nxt := _rewrite_step(m, elems, choose)) is not None:
            m = nxt
        return m

    hi, lo = f.lead, f.trail
    while True:
        if hi == lo:
            return None
        if hi < lo:
            hi, lo = lo, hi
        nxt = _rewrite_step(hi, elems, choose)
        if nxt is None:
            break
        hi = nxt
    # the leading term is irreducible and stays in the remainder; the other
    # term only decreases from here on, so it can never cancel against it
    kept = hi
    rest = reduce(lo, elems, choose)
    return DiffBinomial(kept, rest)


@dataclass(frozen=True)
class BuchbergerReport:
    passed: bool
    pair: tuple[int, int] | None = None
    s_polynomial: DiffBinomial | None = None
    remainder: Polynomial = None
    pairs_checked: int = 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "pair": list(self.pair) if self.pair else None,
            "s_polynomial": str(self.s_polynomial) if self.s_polynomial else None,
            "remainder": None if self.remainder is None else str(self.remainder),
            "pairs_checked": self.pairs_checked,
        }

    def __str__(self):
        if self.passed:
            return f"Groebner basis: pass ({self.pairs_checked} pairs)"
        i, j = self.pair
        return (
            f"Groebner basis: FAIL at pair ({i}, {j}): "
            f"S = {self.s_polynomial} reduces to {self.remainder}"
        )


def _coprime(a: Monomial, b: Monomial) -> bool:
    return gcd_mono(a, b).is_one()


def buchberger_check(basis: BinomialBasis, skip_coprime: bool = False) -> BuchbergerReport:
    """Reduce every pairwise S-polynomial; stop at the first nonzero remainder.

    ``skip_coprime`` drops pairs with coprime leads (Buchberger's first
    criterion); it is off by default.
    """
    elems = basis.elements
    checked = 0
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            f, g = elems[i], elems[j]
            if skip_coprime and _coprime(f.lead, g.lead):
                continue
            checked += 1
            s = s_poly(f, g)
            r = reduce(s, elems)
            if r is not None:
                return BuchbergerReport(False, (i, j), s, r, checked)
    return BuchbergerReport(True, pairs_checked=checked)


def certify(basis: BinomialBasis) -> BinomialBasis:
    """Mark ``basis`` certified after a passing ``buchberger_check``."""
    report = buchberger_check(basis)
    if not report.passed:
        raise NotGroebnerError(str(report))
    return replace(basis, certified=True)


def buchberger_complete(basis: BinomialBasis) -> BinomialBasis:
    """Add reduced nonzero S-polynomials until every pair reduces to zero."""
    elems = list(basis.elements)
    pairs = [(i, j) for i in range(len(elems)) for j in range(i + 1, len(elems))]
    added = False
    while pairs:
        i, j = pairs.pop(0)
        r = reduce(s_poly(elems[i], elems[j]), elems)
        if r is None:
            continue
        assert isinstance(r, DiffBinomial)
        elems.append(r)
        added = True
        k = len(elems) - 1
        pairs.extend((m, k) for m in range(k))
    out = BinomialBasis(tuple(elems), COMPLETED if added else basis.provenance)
    return certify(out)


def normal_form(u: Monomial, basis: BinomialBasis, choose: Chooser = _first) -> Monomial:
    """The irreducible representative of ``u`` modulo a certified basis."""
    if not basis.certified:
        raise NotGroebnerError("normal_form needs a basis certified by buchberger_check")
    return reduce(u, basis, choose)


def phi_chain(u: Monomial, L: LexIdeal) -> tuple[int, Monomial]:
    """Least ``l >= 1`` with ``phi^l(u)`` outside ``L``, and that monomial."""
    if not membership(u, L):
        raise ValueError(f"{u} is not in the ideal")
    steps, w = 0, u
    while True:
        w = phi(w)
        steps += 1
        if not membership(w, L):
            return steps, w
        if min_index(w) == u.n:
            raise AssertionError(f"{w} is a power of x{u.n} yet lies in the ideal")


def leading_ideal_agrees(basis: BinomialBasis, L: LexIdeal) -> bool:
    """Whether the basis leads generate the same ideal as ``L`` up to degree ``L.D``."""
    leads = [m for m in basis.leads if m.degree <= L.D]
    if not all(membership(m, L) for m in leads):
        return False
    return all(any(divides(m, g) for m in leads) for g in L.all_generators())
