import itertools
import random

import pytest
from hypothesis import given, strategies as st

from sumset_growth.macaulay import binom, macaulay_upper, num_monomials
from sumset_growth.monomial import (
    Lexsegment,
    Monomial,
    divides,
    enumerate_degree,
    gcd_mono,
    grlex_compare,
    is_lexsegment,
    lcm_mono,
    lex_compress,
    lexsegment_take,
    max_index,
    min_index,
    mul,
    quotient,
    rank_in_degree,
    shadow,
    shadow_set,
)

from conftest import mono


def m3(text):
    return Monomial.parse(text, 3)


def brute_degree(n, d):
    """All exponent vectors of degree d, sorted descending by (degree, exponents)."""
    vecs = [v for v in itertools.product(range(d + 1), repeat=n) if sum(v) == d]
    return sorted(vecs, reverse=True)


def test_compare_examples():
    assert grlex_compare(m3("x1^2"), m3("x1*x2")) == 1
    assert grlex_compare(m3("x2*x3"), m3("x3^2")) == 1
    assert grlex_compare(m3("x2*x3"), m3("x2*x3")) == 0
    assert grlex_compare(m3("x3^3"), m3("x1^2")) == 1
    with pytest.raises(ValueError):
        grlex_compare(m3("x1"), Monomial.parse("x1", 4))


def test_enumerate_examples():
    assert [str(u) for u in enumerate_degree(3, 2)] == [
        "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"
    ]
    assert [str(u) for u in enumerate_degree(4, 0)] == ["1"]
    assert len(enumerate_degree(5, 2)) == binom(6, 2) == 15


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("d", range(0, 6))
def test_enumerate_matches_brute_force(n, d):
    got = enumerate_degree(n, d)
    assert [u.exponents for u in got] == brute_degree(n, d)
    assert len(got) == num_monomials(n, d)
    assert all(grlex_compare(a, b) == 1 for a, b in zip(got, got[1:]))


def test_rank_in_degree():
    for n in range(1, 5):
        for d in range(5):
            for k, u in enumerate(enumerate_degree(n, d)):
                assert rank_in_degree(u) == k


exps = st.lists(st.integers(0, 4), min_size=4, max_size=4).map(lambda e: Monomial(tuple(e)))


@given(exps, exps, exps)
def test_total_order(u, v, w):
    c = grlex_compare(u, v)
    assert c == -grlex_compare(v, u)
    assert (c == 0) == (u == v)
    if grlex_compare(u, v) >= 0 and grlex_compare(v, w) >= 0:
        assert grlex_compare(u, w) >= 0
    assert (u < v) == (c == -1)


@given(exps, exps, exps)
def test_order_is_multiplicative(u, v, w):
    if u > v:
        assert u * w > v * w


def test_min_max_index():
    u = mono("x2^4*x3*x5^3")
    assert (min_index(u), max_index(u)) == (2, 5)
    assert (min_index(mono("x1")), max_index(mono("x1"))) == (1, 1)
    assert (min_index(mono("x3*x4^3*x5")), max_index(mono("x3*x4^3*x5"))) == (3, 5)
    with pytest.raises(ValueError):
        min_index(Monomial.one(5))


def test_arithmetic():
    assert gcd_mono(m3("x1^2*x3"), m3("x1*x2")) == m3("x1")
    assert lcm_mono(m3("x1*x2"), m3("x2*x3")) == m3("x1*x2*x3")
    u = m3("x1*x2^2")
    assert mul(u, Monomial.one(3)) == u
    assert divides(m3("x2"), u) and not divides(m3("x3"), u)
    assert quotient(u, m3("x2")) == m3("x1*x2")
    with pytest.raises(ValueError):
        quotient(u, m3("x3"))


@given(exps)
def test_text_round_trip(u):
    assert Monomial.parse(str(u), 4) == u
    assert str(Monomial.parse(str(u), 4)) == str(u)


def test_text_format():
    assert str(Monomial((2, 0, 1))) == "x1^2*x3"
    assert str(Monomial.one(3)) == "1"
    with pytest.raises(ValueError):
        Monomial.parse("y1", 3)
    with pytest.raises(ValueError):
        Monomial.parse("x4", 3)


def test_lexsegment_take():
    seg = lexsegment_take(3, 2, 2)
    assert [str(u) for u in seg.members()] == ["x1^2", "x1*x2"]
    assert m3("x1*x2") in seg and m3("x1*x3") not in seg
    with pytest.raises(ValueError):
        lexsegment_take(3, 2, 7)


def test_shadow_example():
    up = shadow(lexsegment_take(3, 2, 2))
    assert [str(u) for u in up.members()] == ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3"]
    # brute force: multiply and deduplicate
    direct = {u * x for u in [m3("x1^2"), m3("x1*x2")] for x in [m3("x1"), m3("x2"), m3("x3")]}
    assert set(up.members()) == direct
    assert num_monomials(3, 3) - up.size == macaulay_upper(4, 2) == 5


def test_shadow_full_slice():
    for n in range(1, 5):
        for i in range(4):
            full = Lexsegment(n, i, num_monomials(n, i))
            assert shadow(full).size == num_monomials(n, i + 1)


def test_lemma_link_brute_force():
    for n in range(1, 5):
        for i in range(1, 5):
            M = enumerate_degree(n, i)
            M_next = enumerate_degree(n, i + 1)
            for c in range(len(M) + 1):
                up = shadow_set(M[:c], n)
                assert is_lexsegment(up, n, i + 1)
                assert len(M_next) - len(up) == macaulay_upper(len(M) - c, i)


def test_lex_compress():
    A = {m3("x1^2"), m3("x3^2")}
    assert [str(u) for u in lex_compress(A).members()] == ["x1^2", "x1*x2"]
    seg = enumerate_degree(3, 2)[:4]
    assert lex_compress(seg).members() == seg
    full = enumerate_degree(3, 3)
    assert lex_compress(full).members() == full
    with pytest.raises(ValueError):
        lex_compress({m3("x1"), m3("x1^2")})


def test_is_lexsegment_random():
    rng = random.Random(2)
    M = enumerate_degree(3, 3)
    for _ in range(200):
        k = rng.randint(0, len(M))
        S = rng.sample(M, k)
        assert is_lexsegment(S, 3, 3) == (set(S) == set(M[:k]))
