from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroid_kl.errors import DivisibilityError, InvalidArgument
from matroid_kl.exact_poly import (
    QPoly,
    RingPoly,
    evaluate,
    gaussian_binomial,
    q_factorial,
    q_int,
    substitute_q_one,
)
from oracles import count_subspaces

q = QPoly.monomial(1)


def test_q_int_examples():
    assert q_int(1) == QPoly([1])
    assert q_int(3) == 1 + q + q * q
    assert evaluate(q_int(4), 2) == 15


@pytest.mark.parametrize("k", [0, -1])
def test_q_int_rejects_nonpositive(k):
    with pytest.raises(InvalidArgument):
        q_int(k)


def test_q_factorial_examples():
    assert q_factorial(0) == QPoly([1])
    assert q_factorial(3) == QPoly([1, 2, 2, 1])
    assert evaluate(q_factorial(4), 1) == 24


def test_gaussian_examples():
    assert gaussian_binomial(7, 0) == QPoly([1])
    assert gaussian_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert evaluate(gaussian_binomial(4, 2), 1) == 6
    assert evaluate(gaussian_binomial(4, 2), 2) == 35
    with pytest.raises(InvalidArgument):
        gaussian_binomial(3, 4)


@pytest.mark.parametrize("n,k,p", [(3, 1, 2), (4, 2, 2), (4, 1, 3), (3, 2, 3), (4, 2, 3), (5, 2, 2)])
def test_gaussian_counts_subspaces(n, k, p):
    assert evaluate(gaussian_binomial(n, k), p) == count_subspaces(n, k, p)


def test_gaussian_identities():
    for n in range(13):
        for k in range(n + 1):
            g = gaussian_binomial(n, k)
            assert g == gaussian_binomial(n, n - k)
            assert all(c >= 0 for c in g.coeffs)
            if 1 <= k < n:
                assert g == gaussian_binomial(n - 1, k - 1) + QPoly.monomial(k) * gaussian_binomial(n - 1, k)


@pytest.mark.parametrize("k", range(1, 13))
def test_specializations_at_one(k):
    assert evaluate(q_int(k), 1) == k
    assert evaluate(q_factorial(k), 1) == factorial(k)


def test_big_integer_coefficients_are_exact():
    # [12]_q! evaluated at q = 5 far exceeds 64 bits
    v = evaluate(q_factorial(12), 5)
    expected = 1
    for j in range(1, 13):
        expected *= (5**j - 1) // 4
    assert v == expected and v > 2**64


def test_canonical_form():
    assert QPoly([1, 0, 0]).coeffs == (1,)
    assert QPoly([0, 0]).coeffs == ()
    assert RingPoly([1, 0], "int").coeffs == (1,)
    assert not QPoly()


def test_ring_poly_examples():
    t = RingPoly.t("int")
    one = RingPoly.one("int")
    assert (t - one) * (t - one) == RingPoly([1, -2, 1], "int")
    p = RingPoly([3, 0, 5], "int")
    assert p + RingPoly((), "int") == p


def test_ring_poly_division_over_q():
    num = RingPoly([q, -(1 + q), 1], "q")
    den = RingPoly([-1, 1], "q")
    assert num.exact_div(den) == RingPoly([-q, 1], "q")


def test_inexact_division_raises():
    with pytest.raises(DivisibilityError):
        RingPoly([1, 0, 1], "int").exact_div(RingPoly([-1, 1], "int"))
    with pytest.raises(DivisibilityError):
        QPoly([1, 1]).exact_div(QPoly([0, 2]))


def test_mixed_rings_rejected():
    with pytest.raises(InvalidArgument):
        RingPoly([1], "int") + RingPoly([1], "q")
    with pytest.raises(InvalidArgument):
        RingPoly([QPoly([1])], "int")


def test_substitute_q_one():
    p = RingPoly([1, q**2 + q**4], "q")
    assert substitute_q_one(p) == RingPoly([1, 2], "int")


def test_json_roundtrip():
    p = RingPoly([1, q**2 + q**4 * (10**30)], "q")
    data = p.to_json()
    assert data["ring"] == "q"
    assert all(isinstance(x, str) for c in data["coeffs"] for x in c)
    assert RingPoly.from_json(data) == p
    g = gaussian_binomial(6, 3)
    assert QPoly.from_json(g.to_json()) == g
    r = RingPoly([-3, 7], "int")
    assert r.to_json() == {"ring": "int", "var": "t", "coeffs": ["-3", "7"]}


def test_immutable():
    p = QPoly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_str():
    assert str(QPoly([0, 0, 1, 0, 1])) == "q^2 + q^4"
    assert str(RingPoly([-1, 1], "int")) == "-1 + t"


small_ints = st.integers(min_value=-20, max_value=20)
qpolys = st.lists(small_ints, max_size=6).map(QPoly)
ringpolys = st.lists(qpolys, max_size=4).map(lambda cs: RingPoly(cs, "q"))


@settings(max_examples=60, deadline=None)
@given(ringpolys, ringpolys, ringpolys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == RingPoly((), "q")


@settings(max_examples=60, deadline=None)
@given(ringpolys, st.lists(qpolys, min_size=1, max_size=3))
def test_exact_division_cancels_monic(a, lower):
    b = RingPoly(list(lower) + [QPoly([1])], "q")
    assert (a * b).exact_div(b) == a


@settings(max_examples=60, deadline=None)
@given(qpolys, qpolys, st.integers(min_value=-4, max_value=4))
def test_evaluation_is_a_homomorphism(x, y, v):
    assert evaluate(x * y, v) == evaluate(x, v) * evaluate(y, v)
    assert evaluate(x + y, v) == evaluate(x, v) + evaluate(y, v)


@settings(max_examples=40, deadline=None)
@given(qpolys, st.tuples(st.lists(small_ints, max_size=3), st.sampled_from((1, -1))).map(lambda t: QPoly(t[0] + [t[1]])))
def test_qpoly_divmod(x, d):
    quot, rem = x.divmod(d)
    assert quot * d + rem == x
    assert rem.degree < d.degree


def test_gaussian_at_one_is_binomial():
    for n in range(10):
        for k in range(n + 1):
            assert evaluate(gaussian_binomial(n, k), 1) == comb(n, k)
