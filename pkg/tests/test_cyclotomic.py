from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.cyclotomic import (
    ONE,
    ZERO,
    CyclotomicScalar,
    as_scalar,
    cyclotomic_polynomial,
    euler_phi,
    field_arithmetic,
    order_of_unity,
    render,
    root_of_unity,
    sqrt_of_sign,
)
from hopfbraid.errors import DivisionByZero, InvalidSign, ZeroInput

from _corpus import to_complex

CONDUCTORS = [1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24]
SMALL_FIELDS = [1, 3, 4, 8, 12, 24]  # subfields of Q(zeta_24), where the algebras live


@st.composite
def scalars(draw, conductors=CONDUCTORS):
    m = draw(st.sampled_from(conductors))
    n = euler_phi(m)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=n, max_size=n))
    return CyclotomicScalar.from_coeffs(m, coeffs)


def close(a, z, tol=1e-9):
    return abs(to_complex(a) - z) < tol


# -- examples -----------------------------------------------------------------------------

def test_root_of_unity_examples():
    assert root_of_unity(1, 0) == ONE
    assert root_of_unity(8, 4) == -ONE
    assert root_of_unity(5, 7) == root_of_unity(5, 2)


def test_minimal_conductor_normalization():
    assert root_of_unity(8, 2) == root_of_unity(4, 1)
    assert root_of_unity(8, 2).conductor == 4
    assert (root_of_unity(12, 4) + root_of_unity(12, 8)).conductor == 1


def test_field_arithmetic_examples():
    i = root_of_unity(4, 1)
    assert field_arithmetic(1 + i, 1 - i, "mul") == as_scalar(2)
    z5 = root_of_unity(5, 1)
    assert field_arithmetic(z5, z5, "div") == ONE
    assert field_arithmetic(root_of_unity(3, 1), i, "add").conductor == 12
    assert field_arithmetic(z5, z5, "eq") is True
    with pytest.raises(DivisionByZero):
        field_arithmetic(z5, ZERO, "div")
    with pytest.raises(ZeroDivisionError):
        z5 / 0


def test_order_of_unity_examples():
    assert order_of_unity(ONE) == 1
    assert order_of_unity(root_of_unity(8, 2)) == 4
    assert order_of_unity(as_scalar(2)) is None
    assert order_of_unity(1 + root_of_unity(4, 1)) is None
    with pytest.raises(ZeroInput):
        order_of_unity(ZERO)


def test_sqrt_of_sign():
    assert sqrt_of_sign(1) == ONE
    assert sqrt_of_sign(-1) == root_of_unity(4, 1)
    assert sqrt_of_sign(-1) ** 2 == -ONE
    with pytest.raises(InvalidSign):
        sqrt_of_sign(0)


@pytest.mark.parametrize("m", range(1, 49))
def test_roots_of_unity_orders(m):
    for k in range(m):
        z = root_of_unity(m, k)
        assert z ** m == ONE
        assert order_of_unity(z) == m // gcd(m, k)


@pytest.mark.parametrize("m", range(1, 41))
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    got = list(cyclotomic_polynomial(m))
    assert got == [int(c) for c in want]
    assert len(got) - 1 == euler_phi(m) == sympy.totient(m)


def test_render():
    assert render(root_of_unity(4, 1)) == "i"
    assert render(root_of_unity(4, 3)) == "-i"
    assert render(root_of_unity(8, 1)) == "ζ8"
    assert render(root_of_unity(6, 1)) == "-ζ3^2"
    assert render(as_scalar(Fraction(-3, 2))) == "-3/2"


# -- properties ---------------------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(scalars(), scalars())
def test_sum_and_product_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert hash(a + b) == hash(b + a)


@settings(max_examples=100, deadline=None)
@given(scalars(SMALL_FIELDS), scalars(SMALL_FIELDS), scalars(SMALL_FIELDS))
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150, deadline=None)
@given(scalars(), scalars())
def test_agrees_with_complex_oracle(a, b):
    za, zb = to_complex(a), to_complex(b)
    assert close(a + b, za + zb)
    assert close(a * b, za * zb, 1e-7)
    if b:
        assert close(a / b, za / zb, 1e-6)


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_inverse_and_conductor_is_minimal(a):
    if a:
        assert a * a.inverse() == ONE
    # a value in a proper subfield is never stored at a larger conductor
    assert a.conductor % 4 != 2
    for d in range(1, a.conductor):
        if a.conductor % d == 0 and d % 4 != 2:
            assert len(a.coeffs) == euler_phi(a.conductor)


@settings(max_examples=100, deadline=None)
@given(scalars(), st.sampled_from([1, 11, 13, 17, 19, 23, 29, 31]))
def test_galois_is_a_field_automorphism(a, k):
    # k is prime to every conductor in the strategy
    b = root_of_unity(8, 3) + a
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_json_round_trip(a):
    obj = a.to_json()
    assert set(obj) == {"conductor", "coeffs"}
    assert CyclotomicScalar.from_json(json.loads(json.dumps(obj))) == a


@settings(max_examples=60, deadline=None)
@given(scalars(), st.integers(min_value=-6, max_value=6))
def test_powers(a, k):
    if not a and k < 0:
        return
    want = ONE
    base = a if k >= 0 else a.inverse()
    for _ in range(abs(k)):
        want = want * base
    assert a ** k == want
