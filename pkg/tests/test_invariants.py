from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.algebra import LinearFunctional, counit_functional
from hopfbraid.braiding import sigma_braiding, sph_dual_suzuki, tau_braiding
from hopfbraid.cyclotomic import ONE, as_scalar, root_of_unity
from hopfbraid.errors import DivisionNotExact, NotCentral, NotPivotal, ParameterOutOfFamily
from hopfbraid.invariants import (
    InvariantPolynomial,
    braiding_handle,
    categorical_dimension,
    closed_form_polynomials,
    cyclic_closed_form_polynomials,
    invariant_signature,
    p_polynomial,
    partition_by_signature,
    pivotal_dimension,
    q_polynomial,
    rmatrix_handle,
    signature_to_json,
    unity_order_bound_holds,
    xi_closed_form,
    xi_scalar,
)
from hopfbraid.rmatrix import cyclic_R_matrices, cyclic_R_matrix

from _corpus import SMALL, algebra, braidings, handles, simples, tag

H8 = (1, 2, 1, -1)
W = root_of_unity(8, 1)
W5 = root_of_unity(5, 1)


def poly(*roots):
    return InvariantPolynomial.from_roots(as_scalar(r) for r in roots)


def h8_handle(B):
    return braiding_handle(B, list(simples(H8)))


def v01(key=H8):
    return next(M for M in simples(key) if M.meta.get("type") == "V" and M.meta["s"] == 0 and M.meta["t"] == 1)


# -- polynomials --------------------------------------------------------------------------

def test_polynomial_expansion():
    P = poly(1, -1)
    assert P.degree == 2
    assert P.coeffs == [ONE, as_scalar(0), as_scalar(-1)]
    assert InvariantPolynomial().is_one() and InvariantPolynomial().coeffs == [ONE]
    assert (poly(2) * poly(3)).divide(poly(3)) == poly(2)
    assert InvariantPolynomial.from_json(poly(W, 1).to_json()) == poly(1, W)


def test_division_must_be_exact():
    with pytest.raises(DivisionNotExact):
        poly(1, 2).divide(poly(3))
    with pytest.raises(DivisionNotExact):
        poly(1).divide(poly(1, 1))


roots = st.lists(st.integers(0, 11).map(lambda k: root_of_unity(12, k)), max_size=5)


@settings(max_examples=40, deadline=None)
@given(roots, roots)
def test_product_and_division(a, b):
    P, Q = InvariantPolynomial.from_roots(a), InvariantPolynomial.from_roots(b)
    PQ = P * Q
    assert PQ.degree == P.degree + Q.degree
    assert PQ.divide(Q) == P
    # coefficients of the product are the convolution of the coefficients
    conv = [as_scalar(0)] * (PQ.degree + 1)
    for i, x in enumerate(P.coeffs):
        for j, y in enumerate(Q.coeffs):
            conv[i + j] = conv[i + j] + x * y
    assert PQ.coeffs == conv


def test_render():
    P = p_polynomial(rmatrix_handle(cyclic_R_matrix(5, 1)), 1)
    assert P.render() == "(x - 1)(x - ζ5^4)^2(x - ζ5)^2"


# -- cyclic group algebras ---------------------------------------------------------------

def test_cyclic_examples():
    hs = [rmatrix_handle(R) for R in cyclic_R_matrices(5)]
    M3 = hs[1].simples[3]
    assert categorical_dimension(hs[1], M3) == W5
    assert all(categorical_dimension(hs[0], M) == ONE for M in hs[0].simples)
    assert p_polynomial(hs[1], 1) == poly(1, W5, W5, W5 ** 4, W5 ** 4)
    assert q_polynomial(hs[1], 1).is_one()
    assert p_polynomial(hs[1], 7).is_one()
    assert invariant_signature(hs[1]) == invariant_signature(hs[4])
    assert invariant_signature(hs[0]) != invariant_signature(hs[1])
    assert partition_by_signature(hs) == [[0], [1, 4], [2, 3]]
    assert partition_by_signature(hs[:1]) == [[0]]


def test_cyclic_q_for_n4():
    h = rmatrix_handle(cyclic_R_matrix(4, 1))
    w = root_of_unity(4, 1)
    assert q_polynomial(h, 1) == poly(*[(-1) ** k * w ** (-k * k) for k in range(4)])


@pytest.mark.parametrize("n", range(2, 7))
def test_cyclic_closed_forms(n):
    for R in cyclic_R_matrices(n):
        h = rmatrix_handle(R)
        assert (p_polynomial(h, 1), q_polynomial(h, 1)) == cyclic_closed_form_polynomials(n, R.params["d"])


# -- scalars on H8 -----------------------------------------------------------------------

def test_h8_dimension_examples():
    B = sigma_braiding(algebra(H8), W, W ** 7)
    h = h8_handle(B)
    V = v01()
    assert categorical_dimension(h, V) == 2 * W
    crib = h.ribbons
    assert xi_scalar(crib[0], V) == W
    assert xi_scalar(crib[1], V) == -W
    eps, p_minus = sph_dual_suzuki(algebra(H8))
    assert pivotal_dimension(p_minus, V) == -2
    for M in simples(H8):
        assert xi_scalar(counit_functional(algebra(H8)), M) == ONE
        assert pivotal_dimension(eps, M) == M.dim


def test_even_group_like_on_a13():
    key = (1, 3, 1, 1)
    B = braidings(key)[0]
    a, b = B.params["alpha"], B.params["beta"]
    A = algebra(key)
    M = next(M for M in simples(key) if M.meta.get("type") == "even" and M.meta["s"] == 1)
    assert M.character() == A.x(1, 1) ** 2 + A.x(1, 2) ** 2
    assert xi_scalar(braiding_handle(B, list(simples(key))).drinfeld, M) == (a * b) ** -2


def test_scalar_errors():
    A = algebra(H8)
    V = v01()
    # a functional that is not central in the dual
    vals = [ONE if k == A.dim - 1 else as_scalar(0) for k in range(A.dim)]
    junk = LinearFunctional(A, vals)
    with pytest.raises(NotCentral):
        xi_scalar(junk, V)
    with pytest.raises(NotPivotal):
        pivotal_dimension(junk, V)
    with pytest.raises(NotPivotal):
        pivotal_dimension(A.x(1, 2), V)


def test_p_and_q_h8_examples():
    A = algebra(H8)
    assert p_polynomial(h8_handle(sigma_braiding(A, -W ** 3, -W ** 5)), 2) == poly(-W ** 3)
    h_tau = h8_handle(tau_braiding(A, 1, 1))
    assert q_polynomial(h_tau, 2) == poly(-1)
    assert p_polynomial(h_tau, 7).is_one()
    assert invariant_signature(h_tau) == invariant_signature(h8_handle(tau_braiding(A, 1, -1)))


@pytest.mark.parametrize("key", SMALL, ids=tag)
def test_closed_forms_match_direct_computation(key):
    p = algebra(key).params
    for h in handles(key):
        B = h.structure
        args = (B.kind, B.params["i"], B.params.get("j", 0), B.params["sign"])
        for d in (1, 2):
            assert closed_form_polynomials(p, *args, d=d, which="P") == p_polynomial(h, d), (B.name, d)
            assert closed_form_polynomials(p, *args, d=d, which="Q") == q_polynomial(h, d), (B.name, d)


def test_closed_form_examples_and_errors():
    p = algebra(H8).params
    assert closed_form_polynomials(p, "tau", 0, d=2) == poly(1)
    assert closed_form_polynomials(p, "sigma", 0, 0, 1, d=3).is_one()
    with pytest.raises(ParameterOutOfFamily):
        closed_form_polynomials(p, "sigma", 1, 0)
    with pytest.raises(ParameterOutOfFamily):
        closed_form_polynomials(algebra((1, 3, 1, 1)).params, "tau", 0)
    with pytest.raises(ParameterOutOfFamily):
        closed_form_polynomials(p, "tau", 0, sign=2)


def _second_factor_roots(p, i, j, sign, which, use_jL):
    # roots attached to the odd one-dimensional comodules, with the sign
    # either as eps (sign)^L (-1)^{jL} or as eps (sign)^{L(j+1)}
    m, N, L = p.conductor, p.N, p.L
    K = 2 * i + (1 - p.nu) // 2
    eps = 1 if which == "P" else (-1) ** L
    flip = eps * sign ** L * (-1) ** (j * L) if use_jL else eps * sign ** (L * (j + 1))
    return sorted(
        (root_of_unity(m, -(2 * s + L) ** 2 * L * K + L * L * N * (1 - p.lam) // 2) * flip for s in range(1, N + 1)),
        key=lambda r: r.sort_key(),
    )


@pytest.mark.parametrize("key", [k for k in SMALL if k[1] == 3], ids=tag)
def test_odd_comodule_sign_depends_on_j_through_minus_one_power(key):
    p = algebra(key).params
    disagree = []
    for h in handles(key):
        B = h.structure
        i, j, sign = B.params["i"], B.params["j"], B.params["sign"]
        for M0 in (1, -1):
            odd = sorted(
                (categorical_dimension(h, M) for M in h.simples if M.meta.get("type") == "odd" and M.meta["sign"] == M0),
                key=lambda r: r.sort_key(),
            )
            assert odd == _second_factor_roots(p, i, j, sign, "P", True)
        if odd != _second_factor_roots(p, i, j, sign, "P", False):
            disagree.append((i, j, sign))
    # the two readings differ exactly for odd j with sign +
    assert disagree == [(0, 1, 1)]


@pytest.mark.parametrize("key", SMALL, ids=tag)
def test_scalar_properties(key):
    for h in handles(key):
        ups = h.drinfeld
        other = h.ribbons[1]
        for M in h.simples:
            dim_r = categorical_dimension(h, M)
            assert xi_scalar(ups, M) * M.dim == dim_r
            assert unity_order_bound_holds(h, M)
            assert (xi_scalar(ups, M), xi_scalar(other, M)) == xi_closed_form(h.structure, M), (h.structure.name, M.label)


def test_signature_json():
    h = h8_handle(tau_braiding(algebra(H8), 1, 1))
    js = signature_to_json(invariant_signature(h))
    assert [e["d"] for e in js] == [1, 2]
    assert InvariantPolynomial.from_json(js[1]["Q"]) == poly(-1)
