from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.algebra import (
    FiniteDimHopfAlgebra,
    LinearFunctional,
    central_dual_subspace,
    convolution,
    convolution_inverse,
    counit_functional,
    cyclic_group_algebra,
    dual_hopf,
    element_inverse,
    group_algebra,
    sph_of_dual,
    verify_hopf_axioms,
)
from hopfbraid.braiding import drinfeld_functional, sigma_braiding
from hopfbraid.cyclotomic import ONE, ZERO, as_scalar, root_of_unity
from hopfbraid.errors import AssociativityFailure, BasisNotClosed, NotAGroup, NotInvertible, RewriteBudgetExceeded
from hopfbraid.h8 import d8_group_algebra, kd8_hopf
from hopfbraid.linalg import mat_inverse, mat_mul, identity, nullspace, rank, solve
from hopfbraid.rewriting import Presentation, Rule, algebra_from_presentation, normal_form
from hopfbraid.suzuki import SuzukiParams, construct_suzuki, suzuki_presentation

from _corpus import algebra


def characters(n):
    A = cyclic_group_algebra(n)
    return A, [LinearFunctional(A, [root_of_unity(n, i * k) for i in range(n)]) for k in range(n)]


# -- group algebras -----------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_cyclic_group_algebras(n):
    A = cyclic_group_algebra(n)
    assert A.dim == n
    assert verify_hopf_axioms(A).ok


def test_trivial_group_algebra():
    A = cyclic_group_algebra(1)
    assert A.mult == [[{0: ONE}]] and A.counit == [ONE] and A.antipode == [{0: ONE}]


def test_not_a_group_has_witness():
    with pytest.raises(NotAGroup) as exc:
        group_algebra([[0, 1], [1, 1]], [0, 1])
    assert exc.value.witness is not None


def test_induced_d8_structure_differs_from_group_coproduct():
    G, K = d8_group_algebra(), kd8_hopf()
    assert verify_hopf_axioms(G).ok and verify_hopf_axioms(K).ok
    assert G.mult == K.mult
    assert G.comult != K.comult


def test_broken_antipode_is_reported():
    H = algebra((1, 2, 1, -1))
    bad = FiniteDimHopfAlgebra(H.labels, H.mult, H.unit, H.comult, H.counit, [{i: ONE} for i in range(H.dim)])
    rep = verify_hopf_axioms(bad)
    assert not rep.ok
    assert list(rep.failures()) == ["antipode"]


# -- duals and convolution ----------------------------------------------------------------

def test_duals():
    for n in (2, 5):
        A = cyclic_group_algebra(n)
        D = dual_hopf(A)
        assert verify_hopf_axioms(D).ok
        assert dual_hopf(D).structure_equal(A)
    H = algebra((1, 2, 1, -1))
    assert verify_hopf_axioms(dual_hopf(H)).ok
    assert dual_hopf(dual_hopf(H)).structure_equal(H)


def test_json_round_trip():
    H = algebra((1, 2, 1, -1))
    again = FiniteDimHopfAlgebra.from_json(json.loads(json.dumps(H.to_json())))
    assert again.structure_equal(H) and again.labels == H.labels


@pytest.mark.parametrize("n", [3, 4, 6])
def test_character_inverses(n):
    A, chi = characters(n)
    eps = counit_functional(A)
    assert convolution_inverse(eps) == eps
    for k in range(n):
        assert convolution_inverse(chi[k]) == chi[(-k) % n]
        assert convolution(chi[k], chi[(-k) % n]) == eps


def test_non_invertible_functional():
    A = cyclic_group_algebra(2)
    with pytest.raises(NotInvertible):
        convolution_inverse(LinearFunctional(A, [1, 0]))


def test_drinfeld_functional_is_invertible():
    H = algebra((1, 2, 1, -1))
    w = root_of_unity(8, 1)
    ups = drinfeld_functional(sigma_braiding(H, w, w ** 7))
    assert convolution(convolution_inverse(ups), ups) == counit_functional(H)


def test_convolution_is_associative_with_unit_eps():
    H = algebra((1, 2, 1, -1))
    p = LinearFunctional(H, [as_scalar(i + 1) for i in range(8)])
    q = LinearFunctional(H, [root_of_unity(8, i) for i in range(8)])
    r = LinearFunctional(H, [as_scalar((-1) ** i) for i in range(8)])
    eps = counit_functional(H)
    assert (p * q) * r == p * (q * r)
    assert p * eps == p == eps * p


def test_central_dual_subspace_dimensions():
    assert len(central_dual_subspace(cyclic_group_algebra(6))) == 6
    assert len(central_dual_subspace(cyclic_group_algebra(1))) == 1
    # one central functional per simple comodule (characters of the dual)
    assert len(central_dual_subspace(algebra((1, 2, 1, -1)))) == 5
    assert len(central_dual_subspace(algebra((1, 3, 1, 1)))) == 6


def test_sph_of_cyclic_dual():
    A, chi = characters(2)
    assert len(sph_of_dual(A, chi)) == 2
    A, chi = characters(5)
    assert sph_of_dual(A, chi) == [counit_functional(A)]


def test_element_inverse():
    H = algebra((1, 2, 1, -1))
    g = H.from_words({"aa": ONE, "bb": -ONE})
    assert element_inverse(g) * g == H.one()
    with pytest.raises(NotInvertible):
        element_inverse(H.x(2, 2))  # x22 = e0 t is a zero divisor


# -- rewriting ----------------------------------------------------------------------------

def test_suzuki_normal_forms():
    P = suzuki_presentation(SuzukiParams(1, 2, 1, -1))
    assert normal_form(P, "ab") == {}
    # 1 = x11^2 + x12^2 for N = 1, nu = +1; the unit is stored as that sum
    assert normal_form(P, {"aa": ONE, "bb": ONE}) == normal_form(P, "") == {"aa": ONE, "bb": ONE}
    assert normal_form(P, "dd") == {"aa": ONE}


def test_cyclic_presentation():
    P = Presentation("g", [Rule.make("gg", "")])
    mult, unit = algebra_from_presentation(P, ["", "g"])
    assert unit == {0: ONE}
    assert mult[1][1] == {0: ONE}


def test_presentation_errors():
    P = Presentation("g", [Rule.make("ggg", "")])
    with pytest.raises(BasisNotClosed):
        algebra_from_presentation(P, ["", "g"])
    with pytest.raises(RewriteBudgetExceeded):
        normal_form(Presentation("ab", [Rule.make("ab", "ba"), Rule.make("ba", "ab")]), "ab", budget=50)
    # a non-associative "product": x*x = y, y*x = 0 but x*y = x
    bad = Presentation("xy", [Rule.make("xx", "y"), Rule.make("yx", {}), Rule.make("xy", "x"), Rule.make("yy", {})])
    with pytest.raises(AssociativityFailure):
        algebra_from_presentation(bad, ["", "x", "y"])


@pytest.mark.parametrize("key", [(1, 3, 1, 1), (2, 3, 1, -1)])
def test_suzuki_dimension(key):
    A = construct_suzuki(SuzukiParams(*key))
    assert A.dim == 4 * key[0] * key[1]


# -- linear algebra -----------------------------------------------------------------------

small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4))
def test_linalg_consistency(rows):
    n = 4
    r = rank(rows, n)
    assert len(nullspace(rows, n)) == n - r
    for v in nullspace(rows, n):
        assert all(sum(as_scalar(a) * b for a, b in zip(row, v)) == ZERO for row in rows)
    inv = mat_inverse([[as_scalar(x) for x in row] for row in rows])
    if r == n:
        assert mat_mul([[as_scalar(x) for x in row] for row in rows], inv) == identity(n)
    else:
        assert inv is None
    b = [sum(row) for row in rows]
    x = solve(rows, b, n)
    assert x is not None
    assert [sum(as_scalar(a) * c for a, c in zip(row, x)) for row in rows] == [as_scalar(v) for v in b]
