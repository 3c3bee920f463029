from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.algebra import verify_hopf_axioms
from hopfbraid.cyclotomic import ONE, as_scalar, root_of_unity
from hopfbraid.linalg import mat_inverse
from hopfbraid.suzuki import (
    SuzukiParams,
    comodules_are_complete,
    generator_antipode,
    generator_coproduct,
    is_group_like,
    monomial_word,
    suzuki_group_likes,
    verify_group_algebra_iso,
)

from _corpus import CORPUS, algebra, simples, tag


@pytest.mark.parametrize("key", CORPUS, ids=tag)
def test_structure(key):
    A = algebra(key)
    N, L = key[:2]
    assert A.dim == 4 * N * L
    assert verify_hopf_axioms(A).ok
    for k in range(A.dim):
        assert generator_coproduct(A, k) == A.comult[k]
        assert generator_antipode(A, k) == A.antipode[k]


@pytest.mark.parametrize("key", CORPUS, ids=tag)
def test_group_likes_and_simples(key):
    A = algebra(key)
    N, L = key[:2]
    gl = suzuki_group_likes(A)
    assert len(gl) == 4 * N
    assert A.one() in gl
    sims = simples(key)
    assert [M.dim for M in sims] == [1] * (4 * N) + [2] * (N * (L - 1))
    assert sum(M.dim ** 2 for M in sims) == A.dim
    assert comodules_are_complete(A, list(sims))
    for M in sims:
        assert M.character().counit() == as_scalar(M.dim)
    for g, M in zip(gl, sims):
        assert M.character() == g


@pytest.mark.parametrize("key", [k for k in CORPUS if k[3] == -1], ids=tag)
def test_group_likes_do_not_depend_on_the_square_root(key):
    # replacing sqrt(lambda) by its negative permutes the list
    A = algebra(key)
    p = A.params
    gl = suzuki_group_likes(A)
    root = -root_of_unity(4, 1)
    for s in range(1, p.N + 1):
        for sign in (1, -1):
            g = A.from_words({
                monomial_word(1, 1, 2 * s + 1, p.L - 1): ONE,
                monomial_word(1, 2, 2 * s + 1, p.L - 1): sign * root,
            })
            assert is_group_like(g) and g in gl


def test_h8_examples():
    H = algebra((1, 2, 1, -1))
    assert H.x(1, 2).antipode() == H.x(2, 1) ** 3
    V = simples((1, 2, 1, -1))[-1]
    assert V.label == "V0,1"
    assert V.character() == H.x(1, 1) + H.x(2, 2)


@pytest.mark.parametrize("key", [(1, 3, 1, 1), (2, 3, 1, -1), (1, 2, -1, 1)], ids=tag)
def test_character_matches_the_closed_expression(key):
    # ch(V_st) = x11^{2s+1} chi22^{t-1} + x11^{2s} chi22^t
    A = algebra(key)
    for M in simples(key):
        if M.meta.get("type") == "V":
            s, t = M.meta["s"], M.meta["t"]
            want = A.from_word(monomial_word(1, 1, 2 * s + 1, t - 1)) + A.from_word(monomial_word(1, 1, 2 * s, t))
            assert M.character() == want


entries = st.integers(min_value=-3, max_value=3)


@settings(max_examples=25, deadline=None)
@given(st.tuples(entries, entries, entries, entries), st.sampled_from([(1, 3, 1, 1), (2, 2, -1, 1)]))
def test_character_is_basis_independent(m, key):
    P = [[as_scalar(m[0]), as_scalar(m[1])], [as_scalar(m[2]), as_scalar(m[3])]]
    if mat_inverse(P) is None:
        return
    for M in simples(key):
        if M.dim == 2:
            C = M.conjugated(P)
            C.verify()
            assert C.character() == M.character()


@pytest.mark.parametrize("key", [(1, 2, 1, -1), (1, 3, 1, 1), (3, 2, 1, -1), (3, 3, 1, 1), (1, 4, 1, -1)], ids=tag)
def test_group_algebra_isomorphism(key):
    assert all(verify_group_algebra_iso(SuzukiParams(*key)).values())


def test_group_algebra_isomorphism_preconditions():
    with pytest.raises(ValueError):
        verify_group_algebra_iso(SuzukiParams(2, 2, 1, -1))
    with pytest.raises(ValueError):
        verify_group_algebra_iso(SuzukiParams(1, 2, -1, -1))


def test_params_validation():
    with pytest.raises(ValueError):
        SuzukiParams(0, 2)
    with pytest.raises(ValueError):
        SuzukiParams(1, 1)
    with pytest.raises(ValueError):
        SuzukiParams(1, 2, 2, 1)
