"""Universal R-matrices, Drinfeld elements and ribbon elements.

An R-matrix lives in A (x) A and is stored as a dict ``{(i, j): c}``.
The main example is the family on the cyclic group algebra kC_n,

    R_d = sum_{k,l} omega^{dkl} E_k (x) E_l,   E_k = (1/n) sum_i omega^{-ik} a^i,

with omega a primitive n-th root of unity.  A braiding of A is also an
R-matrix of the dual A*, which gives a second route to the Drinfeld
functional (see :func:`rmatrix_from_braiding`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (
    AxiomReport,
    Element,
    FiniteDimHopfAlgebra,
    _acc,
    cyclic_group_algebra,
    dual_hopf,
    element_inverse,
    is_central,
)
from .cyclotomic import ONE, ZERO, Rational, as_scalar, root_of_unity
from .errors import DrinfeldAxiomFailed, NotInvertible, RibbonAxiomFailed


@dataclass
class RMatrix:
    algebra: FiniteDimHopfAlgebra
    terms: dict
    label: str = ""
    params: dict = field(default_factory=dict)

    def flip(self) -> dict:
        return {(j, i): c for (i, j), c in self.terms.items()}

    def legs(self, first: int, second: int, n: int = 3) -> dict:
        """R placed in tensor factors ``first`` and ``second`` of an n-fold power."""
        unit = self.algebra.unit
        out: dict = {}
        for (i, j), c in self.terms.items():
            for fill in iproduct(unit.items(), repeat=n - 2):
                key = []
                coeff = c
                it = iter(fill)
                for pos in range(n):
                    if pos == first:
                        key.append(i)
                    elif pos == second:
                        key.append(j)
                    else:
                        k, u = next(it)
                        key.append(k)
                        coeff = coeff * u
                _acc(out, tuple(key), coeff)
        return out

    def inverse_terms(self) -> dict:
        """(S (x) id) R, which is the inverse of R."""
        return self.algebra.apply_on_factor(self.terms, 0, self.algebra.antipode_terms)


def _unit_power(A: FiniteDimHopfAlgebra, n: int) -> dict:
    out: dict = {}
    for items in iproduct(A.unit.items(), repeat=n):
        c = ONE
        for _, u in items:
            c = c * u
        _acc(out, tuple(k for k, _ in items), c)
    return out


def _tensor_of(A: FiniteDimHopfAlgebra, x: dict, y: dict) -> dict:
    out: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            _acc(out, (i, j), a * b)
    return out


def verify_quasitriangular(R: RMatrix) -> AxiomReport:
    A = R.algebra
    rep = AxiomReport()
    one2 = _unit_power(A, 2)
    Rinv = R.inverse_terms()
    ok_inv = A.tensor_mul(R.terms, Rinv) == one2 == A.tensor_mul(Rinv, R.terms)
    rep.record("invertible", None if ok_inv else "R (S x id)(R) != 1")

    bad = None
    for i in range(A.dim):
        d = A.comult[i]
        dop = {(k, j): c for (j, k), c in d.items()}
        if A.tensor_mul(dop, R.terms) != A.tensor_mul(R.terms, d):
            bad = A.labels[i]
            break
    rep.record("Delta^op R = R Delta", bad)

    lhs = A.apply_on_factor(R.terms, 0, A.coproduct_terms)
    rhs = A.tensor_mul(R.legs(0, 2), R.legs(1, 2))
    rep.record("(Delta x id)R = R13 R23", None if lhs == rhs else "differs")
    lhs = A.apply_on_factor(R.terms, 1, A.coproduct_terms)
    rhs = A.tensor_mul(R.legs(0, 2), R.legs(0, 1))
    rep.record("(id x Delta)R = R13 R12", None if lhs == rhs else "differs")

    left: dict = {}
    right: dict = {}
    for (i, j), c in R.terms.items():
        if A.counit[i]:
            _acc(left, j, c * A.counit[i])
        if A.counit[j]:
            _acc(right, i, c * A.counit[j])
    rep.record("(eps x id)R = 1", None if left == A.unit else left)
    rep.record("(id x eps)R = 1", None if right == A.unit else right)
    return rep


# -- the cyclic family ---------------------------------------------------------------

def cyclic_idempotents(n: int, A: FiniteDimHopfAlgebra | None = None) -> list[Element]:
    A = A or cyclic_group_algebra(n)
    inv_n = as_scalar(Rational(1, n))
    return [A.element({i: root_of_unity(n, -i * k) * inv_n for i in range(n)}) for k in range(n)]


def cyclic_R_matrix(n: int, d: int, A: FiniteDimHopfAlgebra | None = None) -> RMatrix:
    """R_d on kC_n, expanded in the group basis."""
    if n < 1:
        raise ValueError("n must be positive")
    A = A or cyclic_group_algebra(n)
    E = cyclic_idempotents(n, A)
    terms: dict = {}
    for k, l in iproduct(range(n), repeat=2):
        w = root_of_unity(n, d * k * l)
        for i, a in E[k].terms.items():
            for j, b in E[l].terms.items():
                _acc(terms, (i, j), w * a * b)
    return RMatrix(A, terms, f"R_{d % n}", {"n": n, "d": d % n})


def cyclic_R_matrices(n: int) -> list[RMatrix]:
    A = cyclic_group_algebra(n)
    return [cyclic_R_matrix(n, d, A) for d in range(n)]


# -- Drinfeld element --------------------------------------------------------------------

def drinfeld_element(R: RMatrix) -> Element:
    """u = sum S(R2) R1."""
    A = R.algebra
    out: dict = {}
    for (i, j), c in R.terms.items():
        for k, v in A.mul_terms(A.antipode[j], {i: ONE}).items():
            _acc(out, k, c * v)
    return A.element(out)


def verify_drinfeld(R: RMatrix, u: Element | None = None) -> AxiomReport:
    A = R.algebra
    u = u if u is not None else drinfeld_element(R)
    rep = AxiomReport()
    try:
        uinv = element_inverse(u)
    except NotInvertible:
        rep.record("DE1", "u is not invertible")
        return rep
    bad = None
    for i in range(A.dim):
        x = A.basis(i)
        if x.antipode().antipode() != u * x * uinv:
            bad = A.labels[i]
            break
    rep.record("DE1", bad)
    r21r = A.tensor_mul(R.flip(), R.terms)
    lhs = A.tensor_mul(u.coproduct(), r21r)
    rep.record("DE2", None if lhs == _tensor_of(A, u.terms, u.terms) else "Delta(u) R21 R != u x u")
    rep.record("DE3", None if u.counit() == ONE else u.counit())
    alt: dict = {}
    for (i, j), c in R.terms.items():
        s2 = A.antipode_terms(A.antipode[i])
        for k, v in A.mul_terms({j: ONE}, s2).items():
            _acc(alt, k, c * v)
    rep.record("DE4", None if A.element(alt) == uinv else "u^-1 != sum R2 S^2(R1)")
    rep.record("u S(u) central", None if is_central(u * u.antipode()) else "not central")
    return rep


# -- ribbon elements --------------------------------------------------------------------

@dataclass
class Ribbon:
    element: Element
    group_like: Element
    conditions: dict

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())


def _is_group_like(g: Element) -> bool:
    A = g.algebra
    return g.counit() == ONE and g.coproduct() == _tensor_of(A, g.terms, g.terms)


def ribbon_conditions(R: RMatrix, v: Element, u: Element | None = None) -> dict:
    A = R.algebra
    u = u if u is not None else drinfeld_element(R)
    r21r = A.tensor_mul(R.flip(), R.terms)
    return {
        "Rib0": v * v == u * u.antipode(),
        "Rib1": is_central(v),
        "Rib2": A.tensor_mul(v.coproduct(), r21r) == _tensor_of(A, v.terms, v.terms),
        "Rib3": v.counit() == ONE,
        "Rib4": v.antipode() == v,
    }


def ribbon_set(R: RMatrix, candidates=None) -> list[Ribbon]:
    """Ribbon elements g^{-1} u for central group-likes g with g^2 = 1 and S(u) = g^{-2} u.

    ``candidates`` defaults to the group-like basis elements, which are all
    the group-likes for a group algebra.
    """
    A = R.algebra
    u = drinfeld_element(R)
    one = A.one()
    if candidates is None:
        candidates = [A.basis(i) for i in range(A.dim)]
    out = []
    for g in candidates:
        if not _is_group_like(g):
            continue
        ginv = g.antipode()
        sel = {
            "group-like": True,
            "central": is_central(g),
            "involutive": g * g == one,
            "S(u) = g^-2 u": u.antipode() == ginv * ginv * u,
        }
        if not all(sel.values()):
            continue
        v = ginv * u
        conds = dict(sel)
        conds.update(ribbon_conditions(R, v, u))
        rb = Ribbon(v, g, conds)
        if not rb.ok:
            raise RibbonAxiomFailed(f"{R.label}: {conds}")
        out.append(rb)
    if not out:
        raise DrinfeldAxiomFailed(f"{R.label} has no ribbon element among the candidates")
    return out


# -- modules -------------------------------------------------------------------------------

class Module:
    """Left module given by the matrices of the basis elements."""

    def __init__(self, algebra: FiniteDimHopfAlgebra, matrices: list, label: str = ""):
        self.algebra = algebra
        self.matrices = matrices
        self.label = label

    @property
    def dim(self) -> int:
        return len(self.matrices[0])

    def action(self, x) -> list[list]:
        terms = x.terms if isinstance(x, Element) else x
        d = self.dim
        out = [[ZERO] * d for _ in range(d)]
        for i, c in terms.items():
            m = self.matrices[i]
            for r, s in iproduct(range(d), repeat=2):
                if m[r][s]:
                    out[r][s] = out[r][s] + c * m[r][s]
        return out

    def trace(self, x) -> object:
        m = self.action(x)
        s = ZERO
        for i in range(self.dim):
            s = s + m[i][i]
        return s

    def verify(self) -> bool:
        from .linalg import identity, mat_mul

        A = self.algebra
        if self.action(A.unit) != identity(self.dim):
            return False
        for i, j in iproduct(range(A.dim), repeat=2):
            if self.action(A.mult[i][j]) != mat_mul(self.matrices[i], self.matrices[j]):
                return False
        return True

    def __repr__(self):
        return f"Module({self.label or '?'}, dim={self.dim})"


def cyclic_simple_modules(n: int, A: FiniteDimHopfAlgebra | None = None) -> list[Module]:
    """M_k = k E_k, on which a acts by omega^k."""
    A = A or cyclic_group_algebra(n)
    return [Module(A, [[[root_of_unity(n, i * k)]] for i in range(n)], f"M{k}") for k in range(n)]


# -- braidings seen from the dual ------------------------------------------------------------

def rmatrix_from_braiding(B) -> RMatrix:
    """The R-matrix sum sigma(b_i, b_j) b^i (x) b^j of the dual Hopf algebra."""
    D = dual_hopf(B.algebra)
    terms = {}
    for i, row in enumerate(B.sigma):
        for j, c in enumerate(row):
            if c:
                terms[(i, j)] = c
    return RMatrix(D, terms, f"dual {B.label}", dict(B.params))
