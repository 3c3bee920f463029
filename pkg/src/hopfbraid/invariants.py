"""Categorical dimensions, ribbon scalars and the polynomial invariants.

For a braided Hopf algebra with simple (co)modules M_1, ..., M_r:

    P^(d)(x) = prod over d-dimensional M of (x - dim_R M / d)
    P~^(d)(x) = prod over ribbon elements v and d-dimensional M of (x - xi_v(M))
    Q^(d)(x) = P~^(d)(x) / P^(d)(x)

where dim_R M is the trace of the Drinfeld element on M (module side) or
Upsilon(ch M) (comodule side), and xi_v(M) is the scalar by which v acts.
Polynomials are kept as sorted root multisets, so equality of invariants
is equality of tuples.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import (
    Element,
    FiniteDimHopfAlgebra,
    LinearFunctional,
    is_algebra_map,
    is_central,
    is_central_functional,
)
from .braiding import BraidingForm, coribbon_set, drinfeld_functional
from .cyclotomic import ONE, ZERO, CyclotomicScalar, as_scalar, render, root_of_unity
from .errors import DivisionNotExact, NotCentral, NotPivotal, ParameterOutOfFamily
from .rmatrix import RMatrix, cyclic_simple_modules, drinfeld_element, ribbon_set
from .suzuki import SuzukiAlgebra, SuzukiParams, suzuki_simple_comodules


# -- polynomials ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantPolynomial:
    """Monic polynomial prod (x - r) stored by its sorted roots."""

    roots: tuple = ()

    @classmethod
    def from_roots(cls, roots) -> "InvariantPolynomial":
        return cls(tuple(sorted((as_scalar(r) for r in roots), key=lambda r: r.sort_key())))

    @property
    def degree(self) -> int:
        return len(self.roots)

    @property
    def coeffs(self) -> list:
        """Coefficients from the leading 1 down to the constant term."""
        c = [ONE]
        for r in self.roots:
            nxt = c + [ZERO]
            for k in range(1, len(nxt)):
                nxt[k] = nxt[k] - r * c[k - 1]
            c = nxt
        return c

    def is_one(self) -> bool:
        return not self.roots

    def __mul__(self, other: "InvariantPolynomial") -> "InvariantPolynomial":
        return InvariantPolynomial.from_roots(self.roots + other.roots)

    def divide(self, other: "InvariantPolynomial") -> "InvariantPolynomial":
        """Exact quotient; raises DivisionNotExact if ``other`` does not divide."""
        num, den = self.coeffs, other.coeffs
        rem = list(num)
        quot = []
        for k in range(len(num) - len(den) + 1):
            q = rem[k]
            quot.append(q)
            if q:
                for m, dc in enumerate(den):
                    rem[k + m] = rem[k + m] - q * dc
        if len(den) > len(num) or any(rem[len(num) - len(den) + 1:]):
            raise DivisionNotExact(f"{other.render()} does not divide {self.render()}")
        left = Counter(self.roots)
        left.subtract(other.roots)
        if any(v < 0 for v in left.values()):
            raise DivisionNotExact("root multisets are inconsistent with the coefficient division")
        out = InvariantPolynomial.from_roots(left.elements())
        if out.coeffs != quot:
            raise DivisionNotExact("quotient roots disagree with the coefficient division")
        return out

    def render(self, var: str = "x") -> str:
        if not self.roots:
            return "1"
        parts = []
        counts = Counter(self.roots)
        for r in dict.fromkeys(self.roots):
            if r == ZERO:
                base = var
            elif _is_unit_monomial(-r):
                base = f"({var} + {render(-r)})"
            else:
                base = f"({var} - {render(r)})"
            e = counts[r]
            parts.append(base if e == 1 else f"{base}^{e}")
        return "".join(parts)

    def to_json(self) -> dict:
        return {"roots": [r.to_json() for r in self.roots], "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "InvariantPolynomial":
        return cls.from_roots(CyclotomicScalar.from_json(r) for r in obj["roots"])

    def __str__(self):
        return self.render()


def _is_unit_monomial(r: CyclotomicScalar) -> bool:
    # render without a leading minus sign, so "x + zeta" reads better than "x - -zeta"
    return not render(r).startswith("-")


# -- handles -------------------------------------------------------------------------------

@dataclass
class BraidedAlgebraHandle:
    """A Hopf algebra with a braiding (comodule side) or an R-matrix (module side)."""

    algebra: FiniteDimHopfAlgebra
    structure: object
    side: str
    simples: list
    label: str = ""
    _drinfeld: object = field(default=None, repr=False)
    _ribbons: list | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.side not in ("comodule", "module"):
            raise ValueError(f"unknown side {self.side!r}")
        if self.structure.algebra is not self.algebra:
            raise ValueError("structure belongs to a different algebra")

    @property
    def drinfeld(self):
        """Upsilon (comodule side) or u (module side)."""
        if self._drinfeld is None:
            if self.side == "comodule":
                self._drinfeld = drinfeld_functional(self.structure)
            else:
                self._drinfeld = drinfeld_element(self.structure)
        return self._drinfeld

    @property
    def ribbons(self) -> list:
        if self._ribbons is None:
            if self.side == "comodule":
                self._ribbons = [c.element for c in coribbon_set(self.structure)]
            else:
                self._ribbons = [r.element for r in ribbon_set(self.structure)]
        return self._ribbons


def braiding_handle(B: BraidingForm, simples=None) -> BraidedAlgebraHandle:
    if simples is None:
        if not isinstance(B.algebra, SuzukiAlgebra):
            raise ValueError("simple comodules must be given for non-Suzuki algebras")
        simples = suzuki_simple_comodules(B.algebra)
    return BraidedAlgebraHandle(B.algebra, B, "comodule", simples, B.label)


def rmatrix_handle(R: RMatrix, simples=None) -> BraidedAlgebraHandle:
    if simples is None:
        if "n" not in R.params:
            raise ValueError("simple modules must be given for this R-matrix")
        simples = cyclic_simple_modules(R.params["n"], R.algebra)
    return BraidedAlgebraHandle(R.algebra, R, "module", simples, R.label)


# -- dimensions and scalars ----------------------------------------------------------------

def categorical_dimension(h: BraidedAlgebraHandle, M) -> CyclotomicScalar:
    if h.side == "module":
        return M.trace(h.drinfeld)
    return h.drinfeld(M.character())


def xi_scalar(p, M) -> CyclotomicScalar:
    """Scalar by which a central element (or central functional) acts on a simple M."""
    d = M.dim
    if isinstance(p, LinearFunctional):
        if not is_central_functional(p):
            raise NotCentral("functional is not in the centre of the dual")
        xi = p(M.character()) * as_scalar(d).inverse()
        for j in range(d):
            for i in range(d):
                if p(M.coaction[j][i]) != (xi if i == j else ZERO):
                    raise NotCentral(f"functional does not act by a scalar on {M.label}")
        return xi
    if not is_central(p):
        raise NotCentral("element is not central")
    act = M.action(p)
    xi = act[0][0]
    for i in range(d):
        for j in range(d):
            if act[i][j] != (xi if i == j else ZERO):
                raise NotCentral(f"element does not act by a scalar on {M.label}")
    return xi


def pivotal_dimension(eta, M) -> CyclotomicScalar:
    if isinstance(eta, LinearFunctional):
        if not (is_algebra_map(eta) and is_central_functional(eta)):
            raise NotPivotal("functional is not a central group-like of the dual")
        return eta(M.character())
    if not isinstance(eta, Element):
        raise NotPivotal("expected an element or a functional")
    grouplike = eta.counit() == ONE and eta.coproduct() == {
        (i, j): a * b for i, a in eta.terms.items() for j, b in eta.terms.items()
    }
    if not (grouplike and is_central(eta)):
        raise NotPivotal("element is not a central group-like")
    return M.trace(eta)


def unity_order_bound_holds(h: BraidedAlgebraHandle, M) -> bool:
    """(dim_R M / dim M)^((dim A)^3) == 1."""
    ratio = categorical_dimension(h, M) * as_scalar(M.dim).inverse()
    return ratio ** (h.algebra.dim ** 3) == ONE


# -- the polynomials -----------------------------------------------------------------------

def p_polynomial(h: BraidedAlgebraHandle, d: int) -> InvariantPolynomial:
    inv_d = as_scalar(d).inverse()
    return InvariantPolynomial.from_roots(categorical_dimension(h, M) * inv_d for M in h.simples if M.dim == d)


def p_tilde_polynomial(h: BraidedAlgebraHandle, d: int) -> InvariantPolynomial:
    return InvariantPolynomial.from_roots(xi_scalar(v, M) for v in h.ribbons for M in h.simples if M.dim == d)


def q_polynomial(h: BraidedAlgebraHandle, d: int) -> InvariantPolynomial:
    return p_tilde_polynomial(h, d).divide(p_polynomial(h, d))


def invariant_signature(h: BraidedAlgebraHandle) -> tuple:
    """((d, P^(d), Q^(d)), ...) over the dimensions of the simples."""
    out = []
    for d in sorted({M.dim for M in h.simples}):
        P = p_polynomial(h, d)
        if P.is_one():
            continue
        out.append((d, P, q_polynomial(h, d)))
    return tuple(out)


def signature_to_json(sig: tuple) -> list:
    return [{"d": d, "P": P.to_json(), "Q": Q.to_json()} for d, P, Q in sig]


def partition_by_signature(handles: list, signatures: list | None = None) -> list[list[int]]:
    """Group handle indices with equal signatures, in order of first appearance.

    Equal signatures are only a necessary condition for braided Morita
    equivalence; the first index of each class is its representative.
    """
    sigs = signatures if signatures is not None else [invariant_signature(h) for h in handles]
    classes: dict = {}
    for k, s in enumerate(sigs):
        classes.setdefault(s, []).append(k)
    return list(classes.values())


# -- closed forms --------------------------------------------------------------------------

def cyclic_closed_form_polynomials(n: int, d: int) -> tuple:
    """(P^(1), Q^(1)) of (kC_n, R_d) from the product formulas."""
    P = InvariantPolynomial.from_roots(root_of_unity(n, -d * k * k) for k in range(n))
    if n % 2:
        return P, InvariantPolynomial()
    Q = InvariantPolynomial.from_roots(root_of_unity(n, -d * k * k) * (-1) ** k for k in range(n))
    return P, Q


def _check_family(p: SuzukiParams, kind: str, i: int, j: int, sign: int):
    if sign not in (1, -1):
        raise ParameterOutOfFamily("sign must be +1 or -1")
    if kind == "sigma":
        if not (0 <= i < p.N and 0 <= j < p.L):
            raise ParameterOutOfFamily(f"(i, j) = ({i}, {j}) outside 0 <= i < N, 0 <= j < L")
    elif kind == "tau":
        if p.L != 2:
            raise ParameterOutOfFamily("tau braidings only exist for L = 2")
        if not 0 <= i < 2 * p.N:
            raise ParameterOutOfFamily(f"i = {i} outside 0 <= i < 2N")
    else:
        raise ParameterOutOfFamily(f"no closed form for braidings of kind {kind!r}")


def closed_form_polynomials(p: SuzukiParams, kind: str, i: int, j: int = 0, sign: int = 1, d: int = 1,
                            which: str = "P") -> InvariantPolynomial:
    """P^(d) or Q^(d) of a sigma or tau braiding straight from the product formulas.

    Parameters follow :func:`hopfbraid.braiding.sigma_parameters` and
    :func:`hopfbraid.braiding.tau_parameters`.  Every one-dimensional root
    occurs twice, once for each sign of the group-like.
    """
    _check_family(p, kind, i, j, sign)
    if which not in ("P", "Q"):
        raise ValueError("which must be 'P' or 'Q'")
    if d not in (1, 2):
        return InvariantPolynomial()
    N, L, m = p.N, p.L, p.conductor
    w = lambda e: root_of_unity(m, e)  # noqa: E731
    roots = []
    if kind == "sigma":
        K = 2 * i + (1 - p.nu) // 2
        J = 2 * j + (1 - p.lam) // 2
        if d == 1:
            eps = 1 if which == "P" else (-1) ** L
            flip = eps * sign ** L * (-1) ** (j * L)
            for s in range(1, N + 1):
                roots += [w(-4 * s * s * L * K)] * 2
                roots += [w(-(2 * s + L) ** 2 * L * K + L * L * N * (1 - p.lam) // 2) * flip] * 2
        else:
            for s in range(N):
                for t in range(1, L):
                    eps = 1 if which == "P" else (-1) ** t
                    roots.append(w(-L * (2 * s + t) ** 2 * K + t * t * N * J) * (eps * sign ** t))
    else:
        if d == 1:
            for s in range(1, N + 1):
                roots += [w(-16 * i * s * s)] * 2
                roots += [w(-16 * i * (s + 1) ** 2) * p.lam] * 2
        else:
            eps = 1 if which == "P" else -1
            roots = [w(-4 * i * (2 * s + 1) ** 2) * eps for s in range(N)]
    return InvariantPolynomial.from_roots(roots)


def xi_closed_form(B: BraidingForm, M) -> tuple:
    """(xi_Upsilon(M), xi of the other coribbon element) from the parameters.

    ``M`` must carry the ``meta`` tags set by
    :func:`hopfbraid.suzuki.suzuki_simple_comodules`.
    """
    p = B.algebra.params
    L = p.L
    kind = M.meta.get("type")
    s = M.meta.get("s")
    if B.kind == "sigma":
        a, b = B.params["alpha"], B.params["beta"]
        ab = a * b
        if kind == "even":
            x = ab ** (-2 * s * s)
            return x, x
        if kind == "odd":
            x = ab ** (-2 * s * s - 2 * s * L - L * L) * a ** (L * L)
            return x, x * (-1) ** L
        t = M.meta["t"]
        x = ab ** (-2 * s * s - 2 * s * t - t * t) * a ** (t * t)
        return x, x * (-1) ** t
    if B.kind == "tau":
        g = B.params["gamma"]
        if kind == "even":
            x = g ** (-4 * s * s)
            return x, x
        if kind == "odd":
            x = g ** (-4 * (s + 1) ** 2) * p.lam
            return x, x
        x = g ** (-(2 * s + 1) ** 2)
        return x, -x
    raise ParameterOutOfFamily(f"no closed form for braidings of kind {B.kind!r}")
