"""Finite-dimensional Hopf algebras given by structure constants.

Conventions for an algebra with basis ``b_0 .. b_{n-1}``:

* ``mult[i][j]`` is a dict ``{k: c}`` with ``b_i b_j = sum c b_k``;
* ``unit`` is a dict ``{k: c}`` expressing ``1``;
* ``comult[i]`` is a dict ``{(j, k): c}`` with ``Delta(b_i) = sum c b_j (x) b_k``;
* ``counit[i]`` is ``eps(b_i)``;
* ``antipode[i]`` is a dict ``{j: c}`` with ``S(b_i) = sum c b_j``.

Elements of tensor powers are dicts keyed by index tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .cyclotomic import ONE, ZERO, CyclotomicScalar, as_scalar
from .errors import DimensionMismatch, NotInvertible
from .linalg import nullspace, solve


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _acc(target: dict, key, val):
    nv = target.get(key, ZERO) + val
    if nv:
        target[key] = nv
    else:
        target.pop(key, None)


class FiniteDimHopfAlgebra:
    def __init__(self, labels, mult, unit, comult, counit, antipode, name: str = ""):
        n = len(labels)
        if len(mult) != n or any(len(row) != n for row in mult):
            raise DimensionMismatch("multiplication table has the wrong shape")
        if len(comult) != n or len(counit) != n or len(antipode) != n:
            raise DimensionMismatch("coalgebra data has the wrong length")
        for d in [unit, *antipode] + [e for row in mult for e in row]:
            if any(not (0 <= k < n) for k in d):
                raise DimensionMismatch("basis index out of range")
        for d in comult:
            if any(not (0 <= j < n and 0 <= k < n) for j, k in d):
                raise DimensionMismatch("basis index out of range in comultiplication")
        self.dim = n
        self.labels = list(labels)
        self.mult = [[_clean({k: as_scalar(v) for k, v in e.items()}) for e in row] for row in mult]
        self.unit = _clean({k: as_scalar(v) for k, v in unit.items()})
        self.comult = [_clean({k: as_scalar(v) for k, v in d.items()}) for d in comult]
        self.counit = [as_scalar(v) for v in counit]
        self.antipode = [_clean({k: as_scalar(v) for k, v in d.items()}) for d in antipode]
        self.name = name

    def __repr__(self):
        return f"FiniteDimHopfAlgebra({self.name or 'unnamed'}, dim={self.dim})"

    # -- elements ---------------------------------------------------------
    def element(self, terms) -> "Element":
        if not isinstance(terms, dict):
            terms = dict(enumerate(terms))
        return Element(self, _clean({k: as_scalar(v) for k, v in terms.items()}))

    def basis(self, i: int) -> "Element":
        return Element(self, {i: ONE})

    def one(self) -> "Element":
        return Element(self, dict(self.unit))

    def zero(self) -> "Element":
        return Element(self, {})

    def index(self, label: str) -> int:
        return self.labels.index(label)

    # -- linear maps on coefficient dicts -----------------------------------
    def mul_terms(self, x: dict, y: dict) -> dict:
        out: dict = {}
        mult = self.mult
        for i, a in x.items():
            row = mult[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j].items():
                    _acc(out, k, ab * c)
        return out

    def coproduct_terms(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for key, c in self.comult[i].items():
                _acc(out, key, a * c)
        return out

    def counit_terms(self, x: dict) -> CyclotomicScalar:
        s = ZERO
        for i, a in x.items():
            if self.counit[i]:
                s = s + a * self.counit[i]
        return s

    def antipode_terms(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, c in self.antipode[i].items():
                _acc(out, j, a * c)
        return out

    def tensor_mul(self, x: dict, y: dict) -> dict:
        """Product in the tensor power; keys are index tuples of equal length."""
        out: dict = {}
        mult = self.mult
        for kx, a in x.items():
            for ky, b in y.items():
                terms = [((), a * b)]
                for i, j in zip(kx, ky):
                    nxt = []
                    prod_ij = mult[i][j]
                    if not prod_ij:
                        terms = []
                        break
                    for key, c in terms:
                        for k, d in prod_ij.items():
                            nxt.append((key + (k,), c * d))
                    terms = nxt
                for key, c in terms:
                    _acc(out, key, c)
        return out

    def apply_on_factor(self, x: dict, pos: int, fn) -> dict:
        """Apply a linear map ``fn: dict -> dict`` on one tensor factor."""
        out: dict = {}
        for key, a in x.items():
            for k, c in fn({key[pos]: ONE}).items():
                nk = key[:pos] + (k if isinstance(k, tuple) else (k,)) + key[pos + 1:]
                _acc(out, nk, a * c)
        return out

    # -- convenience ------------------------------------------------------
    def structure_equal(self, other: "FiniteDimHopfAlgebra") -> bool:
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def to_json(self) -> dict:
        enc = lambda c: c.to_json()  # noqa: E731
        return {
            "name": self.name,
            "labels": self.labels,
            "mult": [[i, j, k, enc(c)] for i in range(self.dim) for j in range(self.dim)
                     for k, c in sorted(self.mult[i][j].items())],
            "unit": [[k, enc(c)] for k, c in sorted(self.unit.items())],
            "comult": [[i, j, k, enc(c)] for i in range(self.dim)
                       for (j, k), c in sorted(self.comult[i].items())],
            "counit": [enc(c) for c in self.counit],
            "antipode": [[i, j, enc(c)] for i in range(self.dim) for j, c in sorted(self.antipode[i].items())],
        }

    @classmethod
    def from_json(cls, obj) -> "FiniteDimHopfAlgebra":
        dec = CyclotomicScalar.from_json
        n = len(obj["labels"])
        mult = [[{} for _ in range(n)] for _ in range(n)]
        for i, j, k, c in obj["mult"]:
            mult[i][j][k] = dec(c)
        comult = [{} for _ in range(n)]
        for i, j, k, c in obj["comult"]:
            comult[i][(j, k)] = dec(c)
        antipode = [{} for _ in range(n)]
        for i, j, c in obj["antipode"]:
            antipode[i][j] = dec(c)
        unit = {k: dec(c) for k, c in obj["unit"]}
        return cls(obj["labels"], mult, unit, comult, [dec(c) for c in obj["counit"]], antipode, obj.get("name", ""))


class Element:
    """An element of a finite-dimensional algebra, stored sparsely."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FiniteDimHopfAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    @property
    def coeffs(self) -> list:
        return [self.terms.get(i, ZERO) for i in range(self.algebra.dim)]

    def _wrap(self, terms):
        return Element(self.algebra, terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return self._wrap(out)

    def __neg__(self):
        return self._wrap({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self._wrap(self.algebra.mul_terms(self.terms, other.terms))
        c = as_scalar(other)
        return self._wrap(_clean({k: v * c for k, v in self.terms.items()}))

    def __rmul__(self, other):
        c = as_scalar(other)
        return self._wrap(_clean({k: c * v for k, v in self.terms.items()}))

    def __pow__(self, k: int):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coproduct(self) -> dict:
        return self.algebra.coproduct_terms(self.terms)

    def counit(self) -> CyclotomicScalar:
        return self.algebra.counit_terms(self.terms)

    def antipode(self) -> "Element":
        return self._wrap(self.algebra.antipode_terms(self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        labels = self.algebra.labels
        return " + ".join(f"({c})*{labels[k]}" for k, c in sorted(self.terms.items()))


class LinearFunctional:
    """A linear form on an algebra, given by its values on the basis."""

    __slots__ = ("algebra", "values")

    def __init__(self, algebra: FiniteDimHopfAlgebra, values):
        values = [as_scalar(v) for v in values]
        if len(values) != algebra.dim:
            raise DimensionMismatch("functional length does not match the algebra dimension")
        self.algebra = algebra
        self.values = values

    def __call__(self, x) -> CyclotomicScalar:
        terms = x.terms if isinstance(x, Element) else x
        s = ZERO
        for i, a in terms.items():
            v = self.values[i]
            if v:
                s = s + a * v
        return s

    def __mul__(self, other):
        if isinstance(other, LinearFunctional):
            return convolution(self, other)
        c = as_scalar(other)
        return LinearFunctional(self.algebra, [v * c for v in self.values])

    __rmul__ = __mul__

    def __add__(self, other):
        return LinearFunctional(self.algebra, [a + b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return LinearFunctional(self.algebra, [-a for a in self.values])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, LinearFunctional):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.values))

    def __repr__(self):
        return "LinearFunctional([" + ", ".join(str(v) for v in self.values) + "])"


def counit_functional(A: FiniteDimHopfAlgebra) -> LinearFunctional:
    return LinearFunctional(A, A.counit)


def convolution(p: LinearFunctional, q: LinearFunctional) -> LinearFunctional:
    A = p.algebra
    out = []
    for i in range(A.dim):
        s = ZERO
        for (j, k), c in A.comult[i].items():
            pj = p.values[j]
            if pj:
                qk = q.values[k]
                if qk:
                    s = s + c * pj * qk
        out.append(s)
    return LinearFunctional(A, out)


def convolution_inverse(p: LinearFunctional) -> LinearFunctional:
    """Solve ``p * q = eps`` for ``q`` and confirm ``q * p = eps``."""
    A = p.algebra
    rows = []
    for i in range(A.dim):
        row: dict = {}
        for (j, k), c in A.comult[i].items():
            if p.values[j]:
                _acc(row, k, c * p.values[j])
        rows.append(row)
    x = solve(rows, A.counit, A.dim)
    if x is None:
        raise NotInvertible("functional is not convolution invertible")
    q = LinearFunctional(A, x)
    if convolution(q, p).values != A.counit:
        raise NotInvertible("left and right convolution inverses disagree")
    return q


def central_dual_subspace(A: FiniteDimHopfAlgebra) -> list[LinearFunctional]:
    """Basis of the centre of the dual algebra.

    ``p`` is central iff ``sum p(a1) a2 = sum p(a2) a1`` for every basis ``a``.
    """
    rows = []
    for i in range(A.dim):
        per_out: dict = {}
        for (j, k), c in A.comult[i].items():
            _acc(per_out.setdefault(k, {}), j, c)
            _acc(per_out.setdefault(j, {}), k, -c)
        rows.extend(r for r in per_out.values() if r)
    return [LinearFunctional(A, v) for v in nullspace(rows, A.dim)]


def is_algebra_map(p: LinearFunctional) -> bool:
    A = p.algebra
    if p(A.unit) != ONE:
        return False
    for i in range(A.dim):
        for j in range(A.dim):
            if p(A.mult[i][j]) != p.values[i] * p.values[j]:
                return False
    return True


def is_central_functional(p: LinearFunctional) -> bool:
    A = p.algebra
    for i in range(A.dim):
        left: dict = {}
        right: dict = {}
        for (j, k), c in A.comult[i].items():
            if p.values[j]:
                _acc(left, k, c * p.values[j])
            if p.values[k]:
                _acc(right, j, c * p.values[k])
        if left != right:
            return False
    return True


def sph_of_dual(A: FiniteDimHopfAlgebra, candidates) -> list[LinearFunctional]:
    """Keep the candidates that are central, involutive group-likes of the dual."""
    eps = counit_functional(A)
    out = []
    for p in candidates:
        if p in out:
            continue
        if is_algebra_map(p) and is_central_functional(p) and convolution(p, p) == eps:
            out.append(p)
    return out


def dual_hopf(A: FiniteDimHopfAlgebra) -> FiniteDimHopfAlgebra:
    """Dual Hopf algebra in the dual basis."""
    n = A.dim
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (j, k), c in A.comult[i].items():
            mult[j][k][i] = c
    comult = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in A.mult[i][j].items():
                comult[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(A.counit) if c}
    counit = [A.unit.get(i, ZERO) for i in range(n)]
    antipode = [{} for _ in range(n)]
    for j in range(n):
        for i, c in A.antipode[j].items():
            antipode[i][j] = c
    labels = [f"{lab}*" for lab in A.labels]
    return FiniteDimHopfAlgebra(labels, mult, unit, comult, counit, antipode, name=f"dual({A.name})")


# -- axiom verification -------------------------------------------------------

@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    def record(self, name: str, witness=None):
        self.results[name] = witness

    @property
    def ok(self) -> bool:
        return all(w is None for w in self.results.values())

    def failures(self) -> dict:
        return {k: w for k, w in self.results.items() if w is not None}

    def lines(self) -> list[str]:
        return [f"{k}: {'pass' if w is None else 'FAIL at ' + repr(w)}" for k, w in self.results.items()]


def verify_hopf_axioms(A: FiniteDimHopfAlgebra) -> AxiomReport:
    """Exhaustively check the bialgebra and antipode identities on the basis."""
    n = A.dim
    rep = AxiomReport()
    rng = range(n)

    def first(pred, it):
        for w in it:
            if not pred(*w):
                return w
        return None

    def assoc(i, j, k):
        return A.mul_terms(A.mult[i][j], {k: ONE}) == A.mul_terms({i: ONE}, A.mult[j][k])

    rep.record("associativity", first(assoc, iproduct(rng, rng, rng)))

    def unital(i):
        return A.mul_terms(A.unit, {i: ONE}) == {i: ONE} == A.mul_terms({i: ONE}, A.unit)

    rep.record("unit", first(unital, ((i,) for i in rng)))

    def coassoc(i):
        d = {(j, k): c for (j, k), c in A.comult[i].items()}
        left = A.apply_on_factor(d, 0, lambda t: A.coproduct_terms(t))
        right = A.apply_on_factor(d, 1, lambda t: A.coproduct_terms(t))
        return left == right

    rep.record("coassociativity", first(coassoc, ((i,) for i in rng)))

    def counital(i):
        left: dict = {}
        right: dict = {}
        for (j, k), c in A.comult[i].items():
            if A.counit[j]:
                _acc(left, k, c * A.counit[j])
            if A.counit[k]:
                _acc(right, j, c * A.counit[k])
        return left == {i: ONE} == right

    rep.record("counit", first(counital, ((i,) for i in rng)))

    def delta_mult(i, j):
        return A.coproduct_terms(A.mult[i][j]) == A.tensor_mul(A.comult[i], A.comult[j])

    rep.record("comultiplication multiplicative", first(delta_mult, iproduct(rng, rng)))
    unit_pair = {}
    for a, ca in A.unit.items():
        for b, cb in A.unit.items():
            _acc(unit_pair, (a, b), ca * cb)
    rep.record("comultiplication unital", None if A.coproduct_terms(A.unit) == unit_pair else "Delta(1)")

    def eps_mult(i, j):
        return A.counit_terms(A.mult[i][j]) == A.counit[i] * A.counit[j]

    rep.record("counit multiplicative", first(eps_mult, iproduct(rng, rng)))
    rep.record("counit unital", None if A.counit_terms(A.unit) == ONE else "eps(1)")

    def antipode(i):
        left: dict = {}
        right: dict = {}
        for (j, k), c in A.comult[i].items():
            for key, v in A.mul_terms(A.antipode[j], {k: c}).items():
                _acc(left, key, v)
            for key, v in A.mul_terms({j: c}, A.antipode[k]).items():
                _acc(right, key, v)
        target = {k: A.counit[i] * c for k, c in A.unit.items()} if A.counit[i] else {}
        return left == target == right

    rep.record("antipode", first(antipode, ((i,) for i in rng)))
    return rep


# -- group algebras -----------------------------------------------------------

def group_algebra(mult_table, inverse_table, labels=None, name: str = "") -> FiniteDimHopfAlgebra:
    """Group Hopf algebra from a multiplication table of indices."""
    from .errors import NotAGroup

    n = len(mult_table)
    if any(len(r) != n for r in mult_table) or len(inverse_table) != n:
        raise NotAGroup("tables have inconsistent sizes")
    for i, j in iproduct(range(n), range(n)):
        if not 0 <= mult_table[i][j] < n:
            raise NotAGroup("product out of range", (i, j))
    for i, j, k in iproduct(range(n), range(n), range(n)):
        if mult_table[mult_table[i][j]][k] != mult_table[i][mult_table[j][k]]:
            raise NotAGroup("multiplication is not associative", (i, j, k))
    idents = [e for e in range(n) if all(mult_table[e][g] == g == mult_table[g][e] for g in range(n))]
    if not idents:
        raise NotAGroup("no identity element")
    e = idents[0]
    for g in range(n):
        h = inverse_table[g]
        if mult_table[g][h] != e or mult_table[h][g] != e:
            raise NotAGroup("inverse table is wrong", (g, h, e))
    labels = labels or [f"g{i}" for i in range(n)]
    mult = [[{mult_table[i][j]: ONE} for j in range(n)] for i in range(n)]
    comult = [{(i, i): ONE} for i in range(n)]
    antipode = [{inverse_table[i]: ONE} for i in range(n)]
    return FiniteDimHopfAlgebra(labels, mult, {e: ONE}, comult, [ONE] * n, antipode, name=name or f"group algebra of order {n}")


def cyclic_group_algebra(n: int) -> FiniteDimHopfAlgebra:
    """kC_n with basis a^0, ..., a^{n-1}."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv = [(-i) % n for i in range(n)]
    labels = ["1" if i == 0 else ("a" if i == 1 else f"a^{i}") for i in range(n)]
    return group_algebra(table, inv, labels, name=f"kC_{n}")


def element_inverse(x: Element) -> Element:
    """Two-sided inverse of an algebra element, by solving x * y = 1."""
    A = x.algebra
    rows = [dict() for _ in range(A.dim)]
    for j in range(A.dim):
        for k, c in A.mul_terms(x.terms, {j: ONE}).items():
            rows[k][j] = c
    y = solve(rows, [A.unit.get(k, ZERO) for k in range(A.dim)], A.dim)
    if y is None:
        raise NotInvertible("element is not invertible")
    inv = A.element(y)
    if inv * x != A.one():
        raise NotInvertible("left and right inverses differ")
    return inv


def is_central(x: Element) -> bool:
    A = x.algebra
    return all(A.mul_terms(x.terms, {i: ONE}) == A.mul_terms({i: ONE}, x.terms) for i in range(A.dim))
