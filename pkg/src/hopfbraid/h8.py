"""The Kac-Paljutkin algebra H8 = A_{12}^{+-}: automorphisms and braided classes.

As an algebra H8 is the group algebra of the dihedral group
D8 = <t, w | t^2 = w^4 = 1, tw = w^{-1}t>, via

    phi(t) = x12 + x22,   phi(w) = x11 x22 - x21 x12.

The Hopf automorphisms are id, f_+, f_- and f_+- = f_+ f_-, where
f_pm(w) = w^{-1} and f_pm(t) = w^{pm 1} t; on D8 these are group
automorphisms, so they act on the group basis by permutations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (
    AxiomReport,
    Element,
    FiniteDimHopfAlgebra,
    _acc,
    dual_hopf,
    group_algebra,
    verify_hopf_axioms,
)
from .braiding import BraidingForm, enumerate_braidings, transport_braiding
from .cyclotomic import ONE, ZERO, Rational, as_scalar, root_of_unity
from .errors import AutomorphismCheckFailed, ClassificationMismatch, IsoCheckFailed
from .invariants import braiding_handle, invariant_signature, partition_by_signature, signature_to_json
from .linalg import mat_inverse, rank
from .suzuki import SuzukiAlgebra, SuzukiParams, construct_suzuki, is_group_like

HALF = as_scalar(Rational(1, 2))
I = root_of_unity(4, 1)


def h8(cache=None) -> SuzukiAlgebra:
    return construct_suzuki(SuzukiParams(1, 2, 1, -1), cache=cache)


# -- the dihedral picture -------------------------------------------------------------------

def _d8_index(a: int, b: int) -> int:
    return (a % 4) + 4 * (b % 2)


def _d8_mul(g: int, h: int) -> int:
    a, b = g % 4, g // 4
    c, d = h % 4, h // 4
    return _d8_index(a + (-1) ** b * c, b + d)


D8_LABELS = ["1", "w", "w^2", "w^3", "t", "wt", "w^2t", "w^3t"]


def d8_group_algebra() -> FiniteDimHopfAlgebra:
    table = [[_d8_mul(g, h) for h in range(8)] for g in range(8)]
    inv = [next(h for h in range(8) if table[g][h] == 0) for g in range(8)]
    return group_algebra(table, inv, D8_LABELS, name="kD8")


def kd8_hopf() -> FiniteDimHopfAlgebra:
    """kD8 with the coproduct, counit and antipode making phi a Hopf map.

    Built from the formulas on the generators only:
    Delta(t) = w^{-1}t (x) e1 t + t (x) e0 t,  Delta(w) = w (x) e0 w + w^{-1} (x) e1 w,
    eps(t) = eps(w) = 1,  S(t) = (e0 - e1 w) t,  S(w) = w,
    with e0 = (1 + w^2)/2 and e1 = (1 - w^2)/2.
    """
    G = d8_group_algebra()
    w, t = G.basis(_d8_index(1, 0)), G.basis(_d8_index(0, 1))
    one = G.one()
    winv = w ** 3
    e0 = (one + w * w) * HALF
    e1 = (one - w * w) * HALF

    def tens(x: Element, y: Element) -> dict:
        out: dict = {}
        for i, a in x.terms.items():
            for j, b in y.terms.items():
                _acc(out, (i, j), a * b)
        return out

    def add(*parts) -> dict:
        out: dict = {}
        for part in parts:
            for k, v in part.items():
                _acc(out, k, v)
        return out

    dt = add(tens(winv * t, e1 * t), tens(t, e0 * t))
    dw = add(tens(w, e0 * w), tens(winv, e1 * w))
    st = (e0 - e1 * w) * t
    sw = w
    comult, antipode = [], []
    for g in range(8):
        a, b = g % 4, g // 4
        d = {(0, 0): ONE}
        s = one
        for _ in range(a):
            d = G.tensor_mul(d, dw)
            s = sw * s
        for _ in range(b):
            d = G.tensor_mul(d, dt)
            s = st * s
        comult.append(d)
        antipode.append(dict(s.terms))
    return FiniteDimHopfAlgebra(D8_LABELS, G.mult, G.unit, comult, [ONE] * 8, antipode, name="kD8 (induced)")


def phi_images(H: SuzukiAlgebra | None = None) -> list[Element]:
    """phi(w^a t^b) in H8 for the group basis of kD8."""
    H = H or h8()
    t = H.x(1, 2) + H.x(2, 2)
    w = H.x(1, 1) * H.x(2, 2) - H.x(2, 1) * H.x(1, 2)
    return [w ** (g % 4) * t ** (g // 4) for g in range(8)]


def _linear_map_on(A: FiniteDimHopfAlgebra, images: list, x: dict) -> dict:
    out: dict = {}
    for i, c in x.items():
        for k, v in images[i].items():
            _acc(out, k, c * v)
    return out


def kac_paljutkin_iso_check(H: SuzukiAlgebra | None = None) -> dict:
    """Verify phi: kD8 -> H8 is an isomorphism of Hopf algebras.

    Checks the D8 relations on phi(t), phi(w), bijectivity, compatibility
    with Delta, eps and S of :func:`kd8_hopf`, the idempotents e0 and e1 and
    the expressions of the generators x_ij through w and t.
    """
    H = H or h8()
    K = kd8_hopf()
    img = phi_images(H)
    one = H.one()
    t, w = img[4], img[1]
    checks: dict = {}

    def need(name, ok, witness=None):
        checks[name] = bool(ok)
        if not ok:
            raise IsoCheckFailed(f"{name} fails" + (f" at {witness}" if witness is not None else ""))

    need("t^2 = 1", t * t == one)
    need("w^4 = 1", w ** 4 == one)
    need("tw = w^-1 t", t * w == w ** 3 * t)
    need("bijective", rank([e.coeffs for e in img], 8) == 8)
    phi = [dict(e.terms) for e in img]
    for g, h in iproduct(range(8), repeat=2):
        if _linear_map_on(H, phi, K.mult[g][h]) != dict((img[g] * img[h]).terms):
            need("multiplicative", False, (g, h))
    checks["multiplicative"] = True
    for g in range(8):
        lhs = img[g].coproduct()
        rhs: dict = {}
        for (i, j), c in K.comult[g].items():
            for p_, a in phi[i].items():
                for q, b in phi[j].items():
                    _acc(rhs, (p_, q), c * a * b)
        if lhs != rhs:
            need("comultiplicative", False, D8_LABELS[g])
        if img[g].counit() != K.counit[g]:
            need("counit", False, D8_LABELS[g])
        if dict(img[g].antipode().terms) != _linear_map_on(H, phi, K.antipode[g]):
            need("antipode", False, D8_LABELS[g])
    checks["comultiplicative"] = checks["counit"] = checks["antipode"] = True

    w2 = w * w
    e0 = (one + w2) * HALF
    e1 = (one - w2) * HALF
    need("e0, e1 orthogonal idempotents", e0 * e0 == e0 and e1 * e1 == e1 and e0 * e1 == H.zero() and e0 + e1 == one)
    need("e0, e1 central", all(e0 * H.basis(i) == H.basis(i) * e0 for i in range(8)))
    winv = w ** 3
    need("x11 = ((w + w^-1)/2) t", H.x(1, 1) == (w + winv) * HALF * t)
    need("x12 = ((1 - w^2)/2) t", H.x(1, 2) == e1 * t)
    need("x21 = ((w^-1 - w)/2) t", H.x(2, 1) == (winv - w) * HALF * t)
    need("x22 = ((1 + w^2)/2) t", H.x(2, 2) == e0 * t)
    gl = [one, w2, w * (e0 + e1 * I), w * (e0 - e1 * I)]
    need("G(H8) = {1, w^2, w(e0 +- i e1)}", all(is_group_like(g) for g in gl) and all(g * g == one for g in gl))
    return checks


# -- Hopf morphisms -------------------------------------------------------------------------

@dataclass
class HopfMorphism:
    source: FiniteDimHopfAlgebra
    target: FiniteDimHopfAlgebra
    images: list  # images[i] is the dict image of source basis element i
    name: str = ""
    params: dict = field(default_factory=dict)

    @property
    def matrix(self) -> list[list]:
        """matrix[r][i] = coefficient of target basis r in the image of source basis i."""
        n, m = self.source.dim, self.target.dim
        return [[self.images[i].get(r, ZERO) for i in range(n)] for r in range(m)]

    def __call__(self, x) -> Element:
        terms = x.terms if isinstance(x, Element) else x
        return self.target.element(_linear_map_on(self.source, self.images, terms))

    def compose(self, other: "HopfMorphism") -> "HopfMorphism":
        """self o other."""
        images = [dict(self(other.images[i]).terms) for i in range(other.source.dim)]
        return HopfMorphism(other.source, self.target, images, f"{self.name}{other.name}")

    def same_map(self, other: "HopfMorphism") -> bool:
        return self.images == other.images

    def verify(self) -> dict:
        S, T = self.source, self.target
        n = S.dim
        f = self.images
        checks = {}
        checks["unital"] = _linear_map_on(S, f, S.unit) == T.unit
        checks["multiplicative"] = all(
            _linear_map_on(S, f, S.mult[i][j]) == T.mul_terms(f[i], f[j]) for i, j in iproduct(range(n), repeat=2)
        )
        comult_ok = True
        for i in range(n):
            rhs: dict = {}
            for (j, k), c in S.comult[i].items():
                for p_, a in f[j].items():
                    for q, b in f[k].items():
                        _acc(rhs, (p_, q), c * a * b)
            if T.coproduct_terms(f[i]) != rhs:
                comult_ok = False
                break
        checks["comultiplicative"] = comult_ok
        checks["counital"] = all(T.counit_terms(f[i]) == S.counit[i] for i in range(n))
        checks["commutes with S"] = all(
            T.antipode_terms(f[i]) == _linear_map_on(S, f, S.antipode[i]) for i in range(n)
        )
        checks["bijective"] = S.dim == T.dim and rank(self.matrix, n) == n
        return checks

    def check(self) -> "HopfMorphism":
        bad = [k for k, v in self.verify().items() if not v]
        if bad:
            raise AutomorphismCheckFailed(f"{self.name or 'map'}: {', '.join(bad)}")
        return self


def _d8_automorphism(sign: int | None) -> list[int]:
    """Permutation of the group basis for w -> w^{-1}, t -> w^sign t (None: identity)."""
    if sign is None:
        return list(range(8))
    perm = []
    for g in range(8):
        a, b = g % 4, g // 4
        # f(w^a t^b) = w^{-a} (w^sign t)^b
        x = _d8_index(-a, 0)
        for _ in range(b):
            x = _d8_mul(x, _d8_index(sign, 1))
        perm.append(x)
    return perm


def h8_automorphisms(H: SuzukiAlgebra | None = None) -> list[HopfMorphism]:
    """[id, f_+, f_-, f_+-] as verified Hopf automorphisms of H8."""
    H = H or h8()
    img = phi_images(H)
    P = [[img[g].terms.get(r, ZERO) for g in range(8)] for r in range(8)]
    Pinv = mat_inverse(P)
    # basis element r of H8 written in the group basis
    to_group = [{g: Pinv[g][r] for g in range(8) if Pinv[g][r]} for r in range(8)]

    def from_perm(perm, name):
        images = []
        for r in range(8):
            acc = H.zero()
            for g, c in to_group[r].items():
                acc = acc + img[perm[g]] * c
            images.append(dict(acc.terms))
        return HopfMorphism(H, H, images, name)

    ident = from_perm(_d8_automorphism(None), "id")
    fp = from_perm(_d8_automorphism(1), "f+")
    fm = from_perm(_d8_automorphism(-1), "f-")
    fpm = fp.compose(fm)
    fpm.name = "f+-"
    auts = [ident, fp, fm, fpm]
    for f in auts:
        f.check()
    for x, y in iproduct(range(4), repeat=2):
        if x < y and auts[x].same_map(auts[y]):
            raise AutomorphismCheckFailed(f"{auts[x].name} and {auts[y].name} coincide")
    if not klein_four_table(auts):
        raise AutomorphismCheckFailed("the automorphisms do not compose as the Klein four-group")
    return auts


def klein_four_table(auts: list[HopfMorphism]) -> bool:
    """Every element is an involution and the product of two distinct non-identity maps is the third."""
    ident, a, b, c = auts
    if not all(f.compose(f).same_map(ident) for f in auts):
        return False
    return a.compose(b).same_map(c) and b.compose(a).same_map(c) and a.compose(c).same_map(b) and c.compose(a).same_map(b)


def transport(B: BraidingForm, f: HopfMorphism, verify: bool = True) -> BraidingForm:
    """The braiding sigma o (f (x) f)."""
    if f.source is not B.algebra or f.target is not B.algebra:
        raise ValueError("automorphism does not act on the braiding's algebra")
    return transport_braiding(B, f.images, verify=verify)


# -- self-duality ---------------------------------------------------------------------------

def _two_dim_rep(H: SuzukiAlgebra) -> list[list[list]]:
    """Irreducible 2-dimensional representation of H8 through the D8 picture."""
    img = phi_images(H)
    P = [[img[g].terms.get(r, ZERO) for g in range(8)] for r in range(8)]
    Pinv = mat_inverse(P)
    W = [[I, ZERO], [ZERO, -I]]
    T = [[ZERO, ONE], [ONE, ZERO]]
    from .linalg import identity, mat_mul

    group_mats = []
    for g in range(8):
        m = identity(2)
        for _ in range(g % 4):
            m = mat_mul(m, W)
        if g // 4:
            m = mat_mul(m, T)
        group_mats.append(m)
    rep = []
    for r in range(8):
        m = [[ZERO, ZERO], [ZERO, ZERO]]
        for g in range(8):
            c = Pinv[g][r]
            if c:
                for i, j in iproduct(range(2), repeat=2):
                    m[i][j] = m[i][j] + c * group_mats[g][i][j]
        rep.append(m)
    return rep


def self_duality_isomorphism(H: SuzukiAlgebra | None = None) -> HopfMorphism:
    """A verified Hopf isomorphism H8 -> H8*.

    x_ij goes to the matrix-coefficient functional of the 2-dimensional
    simple module in a basis from a finite candidate list (conjugates of a
    fixed representation by diag(1, c), c an 8th root of unity, optionally
    after a Hadamard change of basis); the first candidate whose extension
    to words respects the multiplication table is returned.
    """
    from .linalg import mat_mul

    H = H or h8()
    D = dual_hopf(H)
    base = _two_dim_rep(H)
    hadamard = [[ONE, ONE], [ONE, -ONE]]
    for use_h, k in iproduct((False, True), range(8)):
        c = root_of_unity(8, k)
        Q = [[ONE, ZERO], [ZERO, c]]
        if use_h:
            Q = mat_mul(hadamard, Q)
        Qinv = mat_inverse(Q)
        rep = [mat_mul(mat_mul(Qinv, m), Q) for m in base]
        coeff = {}
        for (i, j) in ((1, 1), (1, 2), (2, 1), (2, 2)):
            coeff[(i, j)] = {r: rep[r][i - 1][j - 1] for r in range(8) if rep[r][i - 1][j - 1]}
        letter = {"a": coeff[(1, 1)], "b": coeff[(1, 2)], "c": coeff[(2, 1)], "d": coeff[(2, 2)]}
        images = []
        for w in H.words:
            x = dict(D.unit)
            for ch in w:
                x = D.mul_terms(x, letter[ch])
            images.append(x)
        f = HopfMorphism(H, D, images, "H8 -> H8*")
        if all(f.verify().values()):
            f.params = {"conjugation": "hadamard" if use_h else "diagonal", "c": c}
            return f
    raise IsoCheckFailed("no candidate gives a Hopf isomorphism H8 -> H8*")


# -- classification -------------------------------------------------------------------------

EXPECTED_CLASSES = [
    [("sigma", 0, 0, 1)],
    [("sigma", 0, 0, -1)],
    [("sigma", 0, 1, 1)],
    [("sigma", 0, 1, -1)],
    [("tau", 1, 1), ("tau", 1, -1)],
    [("tau", -1, 1), ("tau", -1, -1)],
]


def _braiding_key(B: BraidingForm) -> tuple:
    p = B.params
    if B.kind == "sigma":
        return ("sigma", p["i"], p["j"], p["sign"])
    g, d = p["gamma"].to_fraction(), p["delta"].to_fraction()
    return ("tau", int(g), int(d))


def braiding_name(B: BraidingForm) -> str:
    return B.name


@dataclass
class ClassificationReport:
    braidings: list
    signatures: list
    signature_classes: list
    classes: list
    witnesses: list

    @property
    def names(self) -> list[str]:
        return [braiding_name(B) for B in self.braidings]

    def to_json(self) -> dict:
        names = self.names
        return {
            "braidings": names,
            "classes": [[names[k] for k in cls] for cls in self.classes],
            "representatives": [names[cls[0]] for cls in self.classes],
            "signatures": [signature_to_json(self.signatures[cls[0]]) for cls in self.classes],
            "witnesses": [{"from": names[a], "automorphism": f, "to": names[b]} for a, f, b in self.witnesses],
        }


def classify_h8(H: SuzukiAlgebra | None = None) -> ClassificationReport:
    """Braided Morita classes of the eight braidings of H8.

    Braidings with different invariant signatures are inequivalent;
    braidings related by an automorphism transport are equivalent.  The
    result is accepted only when these two bounds meet.
    """
    H = H or h8()
    braidings = sorted(enumerate_braidings(H), key=lambda B: (B.kind != "sigma", _sort_params(B)))
    handles = [braiding_handle(B) for B in braidings]
    sigs = [invariant_signature(h) for h in handles]
    sig_classes = partition_by_signature(handles, sigs)

    parent = list(range(len(braidings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    witnesses = []
    for f in h8_automorphisms(H):
        for a, B in enumerate(braidings):
            T = transport(B, f)
            hits = [b for b, C in enumerate(braidings) if C.same_form(T)]
            if len(hits) != 1:
                raise ClassificationMismatch(f"transport of {braiding_name(B)} by {f.name} is not a listed braiding")
            b = hits[0]
            if sigs[a] != sigs[b]:
                raise ClassificationMismatch(f"{f.name} transport changes the signature of {braiding_name(B)}")
            if find(a) != find(b):
                parent[find(a)] = find(b)
                witnesses.append((a, f.name, b))
    orbits: dict = {}
    for k in range(len(braidings)):
        orbits.setdefault(find(k), []).append(k)
    classes = sorted(orbits.values())
    if sorted(map(sorted, sig_classes)) != classes:
        raise ClassificationMismatch("invariants and automorphism transports leave some pairs undecided")
    keys = [[_braiding_key(braidings[k]) for k in cls] for cls in classes]
    if sorted(map(sorted, keys)) != sorted(map(sorted, EXPECTED_CLASSES)):
        raise ClassificationMismatch(f"classes {keys} differ from the expected six")
    return ClassificationReport(braidings, sigs, sig_classes, classes, witnesses)


def _sort_params(B: BraidingForm) -> tuple:
    p = B.params
    if B.kind == "sigma":
        return (p["alpha"].sort_key(), p["beta"].sort_key())
    return (p["gamma"].sort_key(), p["delta"].sort_key())


def kd8_axioms() -> AxiomReport:
    return verify_hopf_axioms(kd8_hopf())
