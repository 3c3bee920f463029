"""The Suzuki Hopf algebras A_{NL}^{nu lambda}.

The algebra is generated by a 2x2 comatrix ``x11, x12, x21, x22`` written
here as the letters ``a, b, c, d``.  Products of letters of different
parity (``a, d`` even, ``b, c`` odd) vanish, ``x22^2 = x11^2``,
``x21^2 = x12^2``, ``x11^{2N} + nu x12^{2N} = 1`` and the alternating words
of length ``L`` satisfy ``chi11^L = chi22^L`` and ``chi21^L = lambda chi12^L``.

The normal words are ``x11^s chi22^t`` (``a^s`` followed by ``t`` letters
``d a d ...``) and ``x12^s chi21^t`` (``b^s`` followed by ``c b c ...``)
with ``1 <= s <= 2N`` and ``0 <= t <= L - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .algebra import Element, FiniteDimHopfAlgebra, _acc
from .cyclotomic import ONE, ZERO, as_scalar, root_of_unity, sqrt_of_sign
from .errors import (
    ComoduleAxiomFailed,
    GroupLikeVerificationFailed,
    RelationFailed,
)
from .linalg import mat_inverse, rank, solve
from .rewriting import Presentation, Rule, algebra_from_presentation, normal_form

LETTER = {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}
EVEN, ODD = "ad", "bc"


@dataclass(frozen=True)
class SuzukiParams:
    N: int
    L: int
    nu: int = 1
    lam: int = 1

    def __post_init__(self):
        if self.N < 1 or self.L < 2:
            raise ValueError("need N >= 1 and L >= 2")
        if self.nu not in (1, -1) or self.lam not in (1, -1):
            raise ValueError("nu and lambda must be +1 or -1")

    @property
    def dim(self) -> int:
        return 4 * self.N * self.L

    @property
    def conductor(self) -> int:
        return 4 * self.N * self.L

    @property
    def omega(self):
        return root_of_unity(self.conductor, 1)

    @property
    def tag(self) -> str:
        sign = lambda e: "+" if e == 1 else "-"  # noqa: E731
        return f"A_{self.N},{self.L}^{sign(self.nu)}{sign(self.lam)}"


def alternating(first: str, second: str, length: int) -> str:
    return "".join(first if k % 2 == 0 else second for k in range(length))


def monomial_word(i: int, j: int, s: int, t: int) -> str:
    """The word x_ij^s chi_{j'i'}^t appearing in the closed formulas.

    ``(1,1)`` gives x11^s chi22^t, ``(1,2)`` x12^s chi21^t,
    ``(2,1)`` x21^s chi12^t and ``(2,2)`` x22^s chi11^t.
    """
    x = LETTER[(i, j)]
    other = {"a": "d", "d": "a", "b": "c", "c": "b"}[x]
    return x * s + alternating(other, x, t)


def suzuki_presentation(p: SuzukiParams) -> Presentation:
    N, L, nu, lam = p.N, p.L, p.nu, p.lam
    rules = []
    for x in EVEN:
        for y in ODD:
            rules.append(Rule.make(x + y, {}))
            rules.append(Rule.make(y + x, {}))
    rules += [
        Rule.make("dd", "aa"),
        Rule.make("daa", "aad"),
        Rule.make("a" * (2 * N + 1), "a"),
        Rule.make(alternating("d", "a", L), alternating("a", "d", L)),
        Rule.make(alternating("a", "d", L + 1), "aa" + alternating("d", "a", L - 1)),
        Rule.make(alternating("d", "a", L + 1), "aa" + alternating("a", "d", L - 1)),
        Rule.make("cc", "bb"),
        Rule.make("cbb", "bbc"),
        Rule.make("b" * (2 * N + 1), {"b": nu}),
        Rule.make(alternating("c", "b", L), {alternating("b", "c", L): lam}),
        Rule.make(alternating("b", "c", L + 1), {"bb" + alternating("c", "b", L - 1): lam}),
        Rule.make(alternating("c", "b", L + 1), {"bb" + alternating("b", "c", L - 1): lam}),
        # a word may not start with d or c; multiply by the unit on the left
        Rule.make("d", "a" * (2 * N) + "d", anchored=True),
        Rule.make("c", {"b" * (2 * N) + "c": nu}, anchored=True),
    ]
    unit = {"a" * (2 * N): ONE, "b" * (2 * N): as_scalar(nu)}
    bound = 8 * N * (2 * N + L + 2) + 4 * L
    return Presentation("abcd", rules, degree_bound=bound, unit_expansion=unit)


def suzuki_basis_words(p: SuzukiParams) -> list[str]:
    words = []
    for first in ((1, 1), (1, 2)):
        for s in range(1, 2 * p.N + 1):
            for t in range(p.L):
                words.append(monomial_word(*first, s, t))
    return words


def _label(i: int, j: int, s: int, t: int) -> str:
    other = {(1, 1): "22", (1, 2): "21"}[(i, j)]
    base = f"x{i}{j}" if s == 1 else f"x{i}{j}^{s}"
    if t == 0:
        return base
    return base + (f"χ{other}" if t == 1 else f"χ{other}^{t}")


class SuzukiAlgebra(FiniteDimHopfAlgebra):
    """A Suzuki algebra together with its presentation and word index."""

    params: SuzukiParams
    presentation: Presentation
    words: list

    def word_index(self, w: str) -> int:
        return self._word_pos[w]

    def from_word(self, w: str) -> Element:
        """Normal form of a word in the letters a=x11, b=x12, c=x21, d=x22."""
        return self.from_words({w: ONE})

    def from_words(self, lin: dict) -> Element:
        nf = normal_form(self.presentation, lin)
        return self.element({self._word_pos[w]: c for w, c in nf.items()})

    def x(self, i: int, j: int) -> Element:
        return self.from_word(LETTER[(i, j)])

    def monomial(self, i: int, j: int, s: int, t: int) -> Element:
        return self.from_word(monomial_word(i, j, s, t))

    def basis_params(self, k: int) -> tuple[int, int, int, int]:
        """``(i, j, s, t)`` with basis element k equal to x_ij^s chi^t (ij = 11 or 12)."""
        return self._params_of[k]


def _closed_form_coproduct(A: SuzukiAlgebra) -> list[dict]:
    out = []
    for k in range(A.dim):
        i, j, s, t = A.basis_params(k)
        if (i, j) == (1, 1):
            pairs = [((1, 1), (1, 1)), ((1, 2), (2, 1))]
        else:
            pairs = [((1, 1), (1, 2)), ((1, 2), (2, 2))]
        d: dict = {}
        for left, right in pairs:
            lx = A.monomial(*left, s, t)
            rx = A.monomial(*right, s, t)
            for p, cp in lx.terms.items():
                for q, cq in rx.terms.items():
                    _acc(d, (p, q), cp * cq)
        out.append(d)
    return out


def _closed_form_antipode(A: SuzukiAlgebra) -> list[dict]:
    N = A.params.N
    out = []
    for k in range(A.dim):
        i, j, s, t = A.basis_params(k)
        e = (4 * N - 2) * (t + s) + s
        even = (s + t) % 2 == 0
        if (i, j) == (1, 1):
            target = (2, 2) if even else (1, 1)
        else:
            target = (1, 2) if even else (2, 1)
        out.append(dict(A.monomial(*target, e, t).terms))
    return out


def construct_suzuki(p: SuzukiParams, cache=None) -> SuzukiAlgebra:
    """Build A_{NL}^{nu lambda} with multiplication from rewriting.

    ``cache`` is an optional :class:`hopfbraid.cache.TableCache`; it only
    stores the multiplication table and unit.
    """
    P = suzuki_presentation(p)
    words = suzuki_basis_words(p)
    key = f"suzuki-{p.N}-{p.L}-{p.nu}-{p.lam}"
    loaded = cache.load(key) if cache is not None else None
    if loaded is not None:
        mult, unit = loaded
    else:
        mult, unit = algebra_from_presentation(P, words)
        if cache is not None:
            cache.store(key, mult, unit)
    n = len(words)
    A = SuzukiAlgebra.__new__(SuzukiAlgebra)
    A.params = p
    A.presentation = P
    A.words = words
    A._word_pos = {w: i for i, w in enumerate(words)}
    A._params_of = []
    for first in ((1, 1), (1, 2)):
        for s in range(1, 2 * p.N + 1):
            for t in range(p.L):
                A._params_of.append((*first, s, t))
    labels = [_label(*A._params_of[k]) for k in range(n)]
    # placeholder coalgebra so that element helpers work while the real one is built
    FiniteDimHopfAlgebra.__init__(A, labels, mult, unit, [{} for _ in range(n)], [ZERO] * n,
                                  [{} for _ in range(n)], name=p.tag)
    comult = _closed_form_coproduct(A)
    antipode = _closed_form_antipode(A)
    counit = [_counit_of_word(w) for w in words]
    FiniteDimHopfAlgebra.__init__(A, labels, mult, unit, comult, counit, antipode, name=p.tag)
    return A


def _counit_of_word(w: str):
    # eps(x_ij) = delta_ij: a word has counit 1 if it only uses a and d
    return ONE if all(ch in EVEN for ch in w) else ZERO


# -- cross-checks of the installed structure ---------------------------------------

def generator_coproduct(A: SuzukiAlgebra, k: int) -> dict:
    """Delta of basis element k computed as a product of Delta(letters)."""
    letters = {}
    for (i, j), ch in LETTER.items():
        d: dict = {}
        for m in (1, 2):
            for p_, cp in A.x(i, m).terms.items():
                for q, cq in A.x(m, j).terms.items():
                    _acc(d, (p_, q), cp * cq)
        letters[ch] = d
    word = A.words[k]
    acc = {(u, v): c1 * c2 for u, c1 in A.unit.items() for v, c2 in A.unit.items()}
    for ch in word:
        acc = A.tensor_mul(acc, letters[ch])
    return acc


def generator_antipode(A: SuzukiAlgebra, k: int) -> dict:
    """S of basis element k from S(x_ij) = x_ji^{4N-1}, extended anti-multiplicatively."""
    N = A.params.N
    images = {LETTER[(i, j)]: LETTER[(j, i)] * (4 * N - 1) for (i, j) in LETTER}
    word = "".join(images[ch] for ch in reversed(A.words[k]))
    return dict(A.from_word(word).terms)


# -- group-likes and comodules -------------------------------------------------------

def is_group_like(g: Element) -> bool:
    gg: dict = {}
    for i, a in g.terms.items():
        for j, b in g.terms.items():
            _acc(gg, (i, j), a * b)
    return g.coproduct() == gg and g.counit() == ONE


def suzuki_group_likes(A: SuzukiAlgebra) -> list[Element]:
    p = A.params
    root = sqrt_of_sign(p.lam)
    out = []
    for s in range(1, p.N + 1):
        for sign in (1, -1):
            out.append(A.from_words({"a" * (2 * s): ONE, "b" * (2 * s): as_scalar(sign)}))
    for s in range(1, p.N + 1):
        for sign in (1, -1):
            out.append(A.from_words({
                monomial_word(1, 1, 2 * s + 1, p.L - 1): ONE,
                monomial_word(1, 2, 2 * s + 1, p.L - 1): sign * root,
            }))
    for g in out:
        if not is_group_like(g):
            raise GroupLikeVerificationFailed(f"{g!r} is not group-like")
    for x, y in iproduct(range(len(out)), repeat=2):
        if x < y and out[x] == out[y]:
            raise GroupLikeVerificationFailed(f"group-likes {x} and {y} coincide")
    return out


class Comodule:
    """Right comodule spanned by elements of A with coaction induced by Delta.

    ``coaction[j][i]`` is the element ``a_ji`` with ``rho(e_i) = sum_j e_j (x) a_ji``.
    """

    def __init__(self, algebra: FiniteDimHopfAlgebra, coaction, vectors=None, label: str = "", meta=None):
        self.algebra = algebra
        self.coaction = coaction
        self.vectors = vectors
        self.label = label
        self.meta = meta or {}

    @property
    def dim(self) -> int:
        return len(self.coaction)

    def character(self) -> Element:
        ch = self.algebra.zero()
        for i in range(self.dim):
            ch = ch + self.coaction[i][i]
        return ch

    def conjugated(self, P: list[list]) -> "Comodule":
        """Coaction in the basis ``e'_i = sum_j P[j][i] e_j``."""
        Pinv = mat_inverse(P)
        d = self.dim
        A = self.algebra
        new = [[A.zero() for _ in range(d)] for _ in range(d)]
        for j, i in iproduct(range(d), repeat=2):
            acc = A.zero()
            for k, m in iproduct(range(d), repeat=2):
                c = Pinv[j][k] * P[m][i]
                if c:
                    acc = acc + self.coaction[k][m] * c
            new[j][i] = acc
        return Comodule(A, new, None, self.label)

    def verify(self):
        d = self.dim
        for j, i in iproduct(range(d), repeat=2):
            lhs = self.coaction[j][i].coproduct()
            rhs: dict = {}
            for k in range(d):
                for p_, cp in self.coaction[j][k].terms.items():
                    for q, cq in self.coaction[k][i].terms.items():
                        _acc(rhs, (p_, q), cp * cq)
            if lhs != rhs:
                raise ComoduleAxiomFailed(f"coassociativity fails at entry ({j},{i}) of {self.label}")
            if self.coaction[j][i].counit() != (ONE if i == j else ZERO):
                raise ComoduleAxiomFailed(f"counit fails at entry ({j},{i}) of {self.label}")

    def __repr__(self):
        return f"Comodule({self.label or '?'}, dim={self.dim})"


def subcomodule_from_vectors(A: FiniteDimHopfAlgebra, vectors: list[Element], label: str = "") -> Comodule:
    """Coaction on the span of ``vectors`` induced by Delta (they must span a right coideal)."""
    d = len(vectors)
    n = A.dim
    rows = [[v.terms.get(r, ZERO) for v in vectors] for r in range(n)]
    deltas = [v.coproduct() for v in vectors]
    coaction = [[{} for _ in range(d)] for _ in range(d)]
    for i, D in enumerate(deltas):
        by_right: dict = {}
        for (p_, q), c in D.items():
            by_right.setdefault(q, {})[p_] = c
        for q, col in by_right.items():
            y = solve(rows, [col.get(r, ZERO) for r in range(n)], d)
            if y is None:
                raise ComoduleAxiomFailed(f"span of {label} is not closed under the coaction")
            for j in range(d):
                if y[j]:
                    coaction[j][i][q] = y[j]
    M = Comodule(A, [[A.element(coaction[j][i]) for i in range(d)] for j in range(d)], vectors, label)
    M.verify()
    return M


def suzuki_simple_comodules(A: SuzukiAlgebra, group_likes=None) -> list[Comodule]:
    p = A.params
    gl = group_likes if group_likes is not None else suzuki_group_likes(A)
    out = []
    for k, g in enumerate(gl):
        M = subcomodule_from_vectors(A, [g], label=f"kg{k}")
        if group_likes is None:
            # matches the order produced by suzuki_group_likes
            M.meta = {"type": "even" if k < 2 * p.N else "odd", "s": (k % (2 * p.N)) // 2 + 1, "sign": 1 - 2 * (k % 2)}
        out.append(M)
    for s in range(p.N):
        for t in range(1, p.L):
            vecs = [A.from_word(monomial_word(1, 1, 2 * s, t)), A.from_word(monomial_word(1, 2, 2 * s, t))]
            M = subcomodule_from_vectors(A, vecs, label=f"V{s},{t}")
            M.meta = {"type": "V", "s": s, "t": t}
            out.append(M)
    return out


def comodules_are_complete(A: FiniteDimHopfAlgebra, comodules: list[Comodule]) -> bool:
    """Sum of squared dimensions is dim A and the matrix coefficients span A."""
    if sum(M.dim ** 2 for M in comodules) != A.dim:
        return False
    coeffs = [M.coaction[j][i].coeffs for M in comodules for j in range(M.dim) for i in range(M.dim)]
    return rank(coeffs, A.dim) == A.dim


def character(M: Comodule) -> Element:
    return M.character()


# -- the group algebra case ---------------------------------------------------------

def verify_group_algebra_iso(p: SuzukiParams) -> dict:
    """Check the images of h, t, w satisfy the G_NL relations and span A.

    Only meaningful for odd N, nu = +1 and lambda = +1 for odd L, -1 for
    even L.  With nu = -1 the image of t squares to x11^2 + x12^2, not 1.
    """
    if p.N % 2 == 0 or p.nu != 1 or p.lam != (1 if p.L % 2 else -1):
        raise ValueError("requires N odd, nu = +1 and lambda = (-1)^(L+1)")
    A = construct_suzuki(p)
    N, L = p.N, p.L
    h = A.from_words({"aa": ONE, "bb": -ONE})
    t = A.from_words({"b" * N: ONE, "d" * N: ONE})
    w = A.from_words({"a" * (2 * N - 1) + "d": ONE, "c" * (2 * N - 1) + "b": -ONE})
    one = A.one()

    def inv(x):
        # inverses inside a finite group: x^{-1} = x^{order - 1}
        y, k = x, 1
        while y != one:
            y, k = y * x, k + 1
            if k > 4 * A.dim:
                raise RelationFailed("element has no finite order")
        return x ** (k - 1)

    checks = {
        "t^2 = 1": t * t == one,
        "h^2N = 1": h ** (2 * N) == one,
        "w^L = h^N": w ** L == h ** N,
        "tw = w^-1 t": t * w == inv(w) * t,
        "ht = th": h * t == t * h,
        "hw = wh": h * w == w * h,
    }
    for name, ok in checks.items():
        if not ok:
            raise RelationFailed(name)
    images = []
    for e_h in range(2 * N):
        for e_w in range(L):
            for e_t in range(2):
                images.append((h ** e_h * w ** e_w * t ** e_t).coeffs)
    full = rank(images, A.dim) == A.dim == len(images)
    if not full:
        raise RelationFailed("the images of the group elements are linearly dependent")
    checks["bijective"] = True
    return checks
