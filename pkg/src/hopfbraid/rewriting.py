"""Normal forms in finitely presented algebras by word rewriting.

Words are Python strings whose characters are generator letters.  A rule
replaces an occurrence of its left-hand word by a linear combination of
words.  Rewriting always acts on the leftmost redex; among rules matching
at the same position the one with the shortest left side wins.  A rule
marked ``anchored`` only matches at the start of a word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .cyclotomic import ONE, ZERO, as_scalar
from .errors import AssociativityFailure, BasisNotClosed, RewriteBudgetExceeded

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: tuple  # ((word, scalar), ...)
    anchored: bool = False

    @classmethod
    def make(cls, lhs: str, rhs, anchored: bool = False) -> "Rule":
        if isinstance(rhs, str):
            rhs = {rhs: ONE}
        items = tuple((w, as_scalar(c)) for w, c in rhs.items() if c)
        if any(w == lhs for w, _ in items):
            raise ValueError(f"rule {lhs!r} rewrites to itself")
        return cls(lhs, items, anchored)


@dataclass
class Presentation:
    generators: str
    rules: list
    degree_bound: int = 64
    unit_expansion: dict | None = None  # normal form of the empty word, if it is not itself normal
    budget: int = DEFAULT_BUDGET
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator letters must be distinct")
        for r in self.rules:
            if not r.lhs or any(ch not in self.generators for ch in r.lhs):
                raise ValueError(f"rule {r.lhs!r} uses unknown letters")
        self._by_first: dict = {}
        for r in sorted(self.rules, key=lambda r: len(r.lhs)):
            self._by_first.setdefault(r.lhs[0], []).append(r)

    def find_redex(self, w: str):
        for i, ch in enumerate(w):
            for r in self._by_first.get(ch, ()):
                if r.anchored and i:
                    continue
                if w.startswith(r.lhs, i):
                    return i, r
        return None

    def is_normal(self, w: str) -> bool:
        if w == "" and self.unit_expansion is not None:
            return False
        return self.find_redex(w) is None


def normal_form(P: Presentation, w, budget: int | None = None) -> dict:
    """Rewrite a word (or a linear combination ``{word: coeff}``) to normal form."""
    if isinstance(w, str):
        cached = P._cache.get(w)
        if cached is not None:
            return dict(cached)
        terms = {w: ONE}
    else:
        terms = {k: as_scalar(v) for k, v in w.items() if v}
    budget = P.budget if budget is None else budget
    steps = 0
    out: dict = {}
    pending = list(terms.items())
    while pending:
        word, c = pending.pop()
        cached = P._cache.get(word)
        if cached is not None:
            for k, v in cached.items():
                _acc(out, k, c * v)
            continue
        if len(word) > P.degree_bound:
            raise RewriteBudgetExceeded(f"word of length {len(word)} exceeds the degree bound")
        if word == "" and P.unit_expansion is not None:
            for k, v in P.unit_expansion.items():
                pending.append((k, c * as_scalar(v)))
            continue
        hit = P.find_redex(word)
        if hit is None:
            _acc(out, word, c)
            continue
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"more than {budget} rewrite steps")
        i, r = hit
        head, tail = word[:i], word[i + len(r.lhs):]
        for rw, rc in r.rhs:
            pending.append((head + rw + tail, c * rc))
    if isinstance(w, str):
        P._cache[w] = dict(out)
    return out


def _acc(target: dict, key, val):
    nv = target.get(key, ZERO) + val
    if nv:
        target[key] = nv
    else:
        target.pop(key, None)


def algebra_from_presentation(P: Presentation, expected_basis: list[str]):
    """Multiplication table and unit on a basis of normal words.

    Returns ``(mult, unit)`` in the index conventions of
    :class:`~hopfbraid.algebra.FiniteDimHopfAlgebra`.  Every basis word must be
    in normal form, every product must land in their span, and the product
    is checked for associativity and for the computed unit being two-sided.
    """
    index = {w: i for i, w in enumerate(expected_basis)}
    if len(index) != len(expected_basis):
        raise ValueError("duplicate basis words")
    for w in expected_basis:
        if not P.is_normal(w):
            raise BasisNotClosed(f"basis word {w!r} is reducible", product=w)

    def to_indices(lin: dict, what) -> dict:
        out = {}
        for word, c in lin.items():
            if word not in index:
                raise BasisNotClosed(f"{what} leaves the span of the basis (word {word!r})", product=what)
            out[index[word]] = c
        return out

    n = len(expected_basis)
    mult = [[to_indices(normal_form(P, u + v), (u, v)) for v in expected_basis] for u in expected_basis]
    unit = to_indices(normal_form(P, ""), "unit")

    def mul(x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in mult[i][j].items():
                    _acc(out, k, a * b * c)
        return out

    for i, j, k in iproduct(range(n), repeat=3):
        if mul(mult[i][j], {k: ONE}) != mul({i: ONE}, mult[j][k]):
            raise AssociativityFailure(f"({expected_basis[i]}*{expected_basis[j]})*{expected_basis[k]} differs")
    for i in range(n):
        if mul(unit, {i: ONE}) != {i: ONE} or mul({i: ONE}, unit) != {i: ONE}:
            raise AssociativityFailure(f"unit is not two-sided on {expected_basis[i]!r}")
    return mult, unit
