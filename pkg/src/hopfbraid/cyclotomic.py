"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is stored at its minimal conductor ``m`` as an integer coefficient
vector over a common positive denominator, in the power basis
``1, zeta_m, ..., zeta_m^(phi(m)-1)`` reduced modulo the m-th cyclotomic
polynomial.  Two values are equal iff their stored triples are equal, so
instances are hashable and safe to use as dictionary keys.

Operands living at different conductors are lifted to the lcm conductor,
combined there, and the result is pushed back down to the smallest
conductor whose field contains it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, InvalidSign, ZeroInput

__all__ = [
    "Rational",
    "CyclotomicScalar",
    "ZERO",
    "ONE",
    "as_scalar",
    "root_of_unity",
    "zeta",
    "field_arithmetic",
    "order_of_unity",
    "sqrt_of_sign",
    "cyclotomic_polynomial",
    "euler_phi",
]

Rational = Fraction


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    r = n
    for p in _prime_factors(n):
        r = r // p * (p - 1)
    return r


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m):
        if d == m:
            continue
        den = cyclotomic_polynomial(d)
        # exact division by a monic integer polynomial
        q = [0] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + len(den) - 1]
            q[i] = c
            if c:
                for j, dj in enumerate(den):
                    rem[i + j] -= c * dj
        assert not any(rem), (m, d)
        num = q
    return tuple(num)


@lru_cache(maxsize=None)
def _powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of x^e mod Phi_m for 0 <= e < m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    cur = [1] + [0] * (deg - 1)
    rows = []
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce_poly(m: int, poly: list[int]) -> tuple[int, ...]:
    pw = _powers(m)
    deg = euler_phi(m)
    out = list(poly[:deg]) + [0] * max(0, deg - len(poly))
    for e in range(deg, len(poly)):
        c = poly[e]
        if c:
            for i, r in enumerate(pw[e % m]):
                if r:
                    out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=None)
def _lift_rows(m: int, big: int) -> tuple[tuple[int, ...], ...]:
    step = big // m
    pw = _powers(big)
    return tuple(pw[(j * step) % big] for j in range(euler_phi(m)))


def _lift(m: int, nums: tuple[int, ...], big: int) -> tuple[int, ...]:
    if m == big:
        return nums
    rows = _lift_rows(m, big)
    out = [0] * euler_phi(big)
    for c, row in zip(nums, rows):
        if c:
            for i, r in enumerate(row):
                if r:
                    out[i] += c * r
    return tuple(out)


@lru_cache(maxsize=None)
def _subfield_solver(m: int, sub: int):
    """Row-reduction data for testing membership of Q(zeta_m) values in Q(zeta_sub).

    Returns ``(T, k)`` with ``T`` a square Fraction matrix such that
    ``T @ E = [I_k; 0]`` for the embedding matrix ``E``.
    """
    n = euler_phi(m)
    k = euler_phi(sub)
    cols = _lift_rows(sub, m)  # cols[j] = coordinates of zeta_sub^j
    # augmented rows [E | I]
    rows = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(int(i == r)) for r in range(n)]
            for i in range(n)]
    piv_row = 0
    for col in range(k):
        sel = next(r for r in range(piv_row, n) if rows[r][col] != 0)
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        pv = rows[piv_row][col]
        rows[piv_row] = [x / pv for x in rows[piv_row]]
        for r in range(n):
            if r != piv_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
        piv_row += 1
    T = tuple(tuple(row[k:]) for row in rows)
    return T, k


@lru_cache(maxsize=1 << 18)
def _descend(m: int, nums: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    while m > 1:
        for p in _prime_factors(m):
            sub = m // p
            if sub % 4 == 2:
                sub //= 2
            T, k = _subfield_solver(m, sub)
            tv = [sum(t * c for t, c in zip(row, nums) if c) for row in T]
            if all(x == 0 for x in tv[k:]):
                # integral elements have integral power-basis coordinates
                assert all(x.denominator == 1 for x in tv[:k])
                m, nums = sub, tuple(int(x) for x in tv[:k])
                break
        else:
            break
    return m, nums


class CyclotomicScalar:
    """An element of Q(zeta_m), immutable and canonical.

    Use :func:`root_of_unity`, :func:`as_scalar` or arithmetic on existing
    values to build instances.
    """

    __slots__ = ("m", "nums", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, CyclotomicScalar):
            m, nums, den = value.m, value.nums, value.den
        else:
            q = Fraction(value)
            m, nums, den = 1, (q.numerator,), q.denominator
        self.m, self.nums, self.den = m, nums, den
        self._hash = hash((m, nums, den))

    @classmethod
    def _raw(cls, m: int, nums: tuple[int, ...], den: int) -> "CyclotomicScalar":
        obj = object.__new__(cls)
        obj.m, obj.nums, obj.den = m, nums, den
        obj._hash = hash((m, nums, den))
        return obj

    @classmethod
    def _make(cls, m: int, nums: tuple[int, ...], den: int = 1) -> "CyclotomicScalar":
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
        if g == den and not any(nums):
            return ZERO
        if den < 0:
            g = -g
        if g != 1:
            nums = tuple(c // g for c in nums)
            den //= g
        if m > 1:
            m, nums = _descend(m, nums)
        return cls._raw(m, nums, den)

    @classmethod
    def from_coeffs(cls, m: int, coeffs) -> "CyclotomicScalar":
        """Build from rational power-basis coordinates at conductor ``m``."""
        if m % 4 == 2:
            # work in the equal field at conductor 2m
            z = root_of_unity(m, 1)
            return sum((Fraction(c) * z ** j for j, c in enumerate(coeffs)), ZERO)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != euler_phi(m):
            raise ValueError(f"expected {euler_phi(m)} coefficients for conductor {m}")
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        return cls._make(m, tuple(int(c * den) for c in fr), den)

    # -- inspection -------------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.m

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_rational(self) -> bool:
        return self.m == 1

    def to_fraction(self) -> Fraction:
        if self.m != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    def sort_key(self):
        return (self.m, self.coeffs)

    # -- arithmetic -------------------------------------------------------
    def _pair(self, other):
        if self.m == other.m:
            return self.m, self.nums, other.nums
        big = _lcm(self.m, other.m)
        return big, _lift(self.m, self.nums, big), _lift(other.m, other.nums, big)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.nums[0] and other.m == 1:
            return self
        if self.m == 1 and not self.nums[0]:
            return other
        m, a, b = self._pair(other)
        da, db = self.den, other.den
        if da == db:
            return CyclotomicScalar._make(m, tuple(x + y for x, y in zip(a, b)), da)
        return CyclotomicScalar._make(m, tuple(x * db + y * da for x, y in zip(a, b)), da * db)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.m, tuple(-c for c in self.nums), self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if not self:
            raise DivisionByZero("division by zero in Q(zeta_m)")
        return _inverse(self)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = ONE
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k: int) -> "CyclotomicScalar":
        """Apply the automorphism zeta_m -> zeta_m^k (k coprime to m)."""
        if gcd(k, self.m) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        pw = _powers(self.m)
        out = [0] * euler_phi(self.m)
        for j, c in enumerate(self.nums):
            if c:
                for i, r in enumerate(pw[(j * k) % self.m]):
                    if r:
                        out[i] += c * r
        return CyclotomicScalar._make(self.m, tuple(out), self.den)

    def conjugate(self) -> "CyclotomicScalar":
        return self.galois(-1 % self.m) if self.m > 2 else self

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return self.m == other.m and self.den == other.den and self.nums == other.nums
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self == other

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return self.m != 1 or self.nums[0] != 0

    # -- rendering --------------------------------------------------------
    def __repr__(self):
        return f"CyclotomicScalar({self})"

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {"conductor": self.m, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "CyclotomicScalar":
        return cls.from_coeffs(int(obj["conductor"]), [Fraction(n, d) for n, d in obj["coeffs"]])


def _coerce(x):
    if isinstance(x, CyclotomicScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CyclotomicScalar(x)
    return NotImplemented


def as_scalar(x) -> CyclotomicScalar:
    """Coerce an int, Fraction or scalar to :class:`CyclotomicScalar`."""
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic scalar")
    return y


@lru_cache(maxsize=1 << 17)
def _mul(a: CyclotomicScalar, b: CyclotomicScalar) -> CyclotomicScalar:
    if a.m == 1:
        a, b = b, a
    if b.m == 1:
        c = b.nums[0]
        if not c:
            return ZERO
        if c == 1 and b.den == 1:
            return a
        return CyclotomicScalar._make(a.m, tuple(x * c for x in a.nums), a.den * b.den)
    m, x, y = a._pair(b)
    n = len(x)
    prod = [0] * (2 * n - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    prod[i + j] += xi * yj
    return CyclotomicScalar._make(m, _reduce_poly(m, prod), a.den * b.den)


@lru_cache(maxsize=1 << 14)
def _inverse(a: CyclotomicScalar) -> CyclotomicScalar:
    if a.m == 1:
        return CyclotomicScalar._make(1, (a.den,), a.nums[0])
    m, n = a.m, euler_phi(a.m)
    pw = _powers(m)
    # column j of the multiplication matrix holds a * zeta^j
    cols = []
    for j in range(n):
        prod = [0] * (n + j)
        for i, c in enumerate(a.nums):
            prod[i + j] = c
        cols.append(_reduce_poly(m, prod))
    rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
    for col in range(n):
        sel = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[sel] = rows[sel], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[col])]
    sol = [rows[i][n] for i in range(n)]
    del pw
    # multiply by the original denominator
    return CyclotomicScalar.from_coeffs(m, [s * a.den for s in sol])


ZERO = CyclotomicScalar._raw(1, (0,), 1)
ONE = CyclotomicScalar._raw(1, (1,), 1)


@lru_cache(maxsize=None)
def root_of_unity(m: int, k: int = 1) -> CyclotomicScalar:
    """zeta_m^k in canonical form, with zeta_m = exp(2 pi i / m)."""
    if m < 1:
        raise ValueError("conductor must be positive")
    k %= m
    if m % 4 == 2:
        return root_of_unity(2 * m, 2 * k)
    return CyclotomicScalar._make(m, _powers(m)[k], 1)


zeta = root_of_unity


def field_arithmetic(a, b, op: str):
    """Dispatch one of ``add|sub|mul|div|eq`` on two scalars."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def _unity_bound(m: int) -> int:
    # roots of unity in Q(zeta_m) are exactly the lcm(2, m)-th roots
    return m if m % 2 == 0 else 2 * m


@lru_cache(maxsize=1 << 12)
def order_of_unity(a) -> int | None:
    """Multiplicative order of ``a`` if it is a root of unity, else None."""
    a = as_scalar(a)
    if not a:
        raise ZeroInput("zero is not a unit")
    bound = _unity_bound(a.m)
    if a ** bound != ONE:
        return None
    for d in _divisors(bound):
        if a ** d == ONE:
            return d
    raise AssertionError("unreachable")


def sqrt_of_sign(lam) -> CyclotomicScalar:
    """Fixed square root of a sign: 1 for +1, zeta_4 for -1."""
    try:
        lam = as_scalar(lam)
    except TypeError:
        raise InvalidSign(f"{lam!r} is not +1 or -1") from None
    if lam == ONE:
        return ONE
    if lam == -ONE:
        return root_of_unity(4, 1)
    raise InvalidSign(f"{lam} is not +1 or -1")


@lru_cache(maxsize=1 << 12)
def _root_exponent(a: CyclotomicScalar) -> tuple[int, int] | None:
    o = order_of_unity(a) if a else None
    if o is None:
        return None
    for k in range(o):
        if gcd(k, o) == 1 and root_of_unity(o, k) == a:
            return o, k
    raise AssertionError("unreachable")


def _render_coeff_term(c: Fraction, power: str) -> str:
    if power == "":
        return str(c)
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{c}*{power}"


def render(a: CyclotomicScalar) -> str:
    """Exact text form: roots of unity as zeta powers, others in the power basis."""
    if a.m == 1:
        return str(a.to_fraction())
    re = _root_exponent(a)
    if re is not None:
        o, k = re
        if o == 4:
            return "i" if k == 1 else "-i"
        if o % 2 == 0 and (o // 2) % 2 == 1 and o > 2:
            # -zeta_{o/2}^j reads better than zeta_{2 odd}^k
            h = o // 2
            j = ((k - h) % o) // 2
            return "-" + (f"ζ{h}" if j == 1 else f"ζ{h}^{j}")
        return f"ζ{o}" if k == 1 else f"ζ{o}^{k}"
    terms = []
    for j, c in enumerate(a.coeffs):
        if c:
            power = "" if j == 0 else (f"ζ{a.m}" if j == 1 else f"ζ{a.m}^{j}")
            terms.append(_render_coeff_term(c, power))
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
