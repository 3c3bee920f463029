"""Sparse exact linear algebra over cyclotomic scalars.

Rows are dictionaries ``{column: scalar}`` holding only nonzero entries.
Elimination is incremental: each incoming row is reduced against the
pivots found so far and, if anything survives, becomes a new pivot.
"""
from __future__ import annotations

from .cyclotomic import ONE, ZERO, as_scalar


class Echelon:
    """Incrementally built row-echelon form.

    Each stored pivot row is normalized so its pivot entry is 1 and has no
    entries left of the pivot column.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while True:
            hits = [c for c in row if c in pivots]
            if not hits:
                return row
            c = min(hits)
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        self.pivots[p] = {k: v * inv for k, v in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def back_substitute(self, ncols: int, free_values: dict | None = None, rhs_col: int | None = None) -> list:
        """Solve for pivot variables given values of the free ones.

        With ``rhs_col`` set, column ``rhs_col`` holds the right-hand side.
        """
        x = [ZERO] * ncols
        if free_values:
            for k, v in free_values.items():
                x[k] = v
        for p in sorted(self.pivots, reverse=True):
            if p >= ncols:
                continue
            row = self.pivots[p]
            acc = row.get(rhs_col, ZERO) if rhs_col is not None else ZERO
            for k, v in row.items():
                if k != p and k < ncols:
                    acc = acc - v * x[k]
            x[p] = acc
        return x


def rank(rows, ncols: int | None = None) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(_as_row(r))
    return ech.rank


def solve(rows, rhs, ncols: int):
    """Return one solution x of ``rows @ x = rhs`` or None if inconsistent."""
    ech = Echelon()
    for r, b in zip(rows, rhs):
        row = dict(_as_row(r))
        b = as_scalar(b)
        if b:
            row[ncols] = b
        ech.add(row)
    if ncols in ech.pivots:
        return None
    return ech.back_substitute(ncols, rhs_col=ncols)


def nullspace(rows, ncols: int) -> list[list]:
    """Basis of the solution space of ``rows @ x = 0``, one vector per free column."""
    ech = Echelon()
    for r in rows:
        ech.add(_as_row(r))
    basis = []
    for f in range(ncols):
        if f in ech.pivots:
            continue
        basis.append(ech.back_substitute(ncols, {f: ONE}))
    return basis


def _as_row(r) -> dict:
    if isinstance(r, dict):
        return {k: as_scalar(v) for k, v in r.items() if v}
    return {k: as_scalar(v) for k, v in enumerate(r) if v}


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        oi[j] = oi[j] + aik * bk[j]
    return out


def identity(n: int) -> list[list]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_inverse(a: list[list]) -> list[list] | None:
    """Inverse of a square scalar matrix, or None when singular."""
    n = len(a)
    cols = []
    for j in range(n):
        rhs = [ONE if i == j else ZERO for i in range(n)]
        x = solve(a, rhs, n)
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]
