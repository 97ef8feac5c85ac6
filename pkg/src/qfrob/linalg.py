"""Exact dense/sparse Gaussian elimination over any field whose elements
support + - * / (Fraction, RationalFunction, Cyclotomic)."""

from __future__ import annotations

from typing import Any, Sequence

Row = dict  # column index -> field element


def is_zero(x: Any) -> bool:
    f = getattr(x, "is_zero", None)
    if f is not None:
        return f()
    return x == 0


def _axpy(row: Row, other: Row, scale) -> None:
    for c, v in other.items():
        cur = row.get(c)
        val = v * scale
        if cur is None:
            if not is_zero(val):
                row[c] = val
        else:
            new = cur + val
            if is_zero(new):
                del row[c]
            else:
                row[c] = new


class Echelon:
    """Incremental row echelon form with pivot = smallest column of each row.

    Rows are kept fully reduced against each other so membership and
    coordinate queries are a single pass.
    """

    def __init__(self, one):
        self.one = one
        self.rows: dict[int, Row] = {}  # pivot column -> normalized row

    def reduce(self, row: Row) -> Row:
        row = {c: v for c, v in row.items() if not is_zero(v)}
        for p in sorted(set(row) & set(self.rows)):
            v = row.get(p)
            if v is not None:
                _axpy(row, self.rows[p], -v)
        return row

    def add(self, row: Row) -> int | None:
        """Insert ``row``; return its new pivot column or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        p = min(row)
        inv = self.one / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q, other in self.rows.items():
            v = other.get(p)
            if v is not None:
                _axpy(other, row, -v)
        self.rows[p] = row
        return p

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)


def rank(rows: Sequence[Row], one) -> int:
    e = Echelon(one)
    for r in rows:
        e.add(r)
    return e.rank


def solve_combination(gens: Sequence[Row], target: Row, one):
    """Coefficients x with sum_k x_k gens[k] = target, or None.

    Works by tagging each generator with an auxiliary column so the echelon
    form records the combination used.
    """
    e = Echelon(one)
    for k, g in enumerate(gens):
        row = {(0, c): v for c, v in g.items()}
        row[(1, k)] = one
        e.add(row)
    t = {(0, c): v for c, v in target.items()}
    red = e.reduce(t)
    if any(c[0] == 0 for c in red):
        return None
    # red = target - sum x_k gens[k] expressed in tag columns with sign flipped
    return {c[1]: -v for c, v in red.items() if c[0] == 1}


def nullspace(rows: Sequence[Row], ncols: int, one) -> list[Row]:
    """Basis of {x : sum_c row[c] x_c = 0 for every row}."""
    e = Echelon(one)
    for r in rows:
        e.add(r)
    pivots = set(e.rows)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = {f: one}
        for p, row in e.rows.items():
            v = row.get(f)
            if v is not None:
                vec[p] = -v
        out.append(vec)
    return out


def inverse(mat: Sequence[Sequence], one, zero) -> list[list]:
    """Inverse of a square matrix (list of rows)."""
    n = len(mat)
    rows = []
    for i in range(n):
        r = {j: mat[i][j] for j in range(n) if not is_zero(mat[i][j])}
        r[n + i] = one
        rows.append(r)
    e = Echelon(one)
    for r in rows:
        e.add(r)
    if any(p >= n for p in e.rows) or e.rank < n:
        raise ZeroDivisionError("matrix is singular")
    out = [[zero] * n for _ in range(n)]
    for p, row in e.rows.items():
        for c, v in row.items():
            if c >= n:
                out[p][c - n] = v
    return out


def mat_vec(rows: Sequence[Row], vec: Row, zero):
    out = []
    for r in rows:
        acc = zero
        for c, v in r.items():
            x = vec.get(c)
            if x is not None:
                acc = acc + v * x
        out.append(acc)
    return out
