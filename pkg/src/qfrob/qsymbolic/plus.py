"""Degree-wise model of the positive part as the free algebra modulo the
quantum Serre ideal, over Q(v).

Each degree nu is presented as a quotient of the span of E_i (x) U_{nu - alpha_i}
by the Serre relations s * b (b running over a basis of U_{nu - deg s}).
Leading-column elimination leaves a set of free columns; these are the
"standard words" of the degree, and the reduced rows give the left
multiplication maps by the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import RankTooLarge, WindowExceeded
from ..exactnum import ONE, ZERO, RationalFunction, generic_qfactorial
from ..rootdata import CartanDatum

Word = tuple[int, ...]
Vec = dict  # Word -> RationalFunction
Degree = tuple[int, ...]

SUPPORTED = {"A1", "A1xA1", "A2", "B2", "C2", "G2"}


def add_into(acc: dict, vec: dict, scale: RationalFunction = ONE) -> None:
    """acc += scale * vec, dropping zeros."""
    one = scale.is_one()
    for k, c in vec.items():
        val = c if one else c * scale
        old = acc.get(k)
        if old is None:
            acc[k] = val
        else:
            new = old + val
            if new.is_zero():
                del acc[k]
            else:
                acc[k] = new


def scaled(vec: dict, scale: RationalFunction) -> dict:
    if scale.is_zero():
        return {}
    if scale.is_one():
        return dict(vec)
    return {k: c * scale for k, c in vec.items()}


def word_degree(word: Sequence[int], rank: int) -> Degree:
    deg = [0] * rank
    for i in word:
        deg[i] += 1
    return tuple(deg)


@dataclass
class DegreeData:
    degree: Degree
    words: list[Word]
    index: dict[Word, int]
    # left[i][k]: image of E_i * (basis k of degree - alpha_i), as {word: coef}
    left: dict[int, list[dict]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.words)


def serre_elements(cartan: CartanDatum) -> list[tuple[int, int, dict[Word, RationalFunction]]]:
    """Free-algebra Serre elements sum_r (-1)^r E_i^{(1-a-r)} E_j E_i^{(r)}."""
    out = []
    n = cartan.rank
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = 1 - cartan.cartan_matrix[i][j]
            di = cartan.d[i]
            elt = {}
            for r in range(m + 1):
                coef = ONE / (generic_qfactorial(m - r, di) * generic_qfactorial(r, di))
                if r % 2:
                    coef = -coef
                elt[(i,) * (m - r) + (j,) + (i,) * r] = coef
            out.append((i, j, elt))
    return out


class PlusPart:
    """U^+ over Q(v) truncated at height ``height_bound``; degrees built lazily."""

    def __init__(self, cartan: CartanDatum, height_bound: int):
        if cartan.rank > 2 or cartan.name not in SUPPORTED:
            raise RankTooLarge(f"symbolic engine supports rank <= 2 types {sorted(SUPPORTED)}, got {cartan.name}")
        self.cartan = cartan
        self.rank = cartan.rank
        self.height_bound = height_bound
        self.serre = [
            (word_degree(next(iter(e)), self.rank), e) for _, _, e in serre_elements(cartan)
        ]
        zero = tuple([0] * self.rank)
        self._degrees: dict[Degree, DegreeData] = {zero: DegreeData(zero, [()], {(): 0})}

    # ------------------------------------------------------------------
    def degree(self, nu: Sequence[int]) -> DegreeData:
        nu = tuple(nu)
        got = self._degrees.get(nu)
        if got is not None:
            return got
        if any(c < 0 for c in nu):
            return DegreeData(nu, [], {})
        if sum(nu) > self.height_bound:
            raise WindowExceeded(f"degree {nu} exceeds height window {self.height_bound}; raise the height bound")
        data = self._build(nu)
        self._degrees[nu] = data
        return data

    def dim(self, nu: Sequence[int]) -> int:
        return self.degree(nu).dim

    def _sub(self, nu: Degree, i: int) -> Degree:
        return tuple(c - (k == i) for k, c in enumerate(nu))

    def _build(self, nu: Degree) -> DegreeData:
        rank = self.rank
        subs = {i: self.degree(self._sub(nu, i)) for i in range(rank) if nu[i] > 0}
        # columns: (i, word) with word a standard word of nu - alpha_i
        cols = [(i, w) for i in sorted(subs) for w in subs[i].words]
        key = {c: (c[0],) + c[1] for c in cols}
        rows = []
        for mu, elt in self.serre:
            rest = tuple(a - b for a, b in zip(nu, mu))
            if any(c < 0 for c in rest):
                continue
            for b in self.degree(rest).words:
                row: dict = {}
                for w, coef in elt.items():
                    vec = self.apply_word(w[1:], {b: ONE})
                    for bw, c in vec.items():
                        col = (w[0], bw)
                        add_into(row, {col: c}, coef)
                if row:
                    rows.append(row)
        pivots: dict = {}
        for row in rows:
            row = dict(row)
            while row:
                lead = max(row, key=lambda c: key[c])
                prow = pivots.get(lead)
                if prow is None:
                    inv = ONE / row[lead]
                    pivots[lead] = {c: v * inv for c, v in row.items()}
                    break
                add_into(row, prow, -row[lead])
        free = [c for c in cols if c not in pivots]
        words = [key[c] for c in free]
        index = {w: k for k, w in enumerate(words)}
        # express every column through free columns
        memo: dict = {}

        def reduce(col) -> dict:
            if col in memo:
                return memo[col]
            if col not in pivots:
                out = {key[col]: ONE}
            else:
                out = {}
                for c, v in pivots[col].items():
                    if c != col:
                        add_into(out, reduce(c), -v)
            memo[col] = out
            return out

        data = DegreeData(nu, words, index)
        for i, sub in subs.items():
            data.left[i] = [reduce((i, w)) for w in sub.words]
        return data

    # ------------------------------------------------------------------
    # element arithmetic; elements are {standard word: coef}

    def left_letter(self, i: int, vec: dict) -> dict:
        out: dict = {}
        for w, c in vec.items():
            nu = word_degree(w, self.rank)
            target = tuple(x + (k == i) for k, x in enumerate(nu))
            data = self.degree(target)
            src = self.degree(nu)
            add_into(out, data.left[i][src.index[w]], c)
        return out

    def apply_word(self, word: Sequence[int], vec: dict) -> dict:
        """E_{w[0]} ... E_{w[-1]} * vec."""
        for i in reversed(word):
            if not vec:
                return {}
            vec = self.left_letter(i, vec)
        return vec

    def word_element(self, word: Sequence[int]) -> dict:
        return self.apply_word(word, {(): ONE})

    def from_free(self, elt: dict) -> dict:
        out: dict = {}
        for w, c in elt.items():
            add_into(out, self.word_element(w), c)
        return out

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for w, c in x.items():
            add_into(out, self.apply_word(w, y), c)
        return out

    def generator_power(self, i: int, n: int, divided: bool = True) -> dict:
        vec = self.word_element((i,) * n)
        if divided and n > 1:
            vec = scaled(vec, ONE / generic_qfactorial(n, self.cartan.d[i]))
        return vec

    def degrees_up_to(self, height: int) -> Iterable[Degree]:
        from itertools import product

        for nu in product(range(height + 1), repeat=self.rank):
            if 0 < sum(nu) <= height:
                yield nu


def homogeneous_degree(vec: dict, rank: int) -> Degree | None:
    degs = {word_degree(w, rank) for w in vec}
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop() if degs else None


def is_zero_vec(vec: dict) -> bool:
    return all(c.is_zero() for c in vec.values())


def vec_sub(x: dict, y: dict) -> dict:
    out = dict(x)
    add_into(out, y, -ONE)
    return out


ZERO_RF = ZERO
