"""Cartan data, root systems, Weyl group actions and the lattice tower Q <= X <= P.

Weights are integer vectors in fundamental-weight coordinates. Roots carry
their simple-root coordinates. Lattices are full-rank integer column spans in
weight coordinates, kept in Hermite normal form.

Simple-root labelling: for ``B_n`` the short simple root is node 0 and the
chain runs 0 - 1 - ... - (n-1); ``C_n``, ``F_4`` and ``G_2`` follow Bourbaki
(so in every rank-2 non-simply-laced type node 0 is short).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from flint import fmpq_mat, fmpz_mat

from .errors import InputError, NotSublattice

Weight = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Cartan matrices


def _simple_chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_block(letter: str, n: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix a_ij = <alpha_i^vee, alpha_j> and relative lengths d_i."""
    if letter == "A" and n >= 1:
        return _simple_chain(n), [1] * n
    if letter == "B" and n >= 2:
        a = _simple_chain(n)
        # node 0 short, node 1 long
        a[0][1], a[1][0] = -2, -1
        return a, [1] + [2] * (n - 1)
    if letter == "C" and n >= 2:
        a = _simple_chain(n)
        a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
        return a, [1] * (n - 1) + [2]
    if letter == "D" and n >= 4:
        a = _simple_chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a, [1] * n
    if letter == "E" and n in (6, 7, 8):
        # Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a, [1] * n
    if letter == "F" and n == 4:
        a = _simple_chain(4)
        a[1][2], a[2][1] = -1, -2
        return a, [2, 2, 1, 1]
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]], [1, 3]
    raise InputError(f"unsupported Cartan type {letter}{n}")


_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True)
class CartanDatum:
    components: tuple[tuple[str, int], ...]
    cartan_matrix: IntMatrix
    d: tuple[int, ...]
    lacing: tuple[int, ...]
    component_of: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.d)

    @property
    def name(self) -> str:
        return "x".join(f"{t}{n}" for t, n in self.components)

    def component_nodes(self, c: int) -> list[int]:
        return [i for i, k in enumerate(self.component_of) if k == c]

    @cached_property
    def symmetrized(self) -> IntMatrix:
        """(alpha_i, alpha_j) = d_i a_ij, normalized so short roots have length 2."""
        n = self.rank
        return tuple(tuple(self.d[i] * self.cartan_matrix[i][j] for j in range(n)) for i in range(n))

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """(omega_i, omega_j) as exact rationals."""
        n = self.rank
        at = fmpq_mat([[self.cartan_matrix[j][i] for j in range(n)] for i in range(n)])
        dm = fmpq_mat([[self.d[i] if i == j else 0 for j in range(n)] for i in range(n)])
        w = at.inv() * dm
        return tuple(tuple(Fraction(int(w[i, j].p), int(w[i, j].q)) for j in range(n)) for i in range(n))


def parse_type(spec: str) -> CartanDatum:
    """Parse strings such as ``A2``, ``G2`` or ``A1xB2``."""
    if not isinstance(spec, str) or not spec.strip():
        raise InputError("empty Cartan type")
    comps = []
    for part in spec.strip().replace("*", "x").replace("X", "x").split("x"):
        m = _TYPE_RE.match(part.strip().upper())
        if not m:
            raise InputError(f"cannot parse Cartan type component {part!r}")
        comps.append((m.group(1), int(m.group(2))))
    return cartan_datum(comps)


def cartan_datum(components: Sequence[tuple[str, int]]) -> CartanDatum:
    blocks = [cartan_block(t, n) for t, n in components]
    rank = sum(len(d) for _, d in blocks)
    a = [[0] * rank for _ in range(rank)]
    d: list[int] = []
    comp_of: list[int] = []
    offset = 0
    for c, (blk, dd) in enumerate(blocks):
        k = len(dd)
        for i in range(k):
            for j in range(k):
                a[offset + i][offset + j] = blk[i][j]
        d += dd
        comp_of += [c] * k
        offset += k
    lacing = tuple(max(dd) for _, dd in blocks)
    return CartanDatum(
        components=tuple((t, n) for t, n in components),
        cartan_matrix=tuple(tuple(r) for r in a),
        d=tuple(d),
        lacing=lacing,
        component_of=tuple(comp_of),
    )


# ---------------------------------------------------------------------------
# Roots


@dataclass(frozen=True, order=True)
class Root:
    q_coords: tuple[int, ...]
    d: int = field(compare=False)

    @property
    def length_class(self) -> str:
        return "short" if self.d == 1 else "long"

    @property
    def height(self) -> int:
        return sum(self.q_coords)

    def label(self, names: Sequence[str] | None = None) -> str:
        names = names or [chr(ord("a") + i) for i in range(len(self.q_coords))]
        parts = []
        for c, nm in zip(self.q_coords, names):
            if c:
                parts.append(nm if c == 1 else f"{c}{nm}")
        return "+".join(parts) or "0"


def root_label_names(datum: CartanDatum) -> list[str]:
    if datum.rank <= 8:
        return [chr(ord("a") + i) for i in range(datum.rank)]
    return [f"a{i}" for i in range(datum.rank)]


# ---------------------------------------------------------------------------
# Lattices


def _hnf_rows(gens: Iterable[Sequence[int]], dim: int) -> IntMatrix:
    rows = [list(map(int, g)) for g in gens]
    if not rows:
        return ()
    h = fmpz_mat(rows).hnf()
    out = []
    for i in range(h.nrows()):
        r = tuple(int(h[i, j]) for j in range(dim))
        if any(r):
            out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class Lattice:
    """Integer span of ``basis`` (rows are generators, in weight coordinates)."""

    basis: IntMatrix
    dim: int

    @staticmethod
    def span(gens: Iterable[Sequence[int]], dim: int) -> "Lattice":
        return Lattice(_hnf_rows(gens, dim), dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def contains(self, vec: Sequence[int]) -> bool:
        if not any(vec):
            return True
        return _hnf_rows(list(self.basis) + [tuple(vec)], self.dim) == self.basis

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, vec: Sequence[int]) -> tuple[Fraction, ...]:
        """Rational coordinates of ``vec`` against the (full-rank) basis."""
        b = fmpq_mat([list(r) for r in self.basis]).transpose()
        x = b.solve(fmpq_mat([[c] for c in vec]))
        return tuple(Fraction(int(x[i, 0].p), int(x[i, 0].q)) for i in range(self.rank))

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``vec`` modulo this full-rank lattice.

        Uses the echelon shape of the HNF basis: coordinates are reduced into
        [0, pivot) column by column.
        """
        v = list(vec)
        for row in self.basis:
            p = next(j for j, c in enumerate(row) if c)
            k = v[p] // row[p]
            if k:
                v = [a - k * b for a, b in zip(v, row)]
        return tuple(v)

    def det(self) -> int:
        if not self.is_full_rank():
            raise ValueError("determinant of a lattice that is not full rank")
        return abs(int(fmpz_mat([list(r) for r in self.basis]).det()))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.basis]


def _relative_matrix(inner: Lattice, outer: Lattice) -> fmpz_mat:
    if not outer.is_full_rank():
        raise NotSublattice("outer lattice must have full rank")
    rows = []
    for b in inner.basis:
        coords = outer.coordinates(b)
        if any(c.denominator != 1 for c in coords):
            raise NotSublattice(f"{b} is not in the outer lattice")
        rows.append([int(c) for c in coords])
    return fmpz_mat(rows) if rows else fmpz_mat(0, outer.dim)


def lattice_index(inner: Lattice, outer: Lattice) -> int:
    """|outer / inner| for a finite-index inclusion."""
    m = _relative_matrix(inner, outer)
    if inner.rank != outer.rank:
        raise NotSublattice("inner lattice has smaller rank; index is infinite")
    return abs(int(m.det()))


def quotient_invariants(inner: Lattice, outer: Lattice) -> list[int]:
    """Nontrivial elementary divisors of outer / inner (Smith normal form)."""
    m = _relative_matrix(inner, outer)
    if inner.rank != outer.rank:
        raise NotSublattice("inner lattice has smaller rank; quotient is infinite")
    s = m.snf()
    divs = [abs(int(s[i, i])) for i in range(min(s.nrows(), s.ncols()))]
    return [x for x in divs if x != 1]


# ---------------------------------------------------------------------------
# Root datum


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanDatum
    x_basis: IntMatrix  # rows: generators of X in weight coordinates

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def x_lattice(self) -> Lattice:
        return Lattice.span(self.x_basis, self.rank)

    @cached_property
    def p_lattice(self) -> Lattice:
        return Lattice.span(identity(self.rank), self.rank)

    @cached_property
    def q_lattice(self) -> Lattice:
        return Lattice.span([self.simple_root_weight(i) for i in range(self.rank)], self.rank)

    def simple_root_weight(self, i: int) -> Weight:
        a = self.cartan.cartan_matrix
        return tuple(a[j][i] for j in range(self.rank))

    def root_weight(self, root: Root | Sequence[int]) -> Weight:
        qc = root.q_coords if isinstance(root, Root) else tuple(root)
        a = self.cartan.cartan_matrix
        return tuple(sum(a[j][i] * qc[i] for i in range(self.rank)) for j in range(self.rank))

    def weight_to_root_coords(self, wt: Sequence[int]) -> tuple[Fraction, ...]:
        return self.q_lattice_coords(wt)

    def q_lattice_coords(self, wt: Sequence[int]) -> tuple[Fraction, ...]:
        a = fmpq_mat([list(r) for r in self.cartan.cartan_matrix])
        x = a.solve(fmpq_mat([[c] for c in wt]))
        return tuple(Fraction(int(x[i, 0].p), int(x[i, 0].q)) for i in range(self.rank))

    # forms -----------------------------------------------------------------
    def pair_root_weight(self, root_q: Sequence[int], wt: Sequence[int]) -> int:
        """(nu, lambda) for nu in Q (root coords) and lambda a weight; integral."""
        d = self.cartan.d
        return sum(c * d[i] * wt[i] for i, c in enumerate(root_q))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return positive_roots(self.cartan)

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        return longest_word(self.cartan)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def make_root_datum(cartan: CartanDatum | str, lattice: str | Sequence[Sequence[int]] = "sc") -> RootDatum:
    """Build a root datum; ``lattice`` is "sc", "adj" or generator rows of X."""
    if isinstance(cartan, str):
        cartan = parse_type(cartan)
    n = cartan.rank
    if isinstance(lattice, str):
        if lattice == "sc":
            gens = identity(n)
        elif lattice == "adj":
            gens = tuple(tuple(cartan.cartan_matrix[j][i] for j in range(n)) for i in range(n))
        else:
            raise InputError(f"unknown lattice selector {lattice!r}")
    else:
        gens = tuple(tuple(int(c) for c in row) for row in lattice)
        if any(len(r) != n for r in gens):
            raise InputError("lattice generators must have one coordinate per simple root")
    x = Lattice.span(gens, n)
    if not x.is_full_rank():
        raise InputError("character lattice must have full rank")
    datum = RootDatum(cartan, x.basis)
    for i in range(n):
        if not x.contains(datum.simple_root_weight(i)):
            raise InputError("character lattice does not contain the root lattice")
    return datum


def killing_form(cartan: CartanDatum, lam: Sequence[int] | Root, mu: Sequence[int] | Root) -> Fraction:
    """Normalized invariant form on weights (or roots), short roots of length 2."""
    def as_weight(x):
        if isinstance(x, Root):
            a = cartan.cartan_matrix
            return tuple(sum(a[j][i] * x.q_coords[i] for i in range(cartan.rank)) for j in range(cartan.rank))
        return tuple(x)

    lam, mu = as_weight(lam), as_weight(mu)
    g = cartan.weight_gram
    n = cartan.rank
    return sum((lam[i] * g[i][j] * mu[j] for i in range(n) for j in range(n)), Fraction(0))


def weyl_reflect(cartan: CartanDatum, i: int, lam: Sequence[int]) -> Weight:
    """s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i in weight coordinates."""
    c = lam[i]
    a = cartan.cartan_matrix
    return tuple(lam[j] - c * a[j][i] for j in range(cartan.rank))


def reflect_root_coords(cartan: CartanDatum, i: int, qc: Sequence[int]) -> tuple[int, ...]:
    """s_i on simple-root coordinates."""
    a = cartan.cartan_matrix
    pair = sum(a[i][j] * qc[j] for j in range(cartan.rank))
    out = list(qc)
    out[i] -= pair
    return tuple(out)


def weyl_orbit(cartan: CartanDatum, lam: Sequence[int]) -> set[Weight]:
    start = tuple(lam)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for i in range(cartan.rank):
            y = weyl_reflect(cartan, i, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def longest_word(cartan: CartanDatum) -> tuple[int, ...]:
    """Reduced word of w_0 by greedy descent from rho, lowest index first."""
    mu = [1] * cartan.rank
    word = []
    while True:
        i = next((k for k, c in enumerate(mu) if c > 0), None)
        if i is None:
            return tuple(word)
        word.append(i)
        mu = list(weyl_reflect(cartan, i, mu))


def apply_word(cartan: CartanDatum, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """s_{w[0]} ... s_{w[-1]} applied to lambda."""
    x = tuple(lam)
    for i in reversed(word):
        x = weyl_reflect(cartan, i, x)
    return x


def positive_roots(cartan: CartanDatum) -> tuple[Root, ...]:
    """Positive roots in the convex order attached to the reduced word of w_0."""
    word = longest_word(cartan)
    roots = []
    n = cartan.rank
    for k, i in enumerate(word):
        qc = tuple(1 if j == i else 0 for j in range(n))
        for j in reversed(word[:k]):
            qc = reflect_root_coords(cartan, j, qc)
        roots.append(Root(qc, cartan.d[i]))
    return tuple(roots)


def roots_by_closure(cartan: CartanDatum) -> set[tuple[int, ...]]:
    """All positive roots by reflection closure of the simple roots (oracle)."""
    n = cartan.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        x = todo.pop()
        for i in range(n):
            y = reflect_root_coords(cartan, i, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return {r for r in seen if all(c >= 0 for c in r)}


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def lowest_weight_partner(cartan: CartanDatum, lam: Sequence[int]) -> Weight:
    """-w_0(lambda): the highest weight of the dual of L(lambda)."""
    w0 = apply_word(cartan, longest_word(cartan), lam)
    return tuple(-c for c in w0)
