"""Quantum-Frobenius lattice data: X*, lQ, the dual Cartan datum, sign
parameters, and the generator-level Frobenius map."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import InconsistentComponent, NotFiniteType
from .exactnum import unit_order
from .qparam import QuantumParameter, l_i, l_prime_i, l_simple
from .rootdata import (
    CartanDatum,
    Lattice,
    RootDatum,
    cartan_block,
    lattice_index,
    weyl_reflect,
)


def compute_x_star(datum: RootDatum, p: QuantumParameter) -> Lattice:
    """X* = {lambda in X : (alpha, lambda) in l_i Z for every simple alpha}.

    Solved as the kernel of X -> prod_alpha Z / l_i Z via an integer lattice
    intersection: X* = X cap L where L = {lambda in P : d_alpha c_alpha in l_i Z}.
    """
    cart = datum.cartan
    n = datum.rank
    # L is diagonal: c_alpha must be a multiple of l_i / gcd(l_i, d_alpha)
    diag = []
    for k in range(n):
        li = l_i(cart, p, cart.component_of[k])
        diag.append(li // gcd(li, cart.d[k]))
    big = Lattice.span([tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)], n)
    return intersect(datum.x_lattice, big)


def intersect(a: Lattice, b: Lattice) -> Lattice:
    """Intersection of two full-rank lattices.

    x = y A lies in b exactly when y (A B^{-1}) is integral, i.e. y T = 0 mod den
    for the integer matrix T = den * A B^{-1}; that congruence lattice comes
    from an HNF of [T | I ; den I | 0].
    """
    from flint import fmpq_mat, fmpz_mat

    n = a.dim
    t = fmpq_mat([list(r) for r in a.basis]) * fmpq_mat([list(r) for r in b.basis]).inv()
    den = 1
    for i in range(n):
        for j in range(n):
            den = lcm(den, int(t[i, j].q))
    rows = [[int(t[i, j] * den) for j in range(n)] + [int(i == k) for k in range(n)] for i in range(n)]
    rows += [[den * int(j == k) for k in range(n)] + [0] * n for j in range(n)]
    h = fmpz_mat(rows).hnf()
    gens = []
    for i in range(h.nrows()):
        r = [int(h[i, k]) for k in range(2 * n)]
        if not any(r[:n]) and any(r[n:]):
            gens.append([sum(r[n + m] * a.basis[m][k] for m in range(n)) for k in range(n)])
    return Lattice.span(gens, n)


def compute_lq(datum: RootDatum, p: QuantumParameter) -> Lattice:
    """lQ = Z{l_alpha alpha}."""
    cart = datum.cartan
    gens = []
    for i in range(datum.rank):
        la = l_simple(cart, p, i)
        gens.append(tuple(la * c for c in datum.simple_root_weight(i)))
    return Lattice.span(gens, datum.rank)


def compute_p_star(datum: RootDatum, p: QuantumParameter) -> Lattice:
    """P* = Z{l_alpha omega_alpha}."""
    n = datum.rank
    return Lattice.span(
        [tuple(l_simple(datum.cartan, p, i) if i == j else 0 for j in range(n)) for i in range(n)], n
    )


@dataclass(frozen=True)
class StabilityVerdict:
    lq_in_x_star: bool
    x_star_stable: bool
    lq_stable: bool

    @property
    def ok(self) -> bool:
        return self.lq_in_x_star and self.x_star_stable and self.lq_stable


def check_stability(datum: RootDatum, p: QuantumParameter) -> StabilityVerdict:
    xs = compute_x_star(datum, p)
    lq = compute_lq(datum, p)

    def stable(lat: Lattice) -> bool:
        return all(
            lat.contains(weyl_reflect(datum.cartan, i, b)) for i in range(datum.rank) for b in lat.basis
        )

    return StabilityVerdict(xs.contains_lattice(lq), stable(xs), stable(lq))


# ---------------------------------------------------------------------------
# Dual Cartan datum


def dual_cartan_matrix(cartan: CartanDatum, p: QuantumParameter) -> tuple[tuple[int, ...], ...]:
    """<alpha*, beta*>_l = (2 l_beta / l_alpha) (alpha, beta) / (alpha, alpha)."""
    n = cartan.rank
    ls = [l_simple(cartan, p, i) for i in range(n)]
    sym = cartan.symmetrized
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = Fraction(2 * ls[j], ls[i]) * Fraction(sym[i][j], sym[i][i])
            if val.denominator != 1:
                raise NotFiniteType(f"non-integral dual Cartan entry at ({i},{j})")
            row.append(int(val))
        out.append(tuple(row))
    return tuple(out)


def classify_cartan(a: Sequence[Sequence[int]]) -> tuple[str, int, tuple[int, ...]]:
    """Identify a connected finite-type Cartan matrix.

    Returns (letter, rank, relabel) where ``relabel[k]`` is the node of ``a``
    playing the role of node k in this library's labelling of that type.
    """
    n = len(a)
    candidates = []
    for letter in "ABCDEFG":
        for rank in ([n] if letter != "G" or n == 2 else []):
            try:
                blk, _ = cartan_block(letter, rank)
            except Exception:
                continue
            candidates.append((letter, rank, blk))
    for letter, rank, blk in candidates:
        if n <= 8:
            for perm in _isomorphisms(a, blk):
                return letter, rank, perm
    raise NotFiniteType(f"Cartan matrix {a} is not of finite type")


def _isomorphisms(a, b):
    """Yield node bijections perm with a[perm[i]][perm[j]] == b[i][j]."""
    n = len(a)
    assign: list[int] = []
    used = [False] * n

    def rec(k):
        if k == n:
            yield tuple(assign)
            return
        for cand in range(n):
            if used[cand] or a[cand][cand] != b[k][k]:
                continue
            if all(a[cand][assign[j]] == b[k][j] and a[assign[j]][cand] == b[j][k] for j in range(k)):
                used[cand] = True
                assign.append(cand)
                yield from rec(k + 1)
                assign.pop()
                used[cand] = False

    yield from rec(0)


_LANGLANDS = {"B": "C", "C": "B", "F": "F", "G": "G"}


@dataclass(frozen=True)
class DualComponent:
    letter: str
    rank: int
    relation: str  # "same" or "langlands_dual"

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class DualDatum:
    x_star: Lattice
    lq: Lattice
    dual_simple_roots: tuple[tuple[int, ...], ...]
    dual_cartan: tuple[tuple[int, ...], ...]
    dual_type: tuple[DualComponent, ...]
    scale_factors: tuple[Fraction, ...]
    p_star: Lattice
    epsilon: tuple[int, ...]
    epsilon_roots: tuple[int, ...]
    index_x_xstar: int

    @property
    def dual_type_name(self) -> str:
        return "x".join(c.name for c in self.dual_type)

    def to_json(self) -> dict:
        return {
            "dual_type": self.dual_type_name,
            "dual_type_relations": [c.relation for c in self.dual_type],
            "dual_cartan": [list(r) for r in self.dual_cartan],
            "epsilon": list(self.epsilon),
            "epsilon_per_simple_root": list(self.epsilon_roots),
            "index_x_xstar": self.index_x_xstar,
            "x_star_basis": self.x_star.to_json(),
            "lq_basis": self.lq.to_json(),
            "p_star_basis": self.p_star.to_json(),
            "dual_simple_roots": [list(r) for r in self.dual_simple_roots],
            "scale_factors": [str(s) for s in self.scale_factors],
        }


def dual_type_of(cartan: CartanDatum, p: QuantumParameter) -> tuple[DualComponent, ...]:
    """Classify the dual Cartan matrix per component and record its relation."""
    a = dual_cartan_matrix(cartan, p)
    out = []
    for c, (letter, rank) in enumerate(cartan.components):
        nodes = cartan.component_nodes(c)
        sub = [[a[i][j] for j in nodes] for i in nodes]
        got, got_rank, _ = classify_cartan(sub)
        lac = cartan.lacing[c]
        relation = "langlands_dual" if lac > 1 and l_i(cartan, p, c) % lac == 0 else "same"
        if got in "BC" and got_rank == 2 and letter in "BC":
            # B2 and C2 share a matrix; name it after the relation
            got = letter if relation == "same" else _LANGLANDS[letter]
        out.append(DualComponent(got, got_rank, relation))
    return tuple(out)


def epsilon_per_root(cartan: CartanDatum, p: QuantumParameter) -> tuple[int, ...]:
    """eps_{alpha*} = q_alpha^{l_alpha^2} for every simple root, as +-1."""
    out = []
    for i in range(cartan.rank):
        qa = p.node_parameter(cartan, i)
        la = l_simple(cartan, p, i)
        val = qa ** (la * la)
        o = unit_order(val)
        if o not in (1, 2):
            raise InconsistentComponent(f"q_alpha^(l_alpha^2) has order {o} at node {i}")
        out.append(1 if o == 1 else -1)
    return tuple(out)


def dual_relative_lengths(cartan: CartanDatum, p: QuantumParameter) -> tuple[int, ...]:
    """d*_alpha = (alpha*, alpha*)_l / 2 = l_alpha^2 d_alpha / (l_i l'_i)."""
    out = []
    for i in range(cartan.rank):
        c = cartan.component_of[i]
        la = l_simple(cartan, p, i)
        val = Fraction(la * la * cartan.d[i], l_i(cartan, p, c) * l_prime_i(cartan, p, c))
        if val.denominator != 1:
            raise NotFiniteType(f"non-integral dual root length at node {i}")
        out.append(int(val))
    return tuple(out)


def epsilon_params(cartan: CartanDatum, p: QuantumParameter) -> tuple[int, ...]:
    """Per-component sign eps_i, with eps_{alpha*} = eps_i^{d*_alpha} checked.

    eps_i is read off at a simple root of minimal dual length in the component.
    """
    per_root = epsilon_per_root(cartan, p)
    dstar = dual_relative_lengths(cartan, p)
    out = []
    for c in range(len(cartan.components)):
        nodes = cartan.component_nodes(c)
        short = min(nodes, key=lambda k: (dstar[k], k))
        eps = per_root[short]
        if dstar[short] != 1 and eps == -1:
            raise InconsistentComponent("component sign cannot be read from a dual-short root")
        for k in nodes:
            if per_root[k] != eps ** dstar[k]:
                raise InconsistentComponent(f"sign at node {k} does not match eps_i^(d*)")
        out.append(eps)
    return tuple(out)


def dual_datum(datum: RootDatum, p: QuantumParameter) -> DualDatum:
    cart = datum.cartan
    xs = compute_x_star(datum, p)
    lq = compute_lq(datum, p)
    scale = []
    for c in range(len(cart.components)):
        scale.append(Fraction(1, l_i(cart, p, c) * l_prime_i(cart, p, c)))
    dual_roots = tuple(
        tuple(l_simple(cart, p, i) * c for c in datum.simple_root_weight(i)) for i in range(datum.rank)
    )
    return DualDatum(
        x_star=xs,
        lq=lq,
        dual_simple_roots=dual_roots,
        dual_cartan=dual_cartan_matrix(cart, p),
        dual_type=dual_type_of(cart, p),
        scale_factors=tuple(scale),
        p_star=compute_p_star(datum, p),
        epsilon=epsilon_params(cart, p),
        epsilon_roots=epsilon_per_root(cart, p),
        index_x_xstar=lattice_index(xs, datum.x_lattice),
    )


# ---------------------------------------------------------------------------
# Generator-level Frobenius map and quasi-classical weights


@dataclass(frozen=True)
class FrobImage:
    kind: str  # "e" or "f"
    node: int
    power: int
    weight: tuple[int, ...]


def frobenius_generator_image(
    datum: RootDatum, p: QuantumParameter, kind: str, node: int, n: int, weight: Sequence[int]
) -> FrobImage | None:
    """Image of E_alpha^{(n)} 1_lambda (or F); None stands for zero."""
    if kind not in ("E", "F"):
        raise ValueError("kind must be 'E' or 'F'")
    if n < 0:
        raise ValueError("divided power must be nonnegative")
    la = l_simple(datum.cartan, p, node)
    if n % la or not compute_x_star(datum, p).contains(weight):
        return None
    return FrobImage(kind.lower(), node, n // la, tuple(weight))


def is_quasi_classical_weight(datum: RootDatum, p: QuantumParameter, weight: Sequence[int]) -> bool:
    return compute_x_star(datum, p).contains(weight)
