"""Torsion quantum parameters: per-component scalars q_i = zeta_N^{e_i} and the
derived orders l_gamma, l_i, l'_i, together with the bicharacter on Q x X."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import InputError, MissingGramExtension, OutsideRootLattice
from .exactnum import Cyclotomic, RootOfUnity, unit_order
from .rootdata import CartanDatum, Root, RootDatum, positive_roots


@dataclass(frozen=True)
class QuantumParameter:
    ambient_order: int
    component_exponents: tuple[int, ...]
    gram_extension: tuple[tuple[Fraction, ...], ...] | None = None

    def q_i(self, component: int) -> RootOfUnity:
        return RootOfUnity(self.ambient_order, self.component_exponents[component])

    def node_parameter(self, cartan: CartanDatum, node: int) -> RootOfUnity:
        """q_alpha = q_i^{d_alpha} for the simple root at ``node``."""
        return self.q_i(cartan.component_of[node]) ** cartan.d[node]

    def to_json(self) -> dict:
        return {"ambient_order": self.ambient_order, "exponents": list(self.component_exponents)}


def from_orders(cartan: CartanDatum, orders: Sequence[int] | int) -> QuantumParameter:
    """q_i = zeta_{n_i}, embedded in the ambient order lcm(n_i)."""
    ncomp = len(cartan.components)
    if isinstance(orders, int):
        orders = [orders] * ncomp
    orders = [int(n) for n in orders]
    if len(orders) != ncomp:
        raise InputError(f"expected {ncomp} orders, got {len(orders)}")
    if any(n < 1 for n in orders):
        raise InputError("orders must be positive integers")
    big = lcm(*orders)
    return QuantumParameter(big, tuple(big // n for n in orders))


def from_exponents(cartan: CartanDatum, exponents: Sequence[int], order: int) -> QuantumParameter:
    ncomp = len(cartan.components)
    if len(exponents) == 1 and ncomp > 1:
        exponents = list(exponents) * ncomp
    if len(exponents) != ncomp:
        raise InputError(f"expected {ncomp} exponents, got {len(exponents)}")
    if order < 1:
        raise InputError("ambient order must be positive")
    return QuantumParameter(order, tuple(int(e) % order for e in exponents))


_EXP_RE = re.compile(r"^\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*@\s*(\d+)\s*$")


def parse_exponent_spec(cartan: CartanDatum, text: str) -> QuantumParameter:
    """Parse ``e1,e2,...@N``."""
    m = _EXP_RE.match(text or "")
    if not m:
        raise InputError(f"cannot parse exponent spec {text!r}; expected e1,e2@N")
    exps = [int(x) for x in m.group(1).split(",")]
    return from_exponents(cartan, exps, int(m.group(2)))


def l_of_d(p: QuantumParameter, component: int, d: int) -> int:
    """ord(q_i^{2d})."""
    return unit_order(p.q_i(component) ** (2 * d))


def l_value(cartan: CartanDatum, p: QuantumParameter, root: Root) -> int:
    comp = _component_of_root(cartan, root)
    return l_of_d(p, comp, root.d)


def _component_of_root(cartan: CartanDatum, root: Root) -> int:
    comps = {cartan.component_of[i] for i, c in enumerate(root.q_coords) if c}
    if len(comps) != 1:
        raise ValueError(f"{root} does not lie in a single component")
    return comps.pop()


def l_simple(cartan: CartanDatum, p: QuantumParameter, node: int) -> int:
    return l_of_d(p, cartan.component_of[node], cartan.d[node])


def l_i(cartan: CartanDatum, p: QuantumParameter, component: int) -> int:
    return l_of_d(p, component, 1)


def l_prime_i(cartan: CartanDatum, p: QuantumParameter, component: int) -> int:
    return min(l_simple(cartan, p, k) for k in cartan.component_nodes(component))


def l_table(cartan: CartanDatum, p: QuantumParameter) -> list[tuple[Root, int]]:
    return [(r, l_value(cartan, p, r)) for r in positive_roots(cartan)]


def bicharacter_exponent(datum: RootDatum, p: QuantumParameter, nu_q: Sequence[int], lam: Sequence[int]) -> int:
    """Exponent k with q(nu, lambda) = zeta_N^k, for nu in Q (root coordinates)."""
    cart = datum.cartan
    total = 0
    for i, c in enumerate(nu_q):
        if c:
            total += c * cart.d[i] * lam[i] * p.component_exponents[cart.component_of[i]]
    return total % p.ambient_order


def bicharacter_eval(datum: RootDatum, p: QuantumParameter, nu, lam: Sequence[int]) -> Cyclotomic:
    """q(nu, lambda) for nu in the root lattice.

    ``nu`` may be a Root, a tuple of simple-root coordinates, or a dict
    ``{"weight": w}`` giving an element of P that must lie in Q.
    """
    if isinstance(nu, Root):
        nu_q = nu.q_coords
    elif isinstance(nu, dict) and "weight" in nu:
        coords = datum.q_lattice_coords(nu["weight"])
        if any(c.denominator != 1 for c in coords):
            if p.gram_extension is None:
                raise MissingGramExtension("q on P x P needs a Gram extension")
            return gram_eval(p, nu["weight"], lam)
        nu_q = tuple(int(c) for c in coords)
    else:
        nu_q = tuple(nu)
    if len(nu_q) != datum.rank:
        raise OutsideRootLattice("root-lattice element has wrong length")
    return Cyclotomic.zeta(p.ambient_order, bicharacter_exponent(datum, p, nu_q, lam))


def gram_eval(p: QuantumParameter, lam: Sequence[int], mu: Sequence[int]) -> Cyclotomic:
    if p.gram_extension is None:
        raise MissingGramExtension("no Gram extension recorded")
    g = p.gram_extension
    val = sum(Fraction(lam[i]) * g[i][j] * mu[j] for i in range(len(lam)) for j in range(len(mu)))
    k = val * p.ambient_order
    if k.denominator != 1:
        raise MissingGramExtension("Gram extension is not integral at this order")
    return Cyclotomic.zeta(p.ambient_order, int(k))


def gram_extension_from_form(cartan: CartanDatum, p: QuantumParameter) -> tuple[tuple[Fraction, ...], ...] | None:
    """The canonical extension q(l, m) = q_i^{(l, m)} when it is well defined.

    Returns G with q(l, m) = zeta_N^{N l^T G m}, or None if some (omega_i, omega_j)
    would need a root of q_i not available in the ambient field.
    """
    n = cartan.rank
    w = cartan.weight_gram
    g = []
    for i in range(n):
        row = []
        for j in range(n):
            if cartan.component_of[i] != cartan.component_of[j]:
                row.append(Fraction(0))
                continue
            e = p.component_exponents[cartan.component_of[i]]
            val = w[i][j] * e / p.ambient_order
            if (val * p.ambient_order).denominator != 1:
                return None
            row.append(val)
        g.append(tuple(row))
    return tuple(g)


def with_gram_extension(cartan: CartanDatum, p: QuantumParameter) -> QuantumParameter:
    g = gram_extension_from_form(cartan, p)
    if g is None:
        raise MissingGramExtension("the canonical Gram extension needs a larger ambient order")
    return QuantumParameter(p.ambient_order, p.component_exponents, g)
