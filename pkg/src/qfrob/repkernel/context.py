"""Shared data for the representation layer: the specialized algebra, its
skew-primitive generators, and the left-regular modules P(lambda) = v 1_lambda."""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Sequence

from ..errors import InputError, RankTooLarge
from ..exactnum import Cyclotomic
from ..frobdual import compute_x_star
from ..qparam import QuantumParameter, from_exponents, from_orders, l_value
from ..rootdata import CartanDatum, RootDatum, make_root_datum, parse_type, positive_roots
from ..smalldata import delta_l
from ..qsymbolic.algebra import Element, QuantumAlgebra, vp
from ..qsymbolic.plus import SUPPORTED
from ..qsymbolic.special import Specializer, generic_root, recipe_element

Weight = tuple[int, ...]
GenKey = tuple[str, tuple[int, ...]]  # ("E" | "F", root in simple-root coordinates)


def gen_label(g: GenKey) -> str:
    kind, root = g
    parts = []
    for c, nm in zip(root, "abcdefgh"):
        if c:
            parts.append(nm if c == 1 else f"{c}{nm}")
    return f"{kind}[{'+'.join(parts)}]"


class SmallContext:
    """The small quantum algebra of a rank <= 2 datum at a fixed root of unity.

    Everything lives over the cyclotomic field of the chosen parameter. The
    generators are the Delta_l root vectors E_gamma, F_gamma; modules are
    graded by the character lattice, so the torus acts through the grading.
    """

    def __init__(self, datum: RootDatum, p: QuantumParameter):
        cart = datum.cartan
        if cart.rank > 2 or cart.name not in SUPPORTED:
            raise RankTooLarge(f"the representation layer supports rank <= 2 types {sorted(SUPPORTED)}")
        self.datum = datum
        self.cartan: CartanDatum = cart
        self.p = p
        self.q = generic_root(cart, p)
        self.rank = cart.rank
        self.dl = delta_l(cart, p)
        self.lvals = tuple(l_value(cart, p, r) for r in positive_roots(cart))
        self.U = QuantumAlgebra(cart, self._height_bound())
        self.S = Specializer(self.U, self.q)
        self.one = Cyclotomic.scalar(self.q.order, 1)
        self.zero = Cyclotomic(self.q.order)
        self.gens: list[GenKey] = [(k, r.q_coords) for r in self.dl.roots for k in ("E", "F")]
        self._elements: dict = {}
        self._products: dict = {}
        self._proj: dict = {}
        self._kcache: dict = {}

    def _height_bound(self) -> int:
        roots = positive_roots(self.cartan)
        top = sum((l - 1) * r.height for r, l in zip(roots, self.lvals))
        return top + max(r.height for r in roots) + 1

    def __repr__(self) -> str:
        return f"SmallContext({self.cartan.name}, q={self.q!r})"

    @property
    def tag(self) -> str:
        return f"{self.cartan.name}@zeta{self.q.order}^{self.q.exponent}"

    # ------------------------------------------------------------------
    # generators

    def element(self, g: GenKey) -> Element:
        got = self._elements.get(g)
        if got is None:
            got = recipe_element(self.U, self.dl, g[1], g[0])
            self._elements[g] = got
        return got

    def shift(self, g: GenKey) -> Weight:
        wt = self.datum.root_weight(g[1])
        return wt if g[0] == "E" else tuple(-c for c in wt)

    def k_scalar(self, root: Sequence[int], lam: Sequence[int]) -> Cyclotomic:
        """Eigenvalue of K_root on the lambda weight space."""
        e = self.U.pair_weight(root, lam)
        got = self._kcache.get(e)
        if got is None:
            got = self.S.scalar(vp(e))
            self._kcache[e] = got
        return got

    @cached_property
    def tau_constants(self) -> dict:
        """c_g with tau(g) = c_g * g' where g' is the opposite generator."""
        out = {}
        for kind, root in self.gens:
            if kind != "E":
                continue
            c = self.S.proportional(self.U.tau(self.element(("E", root))), self.element(("F", root)))
            if c is None:
                raise ArithmeticError(f"tau(E{root}) is not proportional to F{root}")
            out[("E", root)] = c
            out[("F", root)] = self.one / c
        return out

    # ------------------------------------------------------------------
    # restricted PBW data

    @cached_property
    def restricted_exponents(self) -> list[tuple[int, ...]]:
        return [tuple(m) for m in product(*(range(l) for l in self.lvals))]

    @cached_property
    def root_product(self) -> int:
        out = 1
        for l in self.lvals:
            out *= l
        return out

    def exponent_weight(self, m: Sequence[int]) -> Weight:
        return self.datum.root_weight(self.U.exponent_degree(m))

    def is_restricted(self, m: Sequence[int]) -> bool:
        return all(a < l for a, l in zip(m, self.lvals))

    @cached_property
    def x_star(self):
        return compute_x_star(self.datum, self.p)

    def grading_class(self, lam: Sequence[int]) -> Weight:
        return self.x_star.reduce(lam)

    # ------------------------------------------------------------------
    # the left-regular module v 1_lambda

    def _norm(self, m: tuple) -> tuple:
        return m if m else tuple([0] * len(self.lvals))

    def act_on_pbw(self, x: Element, key, mf: tuple, me: tuple, lam: Sequence[int]) -> dict:
        """x F^(mf) E^(me) 1_lambda in PBW coordinates, specialized."""
        prod_key = (key, mf, me)
        elt = self._products.get(prod_key)
        if elt is None:
            elt = x * self.U.pbw_element(mf, me)
            self._products[prod_key] = elt
        out = {}
        for (a, b), c in self.S.evaluate(elt, lam).items():
            a, b = self._norm(a), self._norm(b)
            if not (self.is_restricted(a) and self.is_restricted(b)):
                raise ArithmeticError(f"{key} left the restricted PBW span at weight {tuple(lam)}")
            out[(a, b)] = c
        return out

    def projective(self, lam: Sequence[int]):
        """P(lambda) = v 1_lambda with basis F^(a) E^(b) 1_lambda, a and b restricted."""
        from .modules import WeightModule

        lam = tuple(lam)
        got = self._proj.get(lam)
        if got is not None:
            return got
        basis = [(a, b) for a in self.restricted_exponents for b in self.restricted_exponents]
        index = {k: n for n, k in enumerate(basis)}
        weights = []
        for a, b in basis:
            wa, wb = self.exponent_weight(a), self.exponent_weight(b)
            weights.append(tuple(l + y - x for l, x, y in zip(lam, wa, wb)))
        action = {}
        for g in self.gens:
            cols = []
            for a, b in basis:
                img = self.act_on_pbw(self.element(g), g, a, b, lam)
                cols.append({index[k]: c for k, c in img.items()})
            action[g] = cols
        got = WeightModule(self, weights, action, f"P{list(lam)}")
        self._proj[lam] = got
        return got


def small_context(
    type_name: str,
    order: int | Sequence[int] | None = None,
    exponents: tuple[Sequence[int], int] | None = None,
    lattice="sc",
) -> SmallContext:
    """Build a context from a type string and either orders or (exponents, N)."""
    cart = parse_type(type_name)
    datum = make_root_datum(cart, lattice)
    if exponents is not None:
        p = from_exponents(cart, exponents[0], exponents[1])
    elif order is not None:
        p = from_orders(cart, order)
    else:
        raise InputError("an order or explicit exponents are required")
    return SmallContext(datum, p)
