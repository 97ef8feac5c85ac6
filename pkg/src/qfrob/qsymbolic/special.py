"""Specialization of the generic algebra at a root of unity.

Elements are compared through their action on weight idempotents: x 1_lambda
is written in the divided PBW basis F^(a) E^(b) 1_lambda, whose coefficients
are Laurent polynomials for integral x, and then specialized at q.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from ..errors import DenominatorVanishes, InputError, NotLaurent
from ..exactnum import Cyclotomic, RootOfUnity, clear_denominators, specialize
from ..qparam import QuantumParameter
from ..rootdata import CartanDatum
from ..smalldata import DeltaLSet, Gen
from .algebra import Element, QuantumAlgebra


def generic_root(cartan: CartanDatum, p: QuantumParameter) -> RootOfUnity:
    """The value of the single generic variable v, i.e. the common q_i."""
    exps = set(p.component_exponents)
    if len(exps) != 1:
        raise InputError("the symbolic engine uses one generic v; all components need the same q_i")
    return RootOfUnity(p.ambient_order, exps.pop())


class Specializer:
    def __init__(self, algebra: QuantumAlgebra, q: RootOfUnity):
        self.U = algebra
        self.q = q
        self.order = q.order

    def scalar(self, c) -> Cyclotomic:
        try:
            return specialize(c, self.q)
        except DenominatorVanishes as exc:
            raise NotLaurent(f"coefficient {c!r} has a pole at {self.q!r}") from exc

    def evaluate(self, x: Element, lam: Sequence[int]) -> dict:
        """Specialized x 1_lambda as {(m_F, m_E): Cyclotomic}."""
        out = {}
        for key, c in self.U.evaluate_at_weight(x, lam).items():
            val = self.scalar(c)
            if not val.is_zero():
                out[key] = val
        return out

    def torus_is_laurent(self, x: Element) -> bool:
        return all(c.is_laurent() for tor in self.U.pbw_normal_form(x).values() for c in tor.values())

    def window(self, x: Element, box: int | None = None) -> tuple[str, list[tuple[int, ...]]]:
        """Weights to test: one period of q when every torus coefficient is
        Laurent (the evaluation is then periodic), else a centred box."""
        rank = self.U.rank
        if box is None and self.torus_is_laurent(x):
            return f"period[0,{self.order})^{rank}", list(product(range(self.order), repeat=rank))
        b = box if box is not None else self.order
        return f"box[-{b},{b}]^{rank}", list(product(range(-b, b + 1), repeat=rank))

    def vanishes(self, x: Element, box: int | None = None) -> tuple[bool, str, dict | None]:
        label, weights = self.window(x, box)
        for lam in weights:
            val = self.evaluate(x, lam)
            if val:
                return False, label, {"weight": list(lam), "value": _render(val)}
        return True, label, None

    def equal(self, x: Element, y: Element, box: int | None = None) -> tuple[bool, str, dict | None]:
        return self.vanishes(x - y, box)

    def proportional(self, x: Element, y: Element) -> Cyclotomic | None:
        """c with x = c y after specialization (tested at lambda = 0 and on a period)."""
        label, weights = self.window(x - y)
        ratio = None
        for lam in weights:
            vx, vy = self.evaluate(x, lam), self.evaluate(y, lam)
            if set(vx) != set(vy):
                return None
            for k in vx:
                r = vx[k] / vy[k]
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return None
        return ratio


def _render(val: dict) -> dict:
    return {f"F{list(mf)}E{list(me)}": repr(c) for (mf, me), c in sorted(val.items())}


# ---------------------------------------------------------------------------
# recipes -> algebra elements


def gen_element(U: QuantumAlgebra, dl: DeltaLSet | None, g: Gen) -> Element:
    if sum(g.root) == 1:
        i = g.root.index(1)
        return U.E(i, g.power) if g.kind == "E" else U.F(i, g.power)
    if g.power != 1 or dl is None:
        raise ValueError(f"cannot build {g}")
    return recipe_element(U, dl, g.root, g.kind)


def recipe_element(U: QuantumAlgebra, dl: DeltaLSet, root: Sequence[int], kind: str) -> Element:
    """The Delta_l generator for ``root``: a recipe if one exists, else the simple generator."""
    root = tuple(root)
    rec = dl.recipe(root, kind)
    if rec is None:
        return gen_element(U, None, Gen(kind, root))
    out = Element(U, {})
    for t in rec.terms:
        term = U.one()
        for g in t.factors:
            term = term * gen_element(U, dl, g)
        out = out + term * t.coef
    return out


def structure_table(U: QuantumAlgebra, q: RootOfUnity, degrees: Iterable[Sequence[int]]) -> dict:
    """Specialized products of divided PBW monomials of U^+ in the given degrees.

    Keys are (m, m'); values map exponent vectors to cyclotomic numbers.
    Every generic constant is first cleared to a Laurent polynomial.
    """
    monos = [m for nu in degrees for m in U.pbw_exponents(nu)]
    table = {}
    for m1 in monos:
        v1 = U.pbw_monomial(m1, "E")
        for m2 in monos:
            prod = U.plus.mul(v1, U.pbw_monomial(m2, "E"))
            coords = U.to_pbw(prod, "E")
            row = {}
            for m, c in coords.items():
                val = clear_denominators(c).specialize(q)
                if not val.is_zero():
                    row[m] = val
            table[(m1, m2)] = row
    return table
