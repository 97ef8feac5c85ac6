"""Distinguished roots, low-order generator recipes, and the dimension card of
the small quantum algebras."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .exactnum import ONE, RationalFunction, specialize
from .frobdual import compute_lq, compute_x_star
from .qparam import QuantumParameter, l_i, l_simple, l_value
from .rootdata import CartanDatum, Lattice, Root, RootDatum, positive_roots, quotient_invariants


# ---------------------------------------------------------------------------
# Expression trees


@dataclass(frozen=True)
class Gen:
    """A root-vector symbol E_gamma^{(n)} or F_gamma^{(n)}; gamma in root coordinates."""

    kind: str
    root: tuple[int, ...]
    power: int = 1

    def render(self, names: Sequence[str]) -> str:
        lab = Root(self.root, 1).label(names)
        base = f"{self.kind}_{lab}" if sum(self.root) == 1 else f"{self.kind}[{lab}]"
        return base if self.power == 1 else f"{base}^({self.power})"


@dataclass(frozen=True)
class Term:
    coef: RationalFunction
    factors: tuple[Gen, ...]

    @property
    def degree(self) -> tuple[int, ...]:
        n = len(self.factors[0].root)
        return tuple(sum(g.power * g.root[k] for g in self.factors) for k in range(n))


@dataclass(frozen=True)
class GeneratorRecipe:
    target: Root
    kind: str
    terms: tuple[Term, ...]

    def degree_ok(self) -> bool:
        return all(t.degree == self.target.q_coords for t in self.terms)

    def render(self, names: Sequence[str], q=None) -> str:
        head = Gen(self.kind, self.target.q_coords).render(names)
        return f"{head} = {render_terms(self.terms, names, q)}"

    def expand(self, recipes: dict[tuple[tuple[int, ...], str], "GeneratorRecipe"]) -> list[Term]:
        """Rewrite in simple-root symbols only, unfolding nested recipes."""
        out: list[Term] = []
        for t in self.terms:
            partial = [Term(t.coef, ())]
            for g in t.factors:
                if sum(g.root) == 1:
                    partial = [Term(p.coef, p.factors + (g,)) for p in partial]
                    continue
                if g.power != 1:
                    raise ValueError("divided powers of composite recipes are not expanded")
                sub = recipes[(g.root, g.kind)].expand(recipes)
                partial = [Term(p.coef * s.coef, p.factors + s.factors) for p in partial for s in sub]
            out.extend(partial)
        return out


def _fmt_coef(c, q) -> str:
    if q is not None:
        val = specialize(c, q)
        if val.is_rational():
            r = val.to_rational()
            return "" if r == 1 else "-" if r == -1 else f"{r}*"
        return f"({val!r})*"
    if c.is_one():
        return ""
    if (-c).is_one():
        return "-"
    return f"({c!r})*"


def render_terms(terms: Sequence[Term], names: Sequence[str], q=None) -> str:
    parts = []
    for t in terms:
        coef = _fmt_coef(t.coef, q)
        body = "*".join(g.render(names) for g in t.factors)
        if q is not None and coef not in ("", "-") and specialize(t.coef, q).is_zero():
            continue
        parts.append(coef + body)
    return " + ".join(parts).replace("+ -", "- ") or "0"


# ---------------------------------------------------------------------------
# Chain labelling for low-order cases


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def _add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def chain_order(cartan: CartanDatum, component: int) -> list[int]:
    """Nodes of a path-shaped component listed long-to-short, neighbours adjacent.

    This is the ordering beta_n, ..., beta_{r+1}, alpha_r, ..., alpha_1 used by
    the low-order case lists (alpha short, beta long).
    """
    nodes = cartan.component_nodes(component)
    a = cartan.cartan_matrix
    nbrs = {i: [j for j in nodes if j != i and a[i][j] != 0] for i in nodes}
    ends = [i for i in nodes if len(nbrs[i]) <= 1]
    start = max(ends, key=lambda i: (cartan.d[i], -i))
    order = [start]
    while len(order) < len(nodes):
        nxt = [j for j in nbrs[order[-1]] if j not in order]
        order.append(nxt[0])
    if cartan.d[order[0]] < cartan.d[order[-1]]:
        order.reverse()
    return order


def _sym_recipe(target, left, right, kind, coef, rank) -> GeneratorRecipe:
    """E_target = E_left E_right + coef E_right E_left; the F side carries a global minus sign."""
    sign = ONE if kind == "E" else -ONE
    t1 = Term(sign, (Gen(kind, left), Gen(kind, right)))
    t2 = Term(sign * coef, (Gen(kind, right), Gen(kind, left)))
    return GeneratorRecipe(Root(target, 1), kind, (t1, t2))


@dataclass(frozen=True)
class DeltaLSet:
    roots: tuple[Root, ...]
    recipes: dict

    def recipe(self, root: Root | tuple[int, ...], kind: str) -> GeneratorRecipe | None:
        key = root.q_coords if isinstance(root, Root) else tuple(root)
        return self.recipes.get((key, kind))

    def is_simple(self, root: Root) -> bool:
        return root.height == 1


def _root_d(cartan: CartanDatum, qc: tuple[int, ...]) -> int:
    for r in positive_roots(cartan):
        if r.q_coords == qc:
            return r.d
    raise ValueError(f"{qc} is not a positive root")


def delta_l(datum: RootDatum | CartanDatum, p: QuantumParameter) -> DeltaLSet:
    cart = datum.cartan if isinstance(datum, RootDatum) else datum
    n = cart.rank
    roots: list[tuple[int, ...]] = []
    recipes: dict[tuple[tuple[int, ...], str], GeneratorRecipe] = {}

    def add_recipe(target, left, right, coef=ONE):
        for kind in ("E", "F"):
            r = _sym_recipe(target, left, right, kind, coef, n)
            recipes[(target, kind)] = GeneratorRecipe(Root(target, _root_d(cart, target)), kind, r.terms)

    for c, (letter, rank) in enumerate(cart.components):
        nodes = cart.component_nodes(c)
        li = l_i(cart, p, c)
        lac = cart.lacing[c]
        if li == 1:
            continue
        if li > lac:
            roots.extend(_unit(n, i) for i in nodes)
            continue
        order = chain_order(cart, c)
        if letter == "G" and li == 2:
            a, b = order[1], order[0]
            ua, ub = _unit(n, a), _unit(n, b)
            top = tuple(2 * x + y for x, y in zip(ua, ub))
            roots.extend([top, ub, ua])
            for kind in ("E", "F"):
                terms = (
                    Term(ONE, (Gen(kind, ua, 2), Gen(kind, ub))),
                    Term(ONE, (Gen(kind, ub), Gen(kind, ua, 2))),
                    Term(ONE, (Gen(kind, ua), Gen(kind, ub), Gen(kind, ua))),
                )
                recipes[(top, kind)] = GeneratorRecipe(Root(top, cart.d[a]), kind, terms)
            continue
        if letter == "G":
            # li == 3
            a, b = order[1], order[0]
            ua, ub = _unit(n, a), _unit(n, b)
            top = _add(ua, ub)
            roots.extend([top, ua])
            add_recipe(top, ub, ua, -RationalFunction.v_power(3 * cart.d[a]))
            continue
        longs = [i for i in order if cart.d[i] > 1]
        shorts = [i for i in order if cart.d[i] == 1]
        if len(shorts) == 1:
            # B_n: nested sums beta_r + ... + beta_2 + alpha_1
            cur = _unit(n, shorts[0])
            chain = [cur]
            for b in reversed(longs):
                nxt = _add(_unit(n, b), cur)
                add_recipe(nxt, _unit(n, b), cur)
                cur = nxt
                chain.append(cur)
            roots.extend(reversed(chain))
        elif len(longs) == 1:
            # C_n: beta_n + alpha_{n-1}, then all shorts
            b, a1 = longs[0], shorts[0]
            top = _add(_unit(n, b), _unit(n, a1))
            add_recipe(top, _unit(n, b), _unit(n, a1))
            roots.append(top)
            roots.extend(_unit(n, i) for i in shorts)
        else:
            # F4: beta4, beta3, alpha2, alpha1
            b4, b3 = longs
            a2, a1 = shorts
            mid = _add(_unit(n, b3), _unit(n, a2))
            top = _add(_unit(n, b4), mid)
            add_recipe(mid, _unit(n, b3), _unit(n, a2))
            add_recipe(top, _unit(n, b4), mid)
            roots.extend([top, mid, _unit(n, a2), _unit(n, a1)])
    out = tuple(Root(r, _root_d(cart, r)) for r in roots)
    return DeltaLSet(out, recipes)


def generator_recipes(datum: RootDatum | CartanDatum, p: QuantumParameter) -> dict:
    return delta_l(datum, p).recipes


def recipe_listing(datum: RootDatum | CartanDatum, p: QuantumParameter) -> list[str]:
    """Recipes in the parenthesized term syntax, specialized at q."""
    cart = datum.cartan if isinstance(datum, RootDatum) else datum
    dl = delta_l(cart, p)
    names = [chr(ord("a") + i) for i in range(cart.rank)]
    out = []
    for r in dl.roots:
        for kind in ("E", "F"):
            rec = dl.recipe(r, kind)
            if rec is None:
                continue
            comp = cart.component_of[[i for i, c in enumerate(r.q_coords) if c][0]]
            out.append(rec.render(names, p.q_i(comp)))
    return out


# ---------------------------------------------------------------------------
# Cardinalities and character groups


@dataclass(frozen=True)
class SmallAlgebraCard:
    dim_v_frak_plus: int
    dim_v_frak: int
    dim_v: int
    dim_ubar: int
    order_A: int
    order_Abar: int
    order_Psi: int
    index_x_xstar: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def root_product(cartan: CartanDatum, p: QuantumParameter) -> int:
    return prod(l_value(cartan, p, r) for r in positive_roots(cartan))


def _two_lq(datum: RootDatum, p: QuantumParameter) -> Lattice:
    return Lattice.span([tuple(2 * c for c in row) for row in compute_lq(datum, p).basis], datum.rank)


def character_groups(datum: RootDatum, p: QuantumParameter) -> tuple[list[int], list[int], list[int]]:
    """Invariant factors of X/2lQ, X/X*, X*/2lQ (groups A, Abar, Psi)."""
    x = datum.x_lattice
    xs = compute_x_star(datum, p)
    two = _two_lq(datum, p)
    return quotient_invariants(two, x), quotient_invariants(xs, x), quotient_invariants(two, xs)


def cardinalities(datum: RootDatum, p: QuantumParameter) -> SmallAlgebraCard:
    cart = datum.cartan
    plus = root_product(cart, p)
    a, abar, psi = (prod(g) for g in character_groups(datum, p))
    grouplikes = prod(2 * l_simple(cart, p, i) for i in range(cart.rank))
    index = abar
    card = SmallAlgebraCard(
        dim_v_frak_plus=plus,
        dim_v_frak=grouplikes * plus * plus,
        dim_v=a * plus * plus,
        dim_ubar=index * plus * plus,
        order_A=a,
        order_Abar=abar,
        order_Psi=psi,
        index_x_xstar=index,
    )
    assert card.dim_ubar == card.index_x_xstar * plus**2
    assert card.dim_v == card.order_A * plus**2
    assert card.dim_ubar * card.order_Psi == card.dim_v
    assert card.order_A == card.order_Abar * card.order_Psi
    return card
