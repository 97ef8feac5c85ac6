"""Ext^1 between finite-dimensional graded modules.

An extension of M by N is a graded assignment delta(g): M -> N (of degree
deg g) for every generator g such that the block upper-triangular action on
N + M satisfies every relation of the algebra. The relations acting on the
lambda weight space are harvested from P(lambda) = v 1_lambda: words in the
generators are expanded breadth-first, and each word that becomes dependent
on the earlier independent ("normal") words yields a rewriting relation
g u = sum c_w w. These relations generate the left ideal of relations at
1_lambda, so it is enough to impose them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import NotStabilized
from ..linalg import Echelon, is_zero, nullspace
from .context import GenKey, SmallContext, Weight, gen_label
from .modules import WeightModule, simple

LinForm = dict  # unknown index -> Cyclotomic


@dataclass
class ExtReport:
    dimension: int
    stabilization_degree: int
    recheck_degree: int
    cocycle_basis: list | None = None

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "stabilization_degree": self.stabilization_degree,
            "recheck_degree": self.recheck_degree,
        }


@dataclass
class Relations:
    """Rewriting data for words acting on 1_lambda."""

    weight: Weight
    normal_words: list[tuple[GenKey, ...]]
    parents: list[int]  # normal_words[k] = (g,) + normal_words[parents[k]]
    rules: list[tuple[GenKey, int, dict[int, object]]]  # (g, index of u, {index of w: c})
    closed: bool  # every extension of every normal word was examined
    max_length: int


def harvest_relations(ctx: SmallContext, lam: Sequence[int], degree: int) -> Relations:
    """Normal words of length <= degree for P(lambda) and the rules among them."""
    lam = tuple(lam)
    key = (lam, degree)
    cache = ctx.__dict__.setdefault("_relations", {})
    got = cache.get(key)
    if got is not None:
        return got
    P = ctx.projective(lam)
    one = ctx.one
    ech = Echelon(one)
    words: list[tuple[GenKey, ...]] = [()]
    parents = [-1]
    vecs = [{0: one}]
    ech.add({(0, 0): one, (1, 0): one})
    rules = []
    frontier = [0]
    closed = True
    length = 0
    while frontier:
        nxt = []
        for u in frontier:
            for g in ctx.gens:
                img = P.act(g, vecs[u])
                row = {(0, c): v for c, v in img.items()}
                red = ech.reduce(row)
                if not any(c[0] == 0 for c in red):
                    # g u = sum c_w w: the tagged columns hold -c_w
                    rules.append((g, u, {c[1]: -v for c, v in red.items()}))
                    continue
                if len(words[u]) + 1 > degree:
                    closed = False
                    continue
                k = len(words)
                words.append((g,) + words[u])
                parents.append(u)
                vecs.append(img)
                row[(1, k)] = one
                ech.add(row)
                nxt.append(k)
        if nxt:
            length += 1
        frontier = nxt
    if closed and len(words) != P.dim:
        raise ArithmeticError(f"generators span only {len(words)} of P{list(lam)} (dim {P.dim})")
    got = Relations(lam, words, parents, rules, closed, length)
    cache[key] = got
    return got


def closure_degree(ctx: SmallContext, weights: Sequence[Weight]) -> int:
    """Smallest degree at which every weight's word expansion closes."""
    d = 1
    for lam in weights:
        rel = harvest_relations(ctx, lam, 10**6)
        d = max(d, rel.max_length + 1)
    return d


def _unknowns(ctx: SmallContext, M: WeightModule, N: WeightModule) -> dict:
    nb = N.by_weight()
    var = {}
    for g in ctx.gens:
        s = ctx.shift(g)
        for i, w in enumerate(M.weights):
            target = tuple(a + b for a, b in zip(w, s))
            for k in nb.get(target, []):
                var[(g, k, i)] = len(var)
    return var


def _add_form(acc: dict, k: int, form: LinForm, scale) -> None:
    slot = acc.setdefault(k, {})
    for v, c in form.items():
        new = slot.get(v)
        new = c * scale if new is None else new + c * scale
        if is_zero(new):
            slot.pop(v, None)
        else:
            slot[v] = new


def cocycle_constraints(M: WeightModule, N: WeightModule, degree: int, var: dict) -> tuple[list[LinForm], bool]:
    ctx = M.ctx
    rows: list[LinForm] = []
    complete = True
    for lam, idx in sorted(M.by_weight().items()):
        rel = harvest_relations(ctx, lam, degree)
        complete = complete and rel.closed
        for j in idx:
            # for each normal word u: rho_M(u) e_j and the off-diagonal part U(u) e_j
            m_img: list[dict] = [{j: ctx.one}]
            u_img: list[dict] = [{}]
            for w, parent in zip(rel.normal_words[1:], rel.parents[1:]):
                g = w[0]
                m_img.append(M.act(g, m_img[parent]))
                u_img.append(_extend(ctx, M, N, g, m_img[parent], u_img[parent], var))
            for g, u, combo in rel.rules:
                lhs = _extend(ctx, M, N, g, m_img[u], u_img[u], var)
                for w, c in combo.items():
                    for k, form in u_img[w].items():
                        _add_form(lhs, k, form, -c)
                rows.extend(f for f in lhs.values() if f)
    return rows, complete


def _extend(ctx, M, N, g, m_vec, u_vec, var) -> dict:
    """U(g u) e = rho_N(g) U(u) e + delta(g) rho_M(u) e."""
    out: dict = {}
    cols = N.action[g]
    for k, form in u_vec.items():
        for k2, a in cols[k].items():
            _add_form(out, k2, form, a)
    s = ctx.shift(g)
    nb = N.by_weight()
    for i, c in m_vec.items():
        target = tuple(a + b for a, b in zip(M.weights[i], s))
        for k in nb.get(target, []):
            _add_form(out, k, {var[(g, k, i)]: ctx.one}, c)
    return out


def coboundaries(M: WeightModule, N: WeightModule, var: dict) -> list[LinForm]:
    """delta_h(g) = rho_N(g) h - h rho_M(g) for h running over graded maps M -> N."""
    ctx = M.ctx
    nb = N.by_weight()
    rows = {g: M.rows(g) for g in ctx.gens}
    out = []
    for j, w in enumerate(M.weights):
        for k in nb.get(w, []):
            # h = e_k e_j^*
            vec: LinForm = {}
            for g in ctx.gens:
                for k2, a in N.action[g][k].items():
                    v = var[(g, k2, j)]
                    vec[v] = vec.get(v, ctx.zero) + a
                for j2, b in rows[g][j].items():
                    key = (g, k, j2)
                    if key in var:
                        v = var[key]
                        vec[v] = vec.get(v, ctx.zero) - b
            vec = {v: c for v, c in vec.items() if not is_zero(c)}
            if vec:
                out.append(vec)
    return out


def _ext_at(M: WeightModule, N: WeightModule, degree: int, want_basis: bool):
    ctx = M.ctx
    var = _unknowns(ctx, M, N)
    if not var:
        return 0, [], True
    rows, complete = cocycle_constraints(M, N, degree, var)
    cocycles = nullspace(rows, len(var), ctx.one)
    bnd = Echelon(ctx.one)
    for b in coboundaries(M, N, var):
        bnd.add(b)
    dim = len(cocycles) - bnd.rank
    basis = None
    if want_basis and dim:
        basis = []
        span = Echelon(ctx.one)
        for r in bnd.rows.values():
            span.add(dict(r))
        names = {v: key for key, v in var.items()}
        for z in cocycles:
            if span.add(dict(z)) is not None:
                basis.append({f"{gen_label(names[v][0])}:{names[v][1]}<-{names[v][2]}": repr(c) for v, c in z.items()})
    return dim, basis, complete


def ext1(M: WeightModule, N: WeightModule, degree: int | None = None, with_basis: bool = False) -> ExtReport:
    """dim Ext^1(M, N), recomputed with relations of one more degree.

    Raises NotStabilized if the two computations disagree.
    """
    ctx = M.ctx
    if degree is None:
        degree = closure_degree(ctx, M.weight_support)
    d1, basis, _ = _ext_at(M, N, degree, with_basis)
    d2, _, _ = _ext_at(M, N, degree + 1, False)
    if d1 != d2:
        raise NotStabilized(f"Ext^1 dimension {d1} at relation degree {degree} but {d2} at {degree + 1}")
    return ExtReport(d1, degree, degree + 1, basis)


# ---------------------------------------------------------------------------
# simples that can interact with a module


def linked_simple_labels(M: WeightModule) -> list[Weight]:
    """Highest weights mu such that L(mu) has a weight within one generator
    step of the support of M. For every other simple L, both Ext^1(M, L) and
    Ext^1(L, M) vanish because no graded cocycle has room to be nonzero."""
    ctx = M.ctx
    shifts = [tuple([0] * ctx.rank)] + [ctx.shift(g) for g in ctx.gens]
    near = {tuple(a + b for a, b in zip(w, s)) for w in M.weight_support for s in shifts}
    ups = {ctx.exponent_weight(m) for m in ctx.restricted_exponents}
    cands = sorted({tuple(a + b for a, b in zip(w, u)) for w in near for u in ups})
    out = []
    for mu in cands:
        L = simple(ctx, mu)
        if near & set(L.weight_support):
            out.append(mu)
    return out


def is_projective(M: WeightModule, degree: int | None = None) -> bool:
    return all(ext1(M, simple(M.ctx, mu), degree).dimension == 0 for mu in linked_simple_labels(M))


def is_injective(M: WeightModule, degree: int | None = None) -> bool:
    return all(ext1(simple(M.ctx, mu), M, degree).dimension == 0 for mu in linked_simple_labels(M))


def ext_table(M: WeightModule, side: str = "both") -> dict[Weight, tuple[int | None, int | None]]:
    """{mu: (dim Ext^1(M, L(mu)), dim Ext^1(L(mu), M))} over the linked simples."""
    out = {}
    for mu in linked_simple_labels(M):
        L = simple(M.ctx, mu)
        a = ext1(M, L).dimension if side in ("both", "right") else None
        b = ext1(L, M).dimension if side in ("both", "left") else None
        out[mu] = (a, b)
    return out


__all__ = [
    "ExtReport",
    "Relations",
    "harvest_relations",
    "closure_degree",
    "ext1",
    "linked_simple_labels",
    "is_projective",
    "is_injective",
    "ext_table",
]
