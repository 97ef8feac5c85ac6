"""The smallest quantum algebra as an explicit finite-dimensional algebra.

It is realised inside End(R) for R = sum of P(mu) over restricted
representatives mu of X/X*, generated by the normalized root vectors
K_gamma E_gamma, the F_gamma and the projections onto X/X*-classes (which
span the group algebra of the character group of X/X*). The triangular
basis K-normalized E-monomial * class projection * F-monomial gives the
structure constants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from ..linalg import Echelon, is_zero, nullspace
from ..smalldata import cardinalities
from ..steinberg import enumerate_restricted
from .context import SmallContext, Weight
from .modules import WeightModule

Mat = dict  # (row, col) -> Cyclotomic


def mat_mul(a: Mat, b: Mat, zero) -> Mat:
    by_row: dict = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: Mat = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            key = (i, j)
            out[key] = out.get(key, zero) + u * v
    return {k: v for k, v in out.items() if not is_zero(v)}


def mat_identity(n: int, one) -> Mat:
    return {(i, i): one for i in range(n)}


@dataclass
class FiniteDimAlgebra:
    ctx: SmallContext
    basis_labels: list[tuple]
    structure: list[list[dict[int, object]]]  # structure[i][j] = {k: c}, b_i b_j = sum c b_k
    generators: dict[str, int] = field(default_factory=dict)
    augmentation: dict[int, object] = field(default_factory=dict)
    unit: dict[int, object] = field(default_factory=dict)
    matrices: list[Mat] = field(default_factory=list, repr=False)
    rep_dim: int = 0

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def mul(self, x: dict, y: dict) -> dict:
        zero = self.ctx.zero
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.structure[i][j].items():
                    out[k] = out.get(k, zero) + a * b * c
        return {k: v for k, v in out.items() if not is_zero(v)}

    def basis_vector(self, i: int) -> dict:
        return {i: self.ctx.one}

    def check_associativity(self, samples: int | None = None, seed: int = 0) -> bool:
        """Exhaustive over basis triples up to dimension 64, else ``samples``
        random triples (default 2000)."""
        n = self.dim
        if samples is None and n > 64:
            samples = 2000
        if samples is None:
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        for i, j, k in triples:
            bi, bj, bk = (self.basis_vector(t) for t in (i, j, k))
            if self.mul(self.mul(bi, bj), bk) != self.mul(bi, self.mul(bj, bk)):
                return False
        return True

    def check_unit(self) -> bool:
        return all(
            self.mul(self.unit, self.basis_vector(i)) == self.basis_vector(i)
            and self.mul(self.basis_vector(i), self.unit) == self.basis_vector(i)
            for i in range(self.dim)
        )

    def check_augmentation(self) -> bool:
        """The augmentation is multiplicative on basis pairs and sends 1 to 1."""
        eps = self.augmentation
        zero = self.ctx.zero

        def ev(x):
            acc = zero
            for k, c in x.items():
                if k in eps:
                    acc = acc + c * eps[k]
            return acc

        if ev(self.unit) != self.ctx.one:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = ev(self.structure[i][j])
                rhs = eps.get(i, zero) * eps.get(j, zero)
                if lhs != rhs:
                    return False
        return True

    def trace_form_radical(self) -> list[dict]:
        """Basis of the Jacobson radical: the radical of (a, b) -> tr(L_a L_b)."""
        n = self.dim
        zero = self.ctx.zero
        traces = []
        for s in range(n):
            t = zero
            for k in range(n):
                c = self.structure[s][k].get(k)
                if c is not None:
                    t = t + c
            traces.append(t)
        gram = []
        for i in range(n):
            row = {}
            for j in range(n):
                acc = zero
                for s, c in self.structure[i][j].items():
                    acc = acc + c * traces[s]
                if not is_zero(acc):
                    row[j] = acc
            gram.append(row)
        return nullspace(gram, n, self.ctx.one)


def _class_reps(ctx: SmallContext) -> dict:
    reps = {}
    for w in enumerate_restricted(ctx.datum, ctx.p):
        reps.setdefault(ctx.grading_class(w), w)
    return reps


def _bold_e(ctx: SmallContext, M: WeightModule, g) -> Mat:
    """K_gamma E_gamma on M."""
    out = {}
    for j, col in enumerate(M.action[g]):
        for i, a in col.items():
            out[(i, j)] = a * ctx.k_scalar(g[1], M.weights[i])
    return out


def _plain(M: WeightModule, g) -> Mat:
    return {(i, j): a for j, col in enumerate(M.action[g]) for i, a in col.items()}


def small_generators(ctx: SmallContext, M: WeightModule) -> dict[str, Mat]:
    """Matrices of the generators of the small algebra acting on M."""
    from .context import gen_label

    out = {}
    for g in ctx.gens:
        out[("K" if g[0] == "E" else "") + gen_label(g)] = _bold_e(ctx, M, g) if g[0] == "E" else _plain(M, g)
    classes = sorted({ctx.grading_class(w) for w in _class_reps(ctx)})
    for c in classes:
        out[f"pi{list(c)}"] = {(k, k): ctx.one for k, w in enumerate(M.weights) if ctx.grading_class(w) == c}
    return out


def faithful_module(ctx: SmallContext) -> WeightModule:
    from .modules import direct_sum

    reps = _class_reps(ctx)
    mods = [ctx.projective(reps[c]) for c in sorted(reps)]
    R = mods[0]
    for M in mods[1:]:
        R = direct_sum(R, M)
    R.label = "R"
    return R


def generated_dimension(gens: dict[str, Mat], n: int, one) -> int:
    """Dimension of the unital algebra generated by the matrices."""
    return len(_closure_basis(gens, n, one))


def _closure_basis(gens: dict[str, Mat], n: int, one) -> list[Mat]:
    zero = one - one
    ech = Echelon(one)
    ident = mat_identity(n, one)
    basis = [ident]
    ech.add(dict(ident))
    queue = [ident]
    while queue:
        b = queue.pop()
        for g in gens.values():
            p = mat_mul(g, b, zero)
            if p and ech.add(dict(p)) is not None:
                basis.append(p)
                queue.append(p)
    return basis


def basis_labels(ctx: SmallContext) -> list[tuple]:
    """(E-exponents, X/X* class, F-exponents) with restricted exponents."""
    classes = sorted(_class_reps(ctx))
    return [(m, c, n) for m in ctx.restricted_exponents for c in classes for n in ctx.restricted_exponents]


def _root_operator(ctx: SmallContext, R: WeightModule, k: int, kind: str, reps: Sequence[Weight]) -> Mat:
    """Root vector number k of the convex order on R, with K-normalization for E."""
    root = ctx.U.roots[k].q_coords
    g = (kind, root)
    if g in R.action:
        return _bold_e(ctx, R, g) if kind == "E" else _plain(R, g)
    x = ctx.U.root_vector(root, kind)
    key = ("pbw", kind, root)
    out: Mat = {}
    offset = 0
    basis = [(a, b) for a in ctx.restricted_exponents for b in ctx.restricted_exponents]
    index = {kk: t for t, kk in enumerate(basis)}
    for lam in reps:
        for j, (a, b) in enumerate(basis):
            for kk, c in ctx.act_on_pbw(x, key, a, b, lam).items():
                i = offset + index[kk]
                out[(i, offset + j)] = c * (ctx.k_scalar(root, R.weights[i]) if kind == "E" else 1)
        offset += len(basis)
    return out


def build_algebra(ctx: SmallContext, check: bool = True) -> FiniteDimAlgebra:
    card = cardinalities(ctx.datum, ctx.p)
    R = faithful_module(ctx)
    n = R.dim
    one, zero = ctx.one, ctx.zero
    gens = small_generators(ctx, R)
    reps = _class_reps(ctx)
    rep_weights = [reps[c] for c in sorted(reps)]
    # roots with l = 1 never occur in a restricted monomial
    live = [k for k, l in enumerate(ctx.lvals) if l > 1]
    e_ops = {k: _root_operator(ctx, R, k, "E", rep_weights) for k in live}
    f_ops = {k: _root_operator(ctx, R, k, "F", rep_weights) for k in live}

    def monomial(ops, m, reverse=False):
        out = mat_identity(n, one)
        order = range(len(m))
        for k in (reversed(order) if reverse else order):
            for _ in range(m[k]):
                out = mat_mul(out, ops[k], zero)
        return out

    labels = basis_labels(ctx)
    e_mons = {m: monomial(e_ops, m) for m in ctx.restricted_exponents}
    f_mons = {m: monomial(f_ops, m, reverse=True) for m in ctx.restricted_exponents}
    proj = {c: gens[f"pi{list(c)}"] for c in sorted(reps)}
    mats = [mat_mul(mat_mul(e_mons[m], proj[c], zero), f_mons[f], zero) for m, c, f in labels]

    # coordinates through a tagged echelon form
    coords = Echelon(one)
    for t, b in enumerate(mats):
        row = {(0,) + k: v for k, v in b.items()}
        row[(1, t)] = one
        pivot = coords.add(row)
        if pivot is None or pivot[0] != 0:
            raise ArithmeticError("triangular basis matrices are linearly dependent")

    def coordinates(x: Mat) -> dict:
        red = coords.reduce({(0,) + k: v for k, v in x.items()})
        if any(c[0] == 0 for c in red):
            raise ArithmeticError("product left the span of the triangular basis")
        return {c[1]: -v for c, v in red.items()}

    structure = [[coordinates(mat_mul(a, b, zero)) for b in mats] for a in mats]
    alg = FiniteDimAlgebra(ctx, labels, structure, matrices=mats, rep_dim=n)
    alg.unit = coordinates(mat_identity(n, one))
    zero_class = ctx.grading_class(tuple([0] * ctx.rank))
    none = tuple([0] * len(ctx.lvals))
    alg.augmentation = {t: one for t, (m, c, f) in enumerate(labels) if m == none and f == none and c == zero_class}
    for name, g in gens.items():
        alg.generators[name] = len(alg.generators)
    if check:
        if alg.dim != card.dim_ubar:
            raise ArithmeticError(f"algebra dimension {alg.dim} != {card.dim_ubar}")
        gdim = generated_dimension(gens, n, one)
        if gdim != alg.dim:
            raise ArithmeticError(f"generators produce a {gdim}-dimensional algebra, expected {alg.dim}")
    return alg


def image_dimension(ctx: SmallContext, M: WeightModule) -> int:
    """Dimension of the image of the small algebra in End(M)."""
    return generated_dimension(small_generators(ctx, M), M.dim, ctx.one)


def is_absolutely_simple(ctx: SmallContext, M: WeightModule) -> bool:
    """Burnside: M is absolutely simple iff the algebra maps onto End(M)."""
    return M.dim > 0 and image_dimension(ctx, M) == M.dim**2


def small_hom_dimension(ctx: SmallContext, M: WeightModule, N: WeightModule) -> int:
    """dim Hom over the small algebra, ignoring the X-grading beyond X/X*."""
    gm, gn = small_generators(ctx, M), small_generators(ctx, N)
    var = {(k, j): t for t, (k, j) in enumerate(product(range(N.dim), range(M.dim)))}
    eqs = []
    zero = ctx.zero
    for name in gm:
        a, b = gm[name], gn[name]
        # b h - h a = 0
        rows: dict = {}
        for (k2, k), v in b.items():
            for j in range(M.dim):
                r = rows.setdefault((k2, j), {})
                r[var[(k, j)]] = r.get(var[(k, j)], zero) + v
        for (j2, j), v in a.items():
            for k in range(N.dim):
                r = rows.setdefault((k, j), {})
                r[var[(k, j2)]] = r.get(var[(k, j2)], zero) - v
        for r in rows.values():
            r = {x: y for x, y in r.items() if not is_zero(y)}
            if r:
                eqs.append(r)
    return len(nullspace(eqs, len(var), ctx.one))
