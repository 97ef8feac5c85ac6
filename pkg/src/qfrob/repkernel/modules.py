"""X-graded modules over the small quantum algebra and their basic
constructions: sub/quotient modules, induced modules, simples, duals,
tensor products, Hom spaces, socle and cosocle."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NotCyclic
from ..linalg import Echelon, is_zero, nullspace
from .context import GenKey, SmallContext, Weight

Vec = dict  # basis index -> Cyclotomic


@dataclass
class WeightModule:
    """Finite-dimensional module with a weight basis.

    ``action[g][j]`` is the image of basis vector j under generator g,
    as a sparse column. The torus acts on a vector of weight lambda by
    K_nu -> q^(nu, lambda), so it is not stored.
    """

    ctx: SmallContext
    weights: list[Weight]
    action: dict[GenKey, list[Vec]]
    label: str = ""
    _by_weight: dict | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def by_weight(self) -> dict[Weight, list[int]]:
        if self._by_weight is None:
            out: dict = {}
            for k, w in enumerate(self.weights):
                out.setdefault(w, []).append(k)
            self._by_weight = out
        return self._by_weight

    @property
    def weight_support(self) -> list[Weight]:
        return sorted(self.by_weight())

    def character(self) -> Counter:
        return Counter(self.weights)

    def act(self, g: GenKey, vec: Vec) -> Vec:
        out: Vec = {}
        cols = self.action[g]
        for j, c in vec.items():
            for i, a in cols[j].items():
                val = out.get(i)
                val = a * c if val is None else val + a * c
                if is_zero(val):
                    out.pop(i, None)
                else:
                    out[i] = val
        return out

    def act_word(self, word: Sequence[GenKey], vec: Vec) -> Vec:
        """word[0] ... word[-1] applied to vec (rightmost letter first)."""
        for g in reversed(word):
            vec = self.act(g, vec)
            if not vec:
                break
        return vec

    def rows(self, g: GenKey) -> list[Vec]:
        """Matrix of g as sparse rows."""
        out: list[Vec] = [{} for _ in range(self.dim)]
        for j, col in enumerate(self.action[g]):
            for i, a in col.items():
                out[i][j] = a
        return out

    def check_grading(self) -> bool:
        for g, cols in self.action.items():
            s = self.ctx.shift(g)
            for j, col in enumerate(cols):
                target = tuple(a + b for a, b in zip(self.weights[j], s))
                if any(self.weights[i] != target for i in col):
                    return False
        return True

    def lowest_weights(self) -> list[Weight]:
        return _extremal(self.ctx, self.weight_support, lowest=True)

    def highest_weights(self) -> list[Weight]:
        return _extremal(self.ctx, self.weight_support, lowest=False)

    def summary(self) -> dict:
        return {
            "label": self.label,
            "dimension": self.dim,
            "weight_support": [list(w) for w in self.weight_support],
            "character": {",".join(map(str, w)): n for w, n in sorted(self.character().items())},
        }


def _extremal(ctx: SmallContext, support: Sequence[Weight], lowest: bool) -> list[Weight]:
    coords = {w: ctx.datum.weight_to_root_coords(w) for w in support}
    out = []
    for w in support:
        dominated = False
        for u in support:
            if u == w:
                continue
            diff = [a - b for a, b in zip(coords[w], coords[u])]
            if not lowest:
                diff = [-d for d in diff]
            # u < w (resp. u > w) in the dominance order
            if all(d >= 0 and Fraction(d).denominator == 1 for d in diff):
                dominated = True
                break
        if not dominated:
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# subspaces, submodules, quotients


def closure(M: WeightModule, vectors: Iterable[Vec]) -> Echelon:
    """Echelon basis of the submodule generated by ``vectors``."""
    ech = Echelon(M.ctx.one)
    queue = []
    for v in vectors:
        if ech.add(dict(v)) is not None:
            queue.append(v)
    while queue:
        v = queue.pop()
        for g in M.action:
            w = M.act(g, v)
            if w and ech.add(dict(w)) is not None:
                queue.append(w)
    return ech


def submodule(M: WeightModule, ech: Echelon, label: str = "") -> WeightModule:
    pivots = sorted(ech.rows)
    index = {p: n for n, p in enumerate(pivots)}
    weights = [M.weights[p] for p in pivots]
    action = {}
    for g in M.action:
        cols = []
        for p in pivots:
            img = M.act(g, ech.rows[p])
            red = ech.reduce(dict(img))
            if red:
                raise ValueError("subspace is not stable under the action")
            cols.append({index[c]: img[c] for c in img if c in index})
        action[g] = cols
    return WeightModule(M.ctx, weights, action, label)


def submodule_inclusion(M: WeightModule, ech: Echelon) -> list[Vec]:
    """Images in M of the basis of ``submodule(M, ech)``."""
    return [dict(ech.rows[p]) for p in sorted(ech.rows)]


def quotient(M: WeightModule, ech: Echelon, label: str = "") -> WeightModule:
    keep = [k for k in range(M.dim) if k not in ech.rows]
    index = {k: n for n, k in enumerate(keep)}
    weights = [M.weights[k] for k in keep]
    action = {}
    for g in M.action:
        cols = []
        for k in keep:
            red = ech.reduce(dict(M.action[g][k]))
            cols.append({index[c]: v for c, v in red.items()})
        action[g] = cols
    return WeightModule(M.ctx, weights, action, label)


def is_submodule(M: WeightModule, vectors: Sequence[Vec]) -> bool:
    ech = Echelon(M.ctx.one)
    for v in vectors:
        ech.add(dict(v))
    return all(ech.contains(dict(M.act(g, ech.rows[p]))) for p in ech.rows for g in M.action)


# ---------------------------------------------------------------------------
# induced modules and simples


def _unit_vectors(M: WeightModule, idx: Iterable[int]) -> list[Vec]:
    return [{k: M.ctx.one} for k in idx]


def baby_verma(ctx: SmallContext, lam: Sequence[int]) -> WeightModule:
    """Module induced from the character lambda of the non-positive part.

    Lowest weight lambda, free of rank one over the positive part, so its
    weights are lambda + (restricted PBW degrees)."""
    P = ctx.projective(lam)
    seeds = [P.action[g][0] for g in ctx.gens if g[0] == "F"]
    return quotient(P, closure(P, seeds), f"Lind{list(lam)}")


def verma_top(ctx: SmallContext, lam: Sequence[int]) -> WeightModule:
    """Module induced from the character lambda of the non-negative part (highest weight lambda)."""
    P = ctx.projective(lam)
    seeds = [P.action[g][0] for g in ctx.gens if g[0] == "E"]
    return quotient(P, closure(P, seeds), f"Delta{list(lam)}")


def maximal_submodule(M: WeightModule, top: Sequence[int]) -> Echelon:
    """Largest submodule of a module cyclic on its one-dimensional top weight.

    A vector lies in it iff no word in the generators carries it to the top
    line, i.e. it is killed by every functional e_top^* . rho(w). Those
    functionals are collected by closing the top coordinate functional under
    right multiplication by the generators.
    """
    top = tuple(top)
    idx = M.by_weight().get(top, [])
    if len(idx) != 1:
        raise NotCyclic(f"top weight {list(top)} has multiplicity {len(idx)}")
    one = M.ctx.one
    funcs = Echelon(one)
    start = {idx[0]: one}
    funcs.add(dict(start))
    queue = [start]
    while queue:
        f = queue.pop()
        for g in M.action:
            # (f . rho(g))_j = sum_i f_i rho(g)_{ij}
            out: Vec = {}
            cols = M.action[g]
            for j, col in enumerate(cols):
                acc = None
                for i, a in col.items():
                    fi = f.get(i)
                    if fi is not None:
                        acc = a * fi if acc is None else acc + a * fi
                if acc is not None and not is_zero(acc):
                    out[j] = acc
            if out and funcs.add(dict(out)) is not None:
                queue.append(out)
    kernel = nullspace(list(funcs.rows.values()), M.dim, one)
    ech = Echelon(one)
    for v in kernel:
        ech.add(v)
    gen_check = closure(M, _unit_vectors(M, idx))
    if gen_check.rank != M.dim:
        raise NotCyclic("module is not generated by its top weight line")
    return ech


def simple(ctx: SmallContext, lam: Sequence[int]) -> WeightModule:
    """L(lambda): the simple head of the highest-weight induced module."""
    lam = tuple(lam)
    cache = ctx.__dict__.setdefault("_simples", {})
    got = cache.get(lam)
    if got is None:
        D = verma_top(ctx, lam)
        got = quotient(D, maximal_submodule(D, lam), f"L{list(lam)}")
        cache[lam] = got
    return got


def steinberg_module(ctx: SmallContext) -> WeightModule:
    from ..steinberg import rho_l

    St = simple(ctx, rho_l(ctx.datum, ctx.p))
    return St


def trivial(ctx: SmallContext) -> WeightModule:
    return simple(ctx, tuple([0] * ctx.rank))


# ---------------------------------------------------------------------------
# dualities


def hopf_dual(M: WeightModule) -> WeightModule:
    """Linear dual with action through the antipode.

    S(E) = -K^-1 E and S(F) = -F K for the skew-primitive generators, so the
    weights negate."""
    ctx = M.ctx
    weights = [tuple(-c for c in w) for w in M.weights]
    action = {}
    for g in M.action:
        kind, root = g
        rows = M.rows(g)
        cols = []
        for j in range(M.dim):
            col = {}
            for i, a in rows[j].items():
                if kind == "E":
                    s = ctx.k_scalar(root, M.weights[j])
                    col[i] = -a / s
                else:
                    col[i] = -a * ctx.k_scalar(root, M.weights[i])
            cols.append(col)
        action[g] = cols
    return WeightModule(ctx, weights, action, f"({M.label})*")


def contravariant_dual(M: WeightModule) -> WeightModule:
    """Linear dual twisted by the anti-involution tau (E <-> F, K fixed); weights are preserved."""
    ctx = M.ctx
    consts = ctx.tau_constants
    action = {}
    for g in M.action:
        kind, root = g
        opposite = ("F" if kind == "E" else "E", root)
        rows = M.rows(opposite)
        c = consts[g]
        action[g] = [{i: a * c for i, a in rows[j].items()} for j in range(M.dim)]
    return WeightModule(ctx, list(M.weights), action, f"({M.label})^tau")


def rind(ctx: SmallContext, lam: Sequence[int]) -> WeightModule:
    """Module coinduced from the character lambda of the non-negative part,
    realised as the dual of the module induced from -lambda."""
    lam = tuple(lam)
    M = hopf_dual(baby_verma(ctx, tuple(-c for c in lam)))
    M.label = f"Rind{list(lam)}"
    return M


def tensor_product(M: WeightModule, N: WeightModule) -> WeightModule:
    """Delta(E) = E x 1 + K x E, Delta(F) = F x K^-1 + 1 x F."""
    ctx = M.ctx
    n = N.dim
    weights = [tuple(a + b for a, b in zip(M.weights[i], N.weights[j])) for i in range(M.dim) for j in range(n)]
    action = {}
    for g in M.action:
        kind, root = g
        cols = []
        for i in range(M.dim):
            for j in range(n):
                col = {}
                for i2, a in M.action[g][i].items():
                    s = a if kind == "E" else a / ctx.k_scalar(root, N.weights[j])
                    col[i2 * n + j] = s
                for j2, b in N.action[g][j].items():
                    s = b * ctx.k_scalar(root, M.weights[i]) if kind == "E" else b
                    key = i * n + j2
                    col[key] = col[key] + s if key in col else s
                cols.append({k: v for k, v in col.items() if not is_zero(v)})
        action[g] = cols
    return WeightModule(ctx, weights, action, f"{M.label}(x){N.label}")


def direct_sum(M: WeightModule, N: WeightModule) -> WeightModule:
    off = M.dim
    action = {}
    for g in M.action:
        cols = [dict(c) for c in M.action[g]]
        cols += [{i + off: a for i, a in c.items()} for c in N.action[g]]
        action[g] = cols
    return WeightModule(M.ctx, list(M.weights) + list(N.weights), action, f"{M.label}+{N.label}")


# ---------------------------------------------------------------------------
# Hom spaces and isomorphism


def hom_space(M: WeightModule, N: WeightModule) -> list[list[Vec]]:
    """Basis of Hom(M, N); a map h is stored as columns h[j] = image of basis j."""
    ctx = M.ctx
    nb = N.by_weight()
    var = {}
    for j, w in enumerate(M.weights):
        for k in nb.get(w, []):
            var[(k, j)] = len(var)
    if not var:
        return []
    eqs = []
    for g in M.action:
        for j in range(M.dim):
            # rho_N(g) h e_j - h rho_M(g) e_j
            row: dict = {}
            for k in nb.get(M.weights[j], []):
                for k2, a in N.action[g][k].items():
                    row.setdefault(k2, {})
                    v = var[(k, j)]
                    row[k2][v] = row[k2].get(v, ctx.zero) + a
            for j2, b in M.action[g][j].items():
                for k in nb.get(M.weights[j2], []):
                    row.setdefault(k, {})
                    v = var[(k, j2)]
                    row[k][v] = row[k].get(v, ctx.zero) - b
            for eq in row.values():
                eq = {v: c for v, c in eq.items() if not is_zero(c)}
                if eq:
                    eqs.append(eq)
    out = []
    for sol in nullspace(eqs, len(var), ctx.one):
        h: list[Vec] = [{} for _ in range(M.dim)]
        for (k, j), v in var.items():
            c = sol.get(v)
            if c is not None and not is_zero(c):
                h[j][k] = c
        out.append(h)
    return out


def apply_map(h: list[Vec], vec: Vec, zero) -> Vec:
    out: Vec = {}
    for j, c in vec.items():
        for k, a in h[j].items():
            out[k] = out.get(k, zero) + a * c
    return {k: v for k, v in out.items() if not is_zero(v)}


def _combine(maps: Sequence[list[Vec]], coeffs: Sequence[int], dim: int, zero) -> list[Vec]:
    out: list[Vec] = [{} for _ in range(dim)]
    for h, c in zip(maps, coeffs):
        for j, col in enumerate(h):
            for k, a in col.items():
                out[j][k] = out[j].get(k, zero) + a * c
    return [{k: v for k, v in col.items() if not is_zero(v)} for col in out]


def is_invertible(h: list[Vec], n: int, one) -> bool:
    ech = Echelon(one)
    for col in h:
        ech.add(dict(col))
    return ech.rank == n


def module_iso_test(M: WeightModule, N: WeightModule, seed: int = 0, tries: int = 6) -> list[Vec] | None:
    """An isomorphism M -> N, or None. Candidates are seeded random
    combinations of a Hom basis; a generic combination is invertible
    whenever any element of the Hom space is."""
    if M.dim != N.dim or M.character() != N.character():
        return None
    if M.dim == 0:
        return []
    basis = hom_space(M, N)
    if not basis:
        return None
    rng = random.Random(seed)
    for t in range(tries):
        coeffs = [1] if len(basis) == 1 else [rng.randint(-50, 50) for _ in basis]
        h = _combine(basis, coeffs, M.dim, M.ctx.zero)
        if is_invertible(h, N.dim, M.ctx.one):
            return h
        if len(basis) == 1:
            break
    return None


def end_dimension(M: WeightModule) -> int:
    return len(hom_space(M, M))


# ---------------------------------------------------------------------------
# socle and cosocle


def _candidate_tops(M: WeightModule) -> list[Weight]:
    return M.weight_support


def socle(M: WeightModule) -> WeightModule:
    """Sum of the images of all maps from simples into M."""
    ctx = M.ctx
    images: list[Vec] = []
    for mu in _candidate_tops(M):
        L = simple(ctx, mu)
        for h in hom_space(L, M):
            images.extend(v for v in h if v)
    ech = Echelon(ctx.one)
    for v in images:
        ech.add(dict(v))
    return submodule(M, ech, f"soc({M.label})")


def radical_of_module(M: WeightModule) -> Echelon:
    """Intersection of the kernels of all maps from M onto simples."""
    ctx = M.ctx
    funcs = []
    for mu in _candidate_tops(M):
        L = simple(ctx, mu)
        for h in hom_space(M, L):
            for k in range(L.dim):
                f = {j: col[k] for j, col in enumerate(h) if k in col}
                if f:
                    funcs.append(f)
    ech = Echelon(ctx.one)
    for v in nullspace(funcs, M.dim, ctx.one):
        ech.add(v)
    return ech


def cosocle(M: WeightModule) -> WeightModule:
    return quotient(M, radical_of_module(M), f"cosoc({M.label})")


def is_simple(M: WeightModule) -> bool:
    """Nonzero with socle equal to the whole module and scalar endomorphisms."""
    return M.dim > 0 and socle(M).dim == M.dim and end_dimension(M) == 1 and len(M.highest_weights()) == 1


# ---------------------------------------------------------------------------
# invariants and gradings


def invariants_subspace(M: WeightModule) -> list[Vec]:
    """Joint kernel of every generator inside the X*-graded part."""
    ctx = M.ctx
    out = []
    zero_class = ctx.grading_class(tuple([0] * ctx.rank))
    for w, idx in sorted(M.by_weight().items()):
        if ctx.grading_class(w) != zero_class:
            continue
        local = {k: n for n, k in enumerate(idx)}
        eqs = []
        for g in M.action:
            rows: dict = {}
            for k in idx:
                for i, a in M.action[g][k].items():
                    rows.setdefault(i, {})[local[k]] = a
            eqs.extend(rows.values())
        for sol in nullspace(eqs, len(idx), ctx.one):
            out.append({idx[n]: c for n, c in sol.items()})
    return out


@dataclass
class ClassGradedModule:
    """A module whose grading is only remembered modulo X*."""

    ctx: SmallContext
    classes: list[Weight]
    action: dict[GenKey, list[Vec]]


def reduce_grading(M: WeightModule) -> ClassGradedModule:
    return ClassGradedModule(M.ctx, [M.ctx.grading_class(w) for w in M.weights], M.action)


def lift_grading(V: ClassGradedModule) -> WeightModule:
    """The X-graded lift whose highest weight in each connected piece lies in
    the restricted region.

    Weights are propagated along the nonzero matrix entries of the
    generators, so each connected piece is determined up to a translation by
    X*; the translation is fixed by the restricted representative of the
    top weight's class.
    """
    from ..steinberg import enumerate_restricted

    ctx = V.ctx
    n = len(V.classes)
    adj: list[list[tuple[int, Weight]]] = [[] for _ in range(n)]
    for g, cols in V.action.items():
        s = ctx.shift(g)
        neg = tuple(-c for c in s)
        for j, col in enumerate(cols):
            for i in col:
                adj[j].append((i, s))
                adj[i].append((j, neg))
    reps = {}
    for w in enumerate_restricted(ctx.datum, ctx.p):
        reps.setdefault(ctx.grading_class(w), w)
    weights: list[Weight | None] = [None] * n
    for start in range(n):
        if weights[start] is not None:
            continue
        rel = {start: tuple([0] * ctx.rank)}
        queue = [start]
        while queue:
            j = queue.pop()
            for i, s in adj[j]:
                w = tuple(a + b for a, b in zip(rel[j], s))
                if i not in rel:
                    rel[i] = w
                    queue.append(i)
                elif rel[i] != w:
                    raise ValueError("class grading does not lift: inconsistent weights on a cycle")
        tops = _extremal(ctx, sorted(set(rel.values())), lowest=False)
        top = tops[0]
        top_vertex = next(v for v, w in rel.items() if w == top)
        cls = V.classes[top_vertex]
        if cls not in reps:
            raise ValueError(f"class {cls} has no restricted representative")
        t = tuple(a - b for a, b in zip(reps[cls], top))
        for v, w in rel.items():
            lifted = tuple(a + b for a, b in zip(w, t))
            if ctx.grading_class(lifted) != V.classes[v]:
                raise ValueError("class grading is incompatible with the generator degrees")
            weights[v] = lifted
    return WeightModule(ctx, [w for w in weights], V.action, "lift")
