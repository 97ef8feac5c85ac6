"""Verification suites over the module category: the Steinberg module,
socle/cosocle of coinduced modules, and the restricted simples."""

from __future__ import annotations

import random
from typing import Sequence

from ..qsymbolic.verify import verdict
from ..steinberg import enumerate_restricted, rho_l
from ..rootdata import weyl_orbit
from .context import SmallContext, Weight
from .ext import ext1, linked_simple_labels
from .modules import (
    WeightModule,
    contravariant_dual,
    cosocle,
    end_dimension,
    hopf_dual,
    is_simple,
    module_iso_test,
    rind,
    simple,
    socle,
)
from .small_algebra import build_algebra, is_absolutely_simple, small_hom_dimension


def _w(lam: Sequence[int]) -> list[int]:
    return list(lam)


def steinberg_suite(ctx: SmallContext, seed: int = 0) -> list[dict]:
    """dim St, St = rind(rho_l), self-duality, simplicity and vanishing Ext^1 on both sides."""
    tag = ctx.tag
    rho = rho_l(ctx.datum, ctx.p)
    St = simple(ctx, rho)
    out = []
    out.append(verdict(f"{tag}:dim St = prod l_gamma", St.dim == ctx.root_product, None,
                       {"dim": St.dim, "expected": ctx.root_product}))
    R = rind(ctx, rho)
    out.append(verdict(f"{tag}:St ~ rind(rho_l)", module_iso_test(R, St, seed) is not None, None,
                       {"rind_character": R.summary()["character"]}))
    out.append(verdict(f"{tag}:St ~ St* (antipode dual)", module_iso_test(hopf_dual(St), St, seed) is not None, None, None))
    out.append(verdict(f"{tag}:St ~ St^tau (contravariant dual)",
                       module_iso_test(contravariant_dual(St), St, seed) is not None, None, None))
    out.append(verdict(f"{tag}:St simple", is_simple(St) and is_absolutely_simple(ctx, St), None, None))
    out.append(verdict(f"{tag}:End(rind(rho_l)) scalar", end_dimension(R) == 1, None, None))
    proj_ok = inj_ok = True
    degrees = set()
    bad = []
    labels = linked_simple_labels(St)
    for mu in labels:
        L = simple(ctx, mu)
        right = ext1(St, L)
        left = ext1(L, St)
        degrees.update((right.stabilization_degree, left.stabilization_degree))
        if right.dimension:
            proj_ok = False
            bad.append({"Ext1(St,L)": _w(mu), "dim": right.dimension})
        if left.dimension:
            inj_ok = False
            bad.append({"Ext1(L,St)": _w(mu), "dim": left.dimension})
    window = {"relation_degree": max(degrees) if degrees else 0, "linked_simples": len(labels)}
    out.append(verdict(f"{tag}:Ext1(St, L) = 0 for all simple L", proj_ok, window, bad or None))
    out.append(verdict(f"{tag}:Ext1(L, St) = 0 for all simple L", inj_ok, window, bad or None))
    return out


def socle_cosocle_check(ctx: SmallContext, lam: Sequence[int], seed: int = 0) -> list[dict]:
    """socle(rind(lambda)) = L(lambda) and the cosocle is simple of lowest weight lambda - 2 rho_l."""
    lam = tuple(lam)
    tag = f"{ctx.tag}:lambda={_w(lam)}"
    rho = rho_l(ctx.datum, ctx.p)
    R = rind(ctx, lam)
    soc = socle(R)
    L = simple(ctx, lam)
    ok_soc = module_iso_test(soc, L, seed) is not None
    cos = cosocle(R)
    expected = tuple(a - 2 * b for a, b in zip(lam, rho))
    lows = cos.lowest_weights()
    ok_cos = lows == [expected] and is_simple(cos)
    return [
        verdict(f"{tag}:socle(rind) ~ L(lambda)", ok_soc, None, {"socle": soc.summary(), "simple": L.summary()}),
        verdict(f"{tag}:cosocle(rind) simple of lowest weight lambda-2rho_l", ok_cos, None,
                {"lowest_weights": [list(w) for w in lows], "expected": list(expected)}),
        verdict(f"{tag}:End(rind) scalar", end_dimension(R) == 1, None, None),
    ]


def random_weights(ctx: SmallContext, count: int, seed: int = 0, bound: int = 6) -> list[Weight]:
    """``count`` distinct weights from the box [-bound, bound]^rank."""
    from itertools import product

    box = list(product(range(-bound, bound + 1), repeat=ctx.rank))
    return [tuple(w) for w in random.Random(seed).sample(box, min(count, len(box)))]


def restricted_simples_check(ctx: SmallContext) -> tuple[list[dict], dict]:
    """The restricted simples are absolutely simple, pairwise non-isomorphic over
    the small algebra, have Weyl-stable supports, and exhaust the simples:
    the squares of their dimensions add up to dim A - dim J."""
    tag = ctx.tag
    labels = enumerate_restricted(ctx.datum, ctx.p)
    mods = {lam: simple(ctx, lam) for lam in labels}
    out = []
    for lam, L in mods.items():
        out.append(verdict(f"{tag}:L{_w(lam)} absolutely simple", is_absolutely_simple(ctx, L), None, None))
        support = set(L.weight_support)
        stable = all(weyl_orbit(ctx.cartan, w) <= support for w in support)
        out.append(verdict(f"{tag}:L{_w(lam)} Weyl-stable support", stable, None,
                           {"support": [list(w) for w in sorted(support)]}))
    pairs_ok = True
    keys = list(mods)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if small_hom_dimension(ctx, mods[a], mods[b]) != 0:
                pairs_ok = False
    out.append(verdict(f"{tag}:restricted simples pairwise non-isomorphic", pairs_ok, None, None))
    A = build_algebra(ctx)
    J = A.trace_form_radical()
    total = sum(L.dim ** 2 for L in mods.values())
    out.append(verdict(f"{tag}:sum dim^2 = dim A - dim rad A", total == A.dim - len(J), None,
                       {"sum_dim_sq": total, "dim_A": A.dim, "dim_rad": len(J)}))
    info = {
        "simple_count": len(mods),
        "restricted_count": len(labels),
        "dimensions": {",".join(map(str, k)): v.dim for k, v in mods.items()},
        "dim_A": A.dim,
        "dim_radical": len(J),
    }
    return out, info


def module_report(M: WeightModule, verdicts: list[dict] | None = None) -> dict:
    return {
        "dimension": M.dim,
        "weight_support": [list(w) for w in M.weight_support],
        "verdicts": verdicts or [],
    }
