"""Restricted weights, the Steinberg weight, and the restricted/Frobenius
splitting of dominant weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import InputError, NotDominant, NotInCharacterLattice
from .qparam import QuantumParameter, l_simple, l_value
from .rootdata import RootDatum, is_dominant, lowest_weight_partner, positive_roots

Weight = tuple[int, ...]


@dataclass(frozen=True)
class RestrictedRegion:
    bounds: tuple[tuple[int, int], ...]  # (d_alpha, l_alpha) per simple root

    def contains(self, lam: Sequence[int]) -> bool:
        return all(0 <= c < l for c, (_, l) in zip(lam, self.bounds))

    def size(self) -> int:
        out = 1
        for _, l in self.bounds:
            out *= l
        return out


@dataclass(frozen=True)
class SteinbergSplit:
    lambda0: Weight
    lambda1: Weight

    def to_json(self) -> dict:
        return {"lambda0": list(self.lambda0), "lambda1": list(self.lambda1)}


def restricted_region(datum: RootDatum, p: QuantumParameter) -> RestrictedRegion:
    cart = datum.cartan
    return RestrictedRegion(tuple((cart.d[i], l_simple(cart, p, i)) for i in range(cart.rank)))


def is_restricted(datum: RootDatum, p: QuantumParameter, lam: Sequence[int]) -> bool:
    # (alpha, lambda) / d_alpha is just the omega-coefficient
    return restricted_region(datum, p).contains(lam)


def enumerate_restricted(datum: RootDatum, p: QuantumParameter) -> list[Weight]:
    reg = restricted_region(datum, p)
    return [tuple(w) for w in product(*(range(l) for _, l in reg.bounds))]


def rho_l(datum: RootDatum, p: QuantumParameter) -> Weight:
    cart = datum.cartan
    total = [Fraction(0)] * cart.rank
    for r in positive_roots(cart):
        k = l_value(cart, p, r) - 1
        if k:
            wt = datum.root_weight(r)
            for i in range(cart.rank):
                total[i] += Fraction(k * wt[i], 2)
    if any(c.denominator != 1 for c in total):
        raise NotInCharacterLattice("rho_l is not an integral weight")
    rho = tuple(int(c) for c in total)
    if not datum.x_lattice.contains(rho):
        raise NotInCharacterLattice(f"rho_l = {rho} does not lie in X")
    assert is_restricted(datum, p, rho)
    return rho


def _require_sc(datum: RootDatum) -> None:
    if datum.x_lattice.det() != 1:
        raise InputError("the splitting is only available for the simply-connected lattice")


def steinberg_decompose(datum: RootDatum, p: QuantumParameter, lam: Sequence[int]) -> SteinbergSplit:
    _require_sc(datum)
    lam = tuple(int(c) for c in lam)
    if len(lam) != datum.rank:
        raise InputError(f"weight must have {datum.rank} coordinates")
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    ls = [l_simple(datum.cartan, p, i) for i in range(datum.rank)]
    lam0 = tuple(c % l for c, l in zip(lam, ls))
    lam1 = tuple(c - c0 for c, c0 in zip(lam, lam0))
    assert is_restricted(datum, p, lam0)
    assert all(c % l == 0 for c, l in zip(lam1, ls))
    return SteinbergSplit(lam0, lam1)


def brute_force_splits(datum: RootDatum, p: QuantumParameter, lam: Sequence[int]) -> list[SteinbergSplit]:
    """Every (lambda0, lambda1) in P_l x P* summing to lambda, found by box search."""
    ls = [l_simple(datum.cartan, p, i) for i in range(datum.rank)]
    out = []
    for lam0 in enumerate_restricted(datum, p):
        for mult in product(*(range(-c - l, c + l + 1) for c, l in zip(lam, ls))):
            lam1 = tuple(m * l for m, l in zip(mult, ls))
            if all(a + b == c for a, b, c in zip(lam0, lam1, lam)):
                out.append(SteinbergSplit(lam0, lam1))
    return out


def dual_label(datum: RootDatum, lam: Sequence[int]) -> Weight:
    if not is_dominant(lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    return lowest_weight_partner(datum.cartan, lam)
