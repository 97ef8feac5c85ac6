"""Acceptance criteria, one test each. Every test prints a single
PASS/FAIL line with its wall time and budget."""

import time
from contextlib import contextmanager
from itertools import product

import pytest

from qfrob.frobdual import check_stability, dual_datum
from qfrob.qparam import from_orders, l_table
from qfrob.qsymbolic import (
    QuantumAlgebra,
    verify_appendix_braid,
    verify_normality_commutators,
    verify_pbw,
)
from qfrob.repkernel import build_algebra, small_context
from qfrob.repkernel.suites import (
    random_weights,
    restricted_simples_check,
    socle_cosocle_check,
    steinberg_suite,
)
from qfrob.rootdata import make_root_datum, parse_type
from qfrob.smalldata import cardinalities
from qfrob.steinberg import brute_force_splits, steinberg_decompose


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, budget: float):
        state = {"ok": False}
        start = time.perf_counter()
        try:
            yield state
        finally:
            elapsed = time.perf_counter() - start
            ok = state["ok"] and elapsed <= budget
            with capsys.disabled():
                print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, budget {budget:g}s)")
        assert elapsed <= budget, f"criterion {number} exceeded its time budget"

    return run


def failures(verdicts):
    return [v for v in verdicts if v["status"] != "PASS"]


def setup(name, order):
    datum = make_root_datum(name)
    return datum, from_orders(datum.cartan, order)


def restricted_pbw_count(name, order):
    """Restricted PBW monomials of the positive part, enumerated degree by degree."""
    cart = parse_type(name)
    p = from_orders(cart, order)
    table = l_table(cart, p)
    ls = [l for _, l in table]
    top = sum((l - 1) * r.height for r, l in table)
    U = QuantumAlgebra(cart, max(top, 1))
    count = 1  # the empty monomial; degrees_up_to starts at height one
    for nu in U.plus.degrees_up_to(top):
        count += sum(1 for m in U.pbw_exponents(nu) if all(a < l for a, l in zip(m, ls)))
    return count


def test_criterion_01_dimensions(criterion):
    with criterion(1, "small algebra dimensions", 5.0) as state:
        bad = []
        for l in range(2, 9):
            order = 2 * l
            datum, p = setup("A1", order)
            card = cardinalities(datum, p)
            by_pbw = card.index_x_xstar * restricted_pbw_count("A1", order) ** 2
            if not (card.dim_ubar == by_pbw == l**3):
                bad.append((l, card.dim_ubar, by_pbw))
        for l in (2, 3):
            if build_algebra(small_context("A1", 2 * l)).dim != l**3:
                bad.append(("built", l))
        b2 = cardinalities(*setup("B2", 4)).dim_ubar
        b2_built = build_algebra(small_context("B2", 4)).dim
        a2 = cardinalities(*setup("A2", 4)).dim_ubar
        a2_pbw = cardinalities(*setup("A2", 4)).index_x_xstar * restricted_pbw_count("A2", 4) ** 2
        state["ok"] = not bad and b2 == b2_built == 32 and a2 == a2_pbw == 256
        assert state["ok"], (bad, b2, b2_built, a2, a2_pbw)


def test_criterion_02_dual_data(criterion):
    with criterion(2, "Frobenius dual types and signs", 1.0) as state:
        checks = [
            dual_datum(*setup("B3", 4)).dual_type_name == "C3",
            dual_datum(*setup("C3", 4)).dual_type_name == "B3",
            dual_datum(*setup("A1", 6)).epsilon == (-1,),
            dual_datum(*setup("A1", 10)).epsilon == (-1,),
        ]
        for n in (1, 2, 3, 4):
            for order in (3, 4, 5, 6, 8, 10):
                checks.append(dual_datum(*setup(f"A{n}", order)).dual_type_name == f"A{n}")
        state["ok"] = all(checks)
        assert state["ok"], checks


def test_criterion_03_lattice_lemmas(criterion):
    with criterion(3, "lQ in X* and Weyl stability", 5.0) as state:
        bad = []
        for name in ("A1", "A2", "B2", "G2", "A1xA1"):
            for order in range(1, 13):
                if not check_stability(*setup(name, order)).ok:
                    bad.append((name, order))
        state["ok"] = not bad
        assert not bad, bad


def test_criterion_04_kostant(criterion):
    with criterion(4, "graded dimensions equal Kostant counts", 60.0) as state:
        bad = []
        for name, height in (("A2", 6), ("B2", 8), ("G2", 12)):
            bad += failures(verify_pbw(parse_type(name), height))
        state["ok"] = not bad
        assert not bad, bad


def test_criterion_05_braid_identities(criterion):
    with criterion(5, "braid identities at low order", 120.0) as state:
        verdicts = []
        for name, order in (("C2", 4), ("G2", 4), ("G2", 6)):
            verdicts += verify_appendix_braid(name, order)
        involutions = [v for v in verdicts if v["identity_id"].endswith("Tb=Tb^-1")]
        bad = failures(verdicts)
        state["ok"] = not bad and len(involutions) == 2
        assert state["ok"], bad


def test_criterion_06_normality(criterion):
    with criterion(6, "normality commutator inclusions", 120.0) as state:
        bad = []
        for name, order in (("C2", 4), ("G2", 4), ("G2", 6)):
            bad += failures(verify_normality_commutators(name, order))
        state["ok"] = not bad
        assert not bad, bad


def test_criterion_07_steinberg(criterion):
    with criterion(7, "Steinberg module suite", 600.0) as state:
        bad = []
        for name, order in (("A1", 4), ("A1", 6), ("A1", 8), ("A1", 10), ("B2", 4)):
            bad += failures(steinberg_suite(small_context(name, order)))
        state["ok"] = not bad
        assert not bad, bad


def test_criterion_08_socle_cosocle(criterion):
    with criterion(8, "socle and cosocle of coinduced modules", 600.0) as state:
        bad = []
        for name, order in (("A1", 6), ("B2", 4)):
            ctx = small_context(name, order)
            for lam in random_weights(ctx, 10, seed=1):
                bad += failures(socle_cosocle_check(ctx, lam))
        state["ok"] = not bad
        assert not bad, bad


def test_criterion_09_decomposition(criterion):
    with criterion(9, "Steinberg decomposition uniqueness", 5.0) as state:
        datum, p = setup("A2", 3)
        bad = []
        for lam in product(range(11), repeat=2):
            splits = brute_force_splits(datum, p, lam)
            if splits != [steinberg_decompose(datum, p, lam)]:
                bad.append((lam, splits))
        state["ok"] = not bad
        assert not bad, bad[:3]


def test_criterion_10_restricted_simples(criterion):
    with criterion(10, "restricted simples of the smallest algebra", 600.0) as state:
        verdicts, info = restricted_simples_check(small_context("A1", 6))
        bad = failures(verdicts)
        state["ok"] = not bad and info["simple_count"] == info["restricted_count"] == 3
        assert state["ok"], (bad, info)
