from itertools import product

import pytest

from qfrob.errors import NotDominant
from qfrob.qparam import from_orders
from qfrob.rootdata import make_root_datum
from qfrob.steinberg import (
    brute_force_splits,
    dual_label,
    enumerate_restricted,
    is_restricted,
    rho_l,
    steinberg_decompose,
)


def setup(name, order):
    datum = make_root_datum(name)
    return datum, from_orders(datum.cartan, order)


def test_restricted_sets():
    datum, p = setup("A1", 6)
    assert enumerate_restricted(datum, p) == [(0,), (1,), (2,)]
    assert is_restricted(datum, p, (0,))
    datum, p = setup("B2", 4)
    assert enumerate_restricted(datum, p) == [(0, 0), (1, 0)]


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_rho_l_a1(l):
    datum, p = setup("A1", 2 * l)
    assert rho_l(datum, p) == (l - 1,)


def test_rho_l_other():
    assert rho_l(*setup("B2", 4)) == (1, 0)
    assert rho_l(*setup("G2", 1)) == (0, 0)


def test_decompose():
    datum, p = setup("A1", 6)
    split = steinberg_decompose(datum, p, (7,))
    assert (split.lambda0, split.lambda1) == ((1,), (6,))
    assert brute_force_splits(datum, p, (7,)) == [split]
    rho = rho_l(datum, p)
    assert steinberg_decompose(datum, p, rho).lambda1 == (0,)
    with pytest.raises(NotDominant):
        steinberg_decompose(datum, p, (-1,))


def test_decompose_b2_against_oracle():
    datum, p = setup("B2", 4)
    for lam in product(range(6), repeat=2):
        assert brute_force_splits(datum, p, lam) == [steinberg_decompose(datum, p, lam)]


def test_dual_label():
    a1, a2 = make_root_datum("A1"), make_root_datum("A2")
    assert dual_label(a1, (4,)) == (4,)
    assert dual_label(a2, (1, 0)) == (0, 1)
    datum, p = setup("A2", 6)
    assert dual_label(datum, rho_l(datum, p)) == rho_l(datum, p)
