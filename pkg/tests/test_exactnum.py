from fractions import Fraction

import pytest

from qfrob.errors import DenominatorVanishes
from qfrob.exactnum import (
    Cyclotomic,
    RationalFunction,
    RootOfUnity,
    gauss_binom,
    generic_qbinom,
    quantum_factorial,
    quantum_integer,
    specialize,
    unit_order,
)

v = RationalFunction.v_power(1)


@pytest.mark.parametrize("order,exp,expected", [(6, 2, 3), (4, 0, 1), (12, 8, 3)])
def test_unit_order(order, exp, expected):
    assert unit_order(RootOfUnity(order, exp)) == expected
    z = Cyclotomic.zeta(order, exp)
    one = Cyclotomic.scalar(order, 1)
    powers = [z**k for k in range(1, expected + 1)]
    assert powers[-1] == one and all(p != one for p in powers[:-1])


def test_quantum_integers():
    assert quantum_integer(2, RootOfUnity(4, 1)).is_zero()
    assert quantum_integer(3, RootOfUnity(1, 0)) == Cyclotomic.scalar(1, 3)
    z = Cyclotomic.zeta(6)
    assert quantum_integer(3, RootOfUnity(6, 1)) == z**2 + Cyclotomic.scalar(6, 1) + z.inverse() ** 2


@pytest.mark.parametrize("order", [3, 4, 5, 6, 8, 10, 12])
def test_factorial_vanishing(order):
    q = RootOfUnity(order, 1)
    l = unit_order(q**2)
    for m in range(0, 2 * l + 2):
        assert quantum_factorial(m, q).is_zero() == (m >= l > 1)


def test_gauss_binom():
    q = RootOfUnity(3, 1)
    assert gauss_binom(5, 0, q) == Cyclotomic.scalar(3, 1)
    assert gauss_binom(4, 2, q) == generic_qbinom(4, 2).specialize(q)


def test_specialize():
    i = RootOfUnity(4, 1)
    assert specialize(v**2, i) == Cyclotomic.scalar(4, -1)
    assert specialize((v**2 - v ** -2) / (v - v**-1), i).is_zero()
    with pytest.raises(DenominatorVanishes):
        specialize(1 / (v**2 + 1), i)


def test_laurent_normalization():
    f = (v**4 - 1) / (v**2 - 1)
    assert f.is_laurent()
    assert f.to_laurent().coefficients == {0: Fraction(1), 2: Fraction(1)}
    g = v**-1
    assert g.is_laurent() and g.to_laurent().coefficients == {-1: Fraction(1)}
