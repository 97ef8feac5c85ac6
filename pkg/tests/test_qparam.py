import pytest

from qfrob.errors import InputError
from qfrob.exactnum import Cyclotomic
from qfrob.qparam import (
    bicharacter_eval,
    from_orders,
    l_i,
    l_prime_i,
    l_table,
    parse_exponent_spec,
)
from qfrob.rootdata import make_root_datum, parse_type


def ls(name, order):
    cart = parse_type(name)
    return [(r.length_class, l) for r, l in l_table(cart, from_orders(cart, order))]


def test_l_values():
    assert {l for c, l in ls("G2", 6) if c == "short"} == {3}
    assert {l for c, l in ls("G2", 6) if c == "long"} == {1}
    assert {l for c, l in ls("B2", 4) if c == "short"} == {2}
    assert {l for c, l in ls("B2", 4) if c == "long"} == {1}
    assert {l for _, l in ls("G2", 4)} == {2}


@pytest.mark.parametrize("name,order,expected", [("B2", 4, (2, 1)), ("A2", 5, (5, 5)), ("G2", 6, (3, 1))])
def test_l_and_l_prime(name, order, expected):
    cart = parse_type(name)
    p = from_orders(cart, order)
    assert (l_i(cart, p, 0), l_prime_i(cart, p, 0)) == expected


def test_bicharacter():
    datum = make_root_datum("B2")
    p = from_orders(datum.cartan, 4)
    one = Cyclotomic.scalar(4, 1)
    assert bicharacter_eval(datum, p, (0, 1), (1, 0)) == one
    for i in range(2):
        omega = tuple(int(k == i) for k in range(2))
        unit = tuple(int(k == i) for k in range(2))
        assert bicharacter_eval(datum, p, unit, omega) == p.node_parameter(datum.cartan, i).to_cyclotomic(4)


def test_exponent_spec():
    cart = parse_type("A1xA1")
    p = parse_exponent_spec(cart, "1,3@8")
    assert p.ambient_order == 8 and p.component_exponents == (1, 3)
    for bad in ("", "1,2", "a@3", "1,2,3@5"):
        with pytest.raises(InputError):
            parse_exponent_spec(cart, bad)
