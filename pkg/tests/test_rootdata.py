import random
from fractions import Fraction

import pytest

from qfrob.errors import InputError
from qfrob.rootdata import (
    Lattice,
    killing_form,
    lattice_index,
    lowest_weight_partner,
    make_root_datum,
    parse_type,
    positive_roots,
    quotient_invariants,
    weyl_orbit,
    weyl_reflect,
)


@pytest.mark.parametrize("name,count", [("A1", 1), ("A2", 3), ("B2", 4), ("C2", 4), ("G2", 6), ("A1xA1", 2), ("B3", 9)])
def test_positive_root_counts(name, count):
    assert len(positive_roots(parse_type(name))) == count


def test_b2_length_classes():
    roots = {r.q_coords: r.length_class for r in positive_roots(parse_type("B2"))}
    assert roots == {(1, 0): "short", (1, 1): "short", (2, 1): "long", (0, 1): "long"}


def test_forms():
    a2 = parse_type("A2")
    for r in positive_roots(a2):
        if r.height == 1:
            assert killing_form(a2, r, r) == 2
    b2 = parse_type("B2")
    long_root = [r for r in positive_roots(b2) if r.q_coords == (2, 1)][0]
    assert killing_form(b2, long_root, long_root) == 4
    # (alpha, omega_alpha) = d_alpha
    for cart in (a2, b2, parse_type("G2")):
        for i in range(cart.rank):
            simple = [r for r in positive_roots(cart) if r.q_coords == tuple(int(k == i) for k in range(cart.rank))][0]
            omega = tuple(int(k == i) for k in range(cart.rank))
            assert killing_form(cart, simple, omega) == Fraction(cart.d[i])


def test_weyl():
    a1 = parse_type("A1")
    assert weyl_reflect(a1, 0, (1,)) == (-1,)
    assert len(weyl_orbit(parse_type("A2"), (1, 1))) == 6
    rng = random.Random(3)
    g2 = parse_type("G2")
    for _ in range(100):
        lam = (rng.randint(-9, 9), rng.randint(-9, 9))
        i = rng.randrange(2)
        assert weyl_reflect(g2, i, weyl_reflect(g2, i, lam)) == lam


def test_lattice_indices():
    for name, idx in (("A2", 3), ("B2", 2), ("G2", 1)):
        datum = make_root_datum(name, "sc")
        q = Lattice.span([datum.simple_root_weight(i) for i in range(datum.rank)], datum.rank)
        assert lattice_index(q, datum.x_lattice) == idx
    x = Lattice.span([(1,)], 1)
    assert quotient_invariants(Lattice.span([(2,)], 1), x) == [2]


def test_lowest_weight_partner():
    assert lowest_weight_partner(parse_type("A1"), (5,)) == (5,)
    assert lowest_weight_partner(parse_type("A2"), (1, 0)) == (0, 1)
    assert lowest_weight_partner(parse_type("B2"), (3, 2)) == (3, 2)


def test_bad_inputs():
    with pytest.raises(InputError):
        parse_type("Q7")
    with pytest.raises(InputError):
        make_root_datum("A2", [[1, 0]])
    with pytest.raises(InputError):
        make_root_datum("A1", [[4]])  # misses the root 2*omega
