import pytest

from qfrob.qparam import from_orders
from qfrob.rootdata import make_root_datum
from qfrob.smalldata import cardinalities, character_groups, delta_l, recipe_listing


def setup(name, order):
    datum = make_root_datum(name)
    return datum, from_orders(datum.cartan, order)


def roots(name, order):
    datum, p = setup(name, order)
    return {r.q_coords for r in delta_l(datum, p).roots}


def test_delta_l():
    assert roots("G2", 4) == {(2, 1), (0, 1), (1, 0)}
    # above the lacing number the simple roots themselves
    assert roots("A2", 4) == {(1, 0), (0, 1)}
    assert roots("B2", 3) == {(1, 0), (0, 1)}
    # C2: node 0 is the short alpha_1, so {beta + alpha_1, alpha_1}
    assert roots("C2", 4) == {(1, 1), (1, 0)}


def test_recipes():
    datum, p = setup("G2", 4)
    listing = recipe_listing(datum, p)
    assert any(s.startswith("E[2a+b] = ") and "E_a^(2)" in s for s in listing)
    datum, p = setup("A2", 5)
    assert recipe_listing(datum, p) == []  # identity recipes are not listed
    datum, p = setup("C2", 4)
    assert recipe_listing(datum, p)[0] == "E[a+b] = E_b*E_a + E_a*E_b"


@pytest.mark.parametrize("l", range(2, 9))
def test_a1_dimension(l):
    order = l if l % 2 else 2 * l
    assert cardinalities(*setup("A1", order)).dim_ubar == l**3


def test_dimensions():
    card = cardinalities(*setup("A2", 4))
    assert (card.index_x_xstar, card.dim_v_frak_plus, card.dim_ubar) == (4, 8, 256)
    assert cardinalities(*setup("B2", 4)).dim_ubar == 32
    assert cardinalities(*setup("G2", 1)).dim_ubar == 1


def test_character_groups():
    assert character_groups(*setup("A1", 4)) == ([8], [2], [4])
    assert cardinalities(*setup("A1", 1)).order_Abar == 1
    assert cardinalities(*setup("B2", 4)).order_Abar == 2
