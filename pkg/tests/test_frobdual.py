import pytest

from qfrob.frobdual import (
    check_stability,
    compute_lq,
    compute_x_star,
    dual_datum,
    frobenius_generator_image,
    is_quasi_classical_weight,
)
from qfrob.qparam import from_orders
from qfrob.rootdata import make_root_datum


def setup(name, order):
    datum = make_root_datum(name)
    return datum, from_orders(datum.cartan, order)


def test_x_star_examples():
    datum, p = setup("A1", 3)
    xs = compute_x_star(datum, p)
    assert xs.contains((3,)) and not xs.contains((1,))
    assert dual_datum(datum, p).index_x_xstar == 3
    datum, p = setup("B2", 4)
    xs = compute_x_star(datum, p)
    assert xs.contains((2, 0)) and xs.contains((0, 1)) and not xs.contains((1, 0))
    assert dual_datum(datum, p).index_x_xstar == 2
    datum, p = setup("A2", 1)
    assert dual_datum(datum, p).index_x_xstar == 1


def test_lq():
    datum, p = setup("A1", 3)
    assert compute_lq(datum, p).contains((6,)) and not compute_lq(datum, p).contains((3,))
    datum, p = setup("B2", 4)
    lq = compute_lq(datum, p)
    two_alpha_two_beta = tuple(2 * a + 2 * b for a, b in zip(datum.root_weight((1, 0)), datum.root_weight((0, 1))))
    assert lq.contains(two_alpha_two_beta)
    assert check_stability(datum, p).ok


@pytest.mark.parametrize(
    "name,order,dual",
    [("B3", 4, "C3"), ("C3", 4, "B3"), ("A2", 5, "A2"), ("B2", 3, "B2"), ("G2", 4, "G2"), ("A1xA1", 6, "A1xA1")],
)
def test_dual_types(name, order, dual):
    datum, p = setup(name, order)
    assert dual_datum(datum, p).dual_type_name == dual


def test_epsilon():
    assert dual_datum(*setup("A1", 6)).epsilon == (-1,)
    assert dual_datum(*setup("A1", 5)).epsilon == (1,)
    assert dual_datum(*setup("B2", 4)).epsilon_roots == (1, -1)


def test_frobenius_images():
    datum, p = setup("A1", 6)
    img = frobenius_generator_image(datum, p, "E", 0, 3, (3,))
    assert img is not None and (img.kind, img.power) == ("e", 1)
    assert frobenius_generator_image(datum, p, "E", 0, 1, (3,)) is None
    assert frobenius_generator_image(datum, p, "F", 0, 6, (1,)) is None


def test_quasi_classical():
    datum, p = setup("A1", 6)
    assert is_quasi_classical_weight(datum, p, (0,))
    assert is_quasi_classical_weight(datum, p, (3,))
    assert not is_quasi_classical_weight(datum, p, (1,))
    datum, p = setup("B2", 4)
    assert is_quasi_classical_weight(datum, p, (0, 1))
