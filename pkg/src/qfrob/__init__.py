"""Exact computer algebra for quantum groups at roots of unity."""

from .errors import QFrobError
from .rootdata import make_root_datum, parse_type, cartan_datum
from .qparam import QuantumParameter, from_orders, from_exponents

__all__ = [
    "QFrobError",
    "make_root_datum",
    "parse_type",
    "cartan_datum",
    "QuantumParameter",
    "from_orders",
    "from_exponents",
]
__version__ = "0.1.0"
