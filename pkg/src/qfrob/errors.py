"""Exception hierarchy shared by all layers of the library."""

from __future__ import annotations


class QFrobError(Exception):
    """Base class for every error raised by this package."""


class InputError(QFrobError, ValueError):
    """Malformed or unsupported user input (type strings, weights, lattices)."""


class DenominatorVanishes(QFrobError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class NotLaurent(QFrobError, ArithmeticError):
    """A rational function that was expected to be integral has a genuine pole."""


class NotSublattice(QFrobError, ValueError):
    """The inner lattice is not contained in the outer lattice."""


class OutsideRootLattice(QFrobError, ValueError):
    """A weight was passed where an element of the root lattice is required."""


class MissingGramExtension(QFrobError, ValueError):
    """A bicharacter value on P x P was requested without a Gram extension."""


class NotFiniteType(QFrobError, ArithmeticError):
    """A computed Cartan matrix is not of finite type."""


class InconsistentComponent(QFrobError, ArithmeticError):
    """Per-root sign data of a dual component does not fit a single parameter."""


class NotInCharacterLattice(QFrobError, ValueError):
    """A weight does not lie in the character lattice X of the root datum."""


class NotDominant(InputError):
    """A dominant weight was required."""


class RankTooLarge(QFrobError, ValueError):
    """The symbolic or representation layer was asked for rank above its bound."""


class WindowExceeded(QFrobError, ArithmeticError):
    """A computation left the truncation window of the graded engine."""


class NotCyclic(QFrobError, ValueError):
    """A module expected to be generated by its top weight line is not."""


class NotStabilized(QFrobError, ArithmeticError):
    """An Ext computation changed when the relation degree was raised."""
