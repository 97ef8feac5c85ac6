"""Exact scalars: rationals, Laurent polynomials and rational functions in the
generic parameter ``v``, cyclotomic numbers, and quantum combinatorics.

Polynomial arithmetic is delegated to FLINT (``python-flint``); this module only
fixes canonical forms and the specialization rules ``v -> q``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

from flint import fmpq, fmpq_poly, fmpz_poly

from .errors import DenominatorVanishes, NotLaurent

Rational = Fraction

_X = fmpq_poly([0, 1])
_ONE = fmpq_poly([1])
_ZERO = fmpq_poly([])


def _to_fmpq(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _to_fraction(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _lowest_exponent(p: fmpq_poly) -> int:
    coeffs = p.coeffs()
    for k, c in enumerate(coeffs):
        if c != 0:
            return k
    return 0


# ---------------------------------------------------------------------------
# Cyclotomic numbers and roots of unity


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(n).coeffs())


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return cyclotomic_polynomial(n).degree()


class Cyclotomic:
    """Element of Q(zeta_N) stored as a polynomial in zeta reduced mod Phi_N."""

    __slots__ = ("order", "_poly", "_hash")

    def __init__(self, order: int, poly: fmpq_poly | Iterable = (), _reduced: bool = False):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        if not isinstance(poly, fmpq_poly):
            poly = fmpq_poly([_to_fmpq(c) for c in poly])
        if not _reduced:
            poly = poly % cyclotomic_polynomial(order)
        self.order = order
        self._poly = poly
        self._hash = None

    # construction helpers
    @classmethod
    def zeta(cls, order: int, exponent: int = 1) -> "Cyclotomic":
        return cls(order, fmpq_poly([0] * (exponent % order) + [1]))

    @classmethod
    def scalar(cls, order: int, c) -> "Cyclotomic":
        return cls(order, fmpq_poly([_to_fmpq(c)]), _reduced=True)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """Coordinates in the basis 1, zeta, ..., zeta^(phi(N)-1)."""
        cs = [_to_fraction(c) for c in self._poly.coeffs()]
        cs += [Fraction(0)] * (euler_phi(self.order) - len(cs))
        return tuple(cs)

    def lift(self, order: int) -> "Cyclotomic":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        return Cyclotomic(order, self._poly(fmpq_poly([0] * step + [1])))

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            m = self.order * other.order // gcd(self.order, other.order)
            return self.lift(m), other.lift(m)
        return self, Cyclotomic.scalar(self.order, other)

    def __add__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.order, a._poly + b._poly, _reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.order, a._poly - b._poly, _reduced=True)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.order, b._poly - a._poly, _reduced=True)

    def __neg__(self):
        return Cyclotomic(self.order, -self._poly, _reduced=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, fmpq)):
            return Cyclotomic(self.order, self._poly * _to_fmpq(other), _reduced=True)
        a, b = self._coerce(other)
        return Cyclotomic(a.order, a._poly * b._poly)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self._poly.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        g, s, _ = self._poly.xgcd(cyclotomic_polynomial(self.order))
        # g is a nonzero constant since Phi_N is irreducible
        return Cyclotomic(self.order, s / g.coeffs()[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, fmpq)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.order, self._poly / _to_fmpq(other), _reduced=True)
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.scalar(self.order, other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.scalar(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._coerce(other)
            return a._poly == b._poly
        if isinstance(other, (int, Fraction, fmpq)):
            return self._poly == fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._poly.degree() <= 0:
                self._hash = hash(_to_fraction(self._poly.coeffs()[0]) if self._poly.degree() == 0 else 0)
            else:
                self._hash = hash((self.order, tuple(str(c) for c in self._poly.coeffs())))
        return self._hash

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def __bool__(self):
        return not self._poly.is_zero()

    def is_rational(self) -> bool:
        return self._poly.degree() <= 0

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        cs = self._poly.coeffs()
        return _to_fraction(cs[0]) if cs else Fraction(0)

    def is_cyclotomic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.order}^{k}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        """Integer/rational value when possible, else a coordinate list."""
        if self.is_rational():
            r = self.to_rational()
            return int(r) if r.denominator == 1 else str(r)
        return {"order": self.order, "coords": [str(c) for c in self.coords]}


class RootOfUnity:
    """zeta_N ** exponent, kept symbolic until embedded."""

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self.exponent = exponent % order

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = self.order * other.order // gcd(self.order, other.order)
        return RootOfUnity(m, self.exponent * (m // self.order) + other.exponent * (m // other.order))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.exponent * other.order == other.exponent * self.order

    def __hash__(self):
        g = gcd(self.order, self.exponent)
        return hash((self.order // g, self.exponent // g))

    def to_cyclotomic(self, order: int | None = None) -> Cyclotomic:
        z = Cyclotomic.zeta(self.order, self.exponent)
        return z if order is None else z.lift(order)

    def __repr__(self):
        return f"zeta_{self.order}^{self.exponent}"


def unit_order(u: RootOfUnity) -> int:
    """Multiplicative order of a root of unity."""
    return u.order // gcd(u.order, u.exponent)


# ---------------------------------------------------------------------------
# Laurent polynomials and rational functions in v


class LaurentPoly:
    """Finite sum of c_k v^k with rational coefficients."""

    __slots__ = ("_poly", "_shift")

    def __init__(self, coefficients: Mapping[int, object] | None = None):
        coefficients = {k: Fraction(c) for k, c in (coefficients or {}).items() if c}
        if not coefficients:
            self._poly, self._shift = _ZERO, 0
            return
        low = min(coefficients)
        top = max(coefficients)
        cs = [0] * (top - low + 1)
        for k, c in coefficients.items():
            cs[k - low] = _to_fmpq(c)
        self._poly, self._shift = fmpq_poly(cs), low

    @classmethod
    def _raw(cls, poly: fmpq_poly, shift: int) -> "LaurentPoly":
        obj = cls.__new__(cls)
        if poly.is_zero():
            obj._poly, obj._shift = _ZERO, 0
            return obj
        low = _lowest_exponent(poly)
        if low:
            poly = poly.right_shift(low) if hasattr(poly, "right_shift") else fmpq_poly(poly.coeffs()[low:])
        obj._poly, obj._shift = poly, shift + low
        return obj

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return {k + self._shift: _to_fraction(c) for k, c in enumerate(self._poly.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def __add__(self, other):
        other = _as_laurent(other)
        s = min(self._shift, other._shift)
        a = self._poly * _X ** (self._shift - s)
        b = other._poly * _X ** (other._shift - s)
        return LaurentPoly._raw(a + b, s)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(-self._poly, self._shift)

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        return LaurentPoly._raw(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_laurent(other)
        except TypeError:
            return NotImplemented
        return self._poly == other._poly and (self._shift == other._shift or self._poly.is_zero())

    def __hash__(self):
        return hash(tuple(sorted(self.coefficients.items())))

    def to_rational_function(self) -> "RationalFunction":
        if self._shift >= 0:
            return RationalFunction._raw(self._poly * _X ** self._shift, _ONE)
        return RationalFunction._raw(self._poly, _X ** (-self._shift))

    def specialize(self, q: Cyclotomic | RootOfUnity) -> Cyclotomic:
        return self.to_rational_function().specialize(q)

    def __repr__(self):
        return _format_laurent(self.coefficients)


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def _format_laurent(coeffs: Mapping[int, Fraction]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
        if mono and c == 1:
            parts.append(mono)
        elif mono and c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{'*' + mono if mono else ''}")
    return " + ".join(parts).replace("+ -", "- ")


Scalar = Union[int, Fraction, "RationalFunction", LaurentPoly]


class RationalFunction:
    """Element of Q(v) in lowest terms with monic denominator.

    Both numerator and denominator are honest polynomials in ``v``; negative
    powers of ``v`` are absorbed into the denominator, so the minimal exponent
    of the denominator is nonnegative.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._set(num, den)

    def _set(self, num: fmpq_poly, den: fmpq_poly):
        if num.is_zero():
            self.num, self.den = _ZERO, _ONE
        else:
            dd = den.degree()
            if dd > 0:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num / g
                    den = den / g
                    dd = den.degree()
            lc = den[dd]
            if lc != 1:
                num = num / lc
                den = den / lc
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num: fmpq_poly, den: fmpq_poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def _trusted(cls, num: fmpq_poly, den: fmpq_poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    # constructors
    @staticmethod
    def v_power(k: int) -> "RationalFunction":
        if k >= 0:
            return RationalFunction._trusted(_X ** k, _ONE)
        return RationalFunction._trusted(_ONE, _X ** (-k))

    @staticmethod
    def from_laurent(coeffs: Mapping[int, object]) -> "RationalFunction":
        return LaurentPoly(coeffs).to_rational_function()

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_laurent(self) -> bool:
        d = self.den
        return d.degree() == 0 or (d.coeffs()[-1] == 1 and d == _X ** d.degree())

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = as_rf(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction._trusted(self.num + other.num, _ONE) if not (self.num + other.num).is_zero() else ZERO
            return RationalFunction._raw(self.num + other.num, self.den)
        return RationalFunction._raw(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._trusted(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = as_rf(other)
        return self + (-other)

    def __rsub__(self, other):
        return as_rf(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return ZERO
                return RationalFunction._trusted(self.num * _to_fmpq(other), self.den)
            if not isinstance(other, LaurentPoly):
                return NotImplemented
            other = as_rf(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._trusted(self.num * other.num, _ONE)
        return RationalFunction._raw(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction._raw(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_rf(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFunction._trusted(self.num ** n, self.den ** n) if n else ONE
        return ONE / (self ** (-n))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = as_rf(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    # transformations
    def substitute_power(self, d: int) -> "RationalFunction":
        """f(v) -> f(v^d); d may be negative."""
        if d == 1:
            return self
        if d > 0:
            sub = _X ** d
            return RationalFunction._raw(self.num(sub), self.den(sub))
        e = -d
        n_deg = max(self.num.degree(), 0)
        d_deg = max(self.den.degree(), 0)
        # f(v^-e) = num_rev(v^e) v^{-e n_deg} / (den_rev(v^e) v^{-e d_deg})
        num = _reverse(self.num, n_deg)(_X ** e)
        den = _reverse(self.den, d_deg)(_X ** e)
        shift = e * (d_deg - n_deg)
        if shift >= 0:
            num = num * _X ** shift
        else:
            den = den * _X ** (-shift)
        return RationalFunction._raw(num, den)

    def bar(self) -> "RationalFunction":
        """The involution v -> v^{-1}."""
        return self.substitute_power(-1)

    def to_laurent(self) -> LaurentPoly:
        return clear_denominators(self)

    def specialize(self, q: Cyclotomic | RootOfUnity) -> Cyclotomic:
        return specialize(self, q)

    def __repr__(self):
        if self.is_laurent():
            return repr(self.to_laurent())
        return f"({self.num.str(var='v')})/({self.den.str(var='v')})"


def _reverse(p: fmpq_poly, deg: int) -> fmpq_poly:
    cs = p.coeffs()
    cs = cs + [0] * (deg + 1 - len(cs))
    return fmpq_poly(list(reversed(cs)))


def _as_poly(x) -> fmpq_poly:
    if isinstance(x, fmpq_poly):
        return x
    if isinstance(x, (int, Fraction, fmpq)):
        return fmpq_poly([_to_fmpq(x)])
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction._trusted(fmpq_poly([_to_fmpq(x)]) if x else _ZERO, _ONE)
    if isinstance(x, LaurentPoly):
        return x.to_rational_function()
    raise TypeError(f"cannot interpret {x!r} as a rational function")


ZERO = RationalFunction()
ONE = RationalFunction(1)
V = RationalFunction.v_power(1)


def clear_denominators(f: RationalFunction) -> LaurentPoly:
    """Return the Laurent polynomial equal to ``f``; raise NotLaurent otherwise."""
    f = as_rf(f)
    if not f.is_laurent():
        raise NotLaurent(f"{f!r} has a pole away from v = 0")
    return LaurentPoly._raw(f.num, -max(f.den.degree(), 0))


def _eval_poly_at_root(p: fmpq_poly, q: RootOfUnity) -> Cyclotomic:
    n, e = q.order, q.exponent
    folded = [fmpq(0)] * n
    for k, c in enumerate(p.coeffs()):
        if c != 0:
            folded[(k * e) % n] += c
    return Cyclotomic(n, fmpq_poly(folded))


def _eval_poly(p: fmpq_poly, q: Cyclotomic) -> Cyclotomic:
    acc = Cyclotomic.scalar(q.order, 0)
    for c in reversed(p.coeffs()):
        acc = acc * q + _to_fraction(c)
    return acc


def specialize(f, q: Cyclotomic | RootOfUnity) -> Cyclotomic:
    """Evaluate ``f`` at ``v = q``; DenominatorVanishes if the denominator dies."""
    f = as_rf(f)
    ev = _eval_poly_at_root if isinstance(q, RootOfUnity) else _eval_poly
    den = ev(f.den, q)
    if den.is_zero():
        raise DenominatorVanishes(f"denominator of {f!r} vanishes at {q!r}")
    num = ev(f.num, q)
    if f.den.is_one():
        return num
    return num / den


# ---------------------------------------------------------------------------
# Quantum combinatorics


@lru_cache(maxsize=None)
def generic_qint(n: int, d: int = 1) -> RationalFunction:
    """[n]_{v^d} as a Laurent polynomial."""
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    coeffs = {d * (n - 1 - 2 * k): sign for k in range(n)}
    return RationalFunction.from_laurent(coeffs)


@lru_cache(maxsize=None)
def generic_qfactorial(n: int, d: int = 1) -> RationalFunction:
    out = ONE
    for s in range(1, n + 1):
        out = out * generic_qint(s, d)
    return out


@lru_cache(maxsize=None)
def generic_qbinom(m: int, t: int, d: int = 1) -> RationalFunction:
    """Gaussian binomial [m choose t]_{v^d}, m any integer, t >= 0."""
    if t < 0:
        return ZERO
    num = ONE
    for s in range(1, t + 1):
        num = num * generic_qint(m - s + 1, d)
    return num / generic_qfactorial(t, d)


def _as_root_param(q) -> Cyclotomic | RootOfUnity:
    if isinstance(q, (Cyclotomic, RootOfUnity)):
        return q
    raise TypeError("quantum parameter must be Cyclotomic or RootOfUnity")


def _is_plus_minus_one(q) -> int:
    if isinstance(q, RootOfUnity):
        o = unit_order(q)
        return {1: 1, 2: -1}.get(o, 0)
    if q == 1:
        return 1
    if q == -1:
        return -1
    return 0


def quantum_integer(n: int, q) -> Cyclotomic:
    """[n]_q, with the limit value n q^(n-1) at q = +-1."""
    q = _as_root_param(q)
    sign = _is_plus_minus_one(q)
    order = q.order
    if sign:
        return Cyclotomic.scalar(order, n * (sign ** (n - 1)))
    return specialize(generic_qint(n), q)


def quantum_factorial(n: int, q) -> Cyclotomic:
    q = _as_root_param(q)
    out = Cyclotomic.scalar(q.order, 1)
    for s in range(1, n + 1):
        out = out * quantum_integer(s, q)
    return out


def gauss_binom(m: int, t: int, q) -> Cyclotomic:
    """Gaussian binomial via the generic (Laurent) form, then specialized."""
    q = _as_root_param(q)
    return specialize(clear_denominators(generic_qbinom(m, t)).to_rational_function(), q)
