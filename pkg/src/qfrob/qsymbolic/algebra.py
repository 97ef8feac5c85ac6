"""The generic quantum group U_v(g) for rank <= 2 in triangular normal form.

An element is a finite sum of terms F_a K_nu E_b with a, b standard words of
the Serre quotient (shared between the two halves through E_i <-> F_i) and
nu in the root lattice (simple-root coordinates). Coefficients lie in Q(v).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..exactnum import ONE, ZERO, RationalFunction, generic_qfactorial
from ..linalg import inverse
from ..rootdata import CartanDatum, Root, longest_word, positive_roots
from .plus import PlusPart, add_into, scaled, word_degree

Key = tuple  # (F-word, torus, E-word)


def vp(k: int) -> RationalFunction:
    return _vp(k)


@lru_cache(maxsize=4096)
def _vp(k: int) -> RationalFunction:
    return RationalFunction.v_power(k)


class Element:
    """Immutable-by-convention sum of F_a K_nu E_b terms."""

    __slots__ = ("alg", "terms", "_normal_form")

    def __init__(self, alg: "QuantumAlgebra", terms: dict | None = None):
        self.alg = alg
        self._normal_form = None
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        add_into(out, other.terms)
        return Element(self.alg, out)

    def __sub__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        add_into(out, other.terms, -ONE)
        return Element(self.alg, out)

    def __neg__(self) -> "Element":
        return Element(self.alg, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.alg.mul(self, other)
        return Element(self.alg, scaled(self.terms, _as_scalar(other)))

    def __rmul__(self, other):
        return Element(self.alg, scaled(self.terms, _as_scalar(other)))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and (self - other).is_zero()

    def __hash__(self):
        return id(self)

    def is_plus(self) -> bool:
        zero = self.alg.zero_torus
        return all(a == () and nu == zero for a, nu, _ in self.terms)

    def is_minus(self) -> bool:
        zero = self.alg.zero_torus
        return all(b == () and nu == zero for _, nu, b in self.terms)

    def plus_vector(self) -> dict:
        if not self.is_plus():
            raise ValueError("element is not in U^+")
        return {b: c for (_, _, b), c in self.terms.items()}

    def minus_vector(self) -> dict:
        if not self.is_minus():
            raise ValueError("element is not in U^-")
        return {a: c for (a, _, _), c in self.terms.items()}

    def __repr__(self) -> str:
        return self.alg.format(self)


def _as_scalar(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x) if not hasattr(x, "to_rational_function") else x.to_rational_function()


class QuantumAlgebra:
    def __init__(self, cartan: CartanDatum, height_bound: int):
        self.cartan = cartan
        self.rank = cartan.rank
        self.plus = PlusPart(cartan, height_bound)
        self.height_bound = height_bound
        self.sym = cartan.symmetrized
        self.zero_torus = tuple([0] * self.rank)
        self._act_e: dict = {}
        self._act_f: dict = {}
        self._comm: dict = {}
        self._braid_word_cache: dict = {}
        self.word = longest_word(cartan)
        self.roots = positive_roots(cartan)
        self._root_vectors: dict | None = None
        self._pbw_inv: dict = {}

    # ------------------------------------------------------------------
    # forms and constructors

    def pair(self, nu: Sequence[int], mu: Sequence[int]) -> int:
        """(nu, mu) for nu, mu in simple-root coordinates."""
        s = self.sym
        return sum(nu[i] * s[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank) if nu[i] and mu[j])

    def pair_weight(self, nu: Sequence[int], lam: Sequence[int]) -> int:
        """(nu, lambda) with nu in root coordinates and lambda in fundamental-weight coordinates."""
        d = self.cartan.d
        return sum(nu[i] * d[i] * lam[i] for i in range(self.rank))

    def unit(self, i: int) -> tuple[int, ...]:
        return tuple(int(k == i) for k in range(self.rank))

    def element(self, terms: dict) -> Element:
        return Element(self, terms)

    def scalar(self, c) -> Element:
        return Element(self, {((), self.zero_torus, ()): _as_scalar(c)})

    def one(self) -> Element:
        return self.scalar(ONE)

    def E(self, i: int, n: int = 1) -> Element:
        """Divided power E_i^{(n)}."""
        vec = self.plus.generator_power(i, n)
        return Element(self, {((), self.zero_torus, b): c for b, c in vec.items()})

    def F(self, i: int, n: int = 1) -> Element:
        vec = self.plus.generator_power(i, n)
        return Element(self, {(a, self.zero_torus, ()): c for a, c in vec.items()})

    def K(self, nu: Sequence[int]) -> Element:
        return Element(self, {((), tuple(nu), ()): ONE})

    def Ki(self, i: int, power: int = 1) -> Element:
        return self.K(tuple(power * x for x in self.unit(i)))

    def from_plus(self, vec: dict) -> Element:
        return Element(self, {((), self.zero_torus, b): c for b, c in vec.items()})

    def from_minus(self, vec: dict) -> Element:
        return Element(self, {(a, self.zero_torus, ()): c for a, c in vec.items()})

    def torus(self, coeffs: dict) -> Element:
        """sum_nu c_nu K_nu."""
        return Element(self, {((), tuple(nu), ()): _as_scalar(c) for nu, c in coeffs.items()})

    def binom_k(self, i: int, c: int, t: int) -> Element:
        """[K_i; c choose t] expanded in the group algebra of the torus."""
        d = self.cartan.d[i]
        out = {self.zero_torus: ONE}
        for s in range(1, t + 1):
            den = ONE / (vp(d * s) - vp(-d * s))
            factor = {self.unit(i): vp(d * (c - s + 1)) * den, tuple(-x for x in self.unit(i)): -vp(-d * (c - s + 1)) * den}
            nxt: dict = {}
            for nu, a in out.items():
                for mu, b in factor.items():
                    add_into(nxt, {tuple(x + y for x, y in zip(nu, mu)): a * b})
            out = nxt
        return self.torus(out)

    # ------------------------------------------------------------------
    # multiplication

    def _f_left(self, j: int, a: tuple) -> dict:
        key = (j, a)
        got = self._act_f.get(key)
        if got is None:
            got = self.plus.left_letter(j, {a: ONE})
            self._act_f[key] = got
        return got

    def _commutator(self, i: int, a: tuple) -> dict:
        """[E_i, F_a] as {(a', nu): coef}, meaning sum F_{a'} K_nu."""
        key = (i, a)
        got = self._comm.get(key)
        if got is not None:
            return got
        out: dict = {}
        if a:
            j, rest = a[0], a[1:]
            if j == i:
                di = self.cartan.d[i]
                c = ONE / (vp(di) - vp(-di))
                deg = word_degree(rest, self.rank)
                p = self.pair(self.unit(i), deg)
                ui = self.unit(i)
                add_into(out, {(rest, ui): c * vp(-p)})
                add_into(out, {(rest, tuple(-x for x in ui)): -c * vp(p)})
            for (a2, nu), coef in self._commutator(i, rest).items():
                for a3, c3 in self._f_left(j, a2).items():
                    add_into(out, {(a3, nu): coef * c3})
        self._comm[key] = out
        return out

    def _act_e_term(self, i: int, key: Key) -> dict:
        got = self._act_e.get((i, key))
        if got is not None:
            return got
        a, nu, b = key
        out: dict = {}
        # F_a (E_i K_nu) E_b = v^{-(nu, alpha_i)} F_a K_nu E_i E_b
        eb = self.plus.left_letter(i, {b: ONE})
        s = vp(-self.pair(nu, self.unit(i)))
        for b2, c in eb.items():
            add_into(out, {(a, nu, b2): c * s})
        for (a2, mu), c in self._commutator(i, a).items():
            add_into(out, {(a2, tuple(x + y for x, y in zip(mu, nu)), b): c})
        self._act_e[(i, key)] = out
        return out

    def left_E(self, i: int, terms: dict) -> dict:
        out: dict = {}
        for key, c in terms.items():
            add_into(out, self._act_e_term(i, key), c)
        return out

    def left_F(self, j: int, terms: dict) -> dict:
        out: dict = {}
        for (a, nu, b), c in terms.items():
            for a2, c2 in self._f_left(j, a).items():
                add_into(out, {(a2, nu, b): c * c2})
        return out

    def left_K(self, mu: Sequence[int], terms: dict) -> dict:
        out: dict = {}
        for (a, nu, b), c in terms.items():
            deg = word_degree(a, self.rank)
            out[(a, tuple(x + y for x, y in zip(mu, nu)), b)] = c * vp(-self.pair(mu, deg))
        return out

    def mul(self, x: Element, y: Element) -> Element:
        out: dict = {}
        for (a, nu, b), c in x.terms.items():
            t = y.terms
            for i in reversed(b):
                t = self.left_E(i, t)
                if not t:
                    break
            if not t:
                continue
            if any(nu):
                t = self.left_K(nu, t)
            for j in reversed(a):
                t = self.left_F(j, t)
            add_into(out, t, c)
        return Element(self, out)

    def prod(self, *xs: Element) -> Element:
        out = xs[0]
        for x in xs[1:]:
            out = out * x
        return out

    def power(self, x: Element, n: int) -> Element:
        out = self.one()
        for _ in range(n):
            out = out * x
        return out

    # ------------------------------------------------------------------
    # braid operators T_i = T''_{i,1} and their inverses

    def _braid_generator(self, i: int, inverse_op: bool, kind: str, j: int) -> Element:
        key = (i, inverse_op, kind, j)
        got = self._braid_word_cache.get(key)
        if got is not None:
            return got
        di = self.cartan.d[i]
        if i == j:
            if kind == "E":
                res = -(self.Ki(i, -1) * self.F(i)) if inverse_op else -(self.F(i) * self.Ki(i))
            else:
                res = -(self.E(i) * self.Ki(i)) if inverse_op else -(self.Ki(i, -1) * self.E(i))
        else:
            m = -self.cartan.cartan_matrix[i][j]
            res = Element(self, {})
            for r in range(m + 1):
                sign = -1 if r % 2 else 1
                if kind == "E":
                    coef = vp(-di * r) * sign
                    parts = (self.E(i, r), self.E(j), self.E(i, m - r)) if inverse_op else (self.E(i, m - r), self.E(j), self.E(i, r))
                else:
                    coef = vp(di * r) * sign
                    parts = (self.F(i, m - r), self.F(j), self.F(i, r)) if inverse_op else (self.F(i, r), self.F(j), self.F(i, m - r))
                res = res + coef * self.prod(*parts)
        self._braid_word_cache[key] = res
        return res

    def reflect_torus(self, i: int, nu: Sequence[int]) -> tuple[int, ...]:
        a = self.cartan.cartan_matrix
        shift = sum(a[i][j] * nu[j] for j in range(self.rank))
        return tuple(x - (shift if k == i else 0) for k, x in enumerate(nu))

    def _braid_word_image(self, i: int, inverse_op: bool, kind: str, word: tuple) -> Element:
        key = (i, inverse_op, kind, word)
        got = self._braid_word_cache.get(key)
        if got is not None:
            return got
        if not word:
            res = self.one()
        else:
            res = self._braid_generator(i, inverse_op, kind, word[0]) * self._braid_word_image(i, inverse_op, kind, word[1:])
        self._braid_word_cache[key] = res
        return res

    def braid(self, i: int, x: Element, inverse_op: bool = False) -> Element:
        out: dict = {}
        for (a, nu, b), c in x.terms.items():
            tf = self._braid_word_image(i, inverse_op, "F", a)
            te = self._braid_word_image(i, inverse_op, "E", b)
            tk = self.K(self.reflect_torus(i, nu))
            add_into(out, (tf * tk * te).terms, c)
        return Element(self, out)

    def braid_word(self, word: Sequence[int], x: Element, inverse_op: bool = False) -> Element:
        """T_{w[0]} ... T_{w[-1]} (x)."""
        for i in reversed(word):
            x = self.braid(i, x, inverse_op)
        return x

    # ------------------------------------------------------------------
    # anti-isomorphism phi: E <-> F, K -> K^{-1}, v -> v^{-1}

    def phi(self, x: Element) -> Element:
        out: dict = {}
        for (a, nu, b), c in x.terms.items():
            fpart = self.plus.word_element(tuple(reversed(b)))
            epart = self.plus.word_element(tuple(reversed(a)))
            cb = c.bar()
            neg = tuple(-t for t in nu)
            for a2, c1 in fpart.items():
                for b2, c2 in epart.items():
                    add_into(out, {(a2, neg, b2): cb * c1 * c2})
        return Element(self, out)

    def tau(self, x: Element) -> Element:
        """Linear anti-involution exchanging E_i and F_i and fixing every K."""
        out: dict = {}
        for (a, nu, b), c in x.terms.items():
            fpart = self.plus.word_element(tuple(reversed(b)))
            epart = self.plus.word_element(tuple(reversed(a)))
            for a2, c1 in fpart.items():
                for b2, c2 in epart.items():
                    add_into(out, {(a2, nu, b2): c * c1 * c2})
        return Element(self, out)

    # ------------------------------------------------------------------
    # root vectors and divided PBW bases

    def root_vectors(self) -> dict:
        """{k: (root, E_gamma_k, F_gamma_k)} from the fixed reduced word of w_0."""
        if self._root_vectors is None:
            out = {}
            for k, i in enumerate(self.word):
                prefix = self.word[:k]
                e = self.braid_word(prefix, self.E(i))
                f = self.braid_word(prefix, self.F(i))
                assert e.is_plus() and f.is_minus(), "root vector left its half"
                out[k] = (self.roots[k], e.plus_vector(), f.minus_vector())
            self._root_vectors = out
        return self._root_vectors

    def root_vector(self, root: Root | Sequence[int], kind: str = "E", power: int = 1) -> Element:
        qc = root.q_coords if isinstance(root, Root) else tuple(root)
        for k, (r, e, f) in self.root_vectors().items():
            if r.q_coords == qc:
                vec = e if kind == "E" else f
                x = self.from_plus(vec) if kind == "E" else self.from_minus(vec)
                if power == 1:
                    return x
                return (ONE / generic_qfactorial(power, r.d)) * self.power(x, power)
        raise ValueError(f"{qc} is not a positive root")

    def pbw_exponents(self, nu: Sequence[int]) -> list[tuple[int, ...]]:
        """Exponent vectors m (indexed by convex order) with sum m_k gamma_k = nu."""
        roots = [r.q_coords for r in self.roots]
        out = []

        def rec(k, rest, acc):
            if k == len(roots):
                if not any(rest):
                    out.append(tuple(acc))
                return
            m = 0
            cur = rest
            while all(c >= 0 for c in cur):
                rec(k + 1, cur, acc + [m])
                m += 1
                cur = tuple(a - b for a, b in zip(cur, roots[k]))

        rec(0, tuple(nu), [])
        return out

    def pbw_monomial(self, m: Sequence[int], kind: str) -> dict:
        """E_{g1}^{(m1)} ... E_{gN}^{(mN)}, or F_{gN}^{(mN)} ... F_{g1}^{(m1)}, as a plus-vector."""
        rv = self.root_vectors()
        order = range(len(m)) if kind == "E" else reversed(range(len(m)))
        vec = {(): ONE}
        for k in order:
            if m[k] == 0:
                continue
            r, e, f = rv[k]
            base = e if kind == "E" else f
            piece = {(): ONE}
            for _ in range(m[k]):
                piece = self.plus.mul(piece, base)
            piece = scaled(piece, ONE / generic_qfactorial(m[k], r.d))
            vec = self.plus.mul(vec, piece)
        return vec

    def pbw_inverse(self, nu: Sequence[int], kind: str) -> tuple[list, dict]:
        """(exponent list, {standard word: {exponent index: coef}})."""
        key = (tuple(nu), kind)
        got = self._pbw_inv.get(key)
        if got is not None:
            return got
        data = self.plus.degree(nu)
        exps = self.pbw_exponents(nu)
        if len(exps) != data.dim:
            raise AssertionError(f"PBW count {len(exps)} != dim {data.dim} in degree {nu}")
        cols = [self.pbw_monomial(m, kind) for m in exps]
        n = data.dim
        mat = [[cols[c].get(w, ZERO) for c in range(n)] for w in data.words]
        inv = inverse(mat, ONE, ZERO)
        conv = {}
        for k, w in enumerate(data.words):
            conv[w] = {r: inv[r][k] for r in range(n) if not inv[r][k].is_zero()}
        got = (exps, conv)
        self._pbw_inv[key] = got
        return got

    def to_pbw(self, vec: dict, kind: str) -> dict:
        """Plus-vector in standard words -> {exponent tuple: coef}."""
        out: dict = {}
        for w, c in vec.items():
            exps, conv = self.pbw_inverse(word_degree(w, self.rank), kind)
            for r, c2 in conv[w].items():
                add_into(out, {exps[r]: c * c2})
        return out

    def pbw_element(self, m_f: Sequence[int], m_e: Sequence[int]) -> Element:
        """F^{(m_f)} E^{(m_e)} as an element."""
        fv = self.pbw_monomial(m_f, "F") if any(m_f) else {(): ONE}
        ev = self.pbw_monomial(m_e, "E") if any(m_e) else {(): ONE}
        return Element(self, {(a, self.zero_torus, b): c1 * c2 for a, c1 in fv.items() for b, c2 in ev.items()})

    # ------------------------------------------------------------------
    # torus-resolved PBW normal form and evaluation at weights

    def pbw_normal_form(self, x: Element) -> dict:
        """{(m_F, m_E): {nu: coef}} meaning sum F^{(m_F)} (sum_nu c K_nu) E^{(m_E)}."""
        if x._normal_form is not None:
            return x._normal_form
        grouped: dict = {}
        for (a, nu, b), c in x.terms.items():
            grouped.setdefault((a, b), {})[nu] = c
        out: dict = {}
        for (a, b), tor in grouped.items():
            fa = self.to_pbw({a: ONE}, "F") if a else {(): ONE}
            eb = self.to_pbw({b: ONE}, "E") if b else {(): ONE}
            for mf, c1 in fa.items():
                for me, c2 in eb.items():
                    slot = out.setdefault((mf, me), {})
                    add_into(slot, tor, c1 * c2)
        x._normal_form = {k: v for k, v in out.items() if v}
        return x._normal_form

    def evaluate_at_weight(self, x: Element, lam: Sequence[int]) -> dict:
        """x 1_lambda as {(m_F, m_E): coef} in Q(v)."""
        out: dict = {}
        for (mf, me), tor in self.pbw_normal_form(x).items():
            deg = self.exponent_degree(me)
            val = ZERO
            for nu, c in tor.items():
                val = val + c * vp(self.pair_weight(nu, lam) + self.pair(nu, deg))
            if not val.is_zero():
                out[(mf, me)] = val
        return out

    def exponent_degree(self, m: Sequence[int]) -> tuple[int, ...]:
        if not m:
            return self.zero_torus
        deg = [0] * self.rank
        for k, mk in enumerate(m):
            for i, c in enumerate(self.roots[k].q_coords):
                deg[i] += mk * c
        return tuple(deg)

    # ------------------------------------------------------------------
    def format(self, x: Element) -> str:
        if not x.terms:
            return "0"
        names = "abcdefgh"
        parts = []
        for (a, nu, b), c in sorted(x.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][2]), kv[0])):
            mono = []
            if a:
                mono.append("F_" + "".join(names[i] for i in a))
            if any(nu):
                mono.append("K" + str(list(nu)))
            if b:
                mono.append("E_" + "".join(names[i] for i in b))
            parts.append(f"({c!r})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)
