"""Independent oracles for the positive part: Kostant partition counts and
the quantum shuffle embedding."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..exactnum import ONE, RationalFunction
from ..rootdata import CartanDatum, positive_roots
from .plus import add_into


def kostant_count(cartan: CartanDatum, nu: Sequence[int]) -> int:
    """Number of ways to write nu as a nonnegative combination of positive roots."""
    roots = [r.q_coords for r in positive_roots(cartan)]

    @lru_cache(maxsize=None)
    def count(k: int, rest: tuple[int, ...]) -> int:
        if k == len(roots):
            return int(not any(rest))
        total = 0
        r = roots[k]
        cur = rest
        while all(c >= 0 for c in cur):
            total += count(k + 1, cur)
            cur = tuple(a - b for a, b in zip(cur, r))
        return total

    return count(0, tuple(nu))


class ShuffleOracle:
    """Quantum shuffle algebra on words in the simple roots.

    The map E_i -> (i) extends to an algebra map from the free algebra whose
    kernel is the Serre ideal, so U^+ embeds. Products are computed by the
    recursive quantum shuffle rule.
    """

    def __init__(self, cartan: CartanDatum):
        self.sym = cartan.symmetrized

    def _pair(self, u: tuple[int, ...], w: tuple[int, ...]) -> int:
        return sum(self.sym[a][b] for a in u for b in w)

    def shuffle_words(self, u: tuple[int, ...], w: tuple[int, ...]) -> dict:
        return dict(self._shuffle(u, w))

    @lru_cache(maxsize=None)
    def _shuffle(self, u: tuple[int, ...], w: tuple[int, ...]) -> tuple:
        if not u:
            return ((w, ONE),)
        if not w:
            return ((u, ONE),)
        out: dict = {}
        # last letter from w passes over nothing; last letter from u passes over all of w
        for word, c in self._shuffle(u, w[:-1]):
            add_into(out, {word + (w[-1],): c})
        twist = RationalFunction.v_power(-self._pair((u[-1],), w))
        for word, c in self._shuffle(u[:-1], w):
            add_into(out, {word + (u[-1],): c * twist})
        return tuple(out.items())

    def image(self, free_elt: dict) -> dict:
        """Image of a free-algebra element {word: coef}."""
        out: dict = {}
        for word, c in free_elt.items():
            acc = {(): ONE}
            for letter in word:
                nxt: dict = {}
                for w0, c0 in acc.items():
                    add_into(nxt, self.shuffle_words(w0, (letter,)), c0)
                acc = nxt
            add_into(out, acc, c)
        return out

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for u, a in x.items():
            for w, b in y.items():
                add_into(out, self.shuffle_words(u, w), a * b)
        return out
