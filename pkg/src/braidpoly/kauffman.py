"""Letter specializations and the (2,q) torus-closure polynomial family.

Two specialization maps turn activity words into polynomials.  The
one-variable map recovers bracket values:

    L, l~   ->  -A^-3        D, d~  ->  A
    l, L~   ->  -A^3         d, D~  ->  A^-1

The two-variable map feeds the Kauffman-style ladder sums and is only
defined on unbarred letters:

    L -> a      l -> a^-1      D -> z      d -> z

The map orientation (l, not L, going to a^-1) is forced: the one-letter
word of the single-crossing closure is l, and its ladder value is a^-1.

The ladder polynomials themselves: P(q) sums the two-variable images of
the matching words of the q-rung ladder; g(n) is the Chebyshev-like
z-recursion; K2q gives the unnormalized (2,q) torus value by three
independent routes that must agree; F2q applies the a^-writhe
normalization.
"""

from __future__ import annotations

from functools import lru_cache

from .activity import ActivityWord, is_barred
from .errors import BarredLetter, NegativeIndex
from .laurent import LaurentPoly1, LaurentPoly2

__all__ = [
    "BRACKET_IMAGE",
    "KAUFFMAN_IMAGE",
    "specialize_bracket",
    "specialize_kauffman",
    "P",
    "g",
    "K2q",
    "F2q",
    "K2Q_METHODS",
]

BRACKET_IMAGE: dict[str, LaurentPoly1] = {
    "L": LaurentPoly1({-3: -1}),
    "l~": LaurentPoly1({-3: -1}),
    "l": LaurentPoly1({3: -1}),
    "L~": LaurentPoly1({3: -1}),
    "D": LaurentPoly1({1: 1}),
    "d~": LaurentPoly1({1: 1}),
    "d": LaurentPoly1({-1: 1}),
    "D~": LaurentPoly1({-1: 1}),
}

KAUFFMAN_IMAGE: dict[str, LaurentPoly2] = {
    "L": LaurentPoly2({(1, 0): 1}),
    "l": LaurentPoly2({(-1, 0): 1}),
    "D": LaurentPoly2({(0, 1): 1}),
    "d": LaurentPoly2({(0, 1): 1}),
}

K2Q_METHODS = ("skein", "prop", "closed")


def specialize_bracket(word: ActivityWord) -> LaurentPoly1:
    out = LaurentPoly1.one()
    for letter, mult in word.key():
        out = out * BRACKET_IMAGE[letter] ** mult
    return out


def specialize_kauffman(word: ActivityWord) -> LaurentPoly2:
    out = LaurentPoly2.one()
    for letter, mult in word.key():
        if is_barred(letter):
            raise BarredLetter(f"{letter} has no two-variable image")
        out = out * KAUFFMAN_IMAGE[letter] ** mult
    return out


@lru_cache(maxsize=None)
def P(q: int) -> LaurentPoly2:
    """Ladder matching sum; P(0) and P(1) are definitional constants."""
    if q < 0:
        raise NegativeIndex(f"P({q})")
    if q == 0:
        return LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})
    total = specialize_kauffman(ActivityWord(["l"] + ["D"] * (q - 1)))
    for i in range(1, q):
        word = ActivityWord(["d"] + ["L"] * i + ["D"] * (q - 1 - i))
        total = total + specialize_kauffman(word)
    return total


@lru_cache(maxsize=None)
def g(n: int) -> LaurentPoly2:
    if n < 0:
        raise NegativeIndex(f"g({n})")
    if n == 0:
        return LaurentPoly2.one()
    if n == 1:
        return LaurentPoly2({(0, 1): 1})
    z = LaurentPoly2({(0, 1): 1})
    return z * g(n - 1) - g(n - 2)


def K2q(q: int, method: str = "skein") -> LaurentPoly2:
    """Unnormalized two-variable value of the (2,q) torus closure.

    The three methods are genuinely different recursions and serve as
    mutual cross-checks: ``skein`` walks the crossing-switch relation,
    ``prop`` peels lower torus values off P(q), and ``closed`` avoids
    self-reference entirely via the g basis.
    """
    if q < 0:
        raise NegativeIndex(f"K2q({q})")
    if method not in K2Q_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "skein":
        return _k2q_skein(q)
    if method == "prop":
        return _k2q_prop(q)
    return _k2q_closed(q)


@lru_cache(maxsize=None)
def _k2q_skein(q: int) -> LaurentPoly2:
    if q == 0:
        return P(0)
    if q == 1:
        return P(1)
    z = LaurentPoly2({(0, 1): 1})
    rung = LaurentPoly2({(q - 1, 1): 1})
    return rung + z * _k2q_skein(q - 1) - _k2q_skein(q - 2)


@lru_cache(maxsize=None)
def _k2q_prop(q: int) -> LaurentPoly2:
    if q == 0:
        return P(0)
    if q == 1:
        return P(1)
    total = P(q)
    for i in range(q - 1):
        total = total - LaurentPoly2({(0, q - 2 - i): 1}) * _k2q_prop(i)
    return total


def _k2q_closed(q: int) -> LaurentPoly2:
    if q <= 1:
        return P(q)
    total = P(q)
    for i in range(q - 1):
        total = total - P(i) * g(q - 2 - i)
    return total


def F2q(q: int, method: str = "skein") -> LaurentPoly2:
    """Writhe-normalized value a^-q K2q(q) for q >= 1."""
    if q < 1:
        raise NegativeIndex(f"F2q({q})")
    return LaurentPoly2({(-q, 0): 1}) * K2q(q, method)
