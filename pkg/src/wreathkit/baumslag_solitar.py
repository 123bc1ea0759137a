"""
Baumslag-Solitar groups BS(1,q) = Z[1/q] x| Z.

An element (r, m) is stored with r = numerator / q^exponent and the smallest possible
exponent; multiplication is (r, m)(s, m') = (r + q^m s, m + m').
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedError
from .group import Group, PowerAnswer, Word, letters

logger = logging.getLogger(__name__)

A_GENERATOR = 0
T_GENERATOR = 1


@dataclass(frozen=True, order=True)
class BSElement:
    shift: int
    numerator: int = 0
    exponent: int = 0

    def value(self, q: int) -> Fraction:
        return Fraction(self.numerator, q**self.exponent)


class BaumslagSolitarGroup(Group):
    """BS(1,q) on generators a = (1, 0) and t = (0, 1), so that t a t^-1 = a^q"""

    is_torsion_free = True
    supports_conjugacy = False
    alphabet = ("a", "t")

    def __init__(self, q: int, beta: int = 64):
        if q < 2:
            raise ValueError(f"BS(1,q) needs q >= 2, got {q}")
        self.q = q
        self.beta = beta

    def describe(self) -> str:
        return f"BS(1,{self.q})"

    def element(self, r: Fraction, m: int) -> BSElement:
        """Normalise (r, m) into its reduced representation."""
        r = Fraction(r)
        exponent = 0
        while (r * self.q**exponent).denominator != 1:
            exponent += 1
            if exponent > r.denominator:
                raise ValueError(f"{r} is not a q-adic rational for q = {self.q}")
        return BSElement(m, int(r * self.q**exponent), exponent)

    def _scale(self, m: int) -> Fraction:
        return Fraction(self.q) ** m

    @property
    def identity(self) -> BSElement:
        return BSElement(0)

    def generator(self, index: int) -> BSElement:
        return BSElement(0, 1, 0) if index == A_GENERATOR else BSElement(1)

    def multiply(self, x: BSElement, y: BSElement) -> BSElement:
        r = x.value(self.q) + self._scale(x.shift) * y.value(self.q)
        return self.element(r, x.shift + y.shift)

    def invert(self, x: BSElement) -> BSElement:
        return self.element(-self._scale(-x.shift) * x.value(self.q), -x.shift)

    def power(self, x: BSElement, k: int) -> BSElement:
        """Closed-form powering via the geometric series r (q^{mk} - 1) / (q^m - 1)."""
        if k < 0:
            return self.power(self.invert(x), -k)
        r, m = x.value(self.q), x.shift
        if m == 0:
            return self.element(k * r, 0)
        return self.element(r * (self._scale(m * k) - 1) / (self._scale(m) - 1), m * k)

    def render(self, x: BSElement) -> str:
        return f"({x.value(self.q)}, {x.shift})"

    def normal_word(self, x: BSElement) -> Word:
        """t^-e a^N t^e t^m"""
        return (
            letters(T_GENERATOR, -x.exponent)
            + letters(A_GENERATOR, x.numerator)
            + letters(T_GENERATOR, x.exponent)
            + letters(T_GENERATOR, x.shift)
        )

    def cp(self, g: BSElement, h: BSElement) -> bool:
        raise UnsupportedError(f"Conjugacy in {self.describe()} is not implemented")

    def pp(self, g: BSElement, h: BSElement) -> PowerAnswer:
        r, m = g.value(self.q), g.shift
        s, shift = h.value(self.q), h.shift

        if shift != 0:
            if m == 0 or shift % m != 0:
                return None
            candidate = shift // m
            return candidate if self.power(g, candidate) == h else None

        if s == 0:
            return 0
        if m != 0 or r == 0:
            return None
        ratio = s / r
        if ratio.denominator != 1:
            return None
        return int(ratio)
