"""
The contract every concrete group implements.

A group owns an alphabet of named generators; words are sequences of (generator index,
sign) letters and evaluate to canonical, hashable, totally ordered element values. Equality
of elements is equality in the group.
"""

import logging
from abc import ABC, abstractmethod
from functools import reduce
from random import Random
from typing import Hashable, Iterable, NamedTuple, Optional, Tuple, Union

from .arith import INFINITY, Unbounded
from .errors import UnsupportedError

logger = logging.getLogger(__name__)

Element = Hashable
PowerAnswer = Optional[int]
Order = Union[int, Unbounded]


class Letter(NamedTuple):
    generator: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


Word = Tuple[Letter, ...]


def invert_word(word: Iterable[Letter]) -> Word:
    return tuple(letter.inverse() for letter in reversed(tuple(word)))


def letters(generator: int, exponent: int) -> Word:
    """The word X^exponent for generator X."""
    sign = 1 if exponent >= 0 else -1
    return tuple(Letter(generator, sign) for _ in range(abs(exponent)))


def random_word(group: "Group", rng: Random, max_length: int) -> Word:
    """A uniformly random letter sequence of length 0..max_length over group's alphabet."""
    if not group.alphabet:
        return ()
    length = rng.randint(0, max_length)
    return tuple(Letter(rng.randrange(len(group.alphabet)), rng.choice((1, -1))) for _ in range(length))


def format_word(alphabet: Tuple[str, ...], word: Iterable[Letter]) -> str:
    """Render a word with runs collapsed into powers, e.g. ``a1 t1^-2``."""
    runs = []
    for letter in word:
        step = letter.sign
        if runs and runs[-1][0] == letter.generator and (runs[-1][1] > 0) == (step > 0):
            runs[-1][1] += step
        else:
            runs.append([letter.generator, step])
    if not runs:
        return "1"
    return " ".join(alphabet[gen] if exp == 1 else f"{alphabet[gen]}^{exp}" for gen, exp in runs)


class Group(ABC):
    """A finitely generated group with decision procedures on canonical elements"""

    alphabet: Tuple[str, ...] = ()
    is_abelian: bool = False
    is_torsion_free: bool = False
    torsion_smoothness_bound: Optional[int] = None
    supports_conjugacy: bool = True

    # --- structure -------------------------------------------------------------------

    @property
    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def generator(self, index: int) -> Element: ...

    @abstractmethod
    def multiply(self, x: Element, y: Element) -> Element: ...

    @abstractmethod
    def invert(self, x: Element) -> Element: ...

    @abstractmethod
    def render(self, x: Element) -> str: ...

    @property
    def is_trivial(self) -> bool:
        return not self.alphabet

    def describe(self) -> str:
        return type(self).__name__

    def normal_word(self, x: Element) -> Word:
        raise UnsupportedError(f"{self.describe()} has no normal form words")

    def letter_element(self, letter: Letter) -> Element:
        element = self.generator(letter.generator)
        return element if letter.sign > 0 else self.invert(element)

    def evaluate(self, word: Iterable[Letter]) -> Element:
        """The element a word represents; the empty word is the identity."""
        return reduce(self.multiply, (self.letter_element(letter) for letter in word), self.identity)

    def product(self, elements: Iterable[Element]) -> Element:
        return reduce(self.multiply, elements, self.identity)

    def power(self, x: Element, k: int) -> Element:
        if k < 0:
            x, k = self.invert(x), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.multiply(result, x)
            k >>= 1
            if k:
                x = self.multiply(x, x)
        return result

    def conjugate(self, g: Element, x: Element) -> Element:
        """x⁻¹ g x"""
        return self.multiply(self.multiply(self.invert(x), g), x)

    def commutator(self, g: Element, h: Element) -> Element:
        """g⁻¹ h⁻¹ g h"""
        return self.multiply(self.multiply(self.invert(g), self.invert(h)), self.multiply(g, h))

    # --- decision problems -----------------------------------------------------------

    def wp(self, g: Element) -> bool:
        return g == self.identity

    def cp(self, g: Element, h: Element) -> bool:
        raise UnsupportedError(f"Conjugacy is not available in {self.describe()}")

    @abstractmethod
    def pp(self, g: Element, h: Element) -> PowerAnswer:
        """Some k with g^k = h (the smallest non-negative one if g has finite order), else None."""

    def csmmp(self, g: Element, h: Element) -> bool:
        k = self.pp(g, h)
        if k is None:
            return False
        return k >= 0 or self.order(g) is not INFINITY

    def csgmp(self, g: Element, h: Element) -> bool:
        return self.pp(g, h) is not None

    def order(self, g: Element) -> Order:
        if self.is_torsion_free:
            return 1 if self.wp(g) else INFINITY
        k = self.pp(g, self.invert(g))
        if k is None:
            raise ArithmeticError(f"pp({self.render(g)}, inverse) has no solution in {self.describe()}")
        return k + 1 if k >= 0 else INFINITY

    def has_finite_order(self, g: Element) -> bool:
        return self.order(g) is not INFINITY

    def __repr__(self) -> str:
        return f"<{self.describe()}>"

