"""Direct products G x H with componentwise operations"""

import logging
from typing import Any, List, Tuple

from .arith import Congruence, crt_solve, lcm_modulus
from .group import Group, Letter, Order, PowerAnswer, Word

logger = logging.getLogger(__name__)

ProductElement = Tuple[Any, Any]


def _qualified_names(left: Tuple[str, ...], right: Tuple[str, ...]) -> Tuple[str, ...]:
    if set(left).isdisjoint(right):
        return left + right
    return tuple(f"p1.{name}" for name in left) + tuple(f"p2.{name}" for name in right)


class DirectProduct(Group):
    def __init__(self, left: Group, right: Group, beta: int = 64):
        self.left = left
        self.right = right
        self.beta = beta
        self.alphabet = _qualified_names(left.alphabet, right.alphabet)
        self.is_abelian = left.is_abelian and right.is_abelian
        self.is_torsion_free = left.is_torsion_free and right.is_torsion_free
        self.supports_conjugacy = left.supports_conjugacy and right.supports_conjugacy
        bounds = [b for b in (left.torsion_smoothness_bound, right.torsion_smoothness_bound) if b is not None]
        self.torsion_smoothness_bound = max(bounds) if bounds else None

    def describe(self) -> str:
        return f"product({self.left.describe()}, {self.right.describe()})"

    @property
    def identity(self) -> ProductElement:
        return (self.left.identity, self.right.identity)

    def generator(self, index: int) -> ProductElement:
        split = len(self.left.alphabet)
        if index < split:
            return (self.left.generator(index), self.right.identity)
        return (self.left.identity, self.right.generator(index - split))

    def multiply(self, x: ProductElement, y: ProductElement) -> ProductElement:
        return (self.left.multiply(x[0], y[0]), self.right.multiply(x[1], y[1]))

    def invert(self, x: ProductElement) -> ProductElement:
        return (self.left.invert(x[0]), self.right.invert(x[1]))

    def power(self, x: ProductElement, k: int) -> ProductElement:
        return (self.left.power(x[0], k), self.right.power(x[1], k))

    def render(self, x: ProductElement) -> str:
        return f"<{self.left.render(x[0])} | {self.right.render(x[1])}>"

    def normal_word(self, x: ProductElement) -> Word:
        split = len(self.left.alphabet)
        right = tuple(Letter(letter.generator + split, letter.sign) for letter in self.right.normal_word(x[1]))
        return self.left.normal_word(x[0]) + right

    def cp(self, g: ProductElement, h: ProductElement) -> bool:
        return self.left.cp(g[0], h[0]) and self.right.cp(g[1], h[1])

    def pp(self, g: ProductElement, h: ProductElement) -> PowerAnswer:
        congruences: List[Congruence] = []
        for factor, u, v in ((self.left, g[0], h[0]), (self.right, g[1], h[1])):
            k = factor.pp(u, v)
            if k is None:
                return None
            congruences.append(Congruence(k, factor.order(u)))

        solution = crt_solve(congruences, self.beta)
        if solution is None:
            logger.debug(f"pp in {self.describe()}: component solutions {congruences} are incompatible")
            return None
        return solution.residue

    def order(self, g: ProductElement) -> Order:
        return lcm_modulus(self.left.order(g[0]), self.right.order(g[1]))
