"""
Free solvable groups S_{d,r} through the Magnus embedding.

S_{1,r} is Z^r. For d > 1 the generator x_i is sent to (x_i, delta_1 e_i) in Z^r wr S_{d-1,r},
where S_{d-1,r} is itself represented by its embedded image. Iterating gives an injective,
conjugacy-preserving map into the left-iterated wreath product of d copies of Z^r, so the
word, conjugacy and power problems are answered on images.
"""

import logging
from typing import Any, Iterable

from .abelian import AbelianGroup
from .group import Group, Letter, PowerAnswer
from .wreath import WreathProduct

logger = logging.getLogger(__name__)


class FreeSolvableGroup(Group):
    """S_{degree,rank} on generators x1..x_rank"""

    is_torsion_free = True

    def __init__(self, degree: int, rank: int, beta: int = 64):
        if degree < 1 or rank < 1:
            raise ValueError(f"Free solvable groups need degree >= 1 and rank >= 1, got ({degree}, {rank})")
        self.degree = degree
        self.rank = rank
        self.beta = beta
        self.alphabet = tuple(f"x{i + 1}" for i in range(rank))
        self.is_abelian = degree == 1

        self.coefficients = AbelianGroup(rank, (), beta)
        if degree == 1:
            self.lower = None
            self.inner: Group = self.coefficients
        else:
            self.lower = FreeSolvableGroup(degree - 1, rank, beta)
            self.inner = WreathProduct(self.coefficients, self.lower, beta)

    def describe(self) -> str:
        return f"freesolvable({self.degree},{self.rank})"

    @property
    def identity(self) -> Any:
        return self.inner.identity

    def generator(self, index: int) -> Any:
        if self.lower is None:
            return self.coefficients.generator(index)
        unit = self.coefficients.generator(index)
        return self.inner.element(self.lower.generator(index), {self.lower.identity: unit})

    def magnus_embed(self, word: Iterable[Letter]) -> Any:
        """Image of a word over x1..x_rank in the iterated wreath product."""
        return self.evaluate(word)

    def multiply(self, x: Any, y: Any) -> Any:
        return self.inner.multiply(x, y)

    def invert(self, x: Any) -> Any:
        return self.inner.invert(x)

    def render(self, x: Any) -> str:
        return self.inner.render(x)

    def wp(self, g: Any) -> bool:
        return self.inner.wp(g)

    def cp(self, g: Any, h: Any) -> bool:
        return self.inner.cp(g, h)

    def pp(self, g: Any, h: Any) -> PowerAnswer:
        return self.inner.pp(g, h)


def solvable_wp(group: FreeSolvableGroup, word: Iterable[Letter]) -> bool:
    return group.wp(group.magnus_embed(word))


def solvable_cp(group: FreeSolvableGroup, u: Iterable[Letter], v: Iterable[Letter]):
    """Conjugacy of two words, with the witness top from the outermost wreath level when d > 1."""
    from .conjugacy import ConjugacyAnswer, conjugacy_test

    x, y = group.magnus_embed(u), group.magnus_embed(v)
    if group.lower is None:
        return ConjugacyAnswer(x == y, group.coefficients.identity if x == y else None)
    return conjugacy_test(group.inner, x, y)


def solvable_pp(group: FreeSolvableGroup, u: Iterable[Letter], v: Iterable[Letter]) -> PowerAnswer:
    return group.pp(group.magnus_embed(u), group.magnus_embed(v))
