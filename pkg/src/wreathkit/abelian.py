"""
Finitely generated abelian groups Z^r x Z/n1 x ... x Z/ns.

Elements are plain integer tuples, free coordinates first, torsion coordinates reduced
into [0, n_i).
"""

import logging
from typing import List, Optional, Sequence, Tuple

from .arith import INFINITY, Congruence, crt_solve, factor_smooth
from .errors import NotSmoothError, SmoothnessError
from .group import Group, Letter, PowerAnswer, Word, letters

logger = logging.getLogger(__name__)

AbelianElement = Tuple[int, ...]


class AbelianGroup(Group):
    """Z^rank x Z/torsion[0] x ... ; rank 0 without torsion is the trivial group."""

    is_abelian = True

    def __init__(
        self, rank: int = 0, torsion: Sequence[int] = (), beta: int = 64, names: Optional[Sequence[str]] = None
    ):
        if rank < 0:
            raise ValueError(f"Rank must be non-negative, got {rank}")
        self.rank = rank
        self.torsion = tuple(torsion)
        self.beta = beta

        largest_prime = None
        for n in self.torsion:
            if n < 2:
                raise ValueError(f"Torsion orders must be at least 2, got {n}")
            try:
                factors = factor_smooth(n, beta)
            except NotSmoothError as e:
                raise SmoothnessError(e.number, e.beta, e.cofactor) from e
            top = factors.factors[-1][0]
            largest_prime = top if largest_prime is None else max(largest_prime, top)

        self.torsion_smoothness_bound = largest_prime
        self.is_torsion_free = not self.torsion

        size = rank + len(self.torsion)
        self.alphabet = tuple(names) if names is not None else tuple(f"a{i + 1}" for i in range(size))
        if len(self.alphabet) != size:
            raise ValueError(f"Expected {size} generator names, got {len(self.alphabet)}")

    @property
    def dimension(self) -> int:
        return self.rank + len(self.torsion)

    def describe(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{n}" for n in self.torsion)
        return " x ".join(parts) if parts else "1"

    def _reduce(self, values: Sequence[int]) -> AbelianElement:
        free = tuple(values[: self.rank])
        return free + tuple(v % n for v, n in zip(values[self.rank :], self.torsion))

    def element(self, *values: int) -> AbelianElement:
        if len(values) != self.dimension:
            raise ValueError(f"{self.describe()} elements have {self.dimension} coordinates, got {len(values)}")
        return self._reduce(values)

    @property
    def identity(self) -> AbelianElement:
        return (0,) * self.dimension

    def generator(self, index: int) -> AbelianElement:
        values = [0] * self.dimension
        values[index] = 1
        return self._reduce(values)

    def multiply(self, x: AbelianElement, y: AbelianElement) -> AbelianElement:
        return self._reduce([u + v for u, v in zip(x, y)])

    def invert(self, x: AbelianElement) -> AbelianElement:
        return self._reduce([-u for u in x])

    def power(self, x: AbelianElement, k: int) -> AbelianElement:
        return self._reduce([k * u for u in x])

    def render(self, x: AbelianElement) -> str:
        if len(x) == 1:
            return str(x[0])
        return "(" + ", ".join(str(v) for v in x) + ")"

    def normal_word(self, x: AbelianElement) -> Word:
        word: List[Letter] = []
        for index, value in enumerate(x):
            word.extend(letters(index, value))
        return tuple(word)

    def cp(self, g: AbelianElement, h: AbelianElement) -> bool:
        return g == h

    def pp(self, g: AbelianElement, h: AbelianElement) -> PowerAnswer:
        """Solve k*g = h coordinate by coordinate.

        Free coordinates force k exactly; each torsion coordinate contributes the arithmetic
        progression of its solutions in [0, n). The constraints are intersected with crt_solve.
        """
        congruences: List[Congruence] = []

        for u, v in zip(g[: self.rank], h[: self.rank]):
            if u == 0:
                if v != 0:
                    return None
                continue
            if v % u != 0:
                return None
            congruences.append(Congruence(v // u, INFINITY))

        for u, v, n in zip(g[self.rank :], h[self.rank :], self.torsion):
            solutions = [k for k in range(n) if (k * u - v) % n == 0]
            if not solutions:
                return None
            step = solutions[1] - solutions[0] if len(solutions) > 1 else n
            congruences.append(Congruence(solutions[0], step))

        if not congruences:
            return 0
        solution = crt_solve(congruences, self.beta)
        if solution is None:
            logger.debug(f"pp({g}, {h}) in {self.describe()}: inconsistent constraints {congruences}")
            return None
        return solution.residue


def trivial_group(beta: int = 64) -> AbelianGroup:
    return AbelianGroup(0, (), beta)


def integers(rank: int = 1, beta: int = 64) -> AbelianGroup:
    return AbelianGroup(rank, (), beta)


def cyclic(n: int, beta: int = 64) -> AbelianGroup:
    return AbelianGroup(0, (n,), beta)


def merge_abelian(left: AbelianGroup, right: AbelianGroup) -> AbelianGroup:
    """The direct product of two abelian groups as one AbelianGroup (free parts merged)."""
    return AbelianGroup(left.rank + right.rank, left.torsion + right.torsion, max(left.beta, right.beta))
