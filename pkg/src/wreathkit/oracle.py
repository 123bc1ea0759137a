"""
Ground truth by brute force: Cayley-ball enumeration, conjugator and exponent scans, and
the closed-form conjugacy criterion of the lamplighter group Z/2 wr Z.

These are reference engines for tests and the selftest; the decision procedures never
depend on them.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union

from .config import get_settings
from .errors import CapExceededError, WrongGroupError
from .group import Group, Letter, PowerAnswer, Word
from .wreath import WreathElement, WreathProduct

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BallIndex:
    """Distinct elements of word length <= radius, each with a shortest word"""

    radius: int
    elements: Tuple[Tuple[Any, Word], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: Any) -> bool:
        return element in self.lookup()

    def lookup(self) -> Dict[Any, Word]:
        return dict(self.elements)


@dataclass(frozen=True)
class FoundConjugator:
    word: Word


@dataclass(frozen=True)
class NotFoundWithinRadius:
    radius: int


ConjugatorSearch = Union[FoundConjugator, NotFoundWithinRadius]


def _step_letters(group: Group) -> List[Letter]:
    return [Letter(index, sign) for index in range(len(group.alphabet)) for sign in (1, -1)]


def enumerate_ball(group: Group, radius: int, cap: Optional[int] = None) -> BallIndex:
    """Breadth-first closure of the identity under right multiplication by generators.

    Raises:
        CapExceededError: radius is larger than the cap (configured radius_cap by default)
    """
    cap = get_settings().radius_cap if cap is None else cap
    if radius > cap:
        raise CapExceededError(f"Radius {radius} exceeds the cap {cap}")

    seen: Dict[Any, Word] = {group.identity: ()}
    frontier = [group.identity]
    steps = _step_letters(group)
    for _ in range(radius):
        next_frontier = []
        for element in frontier:
            word = seen[element]
            for letter in steps:
                candidate = group.multiply(element, group.letter_element(letter))
                if candidate not in seen:
                    seen[candidate] = word + (letter,)
                    next_frontier.append(candidate)
        if not next_frontier:
            break
        frontier = next_frontier

    logger.debug(f"Ball of radius {radius} in {group.describe()} has {len(seen)} elements")
    return BallIndex(radius, tuple(seen.items()))


def enumerate_finite(group: Group, max_elements: Optional[int] = None) -> BallIndex:
    """All elements of a finite group, as the ball whose radius is the diameter.

    Raises:
        CapExceededError: more than max_elements elements were found
    """
    max_elements = get_settings().max_group_order if max_elements is None else max_elements
    seen: Dict[Any, Word] = {group.identity: ()}
    frontier = [group.identity]
    steps = _step_letters(group)
    radius = 0
    while frontier:
        next_frontier = []
        for element in frontier:
            word = seen[element]
            for letter in steps:
                candidate = group.multiply(element, group.letter_element(letter))
                if candidate not in seen:
                    seen[candidate] = word + (letter,)
                    next_frontier.append(candidate)
                    if len(seen) > max_elements:
                        raise CapExceededError(f"{group.describe()} has more than {max_elements} elements")
        if next_frontier:
            radius += 1
        frontier = next_frontier
    return BallIndex(radius, tuple(seen.items()))


def brute_conjugacy_class(group: Group, x: Any, ball: BallIndex) -> Dict[Any, Word]:
    """Every z^-1 x z for z in the ball, mapped to the first (shortest) z word producing it."""
    conjugates: Dict[Any, Word] = {}
    for z, word in ball.elements:
        conjugates.setdefault(group.conjugate(x, z), word)
    return conjugates


def brute_cp(group: Group, x: Any, y: Any, radius: int, ball: Optional[BallIndex] = None) -> ConjugatorSearch:
    """Search the ball for z with z^-1 x z = y."""
    if ball is None:
        ball = enumerate_ball(group, radius)
    for z, word in ball.elements:
        if group.conjugate(x, z) == y:
            return FoundConjugator(word)
    return NotFoundWithinRadius(ball.radius)


def brute_pp(group: Group, v: Any, w: Any, bound: int) -> PowerAnswer:
    """Scan k = 0..bound, then k = -1..-bound, for v^k = w.

    Once the positive powers return to the identity every power has been seen, so the scan
    stops there.
    """
    power = group.identity
    for k in range(bound + 1):
        if power == w:
            return k
        power = group.multiply(power, v)
        if power == group.identity:
            return None

    inverse = group.invert(v)
    power = group.identity
    for k in range(1, bound + 1):
        power = group.multiply(power, inverse)
        if power == w:
            return -k
    return None


def _is_lamplighter(group: Group) -> bool:
    return (
        isinstance(group, WreathProduct)
        and group.base.describe() == "Z/2"
        and group.top_group.describe() == "Z"
    )


def lamplighter_cp(group: Group, x: WreathElement, y: WreathElement) -> bool:
    """Conjugacy in Z/2 wr Z by lamp counting.

    Raises:
        WrongGroupError: group is not Z/2 wr Z
    """
    if not _is_lamplighter(group):
        raise WrongGroupError(f"lamplighter_cp works on wr(Z/2, Z), not {group.describe()}")

    b, c = x.top[0], y.top[0]
    if b != c:
        return False

    lamps_f = sorted(key[0] for key in x.keys())
    lamps_g = sorted(key[0] for key in y.keys())

    if b == 0:
        if len(lamps_f) != len(lamps_g):
            return False
        if not lamps_f:
            return True
        shift = lamps_f[0] - lamps_g[0]
        return lamps_f == [lamp + shift for lamp in lamps_g]

    period = abs(b)
    parity_f = Counter(lamp % period for lamp in lamps_f)
    parity_g = Counter(lamp % period for lamp in lamps_g)
    for d in range(period):
        if all(parity_f[t] % 2 == parity_g[(t - d) % period] % 2 for t in range(period)):
            return True
    return False
