"""
Restricted wreath products A wr B.

An element (b, f) is stored as its top b in B and the support of f: a tuple of
(key, value) pairs with pairwise distinct B-keys in increasing canonical order and
non-identity A-values. Multiplication follows (b, f)(c, g) = (bc, f^c g) with
f^c(x) = f(x c^-1): the support keys of the left factor move by right multiplication
with c, then values on equal keys are multiplied left to right.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .group import Group, Letter, PowerAnswer, Word

logger = logging.getLogger(__name__)

Support = Tuple[Tuple[Any, Any], ...]


@dataclass(frozen=True, order=True)
class WreathElement:
    top: Any
    support: Support = ()

    def keys(self) -> Tuple[Any, ...]:
        return tuple(key for key, _ in self.support)

    def value(self, key: Any, default: Any = None) -> Any:
        for candidate, value in self.support:
            if candidate == key:
                return value
        return default


def _level_name(name: str) -> str:
    """Qualify a generator name of an inner top group with its nesting level."""
    if name.startswith("l") and "." in name:
        level, rest = name[1:].split(".", 1)
        if level.isdigit():
            return f"l{int(level) + 1}.{rest}"
    return f"l2.{name}"


class WreathProduct(Group):
    """A wr B over any two groups; words use A-letters a1..ar followed by the B-letters"""

    def __init__(self, base: Group, top_group: Group, beta: int = 64):
        self.base = base
        self.top_group = top_group
        self.beta = beta

        base_names = tuple(f"a{i + 1}" for i in range(len(base.alphabet)))
        if isinstance(top_group, WreathProduct):
            top_names = tuple(_level_name(name) for name in top_group.alphabet)
        else:
            top_names = tuple(f"t{i + 1}" for i in range(len(top_group.alphabet)))
        self.alphabet = base_names + top_names

        self.is_abelian = (base.is_trivial and top_group.is_abelian) or (top_group.is_trivial and base.is_abelian)
        self.is_torsion_free = base.is_torsion_free and top_group.is_torsion_free
        self.supports_conjugacy = base.supports_conjugacy and top_group.supports_conjugacy
        bounds = [b for b in (base.torsion_smoothness_bound, top_group.torsion_smoothness_bound) if b is not None]
        self.torsion_smoothness_bound = max(bounds) if bounds else None

    def describe(self) -> str:
        return f"wr({self.base.describe()}, {self.top_group.describe()})"

    @property
    def base_size(self) -> int:
        return len(self.base.alphabet)

    def is_base_letter(self, letter: Letter) -> bool:
        return letter.generator < self.base_size

    def element(self, top: Any, values: Dict[Any, Any]) -> WreathElement:
        """Build the canonical element from a key -> value map, dropping identity values."""
        identity = self.base.identity
        support = tuple(sorted((key, value) for key, value in values.items() if value != identity))
        return WreathElement(top, support)

    def lift(self, top: Any) -> WreathElement:
        return WreathElement(top)

    def delta(self, key: Any, value: Any) -> WreathElement:
        """(1, f) with f(key) = value and trivial elsewhere."""
        return self.element(self.top_group.identity, {key: value})

    @property
    def identity(self) -> WreathElement:
        return WreathElement(self.top_group.identity)

    def generator(self, index: int) -> WreathElement:
        if index < self.base_size:
            return self.delta(self.top_group.identity, self.base.generator(index))
        return self.lift(self.top_group.generator(index - self.base_size))

    def collect(self, word: Iterable[Letter]) -> WreathElement:
        """Evaluate a word in one left-to-right pass.

        The key of an A-letter is the product of the B-letters after it, obtained as
        prefix^-1 * top from the running prefix product of B-letters.
        """
        B, A = self.top_group, self.base
        word = tuple(word)

        top = B.identity
        prefixes: List[Any] = []
        for letter in word:
            prefixes.append(top)
            if not self.is_base_letter(letter):
                top = B.multiply(top, B.letter_element(Letter(letter.generator - self.base_size, letter.sign)))

        values: Dict[Any, Any] = {}
        for letter, prefix in zip(word, prefixes):
            if not self.is_base_letter(letter):
                continue
            key = B.multiply(B.invert(prefix), top)
            current = values.get(key, A.identity)
            values[key] = A.multiply(current, A.letter_element(letter))

        return self.element(top, values)

    def evaluate(self, word: Iterable[Letter]) -> WreathElement:
        return self.collect(word)

    def multiply(self, x: WreathElement, y: WreathElement) -> WreathElement:
        B, A = self.top_group, self.base
        shift = y.top
        values = {B.multiply(key, shift): value for key, value in x.support}
        for key, value in y.support:
            values[key] = A.multiply(values[key], value) if key in values else value
        return self.element(B.multiply(x.top, shift), values)

    def invert(self, x: WreathElement) -> WreathElement:
        B, A = self.top_group, self.base
        inverse_top = B.invert(x.top)
        values = {B.multiply(key, inverse_top): A.invert(value) for key, value in x.support}
        return self.element(inverse_top, values)

    def wp(self, g: WreathElement) -> bool:
        return self.top_group.wp(g.top) and not g.support

    def cp(self, g: WreathElement, h: WreathElement) -> bool:
        from .conjugacy import conjugacy_test

        return conjugacy_test(self, g, h).conjugate

    def pp(self, g: WreathElement, h: WreathElement) -> PowerAnswer:
        from .power import power_test

        return power_test(self, g, h)

    def _top_word(self, top: Any) -> Word:
        return tuple(
            Letter(letter.generator + self.base_size, letter.sign) for letter in self.top_group.normal_word(top)
        )

    def normal_word(self, x: WreathElement) -> Word:
        """top word, then for every support entry: key word^-1, value word, key word"""
        word = list(self._top_word(x.top))
        for key, value in x.support:
            key_word = self._top_word(key)
            word.extend(Letter(letter.generator, -letter.sign) for letter in reversed(key_word))
            word.extend(self.base.normal_word(value))
            word.extend(key_word)
        return tuple(word)

    def render(self, x: WreathElement) -> str:
        entries = ", ".join(f"{self.top_group.render(k)}: {self.base.render(v)}" for k, v in x.support)
        return f"({self.top_group.render(x.top)}; {{{entries}}})"

    def support_table(self, x: WreathElement) -> List[Tuple[str, str]]:
        return [(self.top_group.render(key), self.base.render(value)) for key, value in x.support]

    def validate(self, x: WreathElement) -> Optional[str]:
        """Describe why x is not in canonical form, or None if it is."""
        keys = x.keys()
        if any(left >= right for left, right in zip(keys, keys[1:])):
            return "support keys are not strictly increasing"
        if any(value == self.base.identity for _, value in x.support):
            return "support holds an identity value"
        return None


def left_iterated(base: Group, depth: int, beta: int = 64) -> Group:
    """A wr (A wr (... wr 1)) with depth copies of A."""
    from .abelian import trivial_group

    group: Group = trivial_group(beta)
    for _ in range(depth):
        group = WreathProduct(base, group, beta)
    return group


def right_iterated(base: Group, top_group: Group, depth: int, beta: int = 64) -> Group:
    """(... (A wr B) wr B ...) wr B with depth wreath factors."""
    group = base
    for _ in range(depth):
        group = WreathProduct(group, top_group, beta)
    return group
