"""
Group descriptions and words.

A group is written in a small expression language (grammar/group.lark):

    1 | Z | Z^r | Z/n | product(G, H) | BS(1,q) | wr(A, B) | lwr(A, d) | rwr(A, B, d)
    | freesolvable(d, r)

Parsing yields a GroupExpr tree; build_group turns it into a Group. Words are whitespace
separated tokens X, X^k or X^-1 over the group's alphabet; "1" or the empty string is the
empty word.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import List, Union

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .abelian import AbelianGroup, merge_abelian
from .baumslag_solitar import BaumslagSolitarGroup
from .errors import DslError, UnknownGeneratorError, WordSyntaxError
from .group import Group, Letter, Word, letters
from .product import DirectProduct
from .solvable import FreeSolvableGroup
from .wreath import WreathProduct, left_iterated, right_iterated

logger = logging.getLogger(__name__)

GRAMMAR_PATH = Path(__file__).parent / "grammar" / "group.lark"


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Integers:
    rank: int = 1


@dataclass(frozen=True)
class Cyclic:
    order: int


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class BaumslagSolitar:
    q: int


@dataclass(frozen=True)
class Wreath:
    base: "GroupExpr"
    top: "GroupExpr"


@dataclass(frozen=True)
class LeftIterated:
    base: "GroupExpr"
    depth: int


@dataclass(frozen=True)
class RightIterated:
    base: "GroupExpr"
    top: "GroupExpr"
    depth: int


@dataclass(frozen=True)
class FreeSolvable:
    degree: int
    rank: int


GroupExpr = Union[
    Trivial, Integers, Cyclic, Product, BaumslagSolitar, Wreath, LeftIterated, RightIterated, FreeSolvable
]


def _number(token, minimum: int, what: str) -> int:
    value = int(token)
    if value < minimum:
        raise DslError(f"{what} must be at least {minimum}, got {value}", token.start_pos)
    return value


class GroupExprTransformer(Transformer):
    def trivial(self, items):
        return Trivial()

    def integers(self, items):
        return Integers(_number(items[0], 1, "Rank") if items else 1)

    def cyclic(self, items):
        return Cyclic(_number(items[0], 2, "Cyclic order"))

    def product(self, items):
        return Product(items[0], items[1])

    def bs(self, items):
        p, q = items
        if int(p) != 1:
            raise DslError(f"Only BS(1,q) is supported, got BS({p},{q})", p.start_pos)
        return BaumslagSolitar(_number(q, 2, "q"))

    def wr(self, items):
        return Wreath(items[0], items[1])

    def lwr(self, items):
        return LeftIterated(items[0], _number(items[1], 1, "Depth"))

    def rwr(self, items):
        return RightIterated(items[0], items[1], _number(items[2], 1, "Depth"))

    def freesolvable(self, items):
        return FreeSolvable(_number(items[0], 1, "Degree"), _number(items[1], 1, "Rank"))


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    return Lark(GRAMMAR_PATH.read_text(), parser="lalr")


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group description.

    Raises:
        DslError: syntax error or out-of-range parameter, with the offending position
    """
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as e:
        position = len(text) if isinstance(e, UnexpectedEOF) else getattr(e, "pos_in_stream", None)
        if position is not None and position < 0:
            position = None
        raise DslError(f"Cannot parse group description {text!r}", position) from e
    try:
        return GroupExprTransformer().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, DslError):
            raise e.orig_exc from None
        raise


def build_group(expr: GroupExpr, beta: int = 64) -> Group:
    """Construct the group an expression describes.

    Raises:
        SmoothnessError: a torsion order is not beta-smooth
    """
    if isinstance(expr, Trivial):
        return AbelianGroup(0, (), beta)
    if isinstance(expr, Integers):
        return AbelianGroup(expr.rank, (), beta)
    if isinstance(expr, Cyclic):
        return AbelianGroup(0, (expr.order,), beta)
    if isinstance(expr, Product):
        left, right = build_group(expr.left, beta), build_group(expr.right, beta)
        if isinstance(left, AbelianGroup) and isinstance(right, AbelianGroup):
            return merge_abelian(left, right)
        return DirectProduct(left, right, beta)
    if isinstance(expr, BaumslagSolitar):
        return BaumslagSolitarGroup(expr.q, beta)
    if isinstance(expr, Wreath):
        return WreathProduct(build_group(expr.base, beta), build_group(expr.top, beta), beta)
    if isinstance(expr, LeftIterated):
        return left_iterated(build_group(expr.base, beta), expr.depth, beta)
    if isinstance(expr, RightIterated):
        return right_iterated(build_group(expr.base, beta), build_group(expr.top, beta), expr.depth, beta)
    if isinstance(expr, FreeSolvable):
        return FreeSolvableGroup(expr.degree, expr.rank, beta)
    raise DslError(f"Unknown group expression {expr!r}")


def parse_group(text: str, beta: int = 64) -> Group:
    group = build_group(parse_group_expr(text), beta)
    logger.debug(f"Parsed {text!r} as {group.describe()} on {group.alphabet}")
    return group


TOKEN_PATTERN = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9_.]*)(?:\^(?P<exponent>[+-]?\d+))?$")


def parse_word(group: Group, text: str) -> Word:
    """Parse a whitespace separated word over group's alphabet.

    Raises:
        WordSyntaxError: a token is not of the form X, X^k
        UnknownGeneratorError: a token names a generator the group does not have
    """
    tokens = text.split()
    if tokens == ["1"]:
        return ()

    index = {name: position for position, name in enumerate(group.alphabet)}
    word: List[Letter] = []
    for token in tokens:
        match = TOKEN_PATTERN.match(token)
        if match is None:
            raise WordSyntaxError(f"Malformed token {token!r} in word {text!r}")
        name = match.group("name")
        if name not in index:
            known = ", ".join(group.alphabet) or "none"
            raise UnknownGeneratorError(f"Unknown generator {name!r} for {group.describe()} (generators: {known})")
        exponent = int(match.group("exponent") or 1)
        word.extend(letters(index[name], exponent))
    return tuple(word)
