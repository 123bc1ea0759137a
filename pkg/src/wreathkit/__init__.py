"""
wreathkit - decision procedures for wreath products and free solvable groups.
"""

from .abelian import AbelianGroup
from .baumslag_solitar import BaumslagSolitarGroup
from .dsl import parse_group, parse_word
from .group import Group, Letter, Word
from .product import DirectProduct
from .solvable import FreeSolvableGroup
from .wreath import WreathElement, WreathProduct

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BaumslagSolitarGroup",
    "DirectProduct",
    "FreeSolvableGroup",
    "Group",
    "Letter",
    "Word",
    "WreathElement",
    "WreathProduct",
    "parse_group",
    "parse_word",
]
