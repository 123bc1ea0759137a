"""Tests for the group description language and word parsing"""

import pytest

from wreathkit.abelian import AbelianGroup
from wreathkit.baumslag_solitar import BaumslagSolitarGroup
from wreathkit.dsl import (
    BaumslagSolitar,
    Cyclic,
    FreeSolvable,
    Integers,
    LeftIterated,
    Product,
    RightIterated,
    Trivial,
    Wreath,
    parse_group,
    parse_group_expr,
    parse_word,
)
from wreathkit.errors import DslError, SmoothnessError, UnknownGeneratorError, UnsupportedError, WordSyntaxError
from wreathkit.group import Letter
from wreathkit.product import DirectProduct
from wreathkit.solvable import FreeSolvableGroup
from wreathkit.wreath import WreathProduct


class TestParseGroupExpr:
    """Test the expression tree produced by the parser"""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1", Trivial()),
            ("Z", Integers(1)),
            ("Z^3", Integers(3)),
            ("Z/2", Cyclic(2)),
            ("BS(1,2)", BaumslagSolitar(2)),
            ("wr(Z/2, Z)", Wreath(Cyclic(2), Integers(1))),
            ("product(Z, Z/4)", Product(Integers(1), Cyclic(4))),
            ("lwr(Z^2, 3)", LeftIterated(Integers(2), 3)),
            ("rwr(Z/2, Z, 2)", RightIterated(Cyclic(2), Integers(1), 2)),
            ("freesolvable(2, 3)", FreeSolvable(2, 3)),
            ("  wr( Z/2 ,wr(Z/2,Z) ) ", Wreath(Cyclic(2), Wreath(Cyclic(2), Integers(1)))),
        ],
    )
    def test_expressions(self, text, expected):
        assert parse_group_expr(text) == expected

    def test_syntax_error_has_position(self):
        with pytest.raises(DslError) as excinfo:
            parse_group_expr("wr(Z/2")
        assert excinfo.value.position is not None

    def test_unknown_name(self):
        with pytest.raises(DslError):
            parse_group_expr("foo")

    def test_cyclic_order_too_small(self):
        with pytest.raises(DslError) as excinfo:
            parse_group_expr("Z/1")
        assert excinfo.value.position == 2
        assert "at least 2" in str(excinfo.value)

    def test_only_bs_one_q(self):
        with pytest.raises(DslError):
            parse_group_expr("BS(2,3)")

    def test_bs_q_at_least_two(self):
        with pytest.raises(DslError):
            parse_group_expr("BS(1,1)")

    def test_depth_at_least_one(self):
        with pytest.raises(DslError):
            parse_group_expr("lwr(Z, 0)")


class TestBuildGroup:
    """Test turning descriptions into groups"""

    def test_lamplighter(self):
        group = parse_group("wr(Z/2, Z)")
        assert isinstance(group, WreathProduct)
        assert group.alphabet == ("a1", "t1")

    def test_free_solvable(self):
        group = parse_group("freesolvable(2,2)")
        assert isinstance(group, FreeSolvableGroup)
        assert group.degree == 2

    def test_abelian_products_merge(self):
        group = parse_group("product(Z, Z/4)")
        assert isinstance(group, AbelianGroup)
        assert group.describe() == "Z x Z/4"

    def test_mixed_product(self):
        group = parse_group("product(BS(1,2), Z/2)")
        assert isinstance(group, DirectProduct)
        assert isinstance(group.left, BaumslagSolitarGroup)

    def test_iterated(self):
        assert parse_group("lwr(Z^2, 2)").describe() == "wr(Z^2, wr(Z^2, 1))"
        assert parse_group("rwr(Z/2, Z/2, 2)").describe() == "wr(wr(Z/2, Z/2), Z/2)"

    def test_conjugacy_unsupported_over_bs(self):
        group = parse_group("wr(Z, BS(1,2))")
        with pytest.raises(UnsupportedError):
            group.cp(group.identity, group.identity)

    def test_smoothness_bound_applies(self):
        with pytest.raises(SmoothnessError):
            parse_group("Z/67", beta=64)
        assert parse_group("Z/67", beta=67).torsion_smoothness_bound == 67


class TestParseWord:
    """Test word tokens"""

    def test_tokens(self, lamplighter):
        assert parse_word(lamplighter, "a1 t1^-2") == (Letter(0, 1), Letter(1, -1), Letter(1, -1))

    def test_positive_exponent(self, lamplighter):
        assert parse_word(lamplighter, "t1^3") == (Letter(1, 1),) * 3
        assert parse_word(lamplighter, "t1^+1") == (Letter(1, 1),)

    def test_identity(self, lamplighter):
        assert parse_word(lamplighter, "1") == ()
        assert parse_word(lamplighter, "") == ()
        assert parse_word(lamplighter, "t1^0") == ()

    def test_nested_names(self):
        group = parse_group("wr(Z/2, wr(Z/2, Z))")
        assert parse_word(group, "l2.t1 a1") == (Letter(2, 1), Letter(0, 1))

    def test_malformed_token(self, lamplighter):
        with pytest.raises(WordSyntaxError):
            parse_word(lamplighter, "a1^x")

    def test_unknown_generator(self, lamplighter):
        with pytest.raises(UnknownGeneratorError) as excinfo:
            parse_word(lamplighter, "b7")
        assert "a1, t1" in str(excinfo.value)
