"""Tests for the brute-force reference engines"""

import pytest

from wreathkit.abelian import AbelianGroup, integers
from wreathkit.config import reset_settings
from wreathkit.conjugacy import conjugacy_test
from wreathkit.dsl import parse_group
from wreathkit.errors import CapExceededError, WrongGroupError
from wreathkit.group import random_word
from wreathkit.oracle import (
    FoundConjugator,
    NotFoundWithinRadius,
    brute_conjugacy_class,
    brute_cp,
    brute_pp,
    enumerate_ball,
    enumerate_finite,
    lamplighter_cp,
)


class TestEnumeration:
    """Test Cayley-ball and whole-group enumeration"""

    def test_ball_in_integers(self):
        ball = enumerate_ball(integers(), 3)
        assert len(ball) == 7
        assert {element for element, _ in ball.elements} == {(n,) for n in range(-3, 4)}

    def test_words_are_shortest(self, lamplighter):
        ball = enumerate_ball(lamplighter, 4)
        for element, word in ball.elements:
            assert lamplighter.evaluate(word) == element
            assert len(word) <= 4
        assert len(ball.lookup()[lamplighter.identity]) == 0

    def test_finite_group_fits_in_ball(self, z2_wr_z3):
        assert len(enumerate_ball(z2_wr_z3, 6)) == 24

    def test_trivial_group(self):
        ball = enumerate_ball(AbelianGroup(0, ()), 3)
        assert len(ball) == 1
        assert (() in ball) is True

    def test_radius_cap(self, lamplighter):
        with pytest.raises(CapExceededError):
            enumerate_ball(lamplighter, 9)

    def test_radius_cap_from_environment(self, lamplighter, monkeypatch):
        monkeypatch.setenv("WREATHKIT_RADIUS_CAP", "2")
        reset_settings()
        with pytest.raises(CapExceededError):
            enumerate_ball(lamplighter, 3)

    def test_enumerate_finite(self, z2_wr_z4):
        ball = enumerate_finite(z2_wr_z4)
        assert len(ball) == 64

    def test_enumerate_finite_guard(self, z2_wr_z4):
        with pytest.raises(CapExceededError):
            enumerate_finite(z2_wr_z4, max_elements=10)


class TestBruteSearches:
    """Test conjugator and exponent scans"""

    def test_element_conjugate_to_itself(self, lamplighter):
        x = lamplighter.element((1,), {(0,): (1,)})
        assert brute_cp(lamplighter, x, x, 2) == FoundConjugator(())

    def test_found_conjugator_is_valid(self, lamplighter):
        x = lamplighter.element((1,), {(0,): (1,)})
        y = lamplighter.element((1,), {(5,): (1,)})
        search = brute_cp(lamplighter, x, y, 6)
        assert isinstance(search, FoundConjugator)
        assert lamplighter.conjugate(x, lamplighter.evaluate(search.word)) == y

    def test_not_found(self, lamplighter):
        x = lamplighter.element((1,), {})
        y = lamplighter.element((2,), {})
        assert brute_cp(lamplighter, x, y, 3) == NotFoundWithinRadius(3)

    def test_reuses_ball(self, lamplighter):
        ball = enumerate_ball(lamplighter, 3)
        x = lamplighter.element((0,), {(0,): (1,)})
        y = lamplighter.element((0,), {(2,): (1,)})
        assert isinstance(brute_cp(lamplighter, x, y, 3, ball=ball), FoundConjugator)

    def test_conjugacy_class(self, z2_wr_z3):
        ball = enumerate_finite(z2_wr_z3)
        x = z2_wr_z3.element((0,), {(0,): (1,)})
        conjugates = brute_conjugacy_class(z2_wr_z3, x, ball)
        assert set(conjugates) == {z2_wr_z3.element((0,), {(key,): (1,)}) for key in range(3)}

    def test_brute_pp_integers(self):
        group = integers()
        assert brute_pp(group, (2,), (10,), 16) == 5
        assert brute_pp(group, (2,), (3,), 16) is None
        assert brute_pp(group, (2,), (-6,), 16) == -3

    def test_brute_pp_stops_at_order(self, z2_wr_z4):
        x = z2_wr_z4.element((1,), {(0,): (1,)})
        assert brute_pp(z2_wr_z4, x, z2_wr_z4.element((2,), {}), 1000) is None

    def test_brute_pp_lamplighter(self, lamplighter):
        x = lamplighter.element((1,), {(0,): (1,)})
        assert brute_pp(lamplighter, x, lamplighter.power(x, 3), 8) == 3


class TestLamplighterCriterion:
    """Test the closed-form conjugacy criterion"""

    def test_examples(self, lamplighter):
        x = lamplighter.element((1,), {(0,): (1,)})
        assert lamplighter_cp(lamplighter, x, lamplighter.element((1,), {(5,): (1,)}))
        assert not lamplighter_cp(
            lamplighter,
            lamplighter.element((0,), {(0,): (1,), (1,): (1,)}),
            lamplighter.element((0,), {(0,): (1,), (2,): (1,)}),
        )

    def test_wrong_group(self, z2_wr_z3):
        with pytest.raises(WrongGroupError):
            lamplighter_cp(z2_wr_z3, z2_wr_z3.identity, z2_wr_z3.identity)

    def test_wrong_group_names_the_group(self):
        group = parse_group("wr(Z/3, Z)")
        with pytest.raises(WrongGroupError, match="wr\\(Z/3, Z\\)"):
            lamplighter_cp(group, group.identity, group.identity)

    def test_agrees_with_search(self, lamplighter, rng):
        """Test the criterion against conjugators found within radius 6"""
        ball = enumerate_ball(lamplighter, 6)
        for _ in range(100):
            x = lamplighter.evaluate(random_word(lamplighter, rng, 5))
            z = lamplighter.evaluate(random_word(lamplighter, rng, 6))
            y = lamplighter.conjugate(x, z)
            assert lamplighter_cp(lamplighter, x, y)
            assert isinstance(brute_cp(lamplighter, x, y, 6, ball=ball), FoundConjugator)
            assert conjugacy_test(lamplighter, x, y).conjugate
