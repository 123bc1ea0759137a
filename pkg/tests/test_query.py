"""Tests for query dispatch and batch processing"""

import json

import pytest

from wreathkit.dsl import parse_group, parse_word
from wreathkit.errors import UnsupportedError, UsageError
from wreathkit.query import COMMANDS, QueryResult, parse_batch_line, run_batch, run_query


class TestRunQuery:
    """Test each command on small groups"""

    def test_word_problem(self, lamplighter):
        result = run_query(lamplighter, "wp", ["a1 t1 a1 t1^-1 a1 t1 a1 t1^-1"])
        assert result.verdict is True
        assert result.command == "wp"
        assert result.group == "wr(Z/2, Z)"

    def test_conjugacy(self, lamplighter):
        result = run_query(lamplighter, "cp", ["a1 t1", "t1 a1"])
        assert result.verdict is True
        assert result.witness is not None

    def test_conjugacy_in_free_solvable_group(self, s22):
        assert run_query(s22, "cp", ["x1", "x2"]).verdict is False
        assert run_query(s22, "cp", ["x1", "x2^-1 x1 x2"]).verdict is True

    def test_conjugacy_in_abelian_group(self):
        group = parse_group("Z^2")
        assert run_query(group, "cp", ["a1 a2", "a2 a1"]).verdict is True

    def test_power(self, lamplighter):
        result = run_query(lamplighter, "pp", ["t1", "t1^5"])
        assert result.k == 5
        assert result.verdict is True

    def test_power_without_solution(self, lamplighter):
        result = run_query(lamplighter, "pp", ["t1^2", "t1^5"])
        assert result.k is None
        assert result.verdict is False
        assert result.to_text().endswith("no solution")

    def test_membership(self):
        group = parse_group("Z")
        assert run_query(group, "csgmp", ["a1^2", "a1^-4"]).verdict is True
        assert run_query(group, "csmmp", ["a1^2", "a1^-4"]).verdict is False

    def test_order(self, lamplighter):
        assert run_query(lamplighter, "order", ["a1"]).k == 2
        infinite = run_query(lamplighter, "order", ["t1"])
        assert infinite.k == "infinity"
        assert infinite.rendering is None
        assert infinite.to_text().endswith("infinity")
        assert json.loads(infinite.to_json())["k"] == "infinity"

    def test_json_schema_is_stable(self, lamplighter):
        """Test that JSON carries the fixed fields plus rendering only where a query renders"""
        fixed = {"command", "group", "inputs", "verdict", "witness", "k", "time_ms"}
        pp = json.loads(run_query(lamplighter, "pp", ["t1", "t1^3"]).to_json())
        assert set(pp) <= fixed
        order = json.loads(run_query(lamplighter, "order", ["a1"]).to_json())
        assert set(order) <= fixed
        assert order["k"] == 2
        collect = json.loads(run_query(lamplighter, "collect", ["a1 t1"]).to_json())
        assert set(collect) <= fixed | {"rendering"}

    def test_collect(self, lamplighter):
        result = run_query(lamplighter, "collect", ["a1 t1 a1 t1"])
        lines = result.rendering.splitlines()
        assert lines[0] == "top: 2"
        assert "  1 -> 1" in lines
        normal = next(line for line in lines if line.startswith("normal word: "))
        text = normal[len("normal word: ") :]
        assert lamplighter.collect(parse_word(lamplighter, text)) == lamplighter.collect(
            parse_word(lamplighter, "a1 t1 a1 t1")
        )

    def test_collect_needs_wreath_product(self):
        with pytest.raises(UnsupportedError):
            run_query(parse_group("Z^2"), "collect", ["a1"])

    def test_embed(self, s22):
        result = run_query(s22, "embed", ["x1"])
        assert result.rendering.startswith("wr(Z^2, freesolvable(1,2)): ")

    def test_embed_needs_free_solvable_group(self, lamplighter):
        with pytest.raises(UnsupportedError):
            run_query(lamplighter, "embed", ["a1"])

    def test_wrong_arity(self, lamplighter):
        with pytest.raises(UsageError):
            run_query(lamplighter, "cp", ["a1"])

    def test_unknown_command(self, lamplighter):
        with pytest.raises(UsageError):
            run_query(lamplighter, "frobnicate", ["a1"])

    def test_conjugacy_unsupported(self):
        group = parse_group("wr(Z, BS(1,2))")
        with pytest.raises(UnsupportedError):
            run_query(group, "cp", ["a1", "a1"])

    def test_json_fields(self, lamplighter):
        payload = json.loads(run_query(lamplighter, "pp", ["t1", "t1^5"]).to_json())
        assert payload["k"] == 5
        assert payload["inputs"] == ["t1", "t1^5"]
        assert set(payload) <= set(QueryResult.model_fields)
        assert "witness" not in payload

    def test_commands(self):
        assert set(COMMANDS) == {"wp", "cp", "pp", "csgmp", "csmmp", "order", "collect", "embed"}


class TestBatch:
    """Test the batch line format and ordering"""

    def test_parse_line(self):
        assert parse_batch_line("cp a1 t1 ; t1 a1") == ("cp", ["a1 t1", "t1 a1"])
        assert parse_batch_line("order t1") == ("order", ["t1"])
        assert parse_batch_line("   ") is None
        assert parse_batch_line("# comment") is None

    def test_results_keep_input_order(self, lamplighter):
        lines = [f"pp t1 ; t1^{k}" for k in range(12)] + ["", "# done"]
        results = run_batch(lamplighter, lines, workers=4)
        assert [result.k for result in results] == list(range(12))

    def test_single_worker(self, lamplighter):
        results = run_batch(lamplighter, ["wp 1", "wp a1"], workers=1)
        assert [result.verdict for result in results] == [True, False]
