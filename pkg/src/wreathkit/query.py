"""
Decision queries on a parsed group: dispatch, timing and rendering.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from .arith import INFINITY
from .conjugacy import conjugacy_test
from .dsl import parse_word
from .errors import UnsupportedError, UsageError
from .group import Group, format_word
from .solvable import FreeSolvableGroup, solvable_cp
from .wreath import WreathProduct

logger = logging.getLogger(__name__)

ARITY = {
    "wp": 1,
    "cp": 2,
    "pp": 2,
    "csgmp": 2,
    "csmmp": 2,
    "order": 1,
    "collect": 1,
    "embed": 1,
}
COMMANDS = tuple(ARITY)


class QueryResult(BaseModel):
    """Outcome of one query; the JSON form is one line per query"""

    command: str
    group: str
    inputs: List[str]
    verdict: Optional[bool] = None
    witness: Optional[str] = None
    k: Optional[Union[int, Literal["infinity"]]] = None
    rendering: Optional[str] = None
    time_ms: float = Field(0.0, ge=0)

    model_config = ConfigDict(frozen=True)

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)

    def to_text(self) -> str:
        head = f"{self.command}({', '.join(repr(word) for word in self.inputs)})"
        if self.command in ("pp", "order"):
            answer = str(self.k) if self.k is not None else "no solution"
        elif self.verdict is not None:
            answer = "true" if self.verdict else "false"
        else:
            answer = ""
        lines = [f"{head}: {answer}".rstrip()]
        if self.witness is not None:
            lines.append(f"  witness: {self.witness}")
        if self.rendering is not None:
            lines.extend(f"  {line}" for line in self.rendering.splitlines())
        return "\n".join(lines)


def _collect_rendering(group: WreathProduct, word) -> str:
    element = group.collect(word)
    lines = [f"top: {group.top_group.render(element.top)}", "support:"]
    table = group.support_table(element)
    lines.extend(f"  {key} -> {value}" for key, value in table)
    if not table:
        lines.append("  (empty)")
    try:
        lines.append(f"normal word: {format_word(group.alphabet, group.normal_word(element))}")
    except UnsupportedError:
        pass
    return "\n".join(lines)


def run_query(group: Group, command: str, words: Sequence[str], radius: int = 0) -> QueryResult:
    """Evaluate the words in group and answer one decision query.

    Args:
        group: Group the words live in
        command: One of COMMANDS
        words: The query's words, as text
        radius: Search radius for conjugacy witnesses (0 disables the search)

    Returns:
        QueryResult

    Raises:
        UsageError: unknown command or wrong number of words
        UnsupportedError: the group cannot answer this command
    """
    if command not in ARITY:
        raise UsageError(f"Unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    if len(words) != ARITY[command]:
        raise UsageError(f"{command} takes {ARITY[command]} word(s), got {len(words)}")

    started = time.perf_counter()
    parsed = [parse_word(group, text) for text in words]
    elements = [group.evaluate(word) for word in parsed]
    fields = {}

    if command == "wp":
        fields["verdict"] = group.wp(elements[0])
        fields["rendering"] = group.render(elements[0])
    elif command == "cp":
        if isinstance(group, WreathProduct):
            answer = conjugacy_test(group, elements[0], elements[1], witness_radius=radius)
            fields["verdict"] = answer.conjugate
            if answer.has_witness:
                fields["witness"] = group.top_group.render(answer.witness_top)
        elif isinstance(group, FreeSolvableGroup):
            answer = solvable_cp(group, parsed[0], parsed[1])
            fields["verdict"] = answer.conjugate
        else:
            fields["verdict"] = group.cp(elements[0], elements[1])
    elif command == "pp":
        k = group.pp(elements[0], elements[1])
        fields["verdict"] = k is not None
        fields["k"] = k
    elif command == "csgmp":
        fields["verdict"] = group.csgmp(elements[0], elements[1])
    elif command == "csmmp":
        fields["verdict"] = group.csmmp(elements[0], elements[1])
    elif command == "order":
        order = group.order(elements[0])
        fields["k"] = "infinity" if order is INFINITY else order
    elif command == "collect":
        if not isinstance(group, WreathProduct):
            raise UnsupportedError(f"collect needs a wreath product, not {group.describe()}")
        fields["rendering"] = _collect_rendering(group, parsed[0])
    elif command == "embed":
        if not isinstance(group, FreeSolvableGroup):
            raise UnsupportedError(f"embed needs a free solvable group, not {group.describe()}")
        image = group.magnus_embed(parsed[0])
        fields["rendering"] = f"{group.inner.describe()}: {group.render(image)}"

    elapsed = (time.perf_counter() - started) * 1000
    logger.debug(f"{command} on {group.describe()} took {elapsed:.2f} ms")
    return QueryResult(command=command, group=group.describe(), inputs=list(words), time_ms=elapsed, **fields)


def parse_batch_line(line: str) -> Optional[Tuple[str, List[str]]]:
    """``command word1 ; word2`` -> (command, [word1, word2]); blank and # lines give None."""
    line = line.strip()
    if not line or line.startswith("#"):
        return None
    command, _, rest = line.partition(" ")
    words = [word.strip() for word in rest.split(";")] if rest.strip() else []
    return command, words


def run_batch(group: Group, lines: Iterable[str], radius: int = 0, workers: int = 1) -> List[QueryResult]:
    """Answer one query per line; results keep the input order."""
    queries = [query for query in (parse_batch_line(line) for line in lines) if query is not None]
    logger.info(f"Running {len(queries)} queries on {group.describe()} with {workers} worker(s)")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        return list(executor.map(lambda query: run_query(group, query[0], query[1], radius), queries))
