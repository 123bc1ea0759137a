"""
Acceptance selftest.

Every check compares a decision procedure with an independent ground truth (brute force,
closed forms or definitions) on generated instances. ``quick`` uses reduced instance
counts; ``full`` runs every check at its complete size.

The algorithms under test are looked up by name, and ``overrides`` may replace any of
them, which is how a deliberately broken build is simulated.
"""

import logging
import time
from math import lcm
from random import Random
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from .abelian import AbelianGroup
from .arith import Congruence, crt_solve
from .baumslag_solitar import BaumslagSolitarGroup
from .conjugacy import conjugacy_test, csgmp_gadget, csmmp_gadget, pi_product
from .group import Group, Letter, invert_word, random_word
from .oracle import brute_conjugacy_class, brute_pp, enumerate_finite, lamplighter_cp
from .power import eval_fbk, power_test
from .solvable import FreeSolvableGroup, solvable_cp, solvable_pp
from .wreath import WreathProduct, right_iterated

logger = logging.getLogger(__name__)

SCALES = ("quick", "full")

DEFAULT_ALGORITHMS: Dict[str, Callable[..., Any]] = {
    "conjugacy_test": conjugacy_test,
    "power_test": power_test,
    "eval_fbk": eval_fbk,
    "pi_product": pi_product,
    "crt_solve": crt_solve,
    "solvable_cp": solvable_cp,
    "solvable_pp": solvable_pp,
}


class CheckResult(BaseModel):
    name: str
    passed: bool
    instances: int = 0
    detail: str = ""
    time_ms: float = 0.0


class SelftestReport(BaseModel):
    scale: str
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed(self) -> int:
        return sum(1 for check in self.checks if not check.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status}  {check.name} ({check.instances} instances, {check.time_ms:.0f} ms)"
            lines.append(f"{line}: {check.detail}" if check.detail else line)
        lines.append(f"{self.passed} passed, {self.failed} failed")
        return "\n".join(lines)


class CheckFailed(Exception):
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _element(group: Group, rng: Random, max_length: int) -> Any:
    return group.evaluate(random_word(group, rng, max_length))


def _power_by_multiplication(group: Group, x: Any, k: int) -> Any:
    step = x if k >= 0 else group.invert(x)
    result = group.identity
    for _ in range(abs(k)):
        result = group.multiply(result, step)
    return result


def _brute_order(group: Group, x: Any, limit: int) -> Optional[int]:
    power = x
    for k in range(1, limit + 1):
        if power == group.identity:
            return k
        power = group.multiply(power, x)
    return None


class Selftest:
    def __init__(self, scale: str, algorithms: Dict[str, Callable[..., Any]], seed: int = 20240601):
        self.scale = scale
        self.full = scale == "full"
        self.algorithms = algorithms
        self.rng = Random(seed)

    def count(self, quick: int, full: int) -> int:
        return full if self.full else quick

    def finite_exhaustive(self) -> int:
        """conjugacy_test and power_test against brute force on small finite wreath products"""
        conjugacy, power = self.algorithms["conjugacy_test"], self.algorithms["power_test"]
        groups = [WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (3,)))]
        if self.full:
            groups.append(WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (4,))))

        instances = 0
        for group in groups:
            ball = enumerate_finite(group)
            elements = [element for element, _ in ball.elements]
            for x in elements:
                conjugates = brute_conjugacy_class(group, x, ball)
                for y in elements:
                    expected = y in conjugates
                    answer = conjugacy(group, x, y)
                    label = f"{group.render(x)}, {group.render(y)}"
                    _expect(answer.conjugate == expected, f"cp({label}) in {group.describe()}")
                    if answer.has_witness:
                        B = group.top_group
                        d = answer.witness_top
                        _expect(B.multiply(d, x.top) == B.multiply(y.top, d), "witness does not satisfy db = cd")
                    k = power(group, x, y)
                    _expect(k == brute_pp(group, x, y, len(elements)), f"pp({label})")
                    instances += 1
        return instances

    def lamplighter(self) -> int:
        """conjugacy_test against the closed form on Z/2 wr Z"""
        group = WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(1))
        conjugacy = self.algorithms["conjugacy_test"]
        total = self.count(150, 1000)
        for _ in range(total):
            x = _element(group, self.rng, 12)
            if self.rng.random() < 0.5:
                y = group.conjugate(x, _element(group, self.rng, 12))
            else:
                y = _element(group, self.rng, 12)
            expected = lamplighter_cp(group, x, y)
            _expect(conjugacy(group, x, y).conjugate == expected, f"cp({group.render(x)}, {group.render(y)})")
        return total

    def power_soundness(self) -> int:
        """power_test(x, x^k) returns a valid, minimal exponent"""
        power = self.algorithms["power_test"]
        groups = [
            WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(1)),
            WreathProduct(AbelianGroup(1), AbelianGroup(1)),
            WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (4,))),
        ]
        total = self.count(40, 300)
        for index in range(total):
            group = groups[index % len(groups)]
            x = _element(group, self.rng, 8)
            k = self.rng.randint(-16, 16)
            y = _power_by_multiplication(group, x, k)
            answer = power(group, x, y)
            _expect(answer is not None, f"pp({group.render(x)}, x^{k}) found no solution")
            _expect(group.power(x, answer) == y, f"pp({group.render(x)}, x^{k}) returned {answer}")
            order = _brute_order(group, x, 64)
            if order is not None:
                _expect(0 <= answer < order, f"pp({group.render(x)}, x^{k}) = {answer} is not minimal")
        return total

    def window_products(self) -> int:
        """eval_fbk against the k-fold product f^(b^(k-1)) ... f^b f"""
        evaluate = self.algorithms["eval_fbk"]
        A = WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (2,)))
        group = WreathProduct(A, AbelianGroup(1))
        nontrivial = [a for a, _ in enumerate_finite(A).elements if a != A.identity]
        total = self.count(100, 500)
        for _ in range(total):
            exponents = sorted(self.rng.sample(range(20), self.rng.randint(0, 5)))
            row = tuple((e, self.rng.choice(nontrivial)) for e in exponents)
            x = group.element((1,), {(e,): a for e, a in row})
            k = self.rng.randint(1, 32)
            power = _power_by_multiplication(group, x, k)
            for ell in range(-2, 20 + k + 2):
                expected = power.value((ell,), A.identity)
                _expect(evaluate(A, row, k, ell) == expected, f"eval_fbk(row={row}, k={k}, l={ell})")
        return total

    def gadgets(self) -> int:
        """Conjugacy of the gadget pairs decides cyclic subgroup and submonoid membership in B"""
        conjugacy = self.algorithms["conjugacy_test"]
        total = self.count(40, 200)
        nonabelian = WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (2,)))
        a1, a2 = nonabelian.generator(0), nonabelian.generator(1)
        for index in range(total):
            B = AbelianGroup(1) if index % 2 == 0 else AbelianGroup(0, (6,))
            b, c = _element(B, self.rng, 8), _element(B, self.rng, 8)
            exponent = brute_pp(B, b, c, 16)
            _expect(B.csgmp(b, c) == (exponent is not None), f"csgmp({b}, {c}) disagrees with brute force")
            _expect(B.csmmp(b, c) == (exponent is not None and exponent >= 0), f"csmmp({b}, {c})")

            lamps = WreathProduct(AbelianGroup(0, (2,)), B)
            x, y = csgmp_gadget(lamps, b, c, (1,))
            _expect(conjugacy(lamps, x, y).conjugate == B.csgmp(b, c), f"csgmp gadget for ({b}, {c})")

            group = WreathProduct(nonabelian, B)
            x, y = csmmp_gadget(group, b, c, a1, a2)
            _expect(conjugacy(group, x, y).conjugate == B.csmmp(b, c), f"csmmp gadget for ({b}, {c})")
        return total

    def representative_independence(self) -> int:
        """pi-products do not depend on the orbit representative or the shift within <b>"""
        product = self.algorithms["pi_product"]
        A = WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (2,)))
        infinite = WreathProduct(A, AbelianGroup(2))
        finite = WreathProduct(A, AbelianGroup(0, (6,)))
        total = self.count(100, 500)
        for index in range(total):
            group = infinite if index % 2 == 0 else finite
            B = group.top_group
            f = _element(group, self.rng, 10).support
            b = _element(B, self.rng, 3)
            if group is infinite and b == B.identity:
                b = B.generator(0)
            r, d = _element(B, self.rng, 4), _element(B, self.rng, 4)
            q, p = self.rng.randint(-4, 4), self.rng.randint(-4, 4)
            before = product(group, f, r, b, d)
            after = product(group, f, B.multiply(r, B.power(b, q)), b, B.multiply(d, B.power(b, p)))
            if group is infinite:
                _expect(before == after, f"pi-product changed under r -> r b^{q}, d -> d b^{p}")
            else:
                _expect(A.cp(before, after), f"pi-products not conjugate under r -> r b^{q}, d -> d b^{p}")
        return total

    def free_solvable(self) -> int:
        """Magnus embedding: homomorphism, relators, free witnesses, conjugacy and powers"""
        cp, pp = self.algorithms["solvable_cp"], self.algorithms["solvable_pp"]
        instances = 0
        for degree in (2, 3):
            group = FreeSolvableGroup(degree, 2)
            for _ in range(self.count(20, 500)):
                u, v = random_word(group, self.rng, 10), random_word(group, self.rng, 10)
                _expect(group.evaluate(u + v) == group.multiply(group.evaluate(u), group.evaluate(v)), "homomorphism")
                instances += 1

            for _ in range(self.count(10, 100)):
                _expect(group.wp(self._iterated_commutator(group, degree)), f"{degree}-fold commutator is nontrivial")
                instances += 1

            x1, x2 = group.generator(0), group.generator(1)
            _expect(not group.wp(x1) and not group.wp(group.commutator(x1, x2)), "free witnesses vanish")
            _expect(not cp(group, (Letter(0),), (Letter(1),)).conjugate, "x1 and x2 reported conjugate")

            for _ in range(self.count(3, 20) if degree == 3 else self.count(6, 50)):
                w, z = random_word(group, self.rng, 6), random_word(group, self.rng, 6)
                _expect(cp(group, w, invert_word(z) + w + z).conjugate, "w and z^-1 w z reported non-conjugate")
                instances += 1

            for _ in range(self.count(6, 100) if degree == 2 else self.count(3, 30)):
                w = random_word(group, self.rng, 6)
                if group.wp(group.evaluate(w)):
                    continue
                k = self.rng.randint(-8, 8)
                power = w * k if k >= 0 else invert_word(w) * -k
                _expect(pp(group, w, power) == k, f"solvable_pp(w, w^{k})")
                instances += 1

        witness = FreeSolvableGroup(3, 3)
        x1, x2, x3 = (witness.generator(i) for i in range(3))
        inner = witness.commutator(witness.commutator(x1, x2), witness.commutator(x1, x3))
        _expect(not witness.wp(inner), "[[x1,x2],[x1,x3]] vanishes in S(3,3)")
        return instances

    def _iterated_commutator(self, group: FreeSolvableGroup, depth: int) -> Any:
        if depth == 0:
            return _element(group, self.rng, 4)
        left = self._iterated_commutator(group, depth - 1)
        return group.commutator(left, self._iterated_commutator(group, depth - 1))

    def smoothness(self) -> int:
        """Element orders in 2-groups are powers of two and match brute force"""
        groups = [
            WreathProduct(AbelianGroup(0, (2,)), AbelianGroup(0, (4,))),
            right_iterated(AbelianGroup(0, (2,)), AbelianGroup(0, (2,)), 2),
        ]
        instances = 0
        for group in groups:
            elements = [element for element, _ in enumerate_finite(group).elements]
            for x in elements:
                order = group.order(x)
                _expect(isinstance(order, int) and order & (order - 1) == 0, f"order {order} is not a power of 2")
                _expect(order == _brute_order(group, x, len(elements)), f"order({group.render(x)})")
                instances += 1
        return instances

    def baumslag_solitar(self) -> int:
        """BS(1,2): powers are recovered, non-powers rejected"""
        group = BaumslagSolitarGroup(2)
        total = self.count(60, 200)
        for _ in range(total):
            x = _element(group, self.rng, 6)
            k = self.rng.randint(-12, 12)
            y = _power_by_multiplication(group, x, k)
            answer = group.pp(x, y)
            _expect(answer is not None and group.power(x, answer) == y, f"pp({group.render(x)}, x^{k}) = {answer}")

            z = _element(group, self.rng, 6)
            answer = group.pp(x, z)
            expected = brute_pp(group, x, z, 32)
            if answer is None:
                _expect(expected is None, f"pp({group.render(x)}, {group.render(z)}) missed {expected}")
            else:
                _expect(group.power(x, answer) == z, f"pp({group.render(x)}, {group.render(z)}) = {answer} is wrong")
        return 2 * total

    def congruences(self) -> int:
        """crt_solve against a scan over one period"""
        solve = self.algorithms["crt_solve"]
        total = self.count(200, 1000)
        for _ in range(total):
            system = [
                Congruence(self.rng.randrange(modulus), modulus)
                for modulus in (self.rng.randint(1, 12) for _ in range(self.rng.randint(1, 3)))
            ]
            period = lcm(*(c.modulus for c in system))
            solutions = [value for value in range(period) if all(c.contains(value) for c in system)]
            answer = solve(system, 64)
            if not solutions:
                _expect(answer is None, f"crt_solve({system}) = {answer}, expected no solution")
            else:
                _expect(answer == Congruence(solutions[0], period), f"crt_solve({system}) = {answer}")
        return total

    def checks(self) -> List[Callable[[], int]]:
        return [
            self.finite_exhaustive,
            self.lamplighter,
            self.power_soundness,
            self.window_products,
            self.gadgets,
            self.representative_independence,
            self.free_solvable,
            self.smoothness,
            self.baumslag_solitar,
            self.congruences,
        ]


def run_selftest(
    scale: str = "quick",
    overrides: Optional[Dict[str, Callable[..., Any]]] = None,
    only: Optional[Sequence[str]] = None,
) -> SelftestReport:
    """Run the acceptance checks and collect the results.

    Args:
        scale: "quick" or "full"
        overrides: Replacement implementations keyed by algorithm name
        only: Names of the checks to run (all when omitted)

    Returns:
        SelftestReport; report.ok is True iff every check passed
    """
    if scale not in SCALES:
        raise ValueError(f"Unknown selftest scale {scale!r}")

    selftest = Selftest(scale, {**DEFAULT_ALGORITHMS, **(overrides or {})})
    report = SelftestReport(scale=scale)
    for check in selftest.checks():
        name = check.__name__
        if only is not None and name not in only:
            continue
        started = time.perf_counter()
        try:
            instances = check()
            result = CheckResult(name=name, passed=True, instances=instances)
        except CheckFailed as e:
            result = CheckResult(name=name, passed=False, detail=str(e))
        except Exception as e:
            logger.exception(f"Check {name} raised")
            result = CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
        result.time_ms = (time.perf_counter() - started) * 1000
        logger.info(f"{name}: {'passed' if result.passed else 'FAILED'} in {result.time_ms:.0f} ms")
        report.checks.append(result)
    return report
