"""
The power problem in wreath products.

For x = (b, f) the power x^k is (b^k, f^(b,k)) with f^(b,k) = f^(b^(k-1)) ... f^b f. On a
coset t<b> with f(t b^e_1), ..., f(t b^e_n) at increasing exponents, the value of f^(b,k)
at t b^l is the ordered product of the values whose exponents fall in the window
[l - k + 1, l]. Solving x^k = y therefore reduces to B's power problem for the tops plus
a finite number of window evaluations per coset; when b has finite order K the remaining
freedom k = k0 + K m is pinned down by one congruence per breakpoint, merged with
crt_solve.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Set, Tuple

from .arith import Congruence, crt_solve
from .errors import KeyOutsideCosetsError
from .group import Group, PowerAnswer
from .wreath import Support, WreathElement, WreathProduct

logger = logging.getLogger(__name__)

CosetRow = Tuple[Tuple[int, Any], ...]


@dataclass(frozen=True)
class CosetDecomposition:
    """One row of (exponent, value) pairs per coset representative, exponents increasing"""

    reps: Tuple[Any, ...]
    rows: Tuple[CosetRow, ...]

    def row(self, index: int) -> CosetRow:
        return self.rows[index]


@dataclass(frozen=True)
class BreakpointList:
    """A function of l that equals values[i - 1] for boundaries[i - 1] < l <= boundaries[i].

    With a period K the boundaries span one period exactly (boundaries[-1] = boundaries[0] + K)
    and l is read modulo K.
    """

    boundaries: Tuple[int, ...]
    values: Tuple[Any, ...]
    period: Optional[int] = None

    def value_at(self, ell: int) -> Any:
        first, last = self.boundaries[0], self.boundaries[-1]
        if self.period is not None:
            ell = first + 1 + (ell - first - 1) % self.period
        elif not first < ell <= last:
            raise ValueError(f"{ell} lies outside ({first}, {last}]")
        return self.values[bisect_left(self.boundaries, ell) - 1]


def coset_reps(B: Group, f: Support, b: Any) -> List[Any]:
    """Keys of f that start a new <b>-coset, in support order."""
    reps: List[Any] = []
    for key, _ in f:
        if not any(B.csgmp(b, B.multiply(B.invert(rep), key)) for rep in reps):
            reps.append(key)
    return reps


def support_in_cosets(B: Group, g: Support, b: Any, reps: Sequence[Any]) -> bool:
    return all(any(B.csgmp(b, B.multiply(B.invert(rep), key)) for rep in reps) for key, _ in g)


def coset_decompose(B: Group, f: Support, b: Any, reps: Sequence[Any]) -> CosetDecomposition:
    """Write every support key as rep * b^e.

    Raises:
        KeyOutsideCosetsError: some key lies in none of the cosets rep<b>
    """
    rows: List[List[Tuple[int, Any]]] = [[] for _ in reps]
    inverses = [B.invert(rep) for rep in reps]
    for key, value in f:
        for index, inverse in enumerate(inverses):
            exponent = B.pp(b, B.multiply(inverse, key))
            if exponent is not None:
                rows[index].append((exponent, value))
                break
        else:
            raise KeyOutsideCosetsError(f"Key {B.render(key)} is outside the cosets of {len(reps)} representatives")
    return CosetDecomposition(tuple(reps), tuple(tuple(sorted(row, key=lambda item: item[0])) for row in rows))


def eval_fbk(A: Group, row: CosetRow, k: int, ell: int, period: Optional[int] = None) -> Any:
    """Value of f^(b,k) at t b^ell on the coset described by row.

    Args:
        A: Base group
        row: (exponent, value) pairs of f on the coset, exponents increasing
        k: Number of factors, 0 <= k (k <= period when a period is given)
        ell: Exponent to evaluate at
        period: Order of b when finite; exponents are then residues in [0, period)

    Returns:
        The product of the values whose exponents lie in [ell - k + 1, ell], in window order
    """
    start = ell - k + 1
    if period is None:
        return A.product(value for exponent, value in row if start <= exponent <= ell)

    hits = []
    for exponent, value in row:
        position = start + (exponent - start) % period
        if position <= ell:
            hits.append((position, value))
    hits.sort(key=lambda item: item[0])
    return A.product(value for _, value in hits)


def build_breakpoints(A: Group, row: CosetRow, k: int, period: int) -> BreakpointList:
    """BreakpointList of f^(b,k) over one period of a finite-order coset."""
    points = sorted(
        {(exponent - 1) % period for exponent, _ in row} | {(exponent + k - 1) % period for exponent, _ in row}
    )
    if k == 0 or not points:
        return BreakpointList((0, period), (A.identity,), period)
    boundaries = tuple(points) + (points[0] + period,)
    values = tuple(eval_fbk(A, row, k, gamma, period) for gamma in boundaries[1:])
    return BreakpointList(boundaries, values, period)


def _check_infinite_coset(A: Group, f_row: CosetRow, g_row: CosetRow, k: int) -> bool:
    """Whether f^(b,k) and g agree on one coset, for b of infinite order and k > 0."""
    for exponent, value in g_row:
        if eval_fbk(A, f_row, k, exponent) != value:
            return False

    g_exponents: Set[int] = {exponent for exponent, _ in g_row}
    exponents = [exponent for exponent, _ in f_row]
    values = [value for _, value in f_row]
    n = len(f_row)
    # cell (i, j) holds the l where the window covers exactly the entries i..j-1 (1-based)
    for i in range(1, n + 1):
        product = A.identity
        for j in range(i + 1, n + 2):
            product = A.multiply(product, values[j - 2])
            if A.wp(product):
                continue
            lo = exponents[j - 2]
            if i >= 2:
                lo = max(lo, exponents[i - 2] + k)
            hi = exponents[i - 1] + k - 1
            if j <= n:
                hi = min(hi, exponents[j - 1] - 1)
            if lo > hi:
                continue
            if hi - lo + 1 > len(g_exponents):
                return False
            if any(ell not in g_exponents for ell in range(lo, hi + 1)):
                return False
    return True


def _power_infinite(group: WreathProduct, x: WreathElement, y: WreathElement) -> PowerAnswer:
    A, B = group.base, group.top_group
    b = x.top

    k = B.pp(b, y.top)
    if k is None:
        return None
    if k < 0:
        answer = power_test(group, x, group.invert(y))
        return -answer if answer is not None else None
    if k == 0:
        return 0 if group.wp(y) else None

    reps = coset_reps(B, x.support, b)
    if not support_in_cosets(B, y.support, b, reps):
        logger.debug(f"Support of {group.render(y)} leaves the cosets of {group.render(x)}")
        return None
    f_dec = coset_decompose(B, x.support, b, reps)
    g_dec = coset_decompose(B, y.support, b, reps)

    for f_row, g_row in zip(f_dec.rows, g_dec.rows):
        if not _check_infinite_coset(A, f_row, g_row, k):
            return None
    return k


def _power_finite(group: WreathProduct, x: WreathElement, y: WreathElement, period: int) -> PowerAnswer:
    A, B = group.base, group.top_group
    b = x.top

    k0 = B.pp(b, y.top)
    if k0 is None:
        return None

    reps = coset_reps(B, x.support, b)
    if not support_in_cosets(B, y.support, b, reps):
        return None
    f_dec = coset_decompose(B, x.support, b, reps)
    g_dec = coset_decompose(B, y.support, b, reps)

    congruences: List[Congruence] = []
    for f_row, g_row in zip(f_dec.rows, g_dec.rows):
        full = build_breakpoints(A, f_row, period, period)
        partial = build_breakpoints(A, f_row, k0, period)
        target = build_breakpoints(A, g_row, 1, period)

        points = {gamma % period for gamma in full.boundaries}
        points |= {(gamma - k0) % period for gamma in partial.boundaries + target.boundaries}

        for ell in sorted(points):
            base = full.value_at(ell)
            wanted = A.multiply(target.value_at(ell + k0), A.invert(partial.value_at(ell + k0)))
            exponent = A.pp(base, wanted)
            if exponent is None:
                logger.debug(f"No power of {A.render(base)} equals {A.render(wanted)}")
                return None
            congruences.append(Congruence(exponent, A.order(base)))

    if not congruences:
        return k0
    solution = crt_solve(congruences, group.beta)
    if solution is None:
        return None
    return k0 + period * solution.residue


def power_test(group: WreathProduct, x: WreathElement, y: WreathElement) -> PowerAnswer:
    """Some k with x^k = y, or None.

    When x has finite order the answer is the smallest non-negative k.

    Raises:
        NotSmoothError: a congruence modulus from A is not smooth
    """
    order = group.top_group.order(x.top)
    if isinstance(order, int):
        return _power_finite(group, x, y, order)
    return _power_infinite(group, x, y)
