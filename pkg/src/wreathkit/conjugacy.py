"""
Conjugacy in wreath products.

Two elements (b, f) and (c, g) are compared through their pi-products: for t, d in B the
pi-product of f is the ordered product of the values f(key) over the keys with
t^-1 key d in <b>, arranged by increasing exponent. Conjugacy holds exactly when b and c
are conjugate and the pi-products match for some d with db = cd.
"""

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Any, Callable, Dict, List, Optional, Tuple

from .config import get_settings
from .errors import CommutingPairError, UnsupportedError
from .wreath import Support, WreathElement, WreathProduct

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyAnswer:
    """Verdict of conjugacy_test; witness_top is a d with db = cd when one was found"""

    conjugate: bool
    witness_top: Optional[Any] = None

    @property
    def has_witness(self) -> bool:
        return self.conjugate and self.witness_top is not None


NOT_CONJUGATE = ConjugacyAnswer(False)


def pi_product(group: WreathProduct, f: Support, t: Any, b: Any, d: Optional[Any] = None) -> Any:
    """Ordered product of the values of f along the <b>-orbit through t, shifted by d.

    Args:
        group: The wreath product f lives in
        f: Support of the function
        t: Orbit representative in B
        b: Generator of the cyclic subgroup in B
        d: Shift in B (identity when omitted)

    Returns:
        Element of A
    """
    A, B = group.base, group.top_group
    if d is None:
        d = B.identity
    t_inverse = B.invert(t)

    def offset(key: Any) -> Any:
        return B.multiply(B.multiply(t_inverse, key), d)

    if A.is_abelian:
        return A.product(value for key, value in f if B.csgmp(b, offset(key)))

    if B.is_torsion_free and not B.wp(b):
        hits = [(offset(key), value) for key, value in f]
        hits = [(position, value) for position, value in hits if B.csgmp(b, position)]

        def compare(left: Tuple[Any, Any], right: Tuple[Any, Any]) -> int:
            if left[0] == right[0]:
                return 0
            return -1 if B.csmmp(b, B.multiply(B.invert(left[0]), right[0])) else 1

        hits.sort(key=cmp_to_key(compare))
        return A.product(value for _, value in hits)

    exponents: List[Tuple[int, Any]] = []
    for key, value in f:
        k = B.pp(b, offset(key))
        if k is not None:
            exponents.append((k, value))
    exponents.sort(key=lambda item: item[0])
    return A.product(value for _, value in exponents)


def _translates(group: WreathProduct, f: Support, g: Support) -> List[Any]:
    """All beta_i beta_j^-1 b_k for keys beta of g and b of f, deduplicated, in canonical order."""
    B = group.top_group
    result = set()
    for beta_i, _ in g:
        for beta_j, _ in g:
            step = B.multiply(beta_i, B.invert(beta_j))
            for b_k, _ in f:
                result.add(B.multiply(step, b_k))
    return sorted(result)


def _case_one_witness(group: WreathProduct, x: WreathElement, y: WreathElement, witness_radius: int) -> Optional[Any]:
    B = group.top_group
    b, c = x.top, y.top

    candidates = [B.identity]
    candidates.extend(B.multiply(B.invert(beta), key) for beta in y.keys() for key in x.keys())
    for d in candidates:
        if B.multiply(d, b) == B.multiply(c, d):
            return d

    radius = min(witness_radius, get_settings().radius_cap)
    if radius > 0:
        from .oracle import FoundConjugator, brute_cp

        search = brute_cp(B, b, c, radius)
        if isinstance(search, FoundConjugator):
            return B.invert(B.evaluate(search.word))
    logger.debug(f"No witness for {group.render(x)} ~ {group.render(y)} found")
    return None


def conjugacy_test(
    group: WreathProduct, x: WreathElement, y: WreathElement, witness_radius: int = 0
) -> ConjugacyAnswer:
    """Decide whether x and y are conjugate in group.

    Args:
        group: Wreath product whose factors support conjugacy and power queries
        x: First element (b, f)
        y: Second element (c, g)
        witness_radius: Radius of the bounded search in B used for a witness when no candidate
            applies; 0 disables the search

    Returns:
        ConjugacyAnswer, with witness_top d satisfying db = cd whenever it is set

    Raises:
        UnsupportedError: A or B cannot decide conjugacy
    """
    if not group.supports_conjugacy:
        raise UnsupportedError(f"Conjugacy is not available in {group.describe()}")

    A, B = group.base, group.top_group
    b, f = x.top, x.support
    c, g = y.top, y.support

    if not B.cp(b, c):
        return NOT_CONJUGATE

    pi_cache: Dict[Any, Any] = {}

    def pi_f(t: Any) -> Any:
        if t not in pi_cache:
            pi_cache[t] = pi_product(group, f, t, b)
        return pi_cache[t]

    nontrivial = [t for t in x.keys() if not A.wp(pi_f(t))]

    if not nontrivial:
        if not all(A.wp(pi_product(group, g, s, c)) for s in y.keys()):
            return NOT_CONJUGATE
        return ConjugacyAnswer(True, _case_one_witness(group, x, y, witness_radius))

    translates = _translates(group, f, g)
    matches: Callable[[Any, Any], bool] = A.cp if B.has_finite_order(b) else (lambda u, v: u == v)
    logger.debug(f"Conjugacy: {len(nontrivial)} nontrivial orbits, {len(translates)} test points")

    tried = set()
    for t in nontrivial:
        for beta in y.keys():
            d = B.multiply(B.invert(beta), t)
            if d in tried:
                continue
            tried.add(d)
            if B.multiply(d, b) != B.multiply(c, d):
                continue
            if all(matches(pi_f(point), pi_product(group, g, point, b, d)) for point in translates):
                return ConjugacyAnswer(True, d)

    return NOT_CONJUGATE


def csgmp_gadget(group: WreathProduct, b: Any, c: Any, a: Any) -> Tuple[WreathElement, WreathElement]:
    """A pair that is conjugate iff c lies in the cyclic subgroup generated by b."""
    A, B = group.base, group.top_group
    if A.wp(a):
        raise ValueError("The gadget needs a nontrivial value a")
    values = {B.identity: a}
    values[c] = A.multiply(values.get(c, A.identity), A.invert(a))
    return group.lift(b), group.element(b, values)


def csmmp_gadget(group: WreathProduct, b: Any, c: Any, a1: Any, a2: Any) -> Tuple[WreathElement, WreathElement]:
    """A pair that is conjugate iff c lies in the cyclic submonoid generated by b.

    Raises:
        CommutingPairError: a1 and a2 commute
    """
    A, B = group.base, group.top_group
    if A.multiply(a1, a2) == A.multiply(a2, a1):
        raise CommutingPairError(f"{A.render(a1)} and {A.render(a2)} commute in {A.describe()}")
    values = {B.identity: a1}
    values[c] = A.multiply(values.get(c, A.identity), a2)
    return group.element(b, {B.identity: A.multiply(a1, a2)}), group.element(b, values)
