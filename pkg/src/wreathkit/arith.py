"""
Exact integer helpers: smooth factorisation and congruence systems.

Moduli are either positive integers or ``INFINITY``; a congruence modulo infinity means
plain equality.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import primerange
from sympy.ntheory.modular import crt

from .errors import NotSmoothError

logger = logging.getLogger(__name__)


class Unbounded(Enum):
    """The infinite order / modulus"""

    INFINITY = "infinity"

    def __str__(self) -> str:
        return "infinity"


INFINITY = Unbounded.INFINITY

Modulus = Union[int, Unbounded]


@dataclass(frozen=True)
class Congruence:
    """The set {x : x ≡ residue (mod modulus)}"""

    residue: int
    modulus: Modulus

    def __post_init__(self):
        if self.modulus is INFINITY:
            return
        if self.modulus < 1:
            raise ValueError(f"Modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def is_exact(self) -> bool:
        return self.modulus is INFINITY

    def contains(self, value: int) -> bool:
        if self.modulus is INFINITY:
            return value == self.residue
        return (value - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class SmoothFactorization:
    number: int
    factors: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def value(self) -> int:
        result = 1
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result


@lru_cache(maxsize=None)
def _primes_up_to(beta: int) -> Tuple[int, ...]:
    return tuple(int(p) for p in primerange(2, beta + 1))


def factor_smooth(n: int, beta: int) -> SmoothFactorization:
    """Factor n by trial division with the primes up to beta.

    Args:
        n: Number to factor, n >= 1
        beta: Smoothness bound, beta >= 2

    Returns:
        SmoothFactorization with primes in increasing order

    Raises:
        NotSmoothError: n has a prime factor larger than beta
    """
    if n < 1:
        raise ValueError(f"Only positive numbers can be factored, got {n}")

    remaining = n
    factors: List[Tuple[int, int]] = []
    for prime in _primes_up_to(beta):
        if remaining == 1:
            break
        exponent = 0
        while remaining % prime == 0:
            remaining //= prime
            exponent += 1
        if exponent:
            factors.append((prime, exponent))

    if remaining != 1:
        raise NotSmoothError(n, beta, remaining)
    return SmoothFactorization(n, tuple(factors))


def _prime_power_constraints(
    congruences: Iterable[Congruence], beta: int
) -> Optional[Dict[int, Tuple[int, int]]]:
    """Split finite congruences into one constraint x ≡ r (mod p^e) per prime, strongest kept.

    Returns None if two constraints for the same prime contradict each other.
    """
    strongest: Dict[int, Tuple[int, int]] = {}
    for congruence in congruences:
        for prime, exponent in factor_smooth(congruence.modulus, beta).factors:
            modulus = prime**exponent
            residue = congruence.residue % modulus
            if prime not in strongest:
                strongest[prime] = (exponent, residue)
                continue
            known_exponent, known_residue = strongest[prime]
            common = prime ** min(exponent, known_exponent)
            if residue % common != known_residue % common:
                return None
            if exponent > known_exponent:
                strongest[prime] = (exponent, residue)
    return strongest


def crt_solve(congruences: List[Congruence], beta: int) -> Optional[Congruence]:
    """Solve a system of congruences with smooth (or infinite) moduli.

    Args:
        congruences: Nonempty list of constraints
        beta: Smoothness bound every finite modulus must satisfy

    Returns:
        The whole solution set as one Congruence (modulo the lcm of the finite moduli, or
        an exact value when some modulus is infinite), or None if the system is inconsistent

    Raises:
        NotSmoothError: a finite modulus is not beta-smooth
    """
    if not congruences:
        raise ValueError("crt_solve needs at least one congruence")

    exact = [c for c in congruences if c.is_exact]
    finite = [c for c in congruences if not c.is_exact]

    strongest = _prime_power_constraints(finite, beta)
    if strongest is None:
        logger.debug(f"Inconsistent prime-power constraints in {congruences}")
        return None

    if exact:
        value = exact[0].residue
        if any(c.residue != value for c in exact[1:]):
            return None
        if all(value % prime**exponent == residue for prime, (exponent, residue) in strongest.items()):
            return Congruence(value, INFINITY)
        return None

    if not strongest:
        return Congruence(0, 1)

    moduli = [prime**exponent for prime, (exponent, _) in sorted(strongest.items())]
    residues = [residue for _, (_, residue) in sorted(strongest.items())]
    solution = crt(moduli, residues, check=False)
    if solution is None:
        return None
    residue, modulus = solution
    return Congruence(int(residue), int(modulus))


def lcm_modulus(left: Modulus, right: Modulus) -> Modulus:
    """Least common multiple of two orders, infinite if either is."""
    if left is INFINITY or right is INFINITY:
        return INFINITY
    return math.lcm(left, right)
