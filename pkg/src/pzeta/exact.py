"""Exact arithmetic: Bernoulli numbers, even-argument zeta values, and
fixed-length partition zeta values as rational multiples of powers of pi.

Every computation in this module is exact; no floating point enters any
intermediate.  Rationals are stdlib ``fractions.Fraction`` values, which are
always reduced to lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ExponentMismatch
from .partitions import enumerate_partitions_of_size

# Alias documenting the exact-rational contract of this module's interfaces.
BigRational = Fraction


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as "num/den" in lowest terms, e.g. "-7/360"."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer string) into an exact rational."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class PiPower:
    """Exact value ``coeff * pi**exponent`` with a nonnegative even exponent.

    Multiplication adds exponents; addition is defined only between equal
    exponents and raises ExponentMismatch otherwise (such a mismatch is a
    caller bug, never silently coerced).
    """

    coeff: Fraction
    exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.exponent < 0 or self.exponent % 2 != 0:
            raise ValueError(f"pi exponent must be a nonnegative even integer, got {self.exponent}")

    def __mul__(self, other):
        if isinstance(other, PiPower):
            return PiPower(self.coeff * other.coeff, self.exponent + other.exponent)
        if isinstance(other, (int, Fraction)):
            return PiPower(self.coeff * other, self.exponent)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PiPower":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponentiation requires an integer n >= 0")
        return PiPower(self.coeff**n, self.exponent * n)

    def __add__(self, other):
        if not isinstance(other, PiPower):
            return NotImplemented
        if self.exponent != other.exponent:
            raise ExponentMismatch(
                f"cannot add a pi^{self.exponent} term to a pi^{other.exponent} term")
        return PiPower(self.coeff + other.coeff, self.exponent)

    def to_float(self) -> float:
        return float(self.coeff) * math.pi**self.exponent

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "pi_power": self.exponent}


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_n_max, convention B_1 = -1/2.

    Computed from the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0
    and cached for the lifetime of the process (the cache is lock-guarded,
    so concurrent callers are safe).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n_max:
            n = len(_bernoulli_cache)
            acc = sum(math.comb(n + 1, j) * _bernoulli_cache[j] for j in range(n))
            _bernoulli_cache.append(-acc / (n + 1))
        return _bernoulli_cache[: n_max + 1]


@lru_cache(maxsize=None)
def zeta_even_exact(two_m: int) -> PiPower:
    """Exact zeta value at a positive even integer argument 2m.

    Returns (-1)^(m+1) (2 pi)^(2m) B_{2m} / (2 (2m)!) as a PiPower, e.g.
    zeta_even_exact(2) = (1/6) pi^2.  Odd or nonpositive arguments are
    rejected.
    """
    if two_m < 2 or two_m % 2 != 0:
        raise ValueError(f"argument must be a positive even integer, got {two_m}")
    m = two_m // 2
    b = bernoulli_numbers(two_m)[two_m]
    coeff = (-1) ** (m + 1) * (2**two_m) * b / (2 * math.factorial(two_m))
    return PiPower(coeff, two_m)


def partition_zeta_exact(m: int, k: int) -> PiPower:
    """Fixed-length partition zeta value at even argument s = 2m, exactly.

    Sums, over the partitions of k, the exact products
    zeta(2m)^{m_1} zeta(4m)^{m_2} ... zeta(2mk)^{m_k} divided by
    N(lambda) * m_1! * ... * m_k!; the result is a rational multiple of
    pi^(2mk).  k = 0 gives 1 by convention.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    # Every term carries the same pi exponent 2mk; starting the sum there
    # makes any deviation raise ExponentMismatch instead of passing silently.
    total = PiPower(Fraction(0), 2 * m * k)
    for lam in enumerate_partitions_of_size(k):
        term = PiPower(Fraction(1), 0)
        denom = lam.norm()
        for j, mj in lam.multiplicities().items():
            term = term * zeta_even_exact(2 * m * j) ** mj
            denom *= math.factorial(mj)
        total = total + term * Fraction(1, denom)
    return total


def zeta2_family_coefficient(k: int) -> Fraction:
    """Rational ratio between the length-k partition zeta value at s = 2 and
    zeta(2k): returns (2^(2k-1) - 1) / 2^(2k-2), defined for k >= 1.

    Examples: k=1 -> 1, k=2 -> 7/4, k=5 -> 511/256.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(2 ** (2 * k - 1) - 1, 2 ** (2 * k - 2))
