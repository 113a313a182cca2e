"""Exact integer and modular arithmetic used throughout the package.

Everything here works on plain Python ints.  Inputs are small (desk scale),
so divisor enumeration and prime-power detection use trial division.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple, Optional

__all__ = [
    "PrimePower",
    "divisors",
    "tau",
    "pow_mod",
    "mult_order",
    "geometric_sum_mod",
    "is_prime_power",
    "is_prime",
    "gcd_with_power_minus_one",
]


class PrimePower(NamedTuple):
    p: int
    e: int

    @property
    def value(self) -> int:
        return self.p**self.e


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _require_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def tau(n: int) -> int:
    """Number of positive divisors of ``n``."""
    return len(divisors(n))


def pow_mod(base: int, exp: int, modulus: int) -> int:
    """``base**exp mod modulus`` as a residue in ``[0, modulus)``."""
    _require_positive(modulus, "modulus")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, modulus)


def mult_order(r: int, m: int) -> int:
    """Smallest ``d >= 1`` with ``r**d == 1 (mod m)``.

    Returns 1 for ``m == 1``.  Raises ``ValueError`` when ``r`` is not a unit
    modulo ``m``.
    """
    _require_positive(m, "m")
    if m == 1:
        return 1
    if gcd(r, m) != 1:
        raise ValueError(f"r={r} is not invertible modulo m={m}")
    r %= m
    d, acc = 1, r
    while acc != 1:
        acc = acc * r % m
        d += 1
    return d


def geometric_sum_mod(r: int, x: int, k: int, modulus: int) -> int:
    """Return ``sum(r**(j*x) for j in range(k)) mod modulus``.

    This is the exponent ``(r**(k*x) - 1) / (r**x - 1)`` of the power law,
    evaluated without dividing: ``r**x - 1`` is usually not invertible.
    """
    _require_positive(modulus, "modulus")
    if k < 0 or x < 0:
        raise ValueError("k and x must be non-negative")
    step = pow(r, x, modulus)
    term = 1 % modulus
    total = 0
    for _ in range(k):
        total += term
        term = term * step % modulus
    return total % modulus


def is_prime_power(n: int) -> Optional[PrimePower]:
    """``(p, e)`` with ``n == p**e`` and ``e >= 1``, else ``None``.

    ``1`` is deliberately not a prime power here.
    """
    _require_positive(n)
    if n == 1:
        return None
    p = _smallest_prime_factor(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return PrimePower(p, e) if n == 1 else None


def is_prime(n: int) -> bool:
    return n >= 2 and _smallest_prime_factor(n) == n


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return f
    return n


def gcd_with_power_minus_one(m: int, r: int, k: int) -> int:
    """``gcd(m, r**k - 1)`` computed through ``r**k mod m``.

    Uses ``gcd(m, 0) == m``, so the value is ``m`` whenever ``r**k == 1 (mod m)``.
    """
    return gcd(m, (pow_mod(r, k, m) - 1) % m)
