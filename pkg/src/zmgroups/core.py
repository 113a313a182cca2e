"""Zassenhaus metacyclic groups ZM(m, n, r) and their element arithmetic.

The group is ``<a, b | a^m = b^n = 1, b^-1 a b = a^r>``.  Every element has
a unique normal form ``b^x a^y`` with ``0 <= x < n`` and ``0 <= y < m``; it is
stored as the pair ``GroupElement(x, y)``.

The product law is ``(x1, y1) * (x2, y2) = (x1 + x2, r^x2 * y1 + y2)``, from
which closed forms for powers, inverses and conjugates follow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

from .numtheory import geometric_sum_mod, mult_order, pow_mod

__all__ = [
    "WORD_BOUND",
    "InvalidTripleError",
    "ZmTriple",
    "GroupElement",
    "validate_triple",
    "identity",
    "elem_mul",
    "elem_pow",
    "elem_inv",
    "conjugate",
]

#: Largest supported group order ``m * n``.
WORD_BOUND = 2**31


class InvalidTripleError(ValueError):
    """Raised for parameters that do not define a ZM-group.

    ``condition`` is one of ``"nonpositive"``, ``"negative_r"``,
    ``"gcd_m_n"``, ``"gcd_m_r_minus_1"``, ``"r_pow_n"`` or ``"too_large"``.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


class GroupElement(NamedTuple):
    """The element ``b^x a^y``."""

    x: int
    y: int

    def __str__(self) -> str:
        return f"α({self.x},{self.y})"


@dataclass(frozen=True)
class ZmTriple:
    """Validated parameters of ZM(m, n, r).

    ``r`` is stored reduced modulo ``m`` (so ``r == 0`` when ``m == 1``) and
    ``d`` is the multiplicative order of ``r`` modulo ``m``.
    """

    m: int
    n: int
    r: int
    d: int = field(init=False, compare=False)

    def __post_init__(self):
        m, n, r = self.m, self.n, self.r
        if m < 1 or n < 1:
            raise InvalidTripleError(
                "nonpositive", f"m and n must be positive (got m={m}, n={n})"
            )
        if r < 0:
            raise InvalidTripleError("negative_r", f"r must be non-negative (got r={r})")
        if m * n > WORD_BOUND:
            raise InvalidTripleError(
                "too_large", f"group order m*n={m * n} exceeds the supported bound 2^31"
            )
        r %= m
        object.__setattr__(self, "r", r)
        if gcd(m, n) != 1:
            raise InvalidTripleError("gcd_m_n", f"gcd(m,n) = {gcd(m, n)} ≠ 1")
        g = gcd(m, (r - 1) % m)
        if g != 1:
            raise InvalidTripleError("gcd_m_r_minus_1", f"gcd(m,r-1) = {g} ≠ 1")
        if pow_mod(r, n, m) != 1 % m:
            raise InvalidTripleError("r_pow_n", f"r^n ≢ 1 (mod m): {r}^{n} ≡ {pow_mod(r, n, m)}")
        d = mult_order(r, m)
        assert n % d == 0, (m, n, r, d)
        object.__setattr__(self, "d", d)

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def is_cyclic(self) -> bool:
        return self.m == 1

    def element(self, x: int, y: int) -> GroupElement:
        """``b^x a^y`` with both exponents reduced into range."""
        return GroupElement(x % self.n, y % self.m)

    @property
    def a(self) -> GroupElement:
        return GroupElement(0, 1 % self.m)

    @property
    def b(self) -> GroupElement:
        return GroupElement(1 % self.n, 0)

    def __str__(self) -> str:
        return f"ZM({self.m},{self.n},{self.r})"


def validate_triple(m: int, n: int, r: int) -> ZmTriple:
    """Check the ZM conditions and return the canonical triple.

    >>> validate_triple(7, 3, 2).d
    3
    """
    return ZmTriple(m, n, r)


def identity(t: ZmTriple) -> GroupElement:
    return GroupElement(0, 0)


def _check(t: ZmTriple, g: GroupElement) -> None:
    if not (0 <= g[0] < t.n and 0 <= g[1] < t.m):
        raise ValueError(f"{g!r} is not a normal-form element of {t}")


def elem_mul(t: ZmTriple, g: GroupElement, h: GroupElement) -> GroupElement:
    _check(t, g)
    _check(t, h)
    x1, y1 = g
    x2, y2 = h
    return GroupElement((x1 + x2) % t.n, (pow(t.r, x2, t.m) * y1 + y2) % t.m)


def elem_inv(t: ZmTriple, g: GroupElement) -> GroupElement:
    # r^-x is r^(n-x) since r^n == 1 (mod m)
    _check(t, g)
    x, y = g
    back = (t.n - x) % t.n
    return GroupElement(back, -pow(t.r, back, t.m) * y % t.m)


def elem_pow(t: ZmTriple, g: GroupElement, k: int) -> GroupElement:
    """``g**k`` via ``(b^x a^y)^k = b^(kx) a^(y * (1 + r^x + ... + r^((k-1)x)))``."""
    if k < 0:
        return elem_pow(t, elem_inv(t, g), -k)
    _check(t, g)
    x, y = g
    return GroupElement(k * x % t.n, y * geometric_sum_mod(t.r, x, k, t.m) % t.m)


def conjugate(t: ZmTriple, g: GroupElement, h: GroupElement) -> GroupElement:
    """``h^-1 g h``.

    For ``g = (n1, s)`` and ``h = (x, y)`` this is ``(n1, s r^x + y - r^n1 y)``.
    """
    _check(t, g)
    _check(t, h)
    n1, s = g
    x, y = h
    return GroupElement(n1, (-pow(t.r, n1, t.m) * y + pow(t.r, x, t.m) * s + y) % t.m)
