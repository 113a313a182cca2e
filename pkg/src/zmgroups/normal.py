"""Normal subgroups of ZM(m, n, r): criterion, counts and the chain test.

A subgroup ``H_(m1,n1,s)`` is normal exactly when ``s == 0`` and
``m1 | gcd(m, r^n1 - 1)``.  Consequently there is at most one normal subgroup
of each order, and the number of normal subgroups is

    sum over n1 | n of tau(gcd(m, r^n1 - 1)),

which specializes to ``tau(n) + tau(n/d)`` for prime ``m`` and to
``tau(m) + 1`` for prime ``n``.  The normal subgroups form a chain iff
``m == 1`` and ``n`` is a prime power, or ``m`` and ``n`` are both prime
powers and ``gcd(m, r^k - 1) == 1`` for every ``1 <= k < n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ZmTriple, validate_triple
from .lattice import (
    SubgroupTriple,
    enumerate_L,
    hasse_edges,
    in_L,
    materialize,
    normal_includes,
    subgroup_order,
)
from .numtheory import divisors, gcd_with_power_minus_one, is_prime, is_prime_power, tau
from .posets import Poset

__all__ = [
    "ChainVerdict",
    "NormalLatticeReport",
    "is_normal_criterion",
    "enumerate_normal",
    "count_eq1",
    "count_eq2",
    "count_eq3",
    "is_chain",
    "condition_4_holds",
    "dihedral_normal_count",
    "normal_lattice_report",
]


def _require_in_L(t: ZmTriple, st: SubgroupTriple) -> None:
    if not in_L(t, st):
        raise ValueError(f"{st} does not index a subgroup of {t}")


def is_normal_criterion(t: ZmTriple, st: SubgroupTriple) -> bool:
    _require_in_L(t, st)
    return st.s == 0 and gcd_with_power_minus_one(t.m, t.r, st.n1) % st.m1 == 0


def enumerate_normal(t: ZmTriple) -> list[SubgroupTriple]:
    """Triples of all normal subgroups, by increasing order, then ``(m1, n1)``."""
    out = [
        SubgroupTriple(m1, n1, 0)
        for n1 in divisors(t.n)
        for m1 in divisors(gcd_with_power_minus_one(t.m, t.r, n1))
    ]
    for st in out:
        assert in_L(t, st), (t, st)
    out.sort(key=lambda st: (subgroup_order(t, st), st.m1, st.n1))
    return out


def count_eq1(t: ZmTriple) -> int:
    return sum(tau(gcd_with_power_minus_one(t.m, t.r, n1)) for n1 in divisors(t.n))


def count_eq2(t: ZmTriple) -> int:
    """``tau(n) + tau(n/d)``; requires ``m`` prime."""
    if not is_prime(t.m):
        raise ValueError(f"count_eq2 needs m prime, got m={t.m}")
    if t.n % t.d:
        raise AssertionError(f"d={t.d} does not divide n={t.n}")
    return tau(t.n) + tau(t.n // t.d)


def count_eq3(t: ZmTriple) -> int:
    """``tau(m) + 1``; requires ``n`` prime."""
    if not is_prime(t.n):
        raise ValueError(f"count_eq3 needs n prime, got n={t.n}")
    return tau(t.m) + 1


def dihedral_normal_count(m: int) -> int:
    """Normal subgroup count of the dihedral group of order ``2m``, ``m`` odd.

    Equal to ``count_eq1(validate_triple(m, 2, m - 1))``.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m} (even m is not a ZM-group)")
    return tau(m) + 1


@dataclass(frozen=True)
class ChainVerdict:
    """Outcome of the chain test; truthy iff the normal subgroups form a chain.

    ``chain`` lists the normal subgroups from trivial to whole group.
    """

    is_chain: bool
    chain: Optional[tuple[SubgroupTriple, ...]] = None

    def __bool__(self) -> bool:
        return self.is_chain


def is_chain(t: ZmTriple) -> ChainVerdict:
    m, n = t.m, t.n
    if n == 1:
        return ChainVerdict(True, (SubgroupTriple(1, 1, 0),))
    q = is_prime_power(n)
    if q is None:
        return ChainVerdict(False)
    if m == 1:
        ns = [q.p**i for i in range(q.e, -1, -1)]
        return ChainVerdict(True, tuple(SubgroupTriple(1, n1, 0) for n1 in ns))
    p = is_prime_power(m)
    if p is None:
        return ChainVerdict(False)
    if any(gcd_with_power_minus_one(m, t.r, k) != 1 for k in range(1, n)):
        return ChainVerdict(False)
    # (p^u, q^v) < (p^(u-1), q^v) < ... < (1, q^v) < (1, q^(v-1)) < ... < (1, 1)
    lower = [SubgroupTriple(p.p**i, n, 0) for i in range(p.e, 0, -1)]
    upper = [SubgroupTriple(1, q.p**i, 0) for i in range(q.e, -1, -1)]
    return ChainVerdict(True, tuple(lower + upper))


def condition_4_holds(t: ZmTriple, st: SubgroupTriple, x: int, y: int) -> bool:
    """Whether conjugation by ``b^x a^y`` maps ``H_(m1,n1,s)`` to itself.

    Tests ``m1 | s (r^x - 1) - y (r^n1 - 1)``.
    """
    m1, n1, s = st
    value = s * (pow(t.r, x, m1) - 1) - y * (pow(t.r, n1, m1) - 1)
    return value % m1 == 0


@dataclass(frozen=True)
class NormalLatticeReport:
    group: ZmTriple
    normal_triples: tuple[SubgroupTriple, ...]
    count_eq1: int
    count_eq2: Optional[int]
    count_eq3: Optional[int]
    is_chain: bool
    chain: Optional[tuple[SubgroupTriple, ...]]
    hasse: tuple[tuple[int, int], ...]


def normal_lattice_report(t: ZmTriple, *, check: bool = True) -> NormalLatticeReport:
    """Collect normal subgroups, all applicable counts, the chain verdict and Hasse edges.

    With ``check`` the counts, chain verdict and inclusion order are
    cross-checked against each other and ``AssertionError`` is raised on any
    disagreement.
    """
    normal = enumerate_normal(t)
    eq1 = count_eq1(t)
    eq2 = count_eq2(t) if is_prime(t.m) else None
    eq3 = count_eq3(t) if is_prime(t.n) else None
    verdict = is_chain(t)
    subs = [materialize(t, st) for st in normal]
    hasse = hasse_edges(subs)
    if check:
        assert eq1 == len(normal), (t, eq1, len(normal))
        assert eq2 is None or eq2 == eq1, (t, eq2, eq1)
        assert eq3 is None or eq3 == eq1, (t, eq3, eq1)
        path = len(hasse) == len(normal) - 1 and all(
            hasse[k][1] == hasse[k + 1][0] for k in range(len(hasse) - 1)
        )
        poset = Poset(len(normal), lambda i, j: normal_includes(normal[i], normal[j]))
        assert poset.covers() == hasse, t
        assert verdict.is_chain == path == poset.is_total(), t
    return NormalLatticeReport(
        group=t,
        normal_triples=tuple(normal),
        count_eq1=eq1,
        count_eq2=eq2,
        count_eq3=eq3,
        is_chain=verdict.is_chain,
        chain=verdict.chain,
        hasse=tuple(hasse),
    )


def full_lattice(t: ZmTriple):
    """``(triples, normal_flags, hasse_edges)`` for the whole subgroup lattice."""
    triples = enumerate_L(t)
    flags = [is_normal_criterion(t, st) for st in triples]
    edges = hasse_edges([materialize(t, st) for st in triples])
    return triples, flags, edges


def dihedral(m: int) -> ZmTriple:
    """ZM(m, 2, m - 1), the dihedral group of order ``2m`` for odd ``m``."""
    return validate_triple(m, 2, m - 1)
