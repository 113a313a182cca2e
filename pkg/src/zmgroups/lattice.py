"""The subgroup lattice of ZM(m, n, r).

Subgroups are indexed by triples ``(m1, n1, s)`` with ``m1 | m``, ``n1 | n``,
``0 <= s < m1`` and ``m1 | s * (1 + r^n1 + r^(2 n1) + ... + r^(n - n1))``.
The triple names ``H = <a^m1, b^n1 a^s>``, a subgroup of order
``m n / (m1 n1)``; distinct triples name distinct subgroups and every
subgroup arises this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .core import GroupElement, ZmTriple, elem_mul, elem_pow
from .numtheory import divisors, geometric_sum_mod
from .posets import Poset

__all__ = [
    "SubgroupTriple",
    "MaterializedSubgroup",
    "in_L",
    "subgroup_order",
    "enumerate_L",
    "materialize",
    "includes",
    "normal_includes",
    "hasse_edges",
]


class SubgroupTriple(NamedTuple):
    m1: int
    n1: int
    s: int

    def __str__(self) -> str:
        return f"({self.m1},{self.n1},{self.s})"


@dataclass(frozen=True)
class MaterializedSubgroup:
    """Explicit element list of ``H_(m1,n1,s)``, sorted by ``(x, y)``."""

    group: ZmTriple
    index: SubgroupTriple
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.element_set

    def __len__(self) -> int:
        return len(self.elements)


def subgroup_order(t: ZmTriple, st: SubgroupTriple) -> int:
    return t.order // (st.m1 * st.n1)


def in_L(t: ZmTriple, st: SubgroupTriple) -> bool:
    """Whether ``st`` indexes a subgroup of ``t``."""
    m1, n1, s = st
    if m1 < 1 or n1 < 1 or t.m % m1 or t.n % n1 or not 0 <= s < m1:
        return False
    return s * geometric_sum_mod(t.r, n1, t.n // n1, m1) % m1 == 0


def _sort_key(t: ZmTriple):
    return lambda st: (subgroup_order(t, st), st.m1, st.n1, st.s)


def enumerate_L(t: ZmTriple) -> list[SubgroupTriple]:
    """All subgroup triples, by increasing subgroup order, then ``(m1, n1, s)``."""
    out = []
    for m1 in divisors(t.m):
        for n1 in divisors(t.n):
            q = geometric_sum_mod(t.r, n1, t.n // n1, m1)
            out.extend(SubgroupTriple(m1, n1, s) for s in range(m1) if s * q % m1 == 0)
    out.sort(key=_sort_key(t))
    return out


def materialize(t: ZmTriple, st: SubgroupTriple) -> MaterializedSubgroup:
    """Build the element set ``{(b^n1 a^s)^k a^(j m1)}`` for ``1 <= k <= n/n1``."""
    if not in_L(t, st):
        raise ValueError(f"{st} does not index a subgroup of {t}")
    m1, n1, s = st
    gen = GroupElement(n1 % t.n, s)
    elements = {
        elem_mul(t, elem_pow(t, gen, k), GroupElement(0, j * m1))
        for k in range(1, t.n // n1 + 1)
        for j in range(t.m // m1)
    }
    expected = subgroup_order(t, st)
    if len(elements) != expected:
        raise AssertionError(f"{st} in {t}: got {len(elements)} elements, expected {expected}")
    # The set is built from the generators, so stability under right
    # multiplication by them makes it exactly the generated subgroup.
    for g in (gen, GroupElement(0, m1 % t.m)):
        if any(elem_mul(t, h, g) not in elements for h in elements):
            raise AssertionError(f"{st} in {t}: element set is not closed")
    return MaterializedSubgroup(t, st, tuple(sorted(elements)))


def includes(a: MaterializedSubgroup, b: MaterializedSubgroup) -> bool:
    """Whether ``b`` is a subset of ``a`` (merge scan over the sorted lists)."""
    if a.group != b.group:
        raise ValueError(f"cannot compare subgroups of {a.group} and {b.group}")
    if len(b) > len(a):
        return False
    i = 0
    big = a.elements
    for g in b.elements:
        while i < len(big) and big[i] < g:
            i += 1
        if i == len(big) or big[i] != g:
            return False
        i += 1
    return True


def normal_includes(inner: SubgroupTriple, outer: SubgroupTriple) -> bool:
    """Inclusion between normal subgroups ``H_(m1,n1,0) <= H_(m2,n2,0)``.

    Holds iff ``m2 | m1`` and ``n2 | n1``.  Only valid for ``s == 0`` triples.
    """
    if inner.s or outer.s:
        raise ValueError("normal_includes only applies to triples with s = 0")
    return inner.m1 % outer.m1 == 0 and inner.n1 % outer.n1 == 0


def hasse_edges(subs: Sequence[MaterializedSubgroup]) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``subs[i]`` a maximal proper subgroup of ``subs[j]``."""
    if len({s.elements for s in subs}) != len(subs):
        raise ValueError("subgroups must be pairwise distinct")
    return Poset(len(subs), lambda i, j: includes(subs[j], subs[i])).covers()
