"""Brute-force ground truth for small ZM-groups.

Nothing here uses the subgroup triples or the normality criterion: the whole
group is tabulated from the product law, subgroups are found by closure and
normality is tested by conjugating explicitly.  The checks in ``scan`` and
the test suite compare the formula-based modules against these results.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

from .core import GroupElement, ZmTriple, elem_inv, elem_mul

__all__ = [
    "MAX_ORDER",
    "OracleBoundError",
    "CayleyTable",
    "cayley_table",
    "all_elements",
    "closure",
    "all_subgroups_bruteforce",
    "is_normal_bruteforce",
]

#: Default refusal threshold for the group order ``m * n``.
MAX_ORDER = 500


class OracleBoundError(ValueError):
    pass


def _check_bound(t: ZmTriple, bound: Optional[int]) -> None:
    limit = MAX_ORDER if bound is None else bound
    if t.order > limit:
        raise OracleBoundError(f"{t} has order {t.order} > oracle bound {limit}")


def all_elements(t: ZmTriple, bound: Optional[int] = None) -> list[GroupElement]:
    _check_bound(t, bound)
    return [GroupElement(x, y) for x in range(t.n) for y in range(t.m)]


class CayleyTable:
    """Multiplication table on element indices ``x * m + y``."""

    def __init__(self, t: ZmTriple, bound: Optional[int] = None):
        self.group = t
        self.elements = all_elements(t, bound)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.mul = [
            [self.index[elem_mul(t, g, h)] for h in self.elements] for g in self.elements
        ]
        self.inv = [self.index[elem_inv(t, g)] for g in self.elements]

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Indices of the subgroup generated by ``gens`` (worklist saturation).

        In a finite group the products of generators already include their
        inverses, so only right multiplication by ``gens`` is saturated.
        """
        gens = list(gens)
        seen = {0}
        work = [0]
        while work:
            row = self.mul[work.pop()]
            for g in gens:
                j = row[g]
                if j not in seen:
                    seen.add(j)
                    work.append(j)
        assert len(self.elements) % len(seen) == 0, "Lagrange violated"
        return frozenset(seen)

    def powers(self, g: int) -> frozenset[int]:
        """The cyclic subgroup ``<g>``."""
        seen = {0}
        j = g
        while j not in seen:
            seen.add(j)
            j = self.mul[j][g]
        return frozenset(seen)

    def conjugate(self, g: int, h: int) -> int:
        return self.mul[self.mul[self.inv[h]][g]][h]

    def to_elements(self, idx: Iterable[int]) -> tuple[GroupElement, ...]:
        return tuple(sorted(self.elements[i] for i in idx))


@lru_cache(maxsize=64)
def cayley_table(t: ZmTriple, bound: Optional[int] = None) -> CayleyTable:
    return CayleyTable(t, bound)


def closure(
    t: ZmTriple, gens: Iterable[GroupElement], bound: Optional[int] = None
) -> tuple[GroupElement, ...]:
    """Sorted elements of the subgroup generated by ``gens``."""
    table = cayley_table(t, bound)
    return table.to_elements(table.closure(table.index[g] for g in gens))


def all_subgroups_bruteforce(
    t: ZmTriple, bound: Optional[int] = None
) -> set[tuple[GroupElement, ...]]:
    """Every subgroup ``<g, h>`` for ``g, h`` in the group, as sorted element tuples.

    ``<g, h>`` only depends on the cyclic subgroups ``<g>`` and ``<h>``, so one
    generator per distinct cyclic subgroup is enough.
    """
    table = cayley_table(t, bound)
    cyclic: dict[frozenset[int], int] = {}
    for g in range(len(table.elements)):
        cyclic.setdefault(table.powers(g), g)
    found = set(cyclic)
    reps = list(cyclic.items())
    for i, (ci, gi) in enumerate(reps):
        for cj, gj in reps[i + 1 :]:
            if ci <= cj or cj <= ci:
                continue
            found.add(table.closure([gi, gj]))
    return {table.to_elements(sub) for sub in found}


def is_normal_bruteforce(
    t: ZmTriple,
    sub: Iterable[GroupElement],
    *,
    all_conjugators: bool = False,
    bound: Optional[int] = None,
) -> bool:
    """Whether ``h^-1 g h`` stays in ``sub`` for all ``g`` in ``sub``.

    By default ``h`` ranges over the generators ``a`` and ``b``; with
    ``all_conjugators`` it ranges over the whole group.
    """
    table = cayley_table(t, bound)
    members = {table.index[g] for g in sub}
    if all_conjugators:
        hs = range(len(table.elements))
    else:
        hs = {table.index[t.a], table.index[t.b]}
    return all(table.conjugate(g, h) in members for g in members for h in hs)
