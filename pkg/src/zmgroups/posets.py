"""Finite posets given by a ``leq(i, j)`` predicate on indices ``0..N-1``.

Down-sets are kept as int bitmasks so covering relations and the M3/N5
search stay cheap for the few hundred nodes a subgroup lattice has here.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Optional, Sequence

__all__ = [
    "Poset",
]


class Poset:
    def __init__(self, size: int, leq: Callable[[int, int], bool]):
        self.size = size
        # below[j] has bit i set iff i <= j
        self.below = [0] * size
        for i in range(size):
            for j in range(size):
                if i == j or leq(i, j):
                    self.below[j] |= 1 << i
        self.above = [0] * size
        for j, mask in enumerate(self.below):
            for i in _bits(mask):
                self.above[i] |= 1 << j
        for i in range(size):
            for j in range(i + 1, size):
                if self.leq(i, j) and self.leq(j, i):
                    raise ValueError(f"elements {i} and {j} are equal in the order")

    @classmethod
    def from_sets(cls, sets: Sequence[frozenset]) -> "Poset":
        return cls(len(sets), lambda i, j: sets[i] <= sets[j])

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        edges = []
        for j in range(self.size):
            strict = self.below[j] & ~(1 << j)
            for i in _bits(strict):
                between = strict & self.above[i] & ~(1 << i)
                if not between:
                    edges.append((i, j))
        edges.sort()
        return edges

    def is_total(self) -> bool:
        return all(self.comparable(i, j) for i, j in combinations(range(self.size), 2))

    def linear_order(self) -> Optional[list[int]]:
        """Indices from bottom to top when the order is total."""
        if not self.is_total():
            return None
        return sorted(range(self.size), key=lambda i: bin(self.below[i]).count("1"))

    def meet(self, i: int, j: int) -> Optional[int]:
        return self._extremum(self.below[i] & self.below[j], self.below)

    def join(self, i: int, j: int) -> Optional[int]:
        return self._extremum(self.above[i] & self.above[j], self.above)

    def _extremum(self, common: int, cone: list[int]) -> Optional[int]:
        # greatest element of a down-set (or least of an up-set), if any
        for k in _bits(common):
            if cone[k] & common == common:
                return k
        return None

    def is_lattice(self) -> bool:
        return all(
            self.meet(i, j) is not None and self.join(i, j) is not None
            for i, j in combinations(range(self.size), 2)
        )

    def find_m3_or_n5(self) -> Optional[tuple[str, tuple[int, ...]]]:
        """A diamond or pentagon sublattice, as ``(kind, (bottom, ..., top))``.

        Returns ``None`` when neither occurs, i.e. the lattice is distributive.
        """
        meets = [[self.meet(i, j) for j in range(self.size)] for i in range(self.size)]
        joins = [[self.join(i, j) for j in range(self.size)] for i in range(self.size)]
        if any(v is None for row in meets + joins for v in row):
            raise ValueError("not a lattice")
        for x, y in combinations(range(self.size), 2):
            if self.comparable(x, y):
                continue
            bot, top = meets[x][y], joins[x][y]
            for z in range(self.size):
                if z in (x, y, bot, top):
                    continue
                if (
                    not self.comparable(z, x)
                    and not self.comparable(z, y)
                    and meets[z][x] == bot
                    and meets[z][y] == bot
                    and joins[z][x] == top
                    and joins[z][y] == top
                ):
                    return "M3", (bot, x, y, z, top)
                # pentagon bot < z < c < top with the other one beside the z-c edge
                for c, other in ((y, x), (x, y)):
                    if self.lt(z, c) and meets[z][other] == bot and joins[z][other] == top:
                        return "N5", (bot, z, c, other, top)
        return None

    def is_distributive(self) -> bool:
        return self.find_m3_or_n5() is None


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1
