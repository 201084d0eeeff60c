"""Precomputed order and crossing structure of NC(n).

The downstream search problems (condition III intervals, chain
enumeration, maximal-chain scans) all reduce to questions about the
finite poset NC(n), so for n <= 7 we build its full catalogue once: the
sorted list of partitions together with strict order and crossing
relations as bitsets over partition indices.  A bitset row makes "is
there a crossing pair strictly between P and Q" a handful of word
operations instead of a fresh search.

Index convention: partitions are sorted by (rank, sort_key), so the
all-singleton bottom is index 0 and the one-block top is the last index,
and each rank occupies one contiguous slice.
"""

from __future__ import annotations

from functools import lru_cache

from ncpverify.core import (
    Partition,
    is_noncrossing,
    kreweras_dual,
    leq,
    partitions_cross,
)


def set_partitions(n: int):
    """All set partitions of {1..n} (crossing included), via growth strings."""

    def rec(assign: list[int], used: int):
        if len(assign) == n:
            groups: dict[int, int] = {}
            for e, g in enumerate(assign, 1):
                groups[g] = groups.get(g, 0) | 1 << (e - 1)
            yield Partition(n, tuple(groups.values()))
            return
        for v in range(used + 1):
            assign.append(v)
            yield from rec(assign, used + (v == used))
            assign.pop()

    yield from rec([], 0)


def noncrossing_partitions(n: int):
    """All of NC(n) in (rank, canonical) order, bottom first, top last."""
    found = [p for p in set_partitions(n) if is_noncrossing(p)]
    found.sort(key=lambda p: (p.rank, p.sort_key()))
    yield from found


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Catalogue:
    """NC(n) with strict order and crossing relations as index bitsets.

    ``above[i]`` / ``below[i]`` hold the indices strictly greater/less
    than partition i; ``crossing[i]`` holds the indices whose partition
    crosses partition i.  ``proper_mask`` selects ranks 1..n-2, i.e. the
    proper part of the lattice that chains live in.
    """

    __slots__ = (
        "n",
        "partitions",
        "index_of",
        "rank_indices",
        "above",
        "below",
        "crossing",
        "proper_mask",
        "bottom",
        "top",
        "universal",
        "part_by_element",
        "dual_index",
        "_crossing_above",
        "_crossing_below",
        "_between_memo",
    )

    def __init__(self, n: int):
        if not 1 <= n <= 7:
            raise ValueError("catalogue supports n <= 7 (NC(7) has 429 elements)")
        self.n = n
        self.partitions = tuple(noncrossing_partitions(n))
        self.index_of = {p.parts: i for i, p in enumerate(self.partitions)}
        size = len(self.partitions)

        buckets: list[list[int]] = [[] for _ in range(n)]
        for i, p in enumerate(self.partitions):
            buckets[p.rank].append(i)
        self.rank_indices = tuple(tuple(b) for b in buckets)
        self.bottom = 0
        self.top = size - 1

        above = [0] * size
        below = [0] * size
        for r in range(n - 1):
            for s in range(r + 1, n):
                for i in buckets[r]:
                    pi = self.partitions[i]
                    for j in buckets[s]:
                        if leq(pi, self.partitions[j]):
                            above[i] |= 1 << j
                            below[j] |= 1 << i
        self.above = tuple(above)
        self.below = tuple(below)

        crossing = [0] * size
        for i in range(size):
            pi = self.partitions[i]
            for j in range(i + 1, size):
                if partitions_cross(pi, self.partitions[j]):
                    crossing[i] |= 1 << j
                    crossing[j] |= 1 << i
        self.crossing = tuple(crossing)

        proper = 0
        for r in range(1, n - 1):
            for i in buckets[r]:
                proper |= 1 << i
        self.proper_mask = proper

        self.universal = tuple(p.is_universal() for p in self.partitions)
        self.part_by_element = tuple(
            tuple(p.part_containing(e) for e in range(1, n + 1))
            for p in self.partitions
        )
        self.dual_index = tuple(
            self.index_of[kreweras_dual(p).parts] for p in self.partitions
        )

        self._crossing_above: dict[int, bool] = {}
        self._crossing_below: dict[int, bool] = {}
        self._between_memo: dict[tuple[int, int], bool] = {}

    # -- crossing-pair queries for condition III -------------------------

    def has_crossing_pair(self, region: int) -> bool:
        """True iff the index set ``region`` holds two mutually crossing partitions."""
        for j in iter_bits(region):
            if self.crossing[j] & region:
                return True
        return False

    def crossing_pair_above(self, i: int) -> bool:
        memo = self._crossing_above
        if i not in memo:
            memo[i] = self.has_crossing_pair(self.above[i] & self.proper_mask)
        return memo[i]

    def crossing_pair_below(self, i: int) -> bool:
        memo = self._crossing_below
        if i not in memo:
            memo[i] = self.has_crossing_pair(self.below[i] & self.proper_mask)
        return memo[i]

    def crossing_pair_between(self, i: int, j: int) -> bool:
        memo = self._between_memo
        key = (i, j)
        if key not in memo:
            memo[key] = self.has_crossing_pair(
                self.above[i] & self.below[j] & self.proper_mask
            )
        return memo[key]


@lru_cache(maxsize=None)
def catalogue(n: int) -> Catalogue:
    return Catalogue(n)
