"""Chains of the proper part of NC(n) and the conditions they may satisfy.

A chain is a strictly increasing sequence of non-crossing partitions
whose ranks stay strictly between bottom and top (1..n-2).  From a chain
we derive, for every circle element i, the smallest block containing i
anywhere along the chain (``F_i``; the full ground set when i stays a
singleton throughout) and its restriction to the cyclic neighbors of i
(``F_i'``).  These neighbor sets are the entire interface between a
chain and the maximal-chain search of the condition-four module, which
is why they also come packed into a 2n-bit signature here.

The four chain conditions:

* I   — the corank set (complement of the member ranks in 1..n-2)
        contains two consecutive integers.
* II  — some member is not "universal" (universal = exactly one block,
        and that block a cyclic arc).
* III — some open interval of the chain (below the bottom member,
        between consecutive members, or above the top member) contains
        two crossing partitions; checked both by a structural criterion
        on members and by exhaustive interval search (the oracle).
* IV  — lives in the condition-four module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ncpverify.core import (
    Partition,
    Symmetry,
    UniverseMismatch,
    _masks_alternate,
    dihedral_group,
    kreweras_dual,
    leq,
    popcount,
    require_noncrossing,
)
from ncpverify.lattice import catalogue


class InvalidChainError(ValueError):
    """Members do not form a strictly increasing chain of proper rank."""


@dataclass(frozen=True)
class Chain:
    """Strictly increasing non-crossing partitions with ranks in 1..n-2."""

    n: int
    members: tuple[Partition, ...]

    def __post_init__(self):
        if not self.members:
            raise InvalidChainError("chain needs at least one member")
        for p in self.members:
            if p.n != self.n:
                raise UniverseMismatch(
                    f"member over universe {p.n} in a chain over {self.n}"
                )
            require_noncrossing(p)
            if not 1 <= p.rank <= self.n - 2:
                raise InvalidChainError(
                    f"member {p.text()!r} has rank {p.rank}, outside 1..{self.n - 2}"
                )
        for a, b in itertools.pairwise(self.members):
            if a.parts == b.parts or not leq(a, b):
                raise InvalidChainError(
                    f"members {a.text()!r} and {b.text()!r} are not strictly increasing"
                )

    @classmethod
    def _trusted(cls, n: int, members: tuple[Partition, ...]) -> Chain:
        # Constructor for already-validated members (hot enumeration paths).
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", members)
        return self

    @classmethod
    def from_text(cls, n: int, text: str) -> Chain:
        members = []
        offset = 0
        for segment in text.split("<"):
            members.append(_parse_at(n, segment, offset))
            offset += len(segment) + 1
        return cls(n, tuple(members))

    def text(self) -> str:
        return "<".join(p.text() for p in self.members)

    def ranks(self) -> tuple[int, ...]:
        return tuple(p.rank for p in self.members)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Chain({self.n}, {self.text()!r})"


def _parse_at(n: int, segment: str, offset: int) -> Partition:
    from ncpverify.core import _parse_partition

    return _parse_partition(n, segment, offset)


@dataclass(frozen=True)
class RankSet:
    """Member ranks of a chain and their complement in 1..n-2."""

    n: int
    ranks: frozenset[int]

    @classmethod
    def of_chain(cls, chain: Chain) -> RankSet:
        return cls(chain.n, frozenset(chain.ranks()))

    @property
    def coranks(self) -> frozenset[int]:
        return frozenset(range(1, self.n - 1)) - self.ranks


@dataclass(frozen=True)
class SmallestBlockFamily:
    """The indexed family i -> F_i, with the neighbor restrictions F_i'.

    ``blocks[i-1]`` is the mask of F_i; ``primes[i-1]`` the mask of
    F_i' = F_i intersected with {i-1, i+1} (cyclic).
    """

    n: int
    blocks: tuple[int, ...]
    primes: tuple[int, ...]

    def block(self, i: int) -> int:
        return self.blocks[i - 1]

    def prime(self, i: int) -> int:
        return self.primes[i - 1]

    def packed_primes(self) -> int:
        """2 bits per index: predecessor bit 2(i-1), successor bit 2(i-1)+1.

        Two families have pointwise-disjoint primes iff their packed
        values AND to zero.
        """
        return pack_primes(self.n, self.primes)


def neighbor_mask(n: int, i: int) -> int:
    return 1 << (i - 2) % n | 1 << i % n


def pack_primes(n: int, primes) -> int:
    packed = 0
    for i in range(1, n + 1):
        pm = primes[i - 1]
        if pm >> ((i - 2) % n) & 1:
            packed |= 1 << (2 * (i - 1))
        if pm >> (i % n) & 1:
            packed |= 1 << (2 * (i - 1) + 1)
    return packed


def smallest_blocks(chain: Chain) -> SmallestBlockFamily:
    n = chain.n
    full = (1 << n) - 1
    blocks = []
    for i in range(1, n + 1):
        best = full
        for p in chain.members:
            part = p.part_containing(i)
            if part & (part - 1):
                best = part  # members increase, so the first block is smallest
                break
        blocks.append(best)
    primes = tuple(b & neighbor_mask(n, i) for i, b in enumerate(blocks, 1))
    return SmallestBlockFamily(n, tuple(blocks), primes)


def family_from_masks(n: int, member_parts: list[tuple[int, ...]]) -> tuple[int, ...]:
    """F-block masks straight from member part-mask tuples (no objects)."""
    full = (1 << n) - 1
    out = []
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        best = full
        for parts in member_parts:
            part = next(p for p in parts if p & bit)
            if part & (part - 1):
                best = part
                break
        out.append(best)
    return tuple(out)


# -- conditions I, II, III -----------------------------------------------


def rank_set(chain: Chain) -> RankSet:
    return RankSet.of_chain(chain)


def cond_i(chain: Chain) -> bool:
    """Corank set contains two consecutive integers (no wraparound)."""
    coranks = rank_set(chain).coranks
    return any(j + 1 in coranks for j in coranks)


def cond_i_of_ranks(n: int, ranks) -> bool:
    coranks = set(range(1, n - 1)) - set(ranks)
    return any(j + 1 in coranks for j in coranks)


def cond_ii(chain: Chain) -> bool:
    """Some member is not universal."""
    return not all(p.is_universal() for p in chain.members)


def _four_members_cross(n: int, members: list[int]) -> bool:
    """Do four of the given disjoint masks admit a crossing pairing?

    For members a, b, c, d (any order) the three pairings (a+c vs b+d
    up to relabeling) cover all arrangements of the alternation test.
    """
    for a, b, c, d in itertools.combinations(members, 4):
        if (
            _masks_alternate(a | b, c | d, n)
            or _masks_alternate(a | c, b | d, n)
            or _masks_alternate(a | d, b | c, n)
        ):
            return True
    return False


def cond_iii_criterion(chain: Chain) -> bool:
    """Structural test for condition III on the members themselves.

    Fires when (i) four members of the top partition cross in union,
    (ii) four members of some P sitting inside one part of the next
    member up cross in union, or (iii) the bottom partition has a part
    of size >= 4.  Singleton members participate in (i) and (ii).
    """
    n = chain.n
    top = chain.members[-1]
    if _four_members_cross(n, list(top.parts)):
        return True
    for lower, upper in itertools.pairwise(chain.members):
        groups: dict[int, list[int]] = {}
        for part in lower.parts:
            low = part & -part
            container = upper.part_containing(low.bit_length())
            groups.setdefault(container, []).append(part)
        for members in groups.values():
            if len(members) >= 4 and _four_members_cross(n, members):
                return True
    return any(popcount(p) >= 4 for p in chain.members[0].parts)


def cond_iii_bruteforce(chain: Chain) -> bool:
    """Ground truth for condition III: exhaustive interval search in NC(n).

    True iff two crossing partitions of proper rank lie strictly below
    the bottom member, strictly between some consecutive members, or
    strictly above the top member.
    """
    if chain.n > 7:
        raise ValueError("exhaustive interval search needs n <= 7")
    cat = catalogue(chain.n)
    indices = [cat.index_of[p.parts] for p in chain.members]
    if cat.crossing_pair_below(indices[0]) or cat.crossing_pair_above(indices[-1]):
        return True
    return any(
        cat.crossing_pair_between(i, j) for i, j in itertools.pairwise(indices)
    )


# -- duality and symmetry -------------------------------------------------


def dual_chain(chain: Chain, orientation: str = "clockwise") -> Chain:
    """Memberwise Kreweras dual, re-sorted increasingly (duality reverses order)."""
    duals = [kreweras_dual(p, orientation) for p in reversed(chain.members)]
    return Chain(chain.n, tuple(duals))


def apply_symmetry_chain(chain: Chain, g: Symmetry) -> Chain:
    from ncpverify.core import apply_symmetry

    return Chain._trusted(
        chain.n, tuple(apply_symmetry(p, g) for p in chain.members)
    )


def chain_key(chain: Chain) -> tuple:
    return tuple(p.sort_key() for p in chain.members)


def canonical_chain(chain: Chain) -> Chain:
    """Least dihedral image (same symmetry applied to every member)."""
    return min(
        (apply_symmetry_chain(chain, g) for g in dihedral_group(chain.n)),
        key=chain_key,
    )


def chain_orbit_size(chain: Chain) -> int:
    return len({chain_key(apply_symmetry_chain(chain, g)) for g in dihedral_group(chain.n)})


def transformed_primes(n: int, primes: tuple[int, ...], g: Symmetry) -> tuple[int, ...]:
    """The prime family of the transformed chain: index i moves to g(i)."""
    out = [0] * n
    for i in range(1, n + 1):
        out[g(i) - 1] = g.apply_mask(primes[i - 1])
    return tuple(out)


def canonical_prime_signature(chain: Chain) -> tuple[int, ...]:
    """Least dihedral image of the indexed F' family (dedup invariant)."""
    primes = smallest_blocks(chain).primes
    return min(
        transformed_primes(chain.n, primes, g) for g in dihedral_group(chain.n)
    )
