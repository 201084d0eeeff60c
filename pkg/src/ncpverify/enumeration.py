"""Exhaustive generators over NC(n): partitions, chains, maximal chains.

Everything here is deterministic and restartable.  Partitions stream in
(rank, canonical) order; chains are produced rank-set by rank-set with a
depth-first sweep over the catalogue's order bitsets; maximal chains are
grown bottom-up by merging two parts at a time (each cover of the
lattice merges exactly two parts, so the merge tree hits every maximal
chain exactly once).  Children of a merge step are visited in canonical
partition order, which fixes "the first witness" everywhere downstream.

For n <= 7 the full maximal-chain sweep is additionally cached as an
index: for each of the n^(n-2) chains, the catalogue indices of its
members, the enclosing-block family C_i, and the 2n-bit packed C'
signature.  Deciding condition IV against the index is then a single
AND per maximal chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ncpverify.core import Partition, _masks_alternate, elements_of
from ncpverify.chains import (
    Chain,
    canonical_chain,
    canonical_prime_signature,
    chain_key,
    chain_orbit_size,
    dual_chain,
    neighbor_mask,
    pack_primes,
    smallest_blocks,
)
from ncpverify.lattice import Catalogue, catalogue, noncrossing_partitions


def enumerate_ncp(n: int, proper_only: bool = False):
    """Every non-crossing partition of {1..n} once, in (rank, canonical) order."""
    if not 1 <= n <= 9:
        raise ValueError("universe size must be in 1..9")
    for p in noncrossing_partitions(n):
        if proper_only and not 1 <= p.rank <= n - 2:
            continue
        yield p


def rank_sets(n: int):
    """All nonempty subsets of 1..n-2, by (size, lexicographic) order."""
    for size in range(1, n - 1):
        yield from itertools.combinations(range(1, n - 1), size)


def chain_index_tuples(cat: Catalogue, ranks):
    """Catalogue-index tuples of every chain with the given rank set."""
    buckets = [cat.rank_indices[r] for r in ranks]

    def extend(prefix: tuple[int, ...], reach: int, depth: int):
        if depth == len(buckets):
            yield prefix
            return
        for j in buckets[depth]:
            if reach >> j & 1:
                yield from extend(prefix + (j,), cat.above[j], depth + 1)

    full_reach = (1 << len(cat.partitions)) - 1
    yield from extend((), full_reach, 0)


def chain_from_indices(cat: Catalogue, indices) -> Chain:
    return Chain._trusted(cat.n, tuple(cat.partitions[j] for j in indices))


def enumerate_chains(n: int, rank_filter=None):
    """Every chain of the proper part of NC(n), optionally one rank set only."""
    if not 3 <= n <= 7:
        raise ValueError("full chain enumeration needs 3 <= n <= 7")
    cat = catalogue(n)
    sets = [tuple(sorted(rank_filter))] if rank_filter is not None else rank_sets(n)
    for ranks in sets:
        if not all(1 <= r <= n - 2 for r in ranks):
            raise ValueError(f"ranks {ranks} outside 1..{n - 2}")
        for indices in chain_index_tuples(cat, ranks):
            yield chain_from_indices(cat, indices)


def count_chains(n: int) -> int:
    cat = catalogue(n)
    return sum(
        1 for ranks in rank_sets(n) for _ in chain_index_tuples(cat, ranks)
    )


# -- maximal chains -------------------------------------------------------


def _merge_children(n: int, parts: tuple[int, ...]):
    """All one-merge coarsenings that stay non-crossing, in canonical order."""
    children = []
    for (ia, a), (ib, b) in itertools.combinations(enumerate(parts), 2):
        merged = a | b
        rest = [p for k, p in enumerate(parts) if k != ia and k != ib]
        if any(_masks_alternate(merged, q, n) for q in rest):
            continue
        child = tuple(sorted(rest + [merged], key=lambda m: m & -m))
        children.append((child, a, b, merged))
    children.sort(key=lambda item: tuple(elements_of(p) for p in item[0]))
    return children


def enumerate_maximal_chains(n: int):
    """Every maximal chain of the proper part (one member per rank 1..n-2)."""
    if not 3 <= n <= 9:
        raise ValueError("maximal-chain enumeration needs 3 <= n <= 9")
    bottom = tuple(1 << e for e in range(n))
    members: list[Partition] = []

    def grow(parts: tuple[int, ...]):
        if len(members) == n - 2:
            yield Chain._trusted(n, tuple(members))
            return
        for child, _, _, _ in _merge_children(n, parts):
            members.append(Partition(n, child))
            yield from grow(child)
            members.pop()

    yield from grow(bottom)


class MaximalChainIndex:
    """Cached sweep of all maximal chains of the proper part of NC(n), n <= 7.

    Per chain (in depth-first order): ``member_indices`` into the
    catalogue, ``enclosing`` = (C_1..C_n) masks, and ``packed`` = the
    2n-bit C' signature matching SmallestBlockFamily.packed_primes.
    """

    __slots__ = ("n", "cat", "member_indices", "enclosing", "packed")

    def __init__(self, n: int):
        self.n = n
        self.cat = cat = catalogue(n)
        self.member_indices: list[tuple[int, ...]] = []
        self.enclosing: list[tuple[int, ...]] = []
        self.packed: list[int] = []

        full = (1 << n) - 1
        neighbors = [neighbor_mask(n, i) for i in range(1, n + 1)]
        first_block = [0] * (n + 1)
        trail: list[tuple[int, ...]] = []

        def grow(parts: tuple[int, ...]):
            if len(trail) == n - 2:
                enclosing = tuple(first_block[i] or full for i in range(1, n + 1))
                primes = [enclosing[i - 1] & neighbors[i - 1] for i in range(1, n + 1)]
                self.member_indices.append(tuple(trail))
                self.enclosing.append(enclosing)
                self.packed.append(pack_primes(n, primes))
                return
            for child, a, b, merged in _merge_children(n, parts):
                newly = []
                for piece in (a, b):
                    if not piece & (piece - 1):
                        e = piece.bit_length()
                        first_block[e] = merged
                        newly.append(e)
                trail.append(cat.index_of[child])
                grow(child)
                trail.pop()
                for e in newly:
                    first_block[e] = 0

        grow(tuple(1 << e for e in range(n)))

    def __len__(self) -> int:
        return len(self.packed)

    def chain_at(self, k: int) -> Chain:
        return chain_from_indices(self.cat, self.member_indices[k])

    def survivors(self, packed_family: int):
        """Indices of maximal chains whose C' avoids the given packed F'."""
        return [
            k for k, sig in enumerate(self.packed) if sig & packed_family == 0
        ]


@lru_cache(maxsize=None)
def maximal_chain_index(n: int) -> MaximalChainIndex:
    if not 3 <= n <= 7:
        raise ValueError("the maximal-chain index is built for 3 <= n <= 7")
    return MaximalChainIndex(n)


# -- orbit bookkeeping -----------------------------------------------------


@dataclass(frozen=True)
class OrbitClass:
    """One dihedral orbit of chains, with the data the pipeline reports.

    ``prime_signature`` is recomputed from the canonical representative;
    ``signature_duplicate_of`` points at the text of an earlier class
    whose F' family coincides up to symmetry (such classes add nothing
    to a condition-IV verdict, which reads only the F' family).
    """

    representative: Chain
    orbit_size: int
    dual_representative: Chain
    prime_signature: tuple[int, ...]
    signature_duplicate_of: str | None


def orbit_classes(chains) -> list[OrbitClass]:
    """Group chains into dihedral orbit classes, in deterministic order."""
    reps: dict[tuple, Chain] = {}
    for chain in chains:
        rep = canonical_chain(chain)
        reps.setdefault(chain_key(rep), rep)
    ordered = [
        reps[key]
        for key in sorted(
            reps, key=lambda k: (len(reps[k].members), reps[k].ranks(), k)
        )
    ]
    classes: list[OrbitClass] = []
    seen_signatures: dict[tuple[int, ...], str] = {}
    for rep in ordered:
        signature = canonical_prime_signature(rep)
        duplicate_of = seen_signatures.get(signature)
        if duplicate_of is None:
            seen_signatures[signature] = rep.text()
        classes.append(
            OrbitClass(
                representative=rep,
                orbit_size=chain_orbit_size(rep),
                dual_representative=canonical_chain(dual_chain(rep)),
                prime_signature=smallest_blocks(rep).primes,
                signature_duplicate_of=duplicate_of,
            )
        )
    return classes
