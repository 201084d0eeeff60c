"""Exact combinatorics of partitions of n points on a circle.

Everything in this package works over a small fixed universe: the points
1..n placed clockwise on a circle (n up to 9; the interesting range starts
at 3, but n = 1, 2 are allowed so counting cross-checks can start at the
bottom).  A partition stores every part, singletons included, as a bitmask
over the elements — bit e-1 stands for element e — so the two tests the
rest of the package leans on, "is this part inside that one" and "do these
two parts cross", are single machine-word operations.

Vocabulary used throughout: a *member* of a partition is any part, a
*block* is a part with at least two elements, and a block is *consecutive*
when its elements form a contiguous cyclic arc.  Two disjoint sets cross
when, read around the circle, they alternate A B A B.  A partition is
non-crossing when no two of its blocks cross; `NC(n)` below means the set
of non-crossing partitions of {1..n}, ordered by refinement.

The text notation lists blocks as digit strings and omits singletons:
"12,46" is the partition with blocks {1,2} and {4,6}.  Digits cap the
universe at n = 9.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_N = 9


class UniverseMismatch(ValueError):
    """Raised when two objects over different universes are combined."""


class CrossingPartitionError(ValueError):
    """Raised when a crossing partition reaches a non-crossing-only context."""


class NotationError(ValueError):
    """Text notation could not be parsed; `position` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Universe:
    """The circle of points 1..n; owns the cyclic successor/predecessor."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"universe size must be in 1..{MAX_N}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def elements(self) -> range:
        return range(1, self.n + 1)

    def succ(self, e: int) -> int:
        return e % self.n + 1

    def pred(self, e: int) -> int:
        return (e - 2) % self.n + 1


@dataclass(frozen=True)
class Block:
    """One part of a partition: a nonempty subset of {1..n} as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"universe size must be in 1..{MAX_N}")
        if self.mask == 0 or self.mask >> self.n:
            raise ValueError("block must be a nonempty subset of the universe")

    @classmethod
    def from_elements(cls, n: int, elements) -> Block:
        return cls(n, mask_of(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    @property
    def size(self) -> int:
        return popcount(self.mask)

    def __contains__(self, e: int) -> bool:
        return bool(self.mask >> (e - 1) & 1)

    def is_consecutive(self) -> bool:
        """True iff the elements form one contiguous cyclic arc."""
        return _is_cyclic_arc(self.mask, self.n)


def _is_cyclic_arc(mask: int, n: int) -> bool:
    # An arc has exactly two cyclic boundaries (or zero, for the full set).
    full = (1 << n) - 1
    rotated = (mask >> 1 | mask << (n - 1)) & full
    return popcount(mask ^ rotated) <= 2


@dataclass(frozen=True)
class CrossingWitness:
    """A concrete alternation a < b < c < d proving two blocks cross.

    `first` contains a and c, `second` contains b and d.
    """

    a: int
    b: int
    c: int
    d: int
    first: int
    second: int


def _masks_alternate(s: int, t: int, n: int) -> bool:
    """True iff the disjoint nonempty masks s, t alternate around the circle."""
    # Reading elements of s|t in increasing order as a string over {S, T},
    # crossing means at least four runs.
    runs = 0
    last = 0  # 0 = none, 1 = s, 2 = t
    for e in range(n):
        bit = 1 << e
        if s & bit:
            cur = 1
        elif t & bit:
            cur = 2
        else:
            continue
        if cur != last:
            runs += 1
            last = cur
    return runs >= 4


def blocks_cross(s: Block, t: Block) -> CrossingWitness | None:
    """Crossing test with witness: the lexicographically least (a, b, c, d)."""
    if s.n != t.n:
        raise UniverseMismatch(f"blocks over different universes: {s.n} vs {t.n}")
    if s.mask & t.mask or not _masks_alternate(s.mask, t.mask, s.n):
        return None
    together = elements_of(s.mask | t.mask)
    for a, b, c, d in itertools.combinations(together, 4):
        for first, second in ((s.mask, t.mask), (t.mask, s.mask)):
            amask, bmask = 1 << (a - 1) | 1 << (c - 1), 1 << (b - 1) | 1 << (d - 1)
            if amask & first == amask and bmask & second == bmask:
                return CrossingWitness(a, b, c, d, first, second)
    raise AssertionError("alternating masks must yield a witness")


def _sorted_parts(parts) -> tuple[int, ...]:
    # Sorting by mask value orders parts by least element (bit e-1 dominates
    # only when the smaller elements agree, but the least set bit decides
    # ordering between disjoint masks).
    return tuple(sorted(parts, key=lambda m: m & -m))


@dataclass(frozen=True)
class Partition:
    """A partition of {1..n} into disjoint covering parts (bitmasks).

    Parts are stored sorted by least element and include singletons.
    Partition objects may be crossing — contexts that require non-crossing
    input validate explicitly and raise CrossingPartitionError.
    """

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"universe size must be in 1..{MAX_N}")
        full = (1 << self.n) - 1
        seen = 0
        for p in self.parts:
            if p == 0 or p >> self.n:
                raise ValueError("part is not a nonempty subset of the universe")
            if p & seen:
                raise ValueError("parts must be disjoint")
            seen |= p
        if seen != full:
            raise ValueError("parts must cover the universe")
        object.__setattr__(self, "parts", _sorted_parts(self.parts))

    # -- construction ---------------------------------------------------

    @classmethod
    def from_blocks(cls, n: int, blocks) -> Partition:
        """Build from the non-singleton blocks; missing elements become singletons."""
        full = (1 << n) - 1
        parts = [mask_of(b) if not isinstance(b, int) else b for b in blocks]
        seen = 0
        for p in parts:
            if p & seen:
                raise ValueError("blocks must be disjoint")
            seen |= p
        rest = full & ~seen
        while rest:
            low = rest & -rest
            parts.append(low)
            rest ^= low
        return cls(n, tuple(parts))

    @classmethod
    def all_singletons(cls, n: int) -> Partition:
        return cls(n, tuple(1 << e for e in range(n)))

    @classmethod
    def one_block(cls, n: int) -> Partition:
        return cls(n, ((1 << n) - 1,))

    @classmethod
    def from_text(cls, n: int, text: str) -> Partition:
        return _parse_partition(n, text)

    # -- views ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.n - len(self.parts)

    def members(self) -> tuple[Block, ...]:
        return tuple(Block(self.n, p) for p in self.parts)

    def blocks(self) -> tuple[Block, ...]:
        """Only the parts of size >= 2."""
        return tuple(Block(self.n, p) for p in self.parts if p & (p - 1))

    def part_containing(self, e: int) -> int:
        if not 1 <= e <= self.n:
            raise ValueError(f"element {e} outside universe 1..{self.n}")
        bit = 1 << (e - 1)
        for p in self.parts:
            if p & bit:
                return p
        raise AssertionError("partition covers the universe")

    def is_universal(self) -> bool:
        """Exactly one block, and that block is a cyclic arc."""
        blocks = [p for p in self.parts if p & (p - 1)]
        return len(blocks) == 1 and _is_cyclic_arc(blocks[0], self.n)

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(p) for p in self.parts)

    def text(self) -> str:
        """Blocks as digit strings, singletons omitted; "" for all singletons."""
        return ",".join(
            "".join(str(e) for e in elements_of(p))
            for p in self.parts
            if p & (p - 1)
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Partition({self.n}, {self.text()!r})"


def is_noncrossing(p: Partition) -> bool:
    blocks = [q for q in p.parts if q & (q - 1)]
    return not any(
        _masks_alternate(s, t, p.n) for s, t in itertools.combinations(blocks, 2)
    )


def require_noncrossing(p: Partition) -> Partition:
    if not is_noncrossing(p):
        raise CrossingPartitionError(f"partition {p.text()!r} is crossing")
    return p


def partitions_cross(p: Partition, q: Partition) -> bool:
    """True iff some block of p crosses some block of q (written p ∦ q)."""
    if p.n != q.n:
        raise UniverseMismatch(f"partitions over different universes: {p.n} vs {q.n}")
    pb = [m for m in p.parts if m & (m - 1)]
    qb = [m for m in q.parts if m & (m - 1)]
    return any(
        not s & t and _masks_alternate(s, t, p.n) for s in pb for t in qb
    )


def leq(p: Partition, q: Partition) -> bool:
    """Refinement order: every part of p lies inside a part of q."""
    if p.n != q.n:
        raise UniverseMismatch(f"partitions over different universes: {p.n} vs {q.n}")
    for part in p.parts:
        low = part & -part
        container = q.part_containing(low.bit_length())
        if part & ~container:
            return False
    return True


def rank(p: Partition) -> int:
    return p.rank


# -- Kreweras duality ---------------------------------------------------


def kreweras_dual(p: Partition, orientation: str = "clockwise") -> Partition:
    """The Kreweras complement of a non-crossing partition.

    The clockwise construction walks successors: starting from e, the next
    element of e's dual part is the predecessor, inside the part of `p`
    that contains e+1, of the element e+1 (parts are traversed in
    increasing cyclic order).  The cycles of that walk are the dual parts.
    "counterclockwise" is the same construction conjugated by the
    reflection i -> n+1-i; the two differ by that reflection.
    """
    require_noncrossing(p)
    if orientation == "counterclockwise":
        g = Symmetry.reflection(p.n, 0)  # fixes 1, maps i -> n+2-i
        return apply_symmetry(kreweras_dual(apply_symmetry(p, g)), g)
    if orientation != "clockwise":
        raise ValueError(f"unknown orientation {orientation!r}")
    n = p.n
    pred_in_part = {}
    for part in p.parts:
        elems = elements_of(part)
        for i, e in enumerate(elems):
            pred_in_part[elems[(i + 1) % len(elems)]] = e
    remaining = set(range(1, n + 1))
    parts = []
    while remaining:
        start = min(remaining)
        cycle = [start]
        e = pred_in_part[start % n + 1]
        while e != start:
            cycle.append(e)
            e = pred_in_part[e % n + 1]
        remaining.difference_update(cycle)
        parts.append(mask_of(cycle))
    return Partition(n, tuple(parts))


def kreweras_dual_via_regions(p: Partition) -> Partition:
    """Independent construction of the complement via the interleaved circle.

    Place a copy e' of each element between e and e+1 (element e at
    position 2e-1, copy e' at position 2e on a 2n circle).  Two copies
    i', j' lie in the same dual part exactly when no part of `p` separates
    them, i.e. when the pair {2i, 2j} does not alternate with any part of
    `p` read on odd positions.  This is the coarsest partition of the
    copies whose union with `p` stays non-crossing on the 2n circle.
    """
    require_noncrossing(p)
    n = p.n
    odd = {part: mask_of(2 * e - 1 for e in elements_of(part)) for part in p.parts}
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(1, n + 1), 2):
        pair = 1 << (2 * i - 1) | 1 << (2 * j - 1)  # positions 2i, 2j
        if not any(_masks_alternate(pair, om, 2 * n) for om in odd.values()):
            parent[find(i)] = find(j)
    groups: dict[int, int] = {}
    for e in range(1, n + 1):
        r = find(e)
        groups[r] = groups.get(r, 0) | 1 << (e - 1)
    return Partition(n, tuple(groups.values()))


# -- lattice operations -------------------------------------------------


def pi_join(p: Partition, q: Partition) -> Partition:
    """Join in the full partition lattice (may be crossing)."""
    if p.n != q.n:
        raise UniverseMismatch(f"partitions over different universes: {p.n} vs {q.n}")
    parent = list(range(p.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in itertools.chain(p.parts, q.parts):
        elems = elements_of(part)
        for e in elems[1:]:
            parent[find(elems[0])] = find(e)
    groups: dict[int, int] = {}
    for e in range(1, p.n + 1):
        r = find(e)
        groups[r] = groups.get(r, 0) | 1 << (e - 1)
    return Partition(p.n, tuple(groups.values()))


def pi_meet(p: Partition, q: Partition) -> Partition:
    """Meet in the full partition lattice: nonempty pairwise intersections."""
    if p.n != q.n:
        raise UniverseMismatch(f"partitions over different universes: {p.n} vs {q.n}")
    parts = [a & b for a in p.parts for b in q.parts if a & b]
    return Partition(p.n, tuple(parts))


def nc_join(p: Partition, q: Partition) -> Partition:
    """Join in the non-crossing lattice: pi_join, then merge crossing parts.

    Crossing parts of any coarsening must share a part, so repeatedly
    merging the first crossing pair converges to the finest non-crossing
    partition above pi_join(p, q), independent of merge order.
    """
    parts = list(pi_join(p, q).parts)
    merged = True
    while merged:
        merged = False
        for (i, s), (j, t) in itertools.combinations(enumerate(parts), 2):
            if not s & t and _masks_alternate(s, t, p.n):
                parts[i] = s | t
                del parts[j]
                merged = True
                break
    return Partition(p.n, tuple(parts))


# -- dihedral symmetry --------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """One of the 2n rotations/reflections of the labeled circle.

    `perm[e-1]` is the image of element e.
    """

    n: int
    perm: tuple[int, ...]
    name: str

    @classmethod
    def rotation(cls, n: int, k: int) -> Symmetry:
        return cls(n, tuple((e - 1 + k) % n + 1 for e in range(1, n + 1)), f"r{k % n}")

    @classmethod
    def reflection(cls, n: int, c: int) -> Symmetry:
        return cls(n, tuple((c - (e - 1)) % n + 1 for e in range(1, n + 1)), f"s{c % n}")

    def __call__(self, e: int) -> int:
        return self.perm[e - 1]

    def apply_mask(self, mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << (self.perm[low.bit_length() - 1] - 1)
            mask ^= low
        return out


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> tuple[Symmetry, ...]:
    rot = [Symmetry.rotation(n, k) for k in range(n)]
    ref = [Symmetry.reflection(n, c) for c in range(n)]
    return tuple(rot + ref)


def apply_symmetry(p: Partition, g: Symmetry) -> Partition:
    if p.n != g.n:
        raise UniverseMismatch(f"symmetry over universe {g.n} applied to partition over {p.n}")
    return Partition(p.n, tuple(g.apply_mask(m) for m in p.parts))


def orbit(p: Partition) -> tuple[Partition, ...]:
    """The distinct dihedral images of p, sorted canonically."""
    images = {apply_symmetry(p, g).sort_key(): apply_symmetry(p, g) for g in dihedral_group(p.n)}
    return tuple(images[k] for k in sorted(images))


def canonical_form(p: Partition) -> Partition:
    """Lexicographically least dihedral image — the orbit's representative."""
    return min(
        (apply_symmetry(p, g) for g in dihedral_group(p.n)),
        key=Partition.sort_key,
    )


# -- text notation ------------------------------------------------------


def _parse_partition(n: int, text: str, offset: int = 0) -> Partition:
    """Parse block notation like "12,46"; singletons are implied."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"universe size must be in 1..{MAX_N}")
    seen = 0
    blocks: list[int] = []
    current = 0
    current_size = 0
    start = offset
    for i, ch in enumerate(text):
        pos = offset + i
        if ch == ",":
            if current_size < 2:
                raise NotationError("block needs at least two elements", start)
            blocks.append(current)
            current, current_size, start = 0, 0, pos + 1
        elif ch.isdigit():
            e = int(ch)
            if e == 0:
                raise NotationError("element 0 does not exist", pos)
            if e > n:
                raise NotationError(f"element {e} outside universe 1..{n}", pos)
            bit = 1 << (e - 1)
            if seen & bit:
                raise NotationError(f"element {e} appears twice", pos)
            seen |= bit
            current |= bit
            current_size += 1
        else:
            raise NotationError(f"unexpected character {ch!r}", pos)
    if current_size == 1 or (current_size == 0 and blocks):
        raise NotationError("block needs at least two elements", start)
    if current:
        blocks.append(current)
    return Partition.from_blocks(n, blocks)
