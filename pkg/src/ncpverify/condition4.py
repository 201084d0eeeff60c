"""Condition IV: maximal-chain search, neighbor patterns, refutations.

A chain F satisfies condition IV when some maximal chain C (one member
per rank 1..n-2) has C_i' disjoint from F_i' at every index i.  Deciding
that is a finite search; this module adds the machinery that turns a
negative answer into a short, independently replayable argument:

* patterns  -- fixed shapes of containments among consecutive F_i
  (``(k,+,i)(m)``: clause m of the k-step family read forward from i;
  ``-`` reads backward).  Detection is exhaustive over k in 1..4, both
  directions, all base indices, under a non-strict reading of the
  containments (``strict=True`` upgrades them to proper ones).
* exclusions -- a pattern (k,+,i) forbids i+1..i+k from C_i, and
  (k,-,i) forbids i-k..i-1, for every C that condition IV could accept.
  Unioning over hits gives each index an allowed-companion set.
* certificates -- when the allowed sets alone (emptiness), or combined
  with forcing (a singleton allowed set pins C_i to a two-element
  block, which propagates to its partner), reach a contradiction, the
  deduction sequence is recorded step by step.  The replay module
  re-checks such certificates from scratch.

The search itself runs two ways: against a precomputed index of all
n^(n-2) maximal chains (n <= 7; one AND per chain), or as a pruned
depth-first merge search (n <= 9).  Both scan in canonical partition
order, so the reported witness is deterministic and identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from ncpverify.chains import Chain, smallest_blocks
from ncpverify.core import Partition, _masks_alternate, elements_of
from ncpverify.enumeration import _merge_children, maximal_chain_index

# Clause tables: CLAUSES[k][m-1] is the tuple of relations linking
# F_i to F_{i+1}, F_{i+1} to F_{i+2}, ... (forward; backward mirrors).
# ">=" means contains, "<=" means is contained in, "=" means equal.
CLAUSES: dict[int, tuple[tuple[str, ...], ...]] = {
    1: ((">=",),),
    2: (
        ("=",),
        (">=", ">="),
    ),
    3: (
        ("=", ">="),
        ("=", "<="),
        (">=", "="),
        (">=", ">=", ">="),
    ),
    4: (
        ("=", "="),
        ("=", ">=", ">="),
        ("=", "<=", ">="),
        ("=", "<=", "<="),
        (">=", "=", ">="),
        (">=", "=", "<="),
        (">=", ">=", "="),
        (">=", ">=", ">=", ">="),
    ),
}

MAX_PATTERN_LENGTH = max(CLAUSES)

_HIT_RE = re.compile(r"\((\d+),([+-]),(\d+)\)\((\d+)\)\Z")


@dataclass(frozen=True)
class PatternHit:
    """One satisfied clause: family (k, sign), base index i, clause m."""

    k: int
    sign: str
    i: int
    variant: int

    def __post_init__(self):
        if self.k not in CLAUSES:
            raise ValueError(f"pattern length {self.k} outside 1..{MAX_PATTERN_LENGTH}")
        if self.sign not in ("+", "-"):
            raise ValueError(f"pattern sign must be + or -, got {self.sign!r}")
        if not 1 <= self.variant <= len(CLAUSES[self.k]):
            raise ValueError(
                f"clause {self.variant} outside 1..{len(CLAUSES[self.k])}"
                f" for length {self.k}"
            )

    def text(self) -> str:
        return f"({self.k},{self.sign},{self.i})({self.variant})"

    @classmethod
    def from_text(cls, text: str) -> PatternHit:
        m = _HIT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a pattern designator: {text!r}")
        return cls(int(m[1]), m[2], int(m[3]), int(m[4]))


def _hit_order(hit: PatternHit):
    return (hit.i, hit.sign, hit.k, hit.variant)


def _relation_holds(rel: str, a: int, b: int, strict: bool) -> bool:
    if rel == "=":
        return a == b
    if rel == ">=":
        return a | b == a and not (strict and a == b)
    return a | b == b and not (strict and a == b)


def detect_patterns(chain: Chain, strict: bool = False) -> tuple[PatternHit, ...]:
    """Every satisfied pattern clause of the chain's F-family."""
    fam = smallest_blocks(chain)
    return detect_pattern_hits(fam.n, fam.blocks, strict)


def detect_pattern_hits(
    n: int, blocks: tuple[int, ...], strict: bool = False
) -> tuple[PatternHit, ...]:
    hits = []
    for i in range(1, n + 1):
        for sign, step in (("+", 1), ("-", n - 1)):
            for k, variants in CLAUSES.items():
                for m, rels in enumerate(variants, 1):
                    if all(
                        _relation_holds(
                            rel,
                            blocks[(i - 1 + step * t) % n],
                            blocks[(i - 1 + step * (t + 1)) % n],
                            strict,
                        )
                        for t, rel in enumerate(rels)
                    ):
                        hits.append(PatternHit(k, sign, i, m))
    hits.sort(key=_hit_order)
    return tuple(hits)


def exclusion_elements(n: int, hit: PatternHit) -> tuple[int, ...]:
    """The companions a hit forbids from C_i, in cyclic order from the base."""
    if hit.sign == "+":
        offsets = range(1, hit.k + 1)
    else:
        offsets = range(-hit.k, 0)
    return tuple((hit.i - 1 + t) % n + 1 for t in offsets)


def exclusion_mask(n: int, hit: PatternHit) -> int:
    out = 0
    for e in exclusion_elements(n, hit):
        out |= 1 << (e - 1)
    return out


@dataclass(frozen=True)
class ExclusionTable:
    """Per-index union of pattern exclusions and the contributing hits."""

    n: int
    excluded: tuple[int, ...]
    contributing: tuple[tuple[PatternHit, ...], ...]

    def excluded_at(self, i: int) -> int:
        return self.excluded[i - 1]

    def allowed_companions(self, i: int) -> int:
        full = (1 << self.n) - 1
        return full & ~self.excluded[i - 1] & ~(1 << (i - 1))

    def hits_at(self, i: int) -> tuple[PatternHit, ...]:
        return self.contributing[i - 1]


def pattern_exclusions(chain: Chain, strict: bool = False) -> ExclusionTable:
    fam = smallest_blocks(chain)
    hits = detect_pattern_hits(fam.n, fam.blocks, strict)
    return _exclusions_of_hits(fam.n, hits)


def _exclusions_of_hits(n: int, hits) -> ExclusionTable:
    excluded = [0] * n
    contributing: list[list[PatternHit]] = [[] for _ in range(n)]
    for hit in hits:
        excluded[hit.i - 1] |= exclusion_mask(n, hit)
        contributing[hit.i - 1].append(hit)
    return ExclusionTable(
        n, tuple(excluded), tuple(tuple(c) for c in contributing)
    )


def empty_companion_index(chain: Chain) -> int | None:
    """Least index whose allowed-companion set is empty, if any.

    Such an index refutes condition IV outright: C_i must properly
    contain i (a maximal chain merges every part or leaves i a
    singleton throughout, and the latter collides with F_i' being
    nonempty whenever any pattern fires at i), yet every candidate
    companion is excluded.
    """
    table = pattern_exclusions(chain)
    for i in range(1, chain.n + 1):
        if table.excluded_at(i) and table.allowed_companions(i) == 0:
            return i
    return None


# -- the exhaustive decision ------------------------------------------------


@dataclass(frozen=True)
class WitnessOrRefutation:
    """Outcome of the maximal-chain search for one chain.

    ``witness`` is the first compatible maximal chain in canonical
    order, or None when the search exhausted all of them.  ``checked``
    counts maximal chains examined (index scan) or reached (pruned
    depth-first search).
    """

    satisfied: bool
    witness: Chain | None
    checked: int
    method: str


def cond_iv(chain: Chain, method: str = "auto") -> WitnessOrRefutation:
    n = chain.n
    if method == "auto":
        method = "index" if n <= 7 else "dfs"
    fam = smallest_blocks(chain)
    if method == "index":
        idx = maximal_chain_index(n)
        sig = fam.packed_primes()
        for pos, packed in enumerate(idx.packed):
            if packed & sig == 0:
                return WitnessOrRefutation(True, idx.chain_at(pos), pos + 1, "index")
        return WitnessOrRefutation(False, None, len(idx), "index")
    if method == "dfs":
        witness, checked = _search_compatible_maximal_chain(n, fam.primes)
        return WitnessOrRefutation(witness is not None, witness, checked, "dfs")
    raise ValueError(f"unknown method {method!r} (expected auto, index, or dfs)")


def _search_compatible_maximal_chain(n: int, primes: tuple[int, ...]):
    """Depth-first merge search pruned by neighbor disjointness.

    When a merge gives element e its first non-singleton block B, that
    block is C_e for every completion, so B & F_e' != 0 kills the whole
    branch.  Elements still singleton at the bottom rank n-2 member
    have C_e the full set, which forces F_e' to be empty.
    """
    members: list[Partition] = []
    checked = 0

    def grow(parts: tuple[int, ...]):
        nonlocal checked
        if len(members) == n - 2:
            checked += 1
            for p in parts:
                if not p & (p - 1) and primes[p.bit_length() - 1]:
                    return None
            return Chain._trusted(n, tuple(members))
        for child, a, b, merged in _merge_children(n, parts):
            violated = False
            for piece in (a, b):
                if not piece & (piece - 1) and merged & primes[piece.bit_length() - 1]:
                    violated = True
                    break
            if violated:
                continue
            members.append(Partition(n, child))
            found = grow(child)
            if found is not None:
                return found
            members.pop()
        return None

    witness = grow(tuple(1 << e for e in range(n)))
    return witness, checked


def verify_witness(chain: Chain, witness: Chain) -> bool:
    """Does the maximal chain actually certify condition IV for the chain?"""
    n = chain.n
    if witness.n != n or witness.ranks() != tuple(range(1, n - 1)):
        return False
    supply = smallest_blocks(witness).packed_primes()
    demand = smallest_blocks(chain).packed_primes()
    return supply & demand == 0


# -- refutation certificates -------------------------------------------------

CONCLUSION = "condition IV fails"


@dataclass(frozen=True)
class RefutationCertificate:
    """Ordered deduction record ending in a contradiction.

    Step records (JSON-ready dicts):

    * ``{"kind": "exclusion", "index": i, "excluded": [...],
      "pattern": "(4,-,3)(6)"}`` -- pattern exclusion of the listed
      companions from C_i;
    * ``{"kind": "exclusion", "index": i, "excluded": [x],
      "forcedIndex": x}`` -- x's forced block meets C_i's exclusions,
      so x itself cannot lie in C_i;
    * ``{"kind": "forced-block", "index": i, "block": [i, x]}`` -- all
      companions but x are excluded, pinning C_i;
    * ``{"kind": "propagate", "source": i, "target": x,
      "block": [i, x]}`` -- x inherits the same two-element block;
    * ``{"kind": "conflict", "conflict": "emptiness" | "forced-mismatch"
      | "forced-crossing", ...}`` -- the contradiction reached.
    """

    chain_text: str
    n: int
    strict: bool
    steps: tuple[dict, ...]
    conclusion: str = CONCLUSION

    def to_json(self) -> str:
        payload = {
            "chain": self.chain_text,
            "n": self.n,
            "strict": self.strict,
            "steps": list(self.steps),
            "conclusion": self.conclusion,
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> RefutationCertificate:
        data = json.loads(text)
        return cls(
            chain_text=data["chain"],
            n=data["n"],
            strict=data["strict"],
            steps=tuple(data["steps"]),
            conclusion=data["conclusion"],
        )


def pattern_refute(chain: Chain, strict: bool = False) -> RefutationCertificate | None:
    """Search for a contradiction among the exclusion sets, recording steps.

    Two phases.  First, if some index already has no allowed companion,
    that alone is a contradiction.  Second, indices with exactly one
    allowed companion force C_i to a two-element block; forced blocks
    propagate to their partners and shrink other allowed sets (a forced
    block overlapping C_j's exclusions evicts its owner from C_j),
    until a mismatch, a crossing, an emptied set, or a fixpoint.
    Returns None at a fixpoint: inconclusive, defer to the exhaustive
    search.  Never certifies a chain the exhaustive search satisfies.
    """
    n = chain.n
    table = pattern_exclusions(chain, strict=strict)
    steps: list[dict] = []
    emitted: set[int] = set()

    def emit_pattern_steps(i: int):
        if i in emitted:
            return
        emitted.add(i)
        for sign in ("+", "-"):
            cand = [h for h in table.hits_at(i) if h.sign == sign]
            if cand:
                hit = min(cand, key=lambda h: (-h.k, h.variant))
                steps.append(
                    {
                        "kind": "exclusion",
                        "index": i,
                        "excluded": list(exclusion_elements(n, hit)),
                        "pattern": hit.text(),
                    }
                )

    def certificate() -> RefutationCertificate:
        return RefutationCertificate(chain.text(), n, strict, tuple(steps))

    def emptiness(i: int) -> RefutationCertificate:
        emit_pattern_steps(i)
        steps.append({"kind": "conflict", "conflict": "emptiness", "index": i})
        return certificate()

    allowed = [table.allowed_companions(i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        if table.excluded_at(i) and allowed[i - 1] == 0:
            return emptiness(i)

    forced: dict[int, int] = {}
    while True:
        changed = False
        for i in range(1, n + 1):
            if i in forced or not table.excluded_at(i):
                continue
            a = allowed[i - 1]
            if a & (a - 1):
                # More than one companion left: evict those whose forced
                # block already collides with this index's exclusions.
                for x in elements_of(a):
                    if x in forced and forced[x] & table.excluded_at(i):
                        emit_pattern_steps(i)
                        steps.append(
                            {
                                "kind": "exclusion",
                                "index": i,
                                "excluded": [x],
                                "forcedIndex": x,
                            }
                        )
                        a &= ~(1 << (x - 1))
                        allowed[i - 1] = a
                        changed = True
                if a == 0:
                    return emptiness(i)
                if a & (a - 1):
                    continue
            x = a.bit_length()
            block = a | 1 << (i - 1)
            emit_pattern_steps(i)
            steps.append(
                {"kind": "forced-block", "index": i, "block": list(elements_of(block))}
            )
            for j in sorted(forced):
                other = forced[j]
                if block & other == 0 and _masks_alternate(block, other, n):
                    lo, hi = sorted(((i, block), (j, other)))
                    steps.append(
                        {
                            "kind": "conflict",
                            "conflict": "forced-crossing",
                            "indices": [lo[0], hi[0]],
                            "blocks": [
                                list(elements_of(lo[1])),
                                list(elements_of(hi[1])),
                            ],
                        }
                    )
                    return certificate()
            forced[i] = block
            changed = True
            if x in forced:
                if forced[x] != block:
                    steps.append(
                        {
                            "kind": "conflict",
                            "conflict": "forced-mismatch",
                            "index": x,
                            "existing": list(elements_of(forced[x])),
                            "incoming": list(elements_of(block)),
                            "source": i,
                        }
                    )
                    return certificate()
            else:
                steps.append(
                    {
                        "kind": "propagate",
                        "source": i,
                        "target": x,
                        "block": list(elements_of(block)),
                    }
                )
                forced[x] = block
        if not changed:
            return None
