"""Unit tests for partition/chain/maximal-chain enumeration and orbits."""

from __future__ import annotations

from ncpverify.chains import Chain, rank_set, smallest_blocks
from ncpverify.core import is_noncrossing, rank
from ncpverify.enumeration import (
    chain_from_indices,
    chain_index_tuples,
    count_chains,
    enumerate_chains,
    enumerate_maximal_chains,
    enumerate_ncp,
    maximal_chain_index,
    orbit_classes,
    rank_sets,
)
from ncpverify.lattice import catalogue


def _catalan(n: int) -> int:
    # independent recurrence: C_0 = 1, C_{m+1} = sum C_i * C_{m-i}
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def test_ncp_sizes_match_catalan():
    sizes = [sum(1 for _ in enumerate_ncp(n)) for n in range(1, 8)]
    assert sizes == [1, 2, 5, 14, 42, 132, 429]
    assert sizes == [_catalan(n) for n in range(1, 8)]


def test_enumerated_partitions_are_noncrossing_and_distinct():
    seen = set()
    for p in enumerate_ncp(6):
        assert is_noncrossing(p)
        assert p not in seen
        seen.add(p)
    assert len(seen) == 132


def test_maximal_chain_counts():
    for n in range(3, 8):
        assert len(maximal_chain_index(n)) == n ** (n - 2)
    assert len(maximal_chain_index(7)) == 16807


def test_maximal_chain_structure():
    index = maximal_chain_index(5)
    seen = set()
    for k in range(len(index)):
        chain = index.chain_at(k)
        assert chain.ranks() == (1, 2, 3)  # one member of each proper rank
        seen.add(chain.text())
    assert len(seen) == 125
    # streaming enumeration agrees with the index
    assert sorted(c.text() for c in enumerate_maximal_chains(5)) == sorted(seen)


def test_maximal_chain_enclosing_smallest_blocks():
    index = maximal_chain_index(4)
    for k in range(len(index)):
        chain = index.chain_at(k)
        fam = smallest_blocks(chain)
        assert index.enclosing[k] == tuple(fam.block(i) for i in range(1, 5))
        assert index.packed[k] == fam.packed_primes()


def test_chain_counts():
    assert count_chains(7) == 85099
    assert sum(1 for _ in enumerate_chains(7)) == 85099
    # small universes, hand-checkable: proper parts of NC(4) are the 12
    # partitions of ranks 1-2, and chains are single members plus
    # comparable rank-1 < rank-2 pairs
    chains4 = list(enumerate_chains(4))
    singles = [c for c in chains4 if len(c.members) == 1]
    pairs = [c for c in chains4 if len(c.members) == 2]
    assert len(singles) == 12
    assert all(len(c.members) in (1, 2) for c in chains4)
    for c in pairs:
        lo, hi = c.members
        assert rank(lo) == 1 and rank(hi) == 2


def test_rank_filtered_counts():
    allch = list(enumerate_chains(7))
    assert sum(1 for c in allch if rank_set(c).ranks == frozenset({1})) == 21
    assert sum(1 for c in allch if rank_set(c).ranks == frozenset({1, 2})) == 245


def test_rank_sets():
    sets7 = list(rank_sets(7))
    assert len(sets7) == 31  # nonempty subsets of {1..5}
    assert all(s and all(1 <= r <= 5 for r in s) for s in (set(x) for x in sets7))


def test_chain_index_tuples_roundtrip():
    cat = catalogue(5)
    tuples = list(chain_index_tuples(cat, (1, 2)))
    assert tuples
    for t in tuples:
        chain = chain_from_indices(cat, t)
        assert rank_set(chain).ranks == frozenset({1, 2})


def test_orbit_classes_rank_one():
    allch = list(enumerate_chains(7))
    r1 = [c for c in allch if rank_set(c).ranks == frozenset({1})]
    classes = orbit_classes(r1)
    reps = [(c.representative.text(), c.orbit_size, c.dual_representative.text()) for c in classes]
    assert reps == [
        ("67", 7, "234567"),
        ("57", 7, "12,34567"),
        ("47", 7, "123,4567"),
    ]
    assert sum(c.orbit_size for c in classes) == 21
    assert classes[0].signature_duplicate_of is None


def test_survivors_contains_witness():
    # the witness to a satisfied condition IV must itself survive the
    # exclusion sets computed from the chain's packed prime family
    from ncpverify.condition4 import cond_iv

    chain = Chain.from_text(7, "24<246")
    outcome = cond_iv(chain)
    assert outcome.satisfied
    index = maximal_chain_index(7)
    surviving = index.survivors(smallest_blocks(chain).packed_primes())
    texts = {index.chain_at(k).text() for k in surviving}
    assert outcome.witness.text() in texts
