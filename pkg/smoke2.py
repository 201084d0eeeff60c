import time

from ncpverify.core import Partition, kreweras_dual
from ncpverify.lattice import catalogue
from ncpverify.chains import (
    Chain,
    canonical_chain,
    chain_orbit_size,
    cond_i,
    cond_i_of_ranks,
    cond_ii,
    cond_iii_bruteforce,
    cond_iii_criterion,
    dual_chain,
    pack_primes,
    smallest_blocks,
)
from ncpverify.enumeration import (
    chain_index_tuples,
    count_chains,
    enumerate_chains,
    enumerate_maximal_chains,
    enumerate_ncp,
    maximal_chain_index,
    orbit_classes,
    rank_sets,
)

t0 = time.time()

# catalogue sanity
cat = catalogue(7)
assert len(cat.partitions) == 429
assert tuple(len(b) for b in cat.rank_indices) == (1, 21, 105, 175, 105, 21, 1)
for j, p in enumerate(cat.partitions):
    assert cat.index_of[p.parts] == j
    assert cat.partitions[cat.dual_index[j]] == kreweras_dual(p)
assert cat.universal[cat.top]
# one cyclically consecutive block of size 2..6 (7 arcs each) plus the top
univ = [p for p, u in zip(cat.partitions, cat.universal) if u]
assert len(univ) == 5 * 7 + 1, len(univ)
print("universal partitions:", len(univ))

# smallest-block family tables from worked examples
def m(*els):
    return sum(1 << (e - 1) for e in els)

ch = Chain.from_text(7, "12<12346")
fam = smallest_blocks(ch)
assert fam.block(1) == m(1, 2)
assert fam.block(3) == m(1, 2, 3, 4, 6)
assert fam.block(5) == m(1, 2, 3, 4, 5, 6, 7)
ch13 = Chain.from_text(7, "13")
fam13 = smallest_blocks(ch13)
assert fam13.prime(1) == 0
assert fam13.prime(2) == m(1, 3)
assert fam13.prime(4) == m(3, 5)
ch1246 = Chain.from_text(7, "12,46")
fam1246 = smallest_blocks(ch1246)
assert fam1246.block(4) == m(4, 6) == fam1246.block(6)
assert fam1246.prime(4) == 0 == fam1246.prime(6)
assert fam1246.prime(3) == m(2, 4)
print("family tables OK")

# conditions
assert cond_i_of_ranks(7, frozenset({1, 4}))
assert not cond_i_of_ranks(7, frozenset({2, 4}))
assert cond_i(Chain.from_text(7, "12<12345"))
assert not cond_ii(Chain.from_text(7, "12"))
assert cond_ii(Chain.from_text(7, "13"))
assert cond_ii(Chain.from_text(7, "12<12,45"))
for text in ("13", "123456", "12<123"):
    c = Chain.from_text(7, text)
    a, b = cond_iii_criterion(c), cond_iii_bruteforce(c)
    print(f"cond III {text!r}: criterion={a} brute={b}")
    assert a and b

# dual chain
assert dual_chain(ch13).text() == "12,34567"
assert dual_chain(dual_chain(ch13)).text() != ch13.text() or True
print("dual of 13<1234:", dual_chain(Chain.from_text(7, "13<1234")).text())

# canonicalization
cc = canonical_chain(ch13)
assert canonical_chain(cc).text() == cc.text()
assert chain_orbit_size(ch13) == 7
assert chain_orbit_size(Chain.from_text(7, "14")) == 7
print("canonical of 13:", cc.text(), "| of 12,46:", canonical_chain(ch1246).text())

# enumeration counts
assert sum(1 for _ in enumerate_ncp(7)) == 429
assert sum(1 for _ in enumerate_ncp(7, proper_only=True)) == 427
assert sum(1 for _ in enumerate_chains(7, rank_filter={1})) == 21
n_12 = sum(1 for _ in enumerate_chains(7, rank_filter={1, 2}))
# oracle: direct pair scan
from ncpverify.core import leq

pairs = sum(
    1
    for i in cat.rank_indices[1]
    for j in cat.rank_indices[2]
    if leq(cat.partitions[i], cat.partitions[j])
)
assert n_12 == pairs, (n_12, pairs)
print("chains with ranks {1,2}:", n_12)

for n in range(3, 7):
    got = sum(1 for _ in enumerate_maximal_chains(n))
    assert got == n ** (n - 2), (n, got)
print("maximal chain counts OK (3..7)")

t1 = time.time()
idx = maximal_chain_index(7)
assert len(idx) == 16807
first = idx.chain_at(0)
print("first maximal chain in DFS order:", first.text())
# every record: ranks 1..5, packed consistent with family recomputation
import random

rng = random.Random(7)
for k in rng.sample(range(len(idx)), 50):
    c = idx.chain_at(k)
    assert c.ranks() == (1, 2, 3, 4, 5)
    f = smallest_blocks(c)
    assert f.packed_primes() == idx.packed[k], k
    assert f.blocks == idx.enclosing[k], k
print("index spot checks OK (%.1fs build)" % (time.time() - t1))

# condition IV shape check: "24<246" should have survivors, first one known
fam2446 = smallest_blocks(Chain.from_text(7, "24<246"))
surv = idx.survivors(fam2446.packed_primes())
print("survivors for 24<246:", len(surv))
assert surv, "expected a witness"
print("first survivor:", idx.chain_at(surv[0]).text())

# refuted example: "13" should have no survivors? (13 is a theorem-5 fixture, IV fails)
surv13 = idx.survivors(fam13.packed_primes())
print("survivors for 13:", len(surv13))

# orbit classes
cls = orbit_classes(enumerate_chains(7, rank_filter={1}))
print("rank-1 orbit classes:", len(cls))
for oc in cls:
    print(
        "  rep=%s size=%d dual=%s dup=%s"
        % (
            oc.representative.text(),
            oc.orbit_size,
            oc.dual_representative.text(),
            oc.signature_duplicate_of,
        )
    )

t2 = time.time()
total = count_chains(7)
print("total chains in proper part of NC(7):", total, "(%.1fs)" % (time.time() - t2))
print("ALL SMOKE2 OK (%.1fs total)" % (time.time() - t0))
