import math
from collections import deque

from ncpverify.apartments import (
    DominanceReport, NCSpanningTree, apartment_contains, cond_iv_prime,
    dominant_vertex, dominant_vertices, enumerate_nc_spanning_trees,
    spanning_trees, tree_membership_bits,
)
from ncpverify.chains import Chain
from ncpverify.core import Partition
from ncpverify.lattice import catalogue

# counts and formula
for n in range(3, 8):
    trees = list(enumerate_nc_spanning_trees(n))
    formula = math.comb(3 * n - 3, n - 1) // (2 * n - 1)
    assert len(trees) == formula, (n, len(trees), formula)
    assert len(set(t.edges for t in trees)) == len(trees)
    for t in trees[:50]:
        NCSpanningTree(t.n, t.edges)  # re-validate a sample through the checked path
    print(f"n={n}: {len(trees)} trees (formula {formula})")
assert len(list(enumerate_nc_spanning_trees(4))) == 12
assert len(spanning_trees(7)) == 1428

# the path tree is emitted
path7 = tuple((i, i + 1) for i in range(1, 7))
assert any(t.edges == path7 for t in spanning_trees(7))
# lexicographic order, star first
assert spanning_trees(7)[0].edges == tuple((1, b) for b in range(2, 8))
seqs = [t.edges for t in spanning_trees(7)]
assert seqs == sorted(seqs)

# notation round trip
t = NCSpanningTree.from_text(7, "1-3,3-5,5-6,6-7,1-2,3-4")
assert t.text() == "1-2,1-3,3-4,3-5,5-6,6-7"
assert NCSpanningTree.from_text(7, t.text()) == t

# spec'd membership examples
path = NCSpanningTree(7, path7)
assert apartment_contains(path, Partition.from_text(7, "123"))
assert not apartment_contains(path, Partition.from_text(7, "13"))
witness = NCSpanningTree.from_text(7, "1-3,3-5,1-2,3-4,5-6,6-7")
assert apartment_contains(witness, Partition.from_text(7, "135"))

# oracle: edge-count criterion vs BFS-connectivity per part, exhaustive n=4,5
for n in (4, 5):
    cat = catalogue(n)
    for tree in spanning_trees(n):
        adj = {e: [] for e in range(1, n + 1)}
        for a, b in tree.edges:
            adj[a].append(b)
            adj[b].append(a)
        for p in cat.partitions:
            expected = True
            for mask in p.parts:
                els = [e for e in range(1, n + 1) if mask >> (e - 1) & 1]
                if len(els) == 1:
                    continue
                inside = set(els)
                seen = {els[0]}
                queue = deque([els[0]])
                while queue:
                    v = queue.popleft()
                    for w in adj[v]:
                        if w in inside and w not in seen:
                            seen.add(w)
                            queue.append(w)
                if seen != inside:
                    expected = False
                    break
            assert apartment_contains(tree, p) == expected, (tree.text(), p.text())
print("edge-count criterion matches BFS oracle exhaustively for n=4,5")

# dominance examples from the contract
rpt = dominant_vertex(Chain.from_text(7, "13<13457"))
assert rpt == DominanceReport(None, 1428), rpt
assert cond_iv_prime(Chain.from_text(7, "13<13457")) is True

single = Chain.from_text(7, "1234")
rpt = dominant_vertex(single)
assert rpt.dominant == single.members[0] and rpt.checked_trees == 1428

rpt = dominant_vertex(Chain.from_text(7, "12<12,34"))
assert rpt.dominant == Partition.from_text(7, "12,34"), rpt

# "14" is its own dominant vertex and still fails the weakened condition
rpt = dominant_vertex(Chain.from_text(7, "14"))
assert rpt.dominant == Partition.from_text(7, "14")
assert cond_iv_prime(Chain.from_text(7, "14")) is False

# membership bitset sanity: every tree contains every single chord of itself
tree0 = spanning_trees(7)[0]
for a, b in tree0.edges:
    p = Partition.from_text(7, f"{a}{b}")
    assert tree_membership_bits(p) >> 0 & 1

# uniqueness quick scan on a small corpus
for text in ["13<13457", "12<12,34", "14", "24<246", "13<123<1234", "12<123,56"]:
    assert len(dominant_vertices(Chain.from_text(7, text))) <= 1, text

print("ALL SMOKE5 OK")
