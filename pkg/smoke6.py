"""Independent (package-free) check of literal condition III for '123,46', n=7,
plus a full-direction survey of criterion-vs-brute disagreements using package code."""
from __future__ import annotations

import itertools

N = 7


# ---- fully independent machinery (sets of frozensets, no package imports) ----

def all_set_partitions(n):
    # restricted growth strings
    def rec(prefix, mx):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for v in range(mx + 2):
            prefix.append(v)
            yield from rec(prefix, max(mx, v))
            prefix.pop()

    for rgs in rec([], -1):
        blocks = {}
        for idx, v in enumerate(rgs):
            blocks.setdefault(v, set()).add(idx + 1)
        yield frozenset(frozenset(b) for b in blocks.values())


def is_noncrossing(p):
    for a, b, c, d in itertools.combinations(range(1, N + 1), 4):
        for x in p:
            for y in p:
                if x is not y and a in x and c in x and b in y and d in y:
                    return False
    return True


def leq(p, q):
    # p finer-or-equal q: every part of p inside a part of q
    return all(any(part <= big for big in q) for part in p)


def parts_cross(s, t):
    if s & t or len(s) < 2 or len(t) < 2:
        return False
    for a, c in itertools.combinations(sorted(s), 2):
        for b, d in itertools.combinations(sorted(t), 2):
            if a < b < c < d or b < a < d < c:
                return True
    return False


def partitions_cross(p, q):
    return any(parts_cross(s, t) for s in p for t in q)


def rank(p):
    return N - len(p)


NC = [p for p in all_set_partitions(N) if is_noncrossing(p)]
print("independent |NC(7)| =", len(NC))

chain = [frozenset({frozenset({1, 2, 3}), frozenset({4, 6}),
                    frozenset({5}), frozenset({7})})]

windows = []
lo = None
for member in chain:
    windows.append((lo, member))
    lo = member
windows.append((lo, None))

found = []
for wlo, whi in windows:
    pool = [p for p in NC
            if 1 <= rank(p) <= N - 2
            and (wlo is None or (leq(wlo, p) and p != wlo))
            and (whi is None or (leq(p, whi) and p != whi))]
    for pa, pb in itertools.combinations_with_replacement(pool, 2):
        if partitions_cross(pa, pb):
            found.append((wlo, whi, pa, pb))

print("independent literal-III pairs for '123,46':", len(found))
for w in found[:5]:
    print("  window", w[0], w[1], "pair", w[2], w[3])

# ---- package cross-check + full survey ----
from ncpverify.chains import Chain, cond_iii_bruteforce, cond_iii_criterion, dual_chain
from ncpverify.enumeration import enumerate_chains
from ncpverify.fixtures import load_fixtures

c = Chain.from_text(7, "123,46")
print("package: criterion =", cond_iii_criterion(c), " brute =", cond_iii_bruteforce(c))

crit_only = brute_only = agree = 0
examples_brute_only = []
for ch in enumerate_chains(7):
    ct = cond_iii_criterion(ch)
    bt = cond_iii_bruteforce(ch)
    if ct == bt:
        agree += 1
    elif ct:
        crit_only += 1
    else:
        brute_only += 1
        if len(examples_brute_only) < 5:
            examples_brute_only.append(ch.text())
print(f"survey over all chains: agree={agree} crit_only={crit_only} brute_only={brute_only}")
print("brute_only examples:", examples_brute_only)

fx = load_fixtures()
bad = []
for case in fx.cases:
    for text in case.chains:
        ch = Chain.from_text(7, text)
        for side, cc in (("F", ch), ("F*", dual_chain(ch))):
            ct, bt = cond_iii_criterion(cc), cond_iii_bruteforce(cc)
            if ct != bt:
                bad.append((case.case_id, text, side, ct, bt))
print("fixture disagreements (case, chain, side, crit, brute):")
for row in bad:
    print("  ", row)
