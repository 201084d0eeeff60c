import copy
import json

from ncpverify.chains import Chain
from ncpverify.condition4 import RefutationCertificate, pattern_refute
from ncpverify.replay import ReplayResult, replay_certificate

N = 7

CASES = [
    "12,46", "1246", "12<123,56", "16<12346", "23<12346", "12<12356",
    "56<12356", "16<16,34<123456",
    # non-forced styles (emptiness via pattern exclusions alone)
    "13", "14", "124", "12,34", "12,35", "12,37", "12,45",
    "1235", "1245", "123,45", "123,46", "12,34,56",
    "13<123", "12<124", "14<124", "24<124",
    "13<1234", "14<1234", "12<123,45", "13<123,45", "23<123,45", "13<123,56",
    "15<12345", "12<12346", "16<12356", "56<1234,56", "57<1234,57",
    "67<1235,67", "67<1245,67",
    "13<123456", "16<123456", "24<123456", "26<123456",
    "12<12345,67", "15<12345,67", "23<12345,67", "67<12345,67",
    "56<1234,567", "57<1234,567",
    "124<1234", "13<123<1234", "14<124<1234", "24<124<1234",
    "12<126<123456", "16<126<123456",
    "12<12,34<123456", "12<12,45<123456", "12<12,56<123456",
    "16<16,23<123456", "23<23,45<123456",
]

ok_count = 0
for text in CASES:
    cert = pattern_refute(Chain.from_text(N, text))
    assert cert is not None, text
    r = replay_certificate(cert)
    assert r.ok, (text, r.failure)
    assert r.steps_checked == len(cert.steps), text
    # JSON round trip replays too
    r2 = replay_certificate(cert.to_json())
    assert r2 == r, text
    ok_count += 1
print(f"replayed {ok_count} engine certificates OK")

# strict-mode certificate replays with its flag honoured
cert_strict = pattern_refute(Chain.from_text(N, "13"), strict=True)
if cert_strict is not None:
    assert replay_certificate(cert_strict).ok
    print("strict certificate replays OK")
else:
    print("strict refutation of 13 returned None (no certificate)")

# sane refusals
assert not replay_certificate("{}").ok
assert not replay_certificate(json.dumps({"chain": "13", "n": 7, "strict": False,
                                          "steps": [], "conclusion": "condition IV fails"})).ok

base = pattern_refute(Chain.from_text(N, "12,46"))
payload = json.loads(base.to_json())

def tampered(mutate, expect_word=None):
    data = copy.deepcopy(payload)
    mutate(data)
    r = replay_certificate(json.dumps(data))
    assert not r.ok, (data["steps"], r)
    if expect_word:
        assert expect_word in r.failure, r.failure
    return r

# 1. widen a pattern exclusion list
tampered(lambda d: d["steps"][0]["excluded"].append(6), "excludes")
# 2. claim a pattern that does not hold for the chain
def wrong_pattern(d):
    d["steps"][0]["pattern"] = "(2,+,3)(2)"
tampered(wrong_pattern, "does not hold")
# 3. forge a forced block whose companions are not excluded
def forge_block(d):
    d["steps"][2]["block"] = [3, 6]
tampered(forge_block, "excluded")
# 4. reorder: move the forced block before its justifying exclusions
def reorder(d):
    d["steps"].insert(0, d["steps"].pop(2))
tampered(reorder)
# 5. change the mismatch conclusion's blocks
def fake_existing(d):
    d["steps"][-1]["existing"] = [5, 7]
tampered(fake_existing)
# 6. drop the conflict step
def drop_conflict(d):
    d["steps"].pop()
tampered(drop_conflict, "without a contradiction")
# 7. append a step after the conflict
def trailing(d):
    d["steps"].append({"kind": "propagate", "source": 3, "target": 5, "block": [3, 5]})
tampered(trailing, "continue after")
# 8. wrong conclusion string
def wrong_conclusion(d):
    d["conclusion"] = "condition IV holds"
tampered(wrong_conclusion, "conclusion")
# 9. propagate to an element outside the block
def bad_propagate(d):
    d["steps"][3]["target"] = 6
tampered(bad_propagate)
# 10. rewrite the chain so the patterns no longer hold
def wrong_chain(d):
    d["chain"] = "12,35"
tampered(wrong_chain)
# 11. mismatch conflict where blocks agree
def agreeing(d):
    d["steps"][-1]["incoming"] = d["steps"][-1]["existing"]
tampered(agreeing)

# crossing-style tamper checks on case 16
cert16 = pattern_refute(Chain.from_text(N, "23<12346"))
p16 = json.loads(cert16.to_json())
assert p16["steps"][-1]["conflict"] == "forced-crossing"

def uncross(d):
    d["steps"][-1]["blocks"] = [[1, 6], [2, 7]]
data = copy.deepcopy(p16); uncross(data)
r = replay_certificate(json.dumps(data))
assert not r.ok, r

def shared_element(d):
    d["steps"][-1]["blocks"][0] = [5, 6]
data = copy.deepcopy(p16); shared_element(data)
assert not replay_certificate(json.dumps(data)).ok

# emptiness-style tamper: remove one exclusion so coverage fails
certE = pattern_refute(Chain.from_text(N, "16<12346"))
pE = json.loads(certE.to_json())
assert pE["steps"][-1]["conflict"] == "emptiness"
data = copy.deepcopy(pE)
data["steps"].pop(0)
assert not replay_certificate(json.dumps(data)).ok

# forcedIndex eviction tamper on a certificate that has one
cert38 = pattern_refute(Chain.from_text(N, "16<16,34<123456"))
p38 = json.loads(cert38.to_json())
evict_steps = [s for s in p38["steps"] if s.get("kind") == "exclusion" and "forcedIndex" in s]
assert evict_steps, "case 38 should contain a forced-collision eviction"
data = copy.deepcopy(p38)
for s in data["steps"]:
    if s.get("kind") == "exclusion" and "forcedIndex" in s:
        s["forcedIndex"] = 4  # index 4 has no forced block at that point
        s["excluded"] = [4]
        break
assert not replay_certificate(json.dumps(data)).ok

print("all tamper mutations rejected OK")
print("ALL SMOKE4 OK")
