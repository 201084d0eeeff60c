import json

from ncpverify.chains import Chain
from ncpverify.condition4 import (
    PatternHit,
    RefutationCertificate,
    cond_iv,
    detect_patterns,
    empty_companion_index,
    exclusion_elements,
    pattern_exclusions,
    pattern_refute,
    verify_witness,
)

C = lambda t: Chain.from_text(7, t)
H = PatternHit.from_text

# round trip + range arithmetic
assert H("(4,-,3)(6)").text() == "(4,-,3)(6)"
assert exclusion_elements(7, H("(4,-,3)(6)")) == (6, 7, 1, 2)
assert exclusion_elements(7, H("(4,+,7)(6)")) == (1, 2, 3, 4)
assert exclusion_elements(7, H("(1,+,3)(1)")) == (4,)

# quoted hits reproduced
for text, quoted in [
    ("12,46", ["(1,+,3)(1)", "(4,-,3)(6)", "(4,+,7)(6)", "(1,-,7)(1)"]),
    ("12<12346", ["(2,+,3)(1)", "(4,-,3)(6)"]),
    ("24<123456", ["(2,+,7)(2)", "(4,-,7)(5)"]),
    ("13", ["(3,+,6)(1)", "(3,-,6)(1)"]),
    ("23<23,45<123456", ["(4,+,7)(7)", "(4,-,7)(7)"]),
]:
    hits = {h.text() for h in detect_patterns(C(text))}
    missing = [q for q in quoted if q not in hits]
    assert not missing, (text, missing)
print("quoted hits reproduced")

# exclusion tables
t = pattern_exclusions(C("12,46"))
assert t.allowed_companions(3) == 1 << 4  # {5}
assert t.excluded_at(3) == sum(1 << (e - 1) for e in (4, 6, 7, 1, 2))
t13 = pattern_exclusions(C("13"))
assert t13.allowed_companions(6) == 0
t2446 = pattern_exclusions(C("24<246"))
assert all(t2446.allowed_companions(i) for i in range(1, 8))
print("exclusion tables OK")

# emptiness indices
assert empty_companion_index(C("13")) == 5
assert empty_companion_index(C("12<12346")) == 3
assert empty_companion_index(C("24<246")) is None
print("emptiness indices OK")

# cond IV
r = cond_iv(C("24<246"))
assert r.satisfied and verify_witness(C("24<246"), r.witness)
print("24<246 witness:", r.witness.text(), "checked", r.checked)
quoted_witness = C("13<13,57<13,567<13,4567<134567")
assert verify_witness(C("24<246"), quoted_witness)
assert not cond_iv(C("14")).satisfied
assert not cond_iv(C("24")).satisfied
for text in ("24<246", "14", "12,46", "23<12346", "57"):
    a = cond_iv(C(text), method="index")
    b = cond_iv(C(text), method="dfs")
    assert a.satisfied == b.satisfied, text
    assert (a.witness is None) == (b.witness is None)
    if a.witness:
        assert a.witness.text() == b.witness.text(), text
print("index/dfs agree")

# certificates
cert = pattern_refute(C("12,46"))
assert cert is not None
print("case-5 style certificate steps:")
for s in cert.steps:
    print("  ", s)
kinds = [s.get("conflict") for s in cert.steps if s["kind"] == "conflict"]
assert kinds == ["forced-mismatch"], kinds

cert16 = pattern_refute(C("23<12346"))
print("case-16 style certificate steps:")
for s in cert16.steps:
    print("  ", s)
assert cert16.steps[-1]["conflict"] == "forced-crossing"

for text in ("16<12346", "12<123,56", "12<12356", "56<12356"):
    c = pattern_refute(C(text))
    assert c is not None and c.steps[-1]["conflict"] == "emptiness", text
print("emptiness-style cases as expected")

cert38 = pattern_refute(C("16<16,34<123456"))
print("case-38 certificate conflict:", cert38.steps[-1])
cert7 = pattern_refute(C("1246"))
print("case-7 certificate conflict:", cert7.steps[-1])

assert pattern_refute(C("24<246")) is None

# JSON round trip
again = RefutationCertificate.from_json(cert.to_json())
assert again == cert
print("ALL SMOKE3 OK")
