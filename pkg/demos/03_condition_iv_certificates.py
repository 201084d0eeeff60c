"""Condition IV: exhaustive search, pattern refutations, replayable proofs.

Run:  python3 demos/03_condition_iv_certificates.py
"""

from __future__ import annotations

import json

from ncpverify.chains import Chain
from ncpverify.condition4 import cond_iv, detect_patterns, pattern_refute, verify_witness
from ncpverify.replay import replay_certificate


def main() -> None:
    refuted = Chain.from_text(7, "12,46")
    outcome = cond_iv(refuted)
    print(f"{refuted.text()!r}: condition IV satisfied = {outcome.satisfied}")
    print(f"  maximal chains examined: {outcome.checked}")
    hits = detect_patterns(refuted)
    print(f"  pattern hits detected: {len(hits)} (e.g. {hits[0].text()})")

    cert = pattern_refute(refuted)
    print("  a short propagation proof refutes it without the full search:")
    for step in cert.steps:
        print("   ", json.dumps(step, sort_keys=True))
    result = replay_certificate(cert)
    print(f"  independent replay: ok={result.ok}, steps checked={result.steps_checked}")

    print()
    satisfied = Chain.from_text(7, "24<246")
    outcome = cond_iv(satisfied)
    print(f"{satisfied.text()!r}: condition IV satisfied = {outcome.satisfied}")
    print(f"  witness maximal chain: {outcome.witness.text()}")
    print(f"  witness verifies: {verify_witness(satisfied, outcome.witness)}")
    print(f"  pattern_refute returns: {pattern_refute(satisfied)} (sound: no false proof)")


if __name__ == "__main__":
    main()
