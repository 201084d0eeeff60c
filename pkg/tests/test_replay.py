"""Tests for the independent certificate checker, including tamper detection."""

from __future__ import annotations

import dataclasses

from ncpverify.chains import Chain
from ncpverify.condition4 import pattern_refute
from ncpverify.replay import replay_certificate


def _cert(text: str = "12,46"):
    cert = pattern_refute(Chain.from_text(7, text))
    assert cert is not None
    return cert


def test_replay_accepts_genuine_certificate():
    result = replay_certificate(_cert())
    assert result.ok is True
    assert result.failure is None
    assert result.steps_checked == 8


def test_replay_all_fixture_certificates(fixture_set):
    for text in fixture_set.all_chain_texts():
        cert = pattern_refute(Chain.from_text(7, text))
        assert cert is not None, text
        result = replay_certificate(cert)
        assert result.ok, (text, result.failure)


def test_replay_rejects_tampered_exclusion():
    cert = _cert()
    steps = [dict(s) for s in cert.steps]
    steps[0]["excluded"] = [5]
    result = replay_certificate(dataclasses.replace(cert, steps=tuple(steps)))
    assert result.ok is False
    assert "excludes" in result.failure


def test_replay_rejects_retargeted_certificate():
    cert = _cert()
    # aiming the certificate at a chain without the claimed hits fails
    result = replay_certificate(dataclasses.replace(cert, chain_text="13"))
    assert result.ok is False
    assert "does not hold" in result.failure
    # aiming it at a chain whose condition IV is satisfied also fails
    result2 = replay_certificate(dataclasses.replace(cert, chain_text="24<246"))
    assert result2.ok is False


def test_replay_rejects_dropped_conflict():
    cert = _cert()
    result = replay_certificate(dataclasses.replace(cert, steps=cert.steps[:-1]))
    assert result.ok is False
    assert "without a contradiction" in result.failure


def test_replay_rejects_bad_conclusion():
    cert = _cert()
    result = replay_certificate(dataclasses.replace(cert, conclusion="nonsense"))
    assert result.ok is False
    assert "conclusion" in result.failure


def test_replay_rejects_tampered_forced_block():
    cert = _cert()
    steps = [dict(s) for s in cert.steps]
    steps[2]["block"] = [3, 6]
    result = replay_certificate(dataclasses.replace(cert, steps=tuple(steps)))
    assert result.ok is False


def test_replay_rejects_tampered_propagation():
    cert = _cert()
    steps = [dict(s) for s in cert.steps]
    steps[3]["target"] = 6
    result = replay_certificate(dataclasses.replace(cert, steps=tuple(steps)))
    assert result.ok is False
    assert "target" in result.failure
