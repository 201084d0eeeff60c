"""Tests for the end-to-end pipeline, alignment, survey, and reports.

Every number asserted here was measured by running the relevant
computation in isolation and double-checking it against an independent
implementation where one exists (condition-III census, class counts,
reference alignment). They are frozen so regressions surface loudly.
"""

from __future__ import annotations

import csv
import io
import json

from ncpverify.chains import Chain, cond_iii_bruteforce, cond_iii_criterion
from ncpverify.pipeline import (
    VERDICT_VERIFIED,
    cond_i_rank_sets,
    duality_reduced_rank_sets,
    report_to_csv,
    report_to_json,
    report_to_text,
    validate_lemma3,
)

TEN_REDUCED_SETS = [
    frozenset({1}),
    frozenset({2}),
    frozenset({3}),
    frozenset({1, 2}),
    frozenset({1, 3}),
    frozenset({1, 4}),
    frozenset({1, 5}),
    frozenset({2, 3}),
    frozenset({1, 2, 3}),
    frozenset({1, 2, 5}),
]


def test_cond_i_rank_sets():
    sets = cond_i_rank_sets(7)
    assert len(sets) == 18
    reduced = duality_reduced_rank_sets(7)
    assert [set(s) for s in reduced] == [set(s) for s in TEN_REDUCED_SETS]


def test_pipeline_headline_numbers(pipeline_report):
    r = pipeline_report
    assert r.n == 7
    assert r.chains_scanned == 12432
    assert len(r.candidates) == 2667
    assert len(r.classes) == 119
    assert r.verdict == VERDICT_VERIFIED
    assert r.survivors == ()
    assert len(r.iii_disagreements) == 4144


def test_pipeline_class_invariants(pipeline_report):
    r = pipeline_report
    with_certificate = sum(1 for c in r.classes if c.certificate is not None)
    iv_satisfied = sum(1 for c in r.classes if c.iv_satisfied)
    iv_refuted = sum(1 for c in r.classes if not c.iv_satisfied)
    assert with_certificate == 112
    assert iv_refuted == 112
    assert iv_satisfied == 7
    # a certificate and a satisfied condition IV are mutually exclusive
    for c in r.classes:
        assert not (c.certificate is not None and c.iv_satisfied)
        if c.iv_satisfied:
            assert c.iv_witness is not None
    matched = sum(1 for c in r.classes if c.matched_case is not None)
    duplicates = sum(1 for c in r.classes if c.signature_duplicate_of is not None)
    assert matched == 51
    assert duplicates == 92
    # duplicate_of always points at an earlier class
    order = {c.representative: k for k, c in enumerate(r.classes)}
    for c in r.classes:
        if c.signature_duplicate_of is not None:
            assert order[c.signature_duplicate_of] < order[c.representative]


def test_pipeline_filter_semantics(pipeline_report):
    # every kept class passes the union filter on both sides, and survival
    # additionally demands the literal condition III on both sides
    for c in pipeline_report.classes:
        assert c.cond_i and c.cond_ii
        assert c.cond_iii_criterion or c.cond_iii_literal
        assert c.dual_cond_iii_criterion or c.dual_cond_iii_literal
        expected_survives = (
            c.iv_satisfied and c.cond_iii_literal and c.dual_cond_iii_literal
        )
        assert c.survives == expected_survives
        assert not c.survives  # the theorem: nobody survives


def test_pipeline_unresolved_classes(pipeline_report):
    unresolved = pipeline_report.unresolved
    assert unresolved == (
        "37,456",
        "23,457",
        "23,467",
        "23,47,56",
        "247,56",
        "27,36,45",
        "57<12,34567",
        "57<14567,23",
    )
    # each unresolved class was admitted by the criterion only: the
    # literal condition III fails on at least one side, so the reference
    # tables are complete with respect to the literal condition
    by_rep = {c.representative: c for c in pipeline_report.classes}
    for text in unresolved:
        c = by_rep[text]
        assert not (c.cond_iii_literal and c.dual_cond_iii_literal)


def test_pipeline_disagreements_match_direct_measurement(pipeline_report):
    # spot-check a handful of recorded disagreements directly
    sample = pipeline_report.iii_disagreements[:5]
    for text in sample:
        chain = Chain.from_text(7, text)
        assert cond_iii_criterion(chain) != cond_iii_bruteforce(chain)


def test_condition_iii_survey(survey):
    assert survey.n == 7
    assert survey.chains_checked == 85099
    assert survey.agreements == 80955
    assert survey.criterion_only == 4144
    assert survey.literal_only == 0
    assert survey.criterion_covers_literal
    assert survey.agreements + survey.criterion_only + survey.literal_only == 85099
    assert set(survey.disagreeing_fixture_chains) == {"123,46", "367,45"}
    for text in survey.criterion_only_examples:
        chain = Chain.from_text(7, text)
        assert cond_iii_criterion(chain) and not cond_iii_bruteforce(chain)
    assert survey.literal_only_examples == ()


def test_fixture_alignment(alignment_table, fixture_set):
    rows = alignment_table.rows
    assert len(rows) == 58
    aligned = [r for r in rows if r.aligned]
    misaligned = [r for r in rows if not r.aligned]
    assert len(aligned) == 53
    assert sorted((r.case_id, r.chain) for r in misaligned) == [
        (9, "123,46"),
        (32, "124<1234"),
        (32, "13<123<1234"),
        (32, "14<124<1234"),
        (32, "24<124<1234"),
    ]
    # the misalignment is always a hit-reproduction failure, never a
    # missing class or an unrefuted chain
    for r in misaligned:
        assert r.found_in_class
        assert r.iv_refuted
        assert not r.hits_reproduced
    assert not alignment_table.all_aligned


def test_fixture_conventions(alignment_table):
    convs = alignment_table.conventions
    assert len(convs) == 39
    assert sum(1 for c in convs if c.nonstrict_reproduces) == 37
    assert sum(1 for c in convs if c.strict_reproduces) == 31
    failing = sorted(c.case_id for c in convs if not c.nonstrict_reproduces)
    assert failing == [9, 32]


def test_fixture_certificate_styles(alignment_table):
    mismatches = [r for r in alignment_table.rows if not r.style_matches]
    assert len(mismatches) == 4


def test_validate_lemma3_report():
    report = validate_lemma3(7)
    assert report.n == 7
    assert report.maximal_chains == 16807
    assert report.chains_checked == 484
    assert report.chains_with_survivors == 165
    assert report.total_survivors == 48096
    assert report.hits_checked == 14651
    assert report.pairs_checked == 460435
    assert report.violations == ()
    assert report.ci_always_proper is True


def test_report_to_json(pipeline_report, alignment_table, survey):
    payload = json.loads(report_to_json(pipeline_report, alignment_table, survey))
    assert payload["n"] == 7
    assert payload["verdict"] == VERDICT_VERIFIED
    assert payload["chainsScanned"] == 12432
    assert payload["candidateCount"] == 2667
    assert payload["classCount"] == 119
    assert len(payload["classes"]) == 119
    assert payload["survivors"] == []
    first = payload["classes"][0]
    for key in (
        "representative",
        "ranks",
        "orbitSize",
        "dualRepresentative",
        "condIIICriterion",
        "condIIILiteral",
        "dualCondIIICriterion",
        "dualCondIIILiteral",
        "condIVSatisfied",
        "refutedByPatterns",
        "survives",
    ):
        assert key in first
    assert payload["condIIISurvey"]["criterionOnly"] == 4144
    assert payload["alignment"]["allAligned"] is False
    aligned_rows = sum(1 for row in payload["alignment"]["rows"] if row["aligned"])
    assert aligned_rows == 53


def test_report_to_csv(pipeline_report):
    text = report_to_csv(pipeline_report)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 119
    assert "condIIICriterion" in rows[0]
    assert "condIIILiteral" in rows[0]
    assert "dualCondIIILiteral" in rows[0]
    assert all(row["survives"] == "False" for row in rows)


def test_report_to_text(pipeline_report, alignment_table, survey):
    text = report_to_text(pipeline_report, alignment_table, survey)
    assert "THEOREM 5 VERIFIED" in text
    assert "12432" in text and "2667" in text and "119" in text
    assert "53/58" in text
    assert "85099" in text and "4144" in text
    assert "criterion alone cannot replace the literal condition" in text
