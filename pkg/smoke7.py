from __future__ import annotations

import time

from ncpverify.pipeline import (
    compare_fixture,
    condition_iii_survey,
    report_to_text,
    run_theorem5,
)

t0 = time.perf_counter()
report = run_theorem5(7)
t1 = time.perf_counter()
print(f"pipeline: {t1 - t0:.2f}s")
print("scanned:", report.chains_scanned, "candidates:", len(report.candidates),
      "classes:", len(report.classes))
print("unresolved:", report.unresolved)
print("survivors:", report.survivors)
print("verdict:", report.verdict)
print("scanned-disagreements:", len(report.iii_disagreements))

matched = sum(1 for c in report.classes if c.matched_case is not None)
dupes = sum(1 for c in report.classes if c.signature_duplicate_of is not None)
certs = sum(1 for c in report.classes if c.certificate is not None)
print(f"matched={matched} signature-dupes={dupes} certificates={certs}"
      f" of {len(report.classes)}")

t2 = time.perf_counter()
table = compare_fixture(report)
t3 = time.perf_counter()
print(f"compare: {t3 - t2:.2f}s  all_aligned={table.all_aligned}")
for row in table.rows:
    if not row.aligned:
        print("  misaligned:", row)
nonstrict = sum(1 for c in table.conventions if c.nonstrict_reproduces)
strict = sum(1 for c in table.conventions if c.strict_reproduces)
print(f"conventions: nonstrict {nonstrict}/39 strict {strict}/39")
style_mismatch = [r for r in table.rows if not r.style_matches]
print("style mismatches:", len(style_mismatch))

t4 = time.perf_counter()
survey = condition_iii_survey(7)
t5 = time.perf_counter()
print(f"survey: {t5 - t4:.2f}s  checked={survey.chains_checked}"
      f" agree={survey.agreements} crit_only={survey.criterion_only}"
      f" literal_only={survey.literal_only}")
print("fixture disagreements:", survey.disagreeing_fixture_chains)
print()
print(report_to_text(report, table, survey))
