"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line with the observed
value and wall time, then asserts both the result and its time limit.
"""

from __future__ import annotations

import pytest

from rankcode.verify import run_check

CRITERIA = [
    (1, ["c01_a312"], 1.0),
    (2, ["c02_a424"], 600.0),
    (3, ["c03_a_families"], 60.0),
    (4, ["c04_gabidulin_42"], 1.0),
    (5, ["c05_spectrum"], 1.0),
    (6, ["c06_divisibility"], 5.0),
    (7, ["c07_circulant_norm"], 5.0),
    (8, ["c08_repetition_radius"], 30.0),
    (9, ["c09_covering_bounds"], 300.0),
    (10, ["c10a_fold_invariance", "c10b_product_bound"], 120.0),
    (11, ["c11_sphere_bound"], 300.0),
    (12, ["c12_amrd_condition"], 60.0),
    (13, ["c13_rank_vs_hamming"], 1.0),
    (14, ["c14_fuzzy"], 10.0),
    (15, ["c15_mcode"], 60.0),
]


@pytest.mark.parametrize("number,keys,limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, keys, limit, capsys):
    checks = [run_check(k) for k in keys]
    seconds = sum(c.seconds for c in checks)
    ok = all(c.passed for c in checks) and seconds < limit
    parts = []
    for c in checks:
        text = f"{c.name}: expected {c.expected}, observed {c.observed}"
        if c.detail:
            text += f" [{c.detail}]"
        parts.append(text)
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.2f}s, limit {limit:g}s) " + "; ".join(parts))
    for c in checks:
        assert c.passed, f"{c.name}: expected {c.expected}, observed {c.observed} {c.detail}"
    assert seconds < limit, f"took {seconds:.2f}s, limit {limit:g}s"
