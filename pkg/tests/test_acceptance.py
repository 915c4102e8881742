"""Acceptance criteria at full scale, one test and one PASS/FAIL line each.

Run directly (``python tests/test_acceptance.py``) to print just the lines.
"""

from __future__ import annotations

import sys

from lineroot import acceptance


def test_1_l1_round_trip(record_criterion):
    assert record_criterion(acceptance.check_l1_round_trip()).passed


def test_2_geq1_round_trip(record_criterion):
    # Fails on 4-vertex roots over K4 and K4 minus an edge: their >=1-line
    # graphs do not determine the multiplicity placement (see README).
    assert record_criterion(acceptance.check_geq1_round_trip()).passed


def test_3_uniqueness(record_criterion):
    assert record_criterion(acceptance.check_uniqueness()).passed


def test_4_whitney_exception(record_criterion):
    assert record_criterion(acceptance.check_whitney()).passed


def test_5_rejection(record_criterion):
    assert record_criterion(acceptance.check_rejection()).passed


def test_6_twin_partitions(record_criterion):
    assert record_criterion(acceptance.check_twins()).passed


def test_7_linear_scaling(record_criterion):
    assert record_criterion(acceptance.check_scaling()).passed


def test_8_glg_corner_case(record_criterion):
    assert record_criterion(acceptance.check_glg()).passed


if __name__ == "__main__":
    results = acceptance.run_all(acceptance.FULL)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
