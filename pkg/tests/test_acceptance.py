"""Acceptance gate: every criterion must pass at its stated tolerance.

Run with -s to see one pass/fail line per criterion.
"""

import pytest

from latdist import acceptance


@pytest.mark.parametrize("criterion", acceptance.ALL_CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] criterion {result.id}: {result.name} -- {result.measured} ({result.seconds:.1f}s)")
    assert result.passed, f"criterion {result.id} ({result.name}): {result.measured}"


def test_fast_suite_subset():
    results = acceptance.run_suite("fast")
    assert {r.id for r in results} == acceptance.FAST_IDS
    assert all(r.passed for r in results)
