"""Acceptance gate: every criterion at full scale, one PASS/FAIL line each."""
import pytest

from doily.acceptance import CRITERIA

RESULTS: dict[int, str] = {}


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion{n:02d}")
def test_criterion(number):
    result = CRITERIA[number](False)
    RESULTS[number] = result.line()
    print(result.line())
    assert result.passed, result.line()
