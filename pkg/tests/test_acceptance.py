"""Acceptance gate: one pass/fail line per criterion, printed unconditionally."""

import pytest

from resurgentia import acceptance


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    with capsys.disabled():
        print(result.line())
    assert result.passed, result.line()
