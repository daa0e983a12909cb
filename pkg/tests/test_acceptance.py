"""The thirteen acceptance criteria, one test each, at exact tolerance."""

import pytest

from dgw.verify import CHECKS, run_check


@pytest.mark.parametrize("index", range(1, len(CHECKS) + 1), ids=[name for name, _ in CHECKS])
def test_criterion(index):
    result = run_check(index, seed=0)
    print(result.line())
    assert result.passed, result.line()
