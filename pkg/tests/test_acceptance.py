"""The fourteen acceptance criteria at full sample counts.

Each test prints one PASS/FAIL line; the lines are also collected and
repeated in the pytest terminal summary.  Run this file directly to get
the lines without pytest.
"""

import pytest

from adhm.acceptance import CRITERIA, SweepConfig

CONFIG = SweepConfig()
RESULTS: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number](CONFIG)
    RESULTS[number] = result.line()
    print(result.line())
    assert result.checks > 0
    assert result.passed, result.detail


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        print(CRITERIA[k](CONFIG).line(), flush=True)
