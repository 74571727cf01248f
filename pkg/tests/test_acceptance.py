"""Acceptance criteria 1-10, each run at its stated tolerance (exact equality).

Every criterion prints one PASS/FAIL line; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import pytest

from minksum import verify

# wall-clock ceilings stated with each criterion, in seconds
LIMITS = {"C1": 60, "C2": 120, "C3": 3600, "C4": 1, "C5": 600, "C6": 600,
          "C7": 300, "C8": 600, "C9": 600, "C10": 60}


@pytest.mark.parametrize("key", list(verify.CHECKS))
def test_criterion(key, scoreboard):
    res = verify.run_check(key)
    within = res.seconds <= LIMITS[key]
    line = res.line() if within else res.line() + f" [over {LIMITS[key]}s limit]"
    print(line)
    scoreboard.append(line)
    assert res.passed, res.detail
    assert within, f"{key} took {res.seconds:.1f}s"
