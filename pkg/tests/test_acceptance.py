"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, which
repeats the lines in its terminal summary.
"""

import sys

import pytest

from equicobar.acceptance import CRITERIA, format_line, run_criterion

LINES = []


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"criterion{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number):
    row = run_criterion(number)
    line = format_line(row)
    LINES.append(line)
    print(line)
    assert row["passed"], row["detail"]


def main():
    rows = [run_criterion(n) for n, _, _ in CRITERIA]
    for row in rows:
        print(format_line(row))
    return 0 if all(r["passed"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
