"""The eleven acceptance criteria, one test each, at their stated tolerances.

Each test prints a single ``criterion N (name): PASS|FAIL`` line.  Run with
``pytest tests/test_acceptance.py -s`` or directly as a script.
"""
import sys

import pytest

from cplxgeom.audits import ACCEPTANCE

SEED = 0


def _line(number, name, report):
    status = "PASS" if report.passed else "FAIL"
    return f"criterion {number} ({name}): {status}  [{len(report.checks)} checks]"


@pytest.mark.parametrize("number,name,suite", ACCEPTANCE, ids=[f"{n}-{name}" for n, name, _ in ACCEPTANCE])
def test_criterion(number, name, suite, capsys):
    report = suite(SEED)
    with capsys.disabled():
        print("\n" + _line(number, name, report))
    failures = [f"{c.id}: {c.witness}" for c in report.failures]
    assert report.passed, "\n".join(failures)


def main() -> int:
    ok = True
    for number, name, suite in ACCEPTANCE:
        report = suite(SEED)
        print(_line(number, name, report), flush=True)
        for c in report.failures:
            print(f"    {c.id}: {c.witness}")
        ok &= report.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
