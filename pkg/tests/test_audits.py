import json

import pytest

from cplxgeom.audits import AuditReport, Check, signatures


def test_failing_check_needs_witness():
    with pytest.raises(ValueError):
        Check("x", "fail")
    with pytest.raises(ValueError):
        Check("x", "maybe")


def test_report_bookkeeping():
    rep = AuditReport("demo")
    rep.add("ok", True)
    rep.skip("later", "not applicable")
    assert rep.passed and rep.exit_code == 0
    rep.add("bad", False, "2 != 3")
    assert not rep.passed and rep.exit_code == 1
    assert [c.id for c in rep.failures] == ["bad"]
    d = json.loads(rep.to_json())
    assert d["schema"] == 1 and d["checks"][2]["witness"] == "2 != 3"
    assert "FAIL    bad  [2 != 3]" in rep.to_text()


def test_extend_prefixes_suite():
    a, b = AuditReport("a"), AuditReport("b")
    b.add("x", True)
    a.extend(b)
    assert a.checks[0].id == "b/x"


def test_signature_sweep_size():
    assert len(signatures()) == 3 + 5 + 7 + 9

