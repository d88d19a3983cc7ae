from types import SimpleNamespace

import pytest

from algebra.errors import UnknownCheck
from algebra.modules import Functor
from analysis import verify
from analysis.classify import OracleResult, complex_basic_class, real_basic_class
from analysis.verify import CHECKS, FAIL, PASS, UNDETERMINED, Findings, resolve_checks, run_check, run_checks

CHEAP = ["tables", "dd", "hat", "dc", "modules", "complex-dd"]
SLOW = sorted(set(CHECKS) - set(CHEAP))


def test_resolve_checks():
    assert resolve_checks(["all"]) == sorted(CHECKS)
    assert resolve_checks(["tables", "dd", "tables"]) == ["dd", "tables"]
    with pytest.raises(UnknownCheck):
        resolve_checks(["tables", "nope"])


def test_run_check_unknown():
    with pytest.raises(UnknownCheck):
        run_check("nope")


def test_findings_status():
    found = Findings("sample")
    found.expect(True, "first")
    assert found.report().status == PASS
    found.undecided("second")
    assert found.report().status == UNDETERMINED
    found.expect(False, "third")
    found.note("fourth")
    found.witness("x", 3)
    report = found.report()
    assert report.status == FAIL
    assert report.details == ["ok: first", "undetermined: second", "FAILED: third", "note: fourth"]
    assert report.witnesses == {"x": "3"}


@pytest.mark.parametrize("name", CHEAP)
def test_cheap_checks_pass(name):
    report = run_check(name, seed=1)
    assert report.status == PASS, report.details
    assert report.seconds >= 0


def test_dc_witnesses():
    report = run_check("dc")
    assert set(report.witnesses) == {"f+", "f-", "x", "y"}


def test_dd_notes_theta_commutation():
    details = run_check("dd").details
    assert any(line.startswith("note: theta commutes") for line in details)


def test_run_checks_stats():
    reports, stats = run_checks(["tables", "dd"], seed=1)
    assert [r.name for r in reports] == ["dd", "tables"]
    assert stats["total_checks"] == 2
    assert stats["passed"] == 2
    assert stats["failed"] == 0
    assert stats["undetermined"] == 0
    assert stats["total_time"] == pytest.approx(sum(r.seconds for r in reports))
    assert set(stats["timing"]) == {"mean", "median", "min", "max"}


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW)
def test_slow_checks_do_not_fail(name):
    report = run_check(name, seed=1)
    assert report.status != FAIL, report.details


def test_modules_check_covers_random_modules():
    details = run_check("modules", seed=1).details
    assert sum(line.startswith("ok: random module") for line in details) == 40
    assert any("Hom^pi(R(1,1,1), σ(R(1,1,1)))" in line for line in details)


def test_hat_check_covers_four_generators():
    details = run_check("hat").details
    assert "ok: hat(R(2,1,1)) = R(1,2,1)" in details
    assert "ok: hat(hat(R(0,0,4))) = R(0,0,4)" in details


def test_oracle_runs_one_sigma_reduction_per_signature(monkeypatch):
    calls = []

    def fake_real(p, q, r=0, functor=Functor.SIGMA, seed=1, budget=1):
        calls.append(("real", p, q, r, functor))
        return OracleResult(real_basic_class(p, q, r), SimpleNamespace(confirmed=True))

    def fake_complex(p, q=0, functor=Functor.SIGMA, seed=1, budget=1):
        calls.append(("complex", p, q, functor))
        return OracleResult(complex_basic_class(p, q), SimpleNamespace(confirmed=True))

    monkeypatch.setattr(verify, "oracle_classify", fake_real)
    monkeypatch.setattr(verify, "oracle_classify_complex", fake_complex)
    monkeypatch.setattr(verify, "is_isomorphic_via", lambda A, B, images: A.dim == B.dim)
    report = verify.check_oracle()
    assert report.status == PASS, report.details
    assert len(calls) == len(set(calls)) == 84 + 15
    assert all(call[-1] is Functor.SIGMA for call in calls)
    assert "ok: R(1,0,0) π: oracle D- = formula D-" in report.details
