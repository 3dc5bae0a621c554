import json

import pytest

from perimeter import bijections, verify
from perimeter.errors import DomainError
from perimeter.verify import (
    VerificationReport,
    check_all,
    check_closed_forms,
    check_fu_tang,
    check_h_poly,
    check_ineq,
    check_phi,
    check_positivity,
    check_recurrences,
    check_rep_even,
    check_rep_even_valued,
    check_series,
    check_straub,
    check_wilf,
    check_xi,
    check_xi_literal,
    run_theorem,
)


def test_report_invariants():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "fail")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "pass", witness="1")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "maybe")


def test_report_json_is_stable():
    r = check_rep_even(6)
    assert "elapsed" not in r.to_dict()
    assert "elapsed" in r.to_dict(include_elapsed=True)
    assert json.dumps(r.to_dict()) == json.dumps(check_rep_even(6).to_dict())


def test_rep_even_small():
    r = check_rep_even(5)
    assert r.passed
    assert r.details == {"rep": [5, 5, 4, 1, 1], "even": [5, 5, 4, 1, 1]}


@pytest.mark.parametrize("n", range(1, 11))
def test_single_parameter_checks_pass(n):
    for check in (check_straub, check_rep_even, check_rep_even_valued, check_wilf,
                  check_recurrences, check_h_poly):
        assert check(n).passed, check.__name__


@pytest.mark.parametrize("d", range(1, 4))
def test_two_parameter_checks_pass(d):
    for n in range(1, 10):
        for check in (check_fu_tang, check_ineq, check_phi, check_xi, check_closed_forms):
            assert check(n, d).passed, (check.__name__, n)


def test_ineq_small_example():
    r = check_ineq(6, 2)
    assert r.details["dif"] == 68
    assert r.details["mod"] == 64
    assert r.details["slack"] == 4 == r.details["complement"]


def test_wilf_large():
    r = check_wilf(30)
    assert r.passed
    assert sum(r.details["rep*"]) == 5604


@pytest.mark.parametrize("d", range(1, 4))
def test_series_and_positivity(d):
    assert check_series(d, 9).passed
    assert check_positivity(d, 60).passed


def test_literal_complement_fails_from_d_three():
    assert check_xi_literal(6, 2).passed
    assert check_xi_literal(6, 3).passed
    r = check_xi_literal(7, 3)
    assert not r.passed
    assert r.witness == {"labeled": "6,4*", "problem": "missed but not described"}
    assert r.details == {"missed": 10, "described": 9}
    assert check_xi(7, 3).passed
    assert check_xi(7, 3).details["literal_holds"] is False
    assert check_xi(7, 2).details["literal_holds"] is True


def test_broken_map_yields_witness(monkeypatch):
    monkeypatch.setattr(bijections, "phi_d", lambda w, d=1: w)
    r = check_phi(4, 1)
    assert not r.passed
    assert set(r.witness) == {"word", "problem"}


def test_broken_injection_yields_witness(monkeypatch):
    real = bijections.xi
    monkeypatch.setattr(bijections, "xi", lambda lp, d: real(lp, d)._replace(star=2))
    r = check_xi(5, 2)
    assert not r.passed
    assert r.witness["problem"] in ("image outside D", "collision")


def test_check_all_small_grid():
    reports = list(check_all(8, 3, 8))
    failing = [(r.theorem, r.params) for r in reports if not r.passed]
    assert failing == [("xi-literal", {"n": 7, "d": 3}), ("xi-literal", {"n": 8, "d": 3})]


def test_check_all_parallel_matches_serial():
    serial = [r.to_dict() for r in check_all(5, 2, 6)]
    parallel = [r.to_dict() for r in check_all(5, 2, 6, jobs=2)]
    assert serial == parallel


def test_check_all_rejects_bad_bounds():
    with pytest.raises(DomainError):
        list(check_all(0, 1, 1))


def test_run_theorem_dispatch():
    assert [r.theorem for r in run_theorem("straub", 5)] == ["straub"]
    assert run_theorem("ineq", 6, 2)[0].details["slack"] == 4
    with pytest.raises(DomainError):
        run_theorem("nope", 3)


def test_theorem_names():
    assert verify.THEOREMS == ("straub", "fu-tang", "rep-even", "rep-even-valued", "wilf", "ineq", "all")


def test_sum_dif_formula_domain_is_d_below_n():
    for n in range(1, 12):
        for d in range(1, 6):
            r = check_closed_forms(n, d)
            assert r.passed
            assert r.details["strict_formula_holds"] == (d <= n - 1)
