"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every criterion runs over all n in {2, 3, 4, 5} and every exponent e coprime
to n^2 (36 structures total).  The heavy verification happens once per n via
the suite driver and is cached for the remaining criteria; each test asserts
its own slice of the report and prints one summary line.

All comparisons are exact (tolerance zero): a pass is literal coefficient
equality over the cyclotomic field.
"""

import time

import pytest

from qhopf.cli import (
    ALL_CHECK_NAMES,
    RunConfig,
    coprime_exponents,
    render_report,
    run_suite,
)

SIZES = [2, 3, 4, 5]

_reports: dict = {}


def family_report(n: int) -> dict:
    if n not in _reports:
        config = RunConfig(
            n=n,
            q_exponents=coprime_exponents(n),
            checks=list(ALL_CHECK_NAMES),
            seed=0,
            timings=True,
        )
        started = time.perf_counter()
        report, code = run_suite(config)
        report["_wall_seconds"] = time.perf_counter() - started
        report["_exit_code"] = code
        _reports[n] = report
    return _reports[n]


def _structure_failures(report, names):
    bad = []
    for entry in report["structures"]:
        for c in entry["checks"]:
            if c["name"] in names and c["status"] != "pass":
                bad.append((entry["q_exponent"], c["name"], c.get("witness")))
    return bad


def _family_entries(report, prefix):
    return [c for c in report["family_checks"] if c["name"].startswith(prefix)]


@pytest.mark.parametrize("n", SIZES)
def test_criterion_01_taft_sanity(n):
    report = family_report(n)
    names = {"taft_dimension", "taft_coassociativity", "taft_counit", "taft_antipode"}
    bad = _structure_failures(report, names)
    assert not bad, f"criterion 1 failures: {bad}"
    assert len(report["structures"]) == len(coprime_exponents(n))
    budget_ms = 5_000 if n <= 3 else 120_000
    for entry in report["structures"]:
        spent = sum(c["elapsed_ms"] for c in entry["checks"] if c["name"] in names)
        assert spent < budget_ms, (
            f"criterion 1 runtime: {spent:.0f} ms at (n={n}, e={entry['q_exponent']})"
        )
    print(f"criterion 01 (Taft sanity, dim n^4)            n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_02_twist_invertible_counital(n):
    report = family_report(n)
    bad = _structure_failures(report, {"twist_identities"})
    assert not bad, f"criterion 2 failures: {bad}"
    print(f"criterion 02 (twist invertible + counital)     n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_03_associator_closed_form(n):
    report = family_report(n)
    bad = _structure_failures(report, {"associator_identity"})
    assert not bad, f"criterion 3 failures: {bad}"
    print(f"criterion 03 (associator = cyclic family l=-1) n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_04_coproduct_closed_form_and_closure(n):
    report = family_report(n)
    bad = _structure_failures(report, {"coproduct_x_identity", "coproduct_closure"})
    assert not bad, f"criterion 4 failures: {bad}"
    fam = _family_entries(report, "coproduct_route_agreement")
    assert fam and all(c["status"] == "pass" for c in fam)
    print(f"criterion 04 (coproduct of x + A-closure)      n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_05_antipode_closed_forms(n):
    report = family_report(n)
    bad = _structure_failures(report, {"antipode_x_identity", "distinguished_elements", "antipode"})
    assert not bad, f"criterion 5 failures: {bad}"
    expected = "a = a^(-1)" if n == 2 else "a"
    for entry in report["structures"]:
        assert entry["alpha_identification"] == expected
    print(f"criterion 05 (antipode forms, alpha = {expected:9s}) n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_06_quasi_hopf_axioms(n):
    report = family_report(n)
    names = {
        "quasi_coassociativity",
        "pentagon",
        "counit",
        "antipode",
        "basic",
        "grading",
        "radical_ideal",
    }
    bad = _structure_failures(report, names)
    assert not bad, f"criterion 6 failures: {bad}"
    print(f"criterion 06 (full axiom suite + basicness)    n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_07_cocycle_suite(n):
    report = family_report(n)
    bad = _structure_failures(report, {"cocycle_condition", "cocycle_class"})
    assert not bad, f"criterion 7 failures: {bad}"
    fam = _family_entries(report, "cocycle_invariance")
    assert fam and all(c["status"] == "pass" for c in fam)
    print(f"criterion 07 (3-cocycle + nontrivial class)    n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_08_operator_relations(n):
    report = family_report(n)
    bad = _structure_failures(report, {"bq_relations", "bq_spectrum"})
    assert not bad, f"criterion 8 failures: {bad}"
    print(f"criterion 08 (operator relations + spectrum)   n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_09_semisimple_decomposition(n):
    report = family_report(n)
    fam = _family_entries(report, "bq_semisimple")
    expected = len([t for t in range(1, n) if __import__("math").gcd(t, n) == 1])
    assert len(fam) == expected, f"expected {expected} primitive scalars, saw {len(fam)}"
    assert all(c["status"] == "pass" for c in fam), fam
    print(f"criterion 09 (block decomposition, rank n^3)   n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_10_pairwise_distinguished(n):
    report = family_report(n)
    fam = _family_entries(report, "distinguish_pairs")
    assert fam and all(c["status"] == "pass" for c in fam), fam
    print(f"criterion 10 (all exponent pairs distinct)     n={n}: PASS")


@pytest.mark.parametrize("n", SIZES)
def test_criterion_11_negative_controls(n):
    report = family_report(n)
    fam = _family_entries(report, "negative_controls")
    assert fam and all(c["status"] == "pass" for c in fam), fam
    print(f"criterion 11 (corruptions fail with witnesses) n={n}: PASS")


def test_criterion_12_deterministic_reports():
    for n, checks in [(2, list(ALL_CHECK_NAMES)), (3, ["pentagon", "basic", "cocycle_class"])]:
        config = RunConfig(
            n=n, q_exponents=coprime_exponents(n), checks=checks, seed=11
        )
        first = render_report(run_suite(config)[0])
        second = render_report(run_suite(config)[0])
        assert first == second, f"reports differ at n={n}"
    print("criterion 12 (byte-identical reports)          PASS")


def test_no_failures_anywhere():
    for n in SIZES:
        report = family_report(n)
        assert report["_exit_code"] == 0
        assert report["summary"]["failed"] == 0
        print(
            f"suite n={n}: {report['summary']['passed']} checks passed over "
            f"{report['summary']['structures']} structures "
            f"({report['_wall_seconds']:.0f}s)"
        )
