"""Acceptance suite: every criterion runs at its stated tolerance and prints
one pass/fail line.  Run with ``pytest tests/test_acceptance.py -v -s``."""

import pathlib

import pytest

from hyperlag.verify import (
    check_blowup_density,
    check_complete_family,
    check_dense_census,
    check_exact_vs_numeric,
    check_extremal_evidence,
    check_hom_blowup_equivalence,
    check_motzkin_straus,
    check_stationarity_diagnostics,
    check_uniform_scaling,
)

ARTIFACTS = pathlib.Path(__file__).resolve().parent.parent / "artifacts"


@pytest.fixture(scope="module")
def complete_family():
    return check_complete_family()


@pytest.fixture(scope="module")
def motzkin_straus():
    return check_motzkin_straus()


@pytest.fixture(scope="module")
def exact_vs_numeric():
    return check_exact_vs_numeric()


def report(result):
    print(f"[{'PASS' if result.passed else 'FAIL'}] criterion {result.criterion}: {result.detail}")
    assert result.passed, result.detail


def test_criterion_1_complete_family(complete_family):
    report(complete_family[0])


def test_criterion_2_motzkin_straus_oracle(motzkin_straus):
    report(motzkin_straus[0])


def test_criterion_3_exact_vs_numeric(exact_vs_numeric):
    report(exact_vs_numeric[0])


def test_criterion_4_uniform_scaling():
    report(check_uniform_scaling())


def test_criterion_5_blowup_density():
    report(check_blowup_density())


def test_criterion_6_hom_blowup_equivalence():
    report(check_hom_blowup_equivalence())


def test_criterion_7_extremal_evidence():
    report(check_extremal_evidence())


def test_criterion_8_stationarity_diagnostics(complete_family, motzkin_straus, exact_vs_numeric):
    runs = complete_family[1] + motzkin_straus[1] + exact_vs_numeric[1]
    report(check_stationarity_diagnostics(runs))


def test_criterion_9_dense_census():
    report(check_dense_census(artifacts_dir=str(ARTIFACTS)))
