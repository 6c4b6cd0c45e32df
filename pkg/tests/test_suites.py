# ============================================================
# 📁 File: tests/test_suites.py
# 📍 Location: asymclust/tests/test_suites.py
# 📝 Description: Verification suites
# ============================================================

import time

import pytest

from clustering.suites import SUITES, _repeat, run_suite
from utils.constants import SUITE_NAMES


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes_at_default_size(suite):
    reports = run_suite(suite, trials=200, seed=7)
    assert reports
    failed = [r.to_dict() for r in reports if not r.passed]
    assert failed == []


def test_trial_counts_follow_the_base_count():
    counts = {r.check_name: r.trials for r in run_suite("axioms", trials=200, seed=7)}
    # five fixed edge cases precede the random draws
    assert counts["axiom-value:reciprocal"] == 1005
    assert counts["axiom-transformation:nonreciprocal"] == 500

    counts = {r.check_name: r.trials for r in run_suite("symmetric", trials=200, seed=7)}
    assert counts == {
        "symmetric:coincidence": 200,
        "symmetric:reciprocal-is-symmetrized-single-linkage": 200,
        "symmetric:fixed-point": 100,
    }

    [sandwich] = run_suite("sandwich", trials=200, seed=7)
    assert sandwich.trials == 500


def test_all_runs_every_suite_in_order():
    names = [r.check_name for r in run_suite("all", trials=3, seed=1)]
    assert names[0] == "axiom-value:nonreciprocal"
    assert names[-1] == "symmetric:fixed-point"
    assert "dendrogram" in names
    assert "oracle:reciprocal" in names


def test_suites_are_seeded():
    first = [r.to_dict() for r in run_suite("all", trials=5, seed=3)]
    second = [r.to_dict() for r in run_suite("all", trials=5, seed=3)]
    assert first == second


def test_suite_draws_do_not_depend_on_other_suites():
    alone = run_suite("oracle", trials=5, seed=3)
    together = [r for r in run_suite("all", trials=5, seed=3) if r.check_name.startswith("oracle")]
    assert [r.to_dict() for r in alone] == [r.to_dict() for r in together]


def test_failing_trial_becomes_counterexample():
    report = _repeat("demo", 4, lambda t: {"reason": "boom"} if t == 2 else None)
    assert not report.passed
    assert report.trials == 3
    assert report.counterexample == {"trial": 2, "reason": "boom"}


@pytest.mark.parametrize("kwargs", [{"trials": 0}, {"seed": -1}])
def test_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        run_suite("oracle", **kwargs)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything", trials=1, seed=0)


def test_full_verification_is_quick():
    started = time.perf_counter()
    run_suite("all", trials=200, seed=7)
    assert time.perf_counter() - started < 120


def test_registry_covers_every_suite():
    assert set(SUITES) == set(SUITE_NAMES)
