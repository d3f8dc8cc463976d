"""
Tests for the verification suites and their reports
"""
import json

import pytest

import verifier
from errors import AlgebraError
from utils import derive_seed
from verifier import SUITES, Suite, Verifier, deterministic_view, report_line, run_suite

SMALL = {
    'identity': {},
    'jacobi': {'trials': 40, 'max_index': 5},
    'antisymmetry': {'max_index': 4},
    'grading': {'max_index': 4},
    'module': {'max_index': 3},
    'matrix': {'max_index': 4},
    'embedding': {'max_index': 3},
    'chevalley': {'max_index': 4},
    'involution': {'max_index': 4},
    'heisenberg': {'max_index': 2, 'max_degree': 4},
    'virasoro': {'max_index': 2, 'max_degree': 3},
    'hopf-axioms': {'max_index': 6},
    'sy-equivalence': {'max_index': 6},
    'lambda-diagrams': {'max_index': 5},
    'cli': {},
}


@pytest.fixture(autouse=True)
def single_process(monkeypatch):
    monkeypatch.delenv('LADDER_WORKERS', raising=False)
    monkeypatch.delenv('LADDER_MAX_INDEX', raising=False)


def test_every_suite_has_small_settings():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", list(SMALL))
def test_suite_passes_at_small_bounds(name):
    report = run_suite(name, seed=11, **SMALL[name])
    assert report.passed, report.failures[:3]
    assert report.checks > 0


def test_identity_suite_counts():
    report = run_suite('identity')
    assert report.max_index == 20
    assert report.checks == 20 + 21


def test_antisymmetry_is_exhaustive():
    report = run_suite('antisymmetry', max_index=4)
    assert report.checks == 25 * 25


def test_reports_are_deterministic():
    first = run_suite('jacobi', trials=30, seed=5, max_index=4)
    second = run_suite('jacobi', trials=30, seed=5, max_index=4)
    assert deterministic_view(first) == deterministic_view(second)


def test_workers_do_not_change_the_report(monkeypatch):
    single = run_suite('antisymmetry', max_index=3)
    monkeypatch.setenv('LADDER_WORKERS', '2')
    pooled = run_suite('antisymmetry', max_index=3)
    assert deterministic_view(single) == deterministic_view(pooled)


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv('LADDER_SEED', '99')
    monkeypatch.setenv('LADDER_TRIALS', '7')
    report = run_suite('jacobi', max_index=3)
    assert report.seed == 99
    assert report.trials == 7
    assert report.checks == 7


def test_failures_are_sorted(monkeypatch):
    def check(ctx, task):
        return 1, [{'identity': 'fake', 'inputs': {'task': task}, 'left': 'x', 'right': 'y'}]

    monkeypatch.setitem(SUITES, 'fake', Suite('fake', 'always fails', lambda ctx: [2, 0, 1], check, 1))
    report = run_suite('fake')
    assert not report.passed
    assert [f['inputs']['task'] for f in report.failures] == [0, 1, 2]
    assert json.loads(report_line(report))['pass'] is False


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite('nope')


def test_bad_bound():
    with pytest.raises(AlgebraError):
        run_suite('antisymmetry', max_index=0)


def test_run_all_small():
    reports = Verifier().run('all', trials=10, max_index=3, max_degree=3)
    assert [r.suite for r in reports] == list(SUITES)
    assert all(r.passed for r in reports)


def test_seed_splitting():
    assert derive_seed(1, 'jacobi', 0) == derive_seed(1, 'jacobi', 0)
    assert derive_seed(1, 'jacobi', 0) != derive_seed(1, 'jacobi', 1)
    assert derive_seed(1, 'jacobi', 0) != derive_seed(2, 'jacobi', 0)


def test_cartan_entries():
    assert verifier.cartan_entry(3, 3) == 2
    assert verifier.cartan_entry(3, 4) == -1
    assert verifier.cartan_entry(3, 5) == 0


def test_lambda_plan_reaches_every_label():
    ctx = verifier.SuiteContext('lambda-diagrams', 1, 1, 10)
    diagrams = [task for task in verifier._plan_lambda(ctx) if task[0] == 'diagram']
    assert ('diagram', '+', 10) in diagrams
    assert ('diagram', '-', -10) in diagrams
    assert len(diagrams) == 2 * 21
    report = run_suite('lambda-diagrams', max_index=10)
    assert report.passed


def test_new_invariant_tasks_are_planned():
    ctx = verifier.SuiteContext('x', 1, 1, 3, 2)
    assert ('zero-part',) in verifier._plan_grading(ctx)
    assert ('highest-weight',) in verifier._plan_module(ctx)
    assert ('cocycle-identity',) in verifier._plan_heisenberg(ctx)
    assert ('unit',) in verifier._plan_hopf(ctx)
