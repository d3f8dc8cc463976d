"""
Tests for the command line interface
"""
import json

import pytest

from cli import main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ('LADDER_WORKERS', 'LADDER_MAX_INDEX', 'LADDER_REPORT_PATH'):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_eval_text(capsys):
    code, out = run(capsys, 'eval', '[Z[1,0],Z[0,1]]')
    assert code == 0
    assert out.strip() == "-Z[0,0] + Z[1,1]"


def test_eval_json(capsys):
    code, out = run(capsys, 'eval', 'E[0,1]', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {'terms': [{'i': 0, 'j': 1, 'coeff': '1'}]}


@pytest.mark.parametrize("expr", ['Z[1,', 'Z[-1,0]', 'Z[1,0] + E[0,1]'])
def test_eval_rejects_bad_input(capsys, expr):
    code, out = run(capsys, 'eval', expr)
    assert code == 2
    assert out == ''


def test_act(capsys):
    code, out = run(capsys, 'act', 'Z[2,1]', '--vector', 't[3] + 2*t[0]')
    assert code == 0
    assert out.strip() == "t[4]"


def test_act_needs_lie_element(capsys):
    code, _ = run(capsys, 'act', 'E[0,1]', '--vector', 't[1]')
    assert code == 2


def test_matrix_csv(capsys):
    code, out = run(capsys, 'matrix', 'Z[1,0]', '--size', '3', '--format', 'csv')
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 4
    assert rows[1] == "1,0,0,0"


def test_matrix_json(capsys):
    code, out = run(capsys, 'matrix', 'Z[0,1]', '--size', '2', '--format', 'json')
    assert code == 0
    assert json.loads(out)['rows'][0] == ['0', '1', '0']


def test_hopf_commands(capsys):
    assert run(capsys, 'hopf', 'antipode', '2')[1].strip() == "G[1]*G[1] - G[2]"
    assert run(capsys, 'hopf', 'sy', '2')[1].strip() == "-G[1]*G[1] + 2*G[2]"
    code, out = run(capsys, 'hopf', 'coproduct', '1', '--format', 'json')
    assert code == 0
    assert len(json.loads(out)['terms']) == 2


def test_hopf_bad_monomial(capsys):
    assert run(capsys, 'hopf', 'antipode', 'x')[0] == 2


def test_virasoro_bracket(capsys):
    code, out = run(capsys, 'virasoro', 'bracket', '2', '-2', '--mu', '1/2', '--lambda', '1/3',
                    '--max-degree', '3', '--format', 'json')
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert [r['degree'] for r in records] == [0, 1, 2, 3]
    assert all(r['pass'] for r in records)


def test_verify_appends_report(capsys, tmp_path):
    path = tmp_path / 'reports' / 'run.jsonl'
    for _ in range(2):
        code, out = run(capsys, 'verify', 'antisymmetry', '--max-index', '3', '--report', str(path))
        assert code == 0
        assert 'PASS' in out
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert len(lines) == 2
    for line in lines:
        line.pop('elapsed_ms')
    assert lines[0] == lines[1]


def test_verify_json_output(capsys):
    code, out = run(capsys, 'verify', 'identity', '--max-index', '5', '--format', 'json')
    assert code == 0
    assert json.loads(out)['suite'] == 'identity'


def test_usage_errors(capsys):
    assert main(['verify', 'nope']) == 2
    assert main([]) == 2
    assert main(['matrix', 'Z[1,0]', '--size', '0']) == 2
