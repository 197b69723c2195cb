import csv
import io
import json
import subprocess
import sys

import pytest

from twistknot.cli import main
from twistknot.verify import Config


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_signature(capsys):
    assert run(capsys, 'signature', '2', '2') == (0, 'closed_form=-12 gordon_litherland=-12\n', '')


def test_alex(capsys):
    code, out, _ = run(capsys, 'alex', '2: 1 1 1')
    assert code == 0 and out == '1 - t + t^2\n'


def test_alex_json(capsys):
    code, out, _ = run(capsys, '--format', 'json', 'alex', '3: (2 1)x4')
    doc = json.loads(out)
    assert doc['alexander'] == '1 - t + t^3 - t^5 + t^6' and doc['exponents'] == [0, 1, 3, 5, 6]


def test_burau(capsys):
    code, out, _ = run(capsys, 'burau', '3: 1')
    assert code == 0 and out == '[-t, 1]\n[0, 1]\n'


def test_nf(capsys):
    code, out, _ = run(capsys, 'nf', '3: (2 1)x4')
    assert out == 'Delta^2 . [2 1]\ntwist_positive=True\n'


def test_goeritz(capsys):
    code, out, _ = run(capsys, 'goeritz', '2', '2')
    assert code == 0
    assert out.rstrip().endswith('mu=11')
    assert '-1 1 0 0 0 0 1' in out


def test_family(capsys):
    code, out, _ = run(capsys, 'family', '10')
    assert out.splitlines() == ['T(3,10;0) signature=-14', 'T(3,7;6) signature=-14', 'T(3,4;12) signature=-16']


def test_report_text(capsys):
    code, out, _ = run(capsys, 'report', '10')
    assert code == 0
    assert 'members=3 verdict: pairwise distinct' in out.splitlines()[0]


def test_report_csv(capsys):
    code, out, _ = run(capsys, 'report', '--format', 'csv', '13')
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4 and rows[0]['verdict'] == 'pairwise distinct'


def test_report_json(capsys):
    code, out, _ = run(capsys, '--format', 'json', 'report', '7')
    assert json.loads(out)['verdict'] == 'pairwise distinct'


def test_cert(capsys):
    code, out, _ = run(capsys, 'cert', '3: (2 1)x7')
    assert code == 0 and json.loads(out)['max_gap'] == 2


def test_cert_baker_kegel_records_discrepancy(capsys):
    code, out, _ = run(capsys, 'cert', '--baker-kegel', '1')
    doc = json.loads(out)
    assert any(c['status'] == 'discrepancy' for c in doc['conclusions'])
    assert code == 1


@pytest.mark.parametrize('argv', [
    ['alex', '3: 5 1'],
    ['alex', 'garbage'],
    ['alex', '2: 1 1'],
    ['signature', '0', '1'],
    ['family', '9'],
])
def test_errors_exit_nonzero(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err


def test_parse_error_message(capsys):
    code, _, err = run(capsys, 'alex', '3: 5 1')
    assert 'parse error' in err and 'position' in err


def test_bad_format_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(['--format', 'xml', 'alex', '2: 1'])
    assert exc.value.code != 0


def test_config_file_and_env(tmp_path, monkeypatch):
    path = tmp_path / 'cfg.json'
    path.write_text(json.dumps({'output_format': 'json', 'q_max': 13}))
    cfg = Config.load(str(path))
    assert cfg.output_format == 'json' and cfg.q_max == 13 and cfg.k_max == 8
    monkeypatch.setenv('TWISTKNOT_CONFIG', str(path))
    assert Config.load(q_max=10).q_max == 10
    assert Config.load().output_format == 'json'
    path.write_text(json.dumps({'bogus': 1}))
    with pytest.raises(ValueError):
        Config.load(str(path))
    with pytest.raises(ValueError):
        Config(q_max=0)


def test_config_env_drives_cli(tmp_path, monkeypatch, capsys):
    path = tmp_path / 'cfg.json'
    path.write_text(json.dumps({'output_format': 'json'}))
    monkeypatch.setenv('TWISTKNOT_CONFIG', str(path))
    code, out, _ = run(capsys, 'signature', '1', '0')
    assert json.loads(out)['closed_form'] == -6


def test_bad_config_exits_nonzero(tmp_path, capsys):
    path = tmp_path / 'cfg.json'
    path.write_text('{"q_max": -1}')
    code, _, err = run(capsys, '--config', str(path), 'alex', '2: 1')
    assert code == 2 and 'config error' in err


def test_verify_deterministic_and_exit_code():
    cmd = [sys.executable, '-m', 'twistknot', 'verify']
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.stdout == b.stdout
    lines = a.stdout.splitlines()
    assert all(l.startswith(('PASS ', 'FAIL ', '    falsified:')) for l in lines[:-1])
    failed = sum(l.startswith('FAIL') for l in lines)
    assert lines[-1].endswith(f'{failed} failed')
    assert a.returncode == (0 if failed == 0 else 1)
    # the degree claim for the Baker-Kegel family is the known failing check
    assert [l.split(':')[0] for l in lines if l.startswith('FAIL')] == ['FAIL 10b']


def test_verify_fail_fast_json(capsys):
    code, out, _ = run(capsys, '--format', 'json', '--fail-fast', 'verify')
    doc = json.loads(out)
    assert doc[-1]['key'] == '10b' and not doc[-1]['passed']
    assert all(d['passed'] for d in doc[:-1])
    assert code == 1
