"""
The sidki-x command line: exit codes, config merging, reports
"""

import json
import os

import pytest

from sidki_x.cmd import main

C2 = '< a | a^2 >'
S3 = '< a, b | a^2, b^2, (a*b)^3 >'


def run_json(capsys, argv):
    "run a command with its report on stdout; (code, report)"
    code = main(argv + ['--json', '-'])
    out = capsys.readouterr().out
    start = 0 if out.startswith('{') else out.index('\n{') + 1
    report = json.loads(out[start:])
    return code, report


def test_verify_ok(capsys):
    assert main(['verify', '-p', C2]) == 0
    out = capsys.readouterr().out
    assert '|G| = 2, |X(G)| = 4' in out


def test_verify_report(capsys):
    code, report = run_json(capsys, ['verify', '-p', C2])
    assert code == 0
    assert report['command'] == 'verify'
    assert report['version'] == 1
    assert report['result']['passed']
    assert report['result']['orders']['X'] == 4
    assert report['config']['max_cosets'] == 10 ** 6


def test_report_is_deterministic(tmp_path):
    first = str(tmp_path / 'one.json')
    second = str(tmp_path / 'two.json')
    assert main(['verify', '-p', S3, '--no-modules', '--json', first]) == 0
    assert main(['verify', '-p', S3, '--no-modules', '--json', second]) == 0
    with open(first) as one, open(second) as two:
        assert one.read() == two.read()


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(['verify', '--max-cosets', 'lots'])
    assert err.value.code == 3


def test_bad_presentation_exit_code():
    with pytest.raises(SystemExit) as err:
        main(['parse', '-p', '< a | a^ >'])
    assert err.value.code == 3


def test_missing_presentation():
    with pytest.raises(SystemExit) as err:
        main(['double'])
    assert err.value.code == 3


def test_budget_exit_code():
    with pytest.raises(SystemExit) as err:
        main(['realize', '-p', '< a, b | a^2, b^3, (a*b)^5 >',
              '--max-cosets', '10'])
    assert err.value.code == 2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / 'budgets.json'
    cfg.write_text(u'{"max-cosets": 5000, "strategy": "felsch"}')
    code, report = run_json(capsys, ['verify', '-p', C2, '--config',
                                     str(cfg), '--max-cosets', '7000'])
    assert code == 0
    # flags win over the file, the file over the defaults
    assert report['config']['max_cosets'] == 7000
    assert report['config']['strategy'] == 'felsch'


def test_config_unknown_key(tmp_path):
    cfg = tmp_path / 'bad.json'
    cfg.write_text(u'{"max-coset": 5000}')
    with pytest.raises(SystemExit) as err:
        main(['verify', '-p', C2, '--config', str(cfg)])
    assert err.value.code == 3


def test_config_bad_value(tmp_path):
    cfg = tmp_path / 'bad.json'
    cfg.write_text(u'{"guard": -4}')
    with pytest.raises(SystemExit) as err:
        main(['verify', '-p', C2, '--config', str(cfg)])
    assert err.value.code == 3


def test_config_bad_strategy(tmp_path, capsys):
    cfg = tmp_path / 'bad.json'
    cfg.write_text(u'{"strategy": "magic"}')
    with pytest.raises(SystemExit) as err:
        main(['verify', '-p', C2, '--config', str(cfg)])
    assert err.value.code == 3
    assert 'hlt, felsch' in capsys.readouterr().err


def test_presentation_file(tmp_path, capsys):
    path = tmp_path / 's3.txt'
    path.write_text(u'< a, b | a^2, b^2, (a*b)^3 >\n')
    code, report = run_json(capsys, ['parse', '--file', str(path),
                                     '--word', '[a, b]'])
    assert code == 0
    assert report['result']['presentation']['generators']


def test_double(capsys):
    code, report = run_json(capsys, ['double', '-p', C2])
    assert code == 0
    assert len(report['result']['double']['relators']) == 3


def test_wp(capsys):
    code, report = run_json(capsys, ['wp', '-p', S3, '--word', '[a, a~]',
                                     '--word', 'a b~'])
    assert code == 0
    kinds = [v['verdict'] for v in report['result']['verdicts']]
    assert kinds == ['trivial', 'nontrivial']


def test_growth_double_of_z(capsys):
    code, report = run_json(capsys, ['growth', '-p', '< a | >', '--double',
                                     '--radius', '6'])
    assert code == 0
    result = report['result']
    assert result['sizes'] == [1, 5, 13, 25, 41, 61, 85]
    assert result['classification'] == {'kind': 'polynomial', 'value': 2}


def test_growth_radius_too_small():
    with pytest.raises(SystemExit) as err:
        main(['growth', '-p', '< a | >', '--radius', '2'])
    assert err.value.code == 3


@pytest.mark.parametrize('argv', [
    ['area', 'grid', '-n', '3'],
    ['area', 'central', '-n', '2'],
    ['area', 'distortion', '-n', '2'],
    ['area', 'search', '-p', '< a, b | [a, b] >', '--word', '[a^2, b^2]',
     '--max-area', '4', '--max-radius', '2'],
])
def test_area(capsys, argv):
    code, report = run_json(capsys, argv)
    assert code == 0
    assert report['result']['mode'] == argv[1]


def test_area_central_reports_both_bounds(capsys):
    code, report = run_json(capsys, ['area', 'central', '-n', '2'])
    assert code == 0
    cost = report['result']['cost']
    # [a², b²]: |w| = 8, δ = 4, μ = 1, radius 2
    assert cost['bound_at_area'] == 64 + 16 + 4 + 144
    assert cost['bound'] == cost['bound_at_area']
    assert cost['total'] <= cost['bound']


def test_area_needs_n():
    with pytest.raises(SystemExit) as err:
        main(['area', 'grid'])
    assert err.value.code == 3


def test_engel(capsys):
    code, report = run_json(capsys, ['engel', '-p', C2])
    assert code == 0
    assert report['result']['verdict']


def test_suite_and_clean(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(['verify', '--suite', '--only', 'C2']) == 0
    assert main(['verify', '--suite', '--only', 'C2', '--only', 'C3']) == 0
    latest = os.path.join('TMP', 'latest')
    assert os.path.islink(latest)
    assert os.path.exists(os.path.join(latest, 'summary.json'))
    assert os.path.exists(os.path.join(latest, 'verify-C3.json'))
    runs = [d for d in os.listdir('TMP') if d != 'latest']
    main(['clean'])
    left = [d for d in os.listdir('TMP') if d != 'latest']
    assert len(left) == 1
    assert len(runs) >= 1


def test_suite_unknown_name(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit) as err:
        main(['verify', '--suite', '--only', 'nope'])
    assert err.value.code == 3
