import json

import pytest

from samuel import __version__
from samuel.cli import EXIT_COMPUTATION, EXIT_FAILED, EXIT_OK, EXIT_USAGE, run_command
from samuel.core.monomials import EXPONENT_LIMIT
from samuel.core.problems import ProblemSpec, RingSpec, parse_problem, print_problem, quartic_example, \
    small_e1_family


@pytest.fixture
def quartic_file(tmp_path):
    path = tmp_path / 'ex32.json'
    path.write_text(print_problem(quartic_example(0)))
    return str(path)


def test_version(capsys):
    assert run_command(['--version']) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_example_prints_a_problem_file(capsys):
    assert run_command(['example', 'sec5', '--m', '3', '--d', '2', '--lambda', '3']) == EXIT_OK
    assert parse_problem(capsys.readouterr().out) == small_e1_family(3, 2, [3])


def test_example_rejects_bad_lambda(capsys):
    assert run_command(['example', 'sec5', '--m', '2', '--d', '1', '--lambda', '1']) == EXIT_USAGE
    assert 'FATAL: lambda must not meet' in capsys.readouterr().err


def test_unknown_example(capsys):
    assert run_command(['example', 'ex99']) == EXIT_USAGE


def test_missing_problem_file(tmp_path, capsys):
    assert run_command(['invariants', str(tmp_path / 'missing.json')]) == EXIT_USAGE
    assert 'does not exist' in capsys.readouterr().err


def test_invariants_json(quartic_file, capsys):
    assert run_command(['--json', 'invariants', quartic_file]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert list(report) == ['spec_echo', 'engine', 'lengths', 'hilbert', 'sally', 'containments', 'classification']
    assert report['engine'] == 'monomial'
    assert report['lengths'] == {'A_mod_I': 11, 'A_mod_Q': 16, 'I_mod_Q': 5, 'I2_mod_QI': 2, 'I3_mod_Q2I': 3}
    assert report['hilbert']['e'] == [16, 6, 0]
    assert report['hilbert']['postulation'] == 1
    assert report['sally']['r'] == 2
    assert report['sally']['lengths'][:4] == [2, 3, 4, 5]
    assert report['sally']['rr']['generators_added'] == ['X^2*Y^2']
    assert report['classification'] is None


def test_reports_are_deterministic(quartic_file, capsys):
    run_command(['--json', 'classify', quartic_file])
    first = capsys.readouterr().out
    run_command(['--json', 'classify', quartic_file])
    assert capsys.readouterr().out == first


def test_classify_text(quartic_file, capsys):
    assert run_command(['classify', quartic_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert 'Status: PASS' in out
    assert 'Ratliff-Rush closure = I + (X^2*Y^2)' in out


def test_classify_small_family(tmp_path, capsys):
    path = tmp_path / 'sec5.json'
    path.write_text(print_problem(small_e1_family(1, 1)))
    assert run_command(['--json', 'classify', str(path)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report['engine'] == 'local'
    assert report['hilbert']['e'] == [3, 2]
    assert report['hilbert']['table'][:5] == [2, 4, 7, 10, 13]
    assert report['classification']['status'] == 'PASS'


def test_classify_exit_code_on_failed_report(quartic_file, monkeypatch, capsys):
    from samuel.core import glue
    from samuel.core.classifier import FAILED

    original = glue.classify

    def doctored(bundle):
        return original(bundle).copy(update={'status': FAILED})

    monkeypatch.setattr(glue, 'classify', doctored)
    assert run_command(['classify', quartic_file]) == EXIT_FAILED


def test_hilbert(quartic_file, capsys):
    assert run_command(['hilbert', quartic_file, '--n-max', '6']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'e = (16, 6, 0)' in out
    assert run_command(['hilbert', quartic_file, '--n-max', '3']) == EXIT_USAGE
    assert 'n_max must be at least' in capsys.readouterr().err


def test_bad_prime(quartic_file, capsys):
    assert run_command(['--prime', '4', 'hilbert', quartic_file]) == EXIT_USAGE


def test_config(capsys):
    assert run_command(['config']) == EXIT_OK
    assert 'SAMUEL_PRIME=' in capsys.readouterr().out


def test_exponent_overflow_is_a_computation_error(tmp_path, capsys):
    huge = f'X^{EXPONENT_LIMIT // 2}'
    spec = ProblemSpec(ring=RingSpec(vars=['X', 'Y']), ideal_I=[huge, 'Y'], ideal_Q=[huge, 'Y'])
    path = tmp_path / 'huge.json'
    path.write_text(print_problem(spec))
    assert run_command(['hilbert', str(path), '--n-max', '6']) == EXIT_COMPUTATION
    assert 'FATAL: ExponentOverflow' in capsys.readouterr().err


def test_internal_errors_are_not_usage_errors(quartic_file, monkeypatch):
    def broken(spec, n_max=None):
        raise ValueError('internal')

    monkeypatch.setattr('samuel.cli.hilbert_only', broken)
    with pytest.raises(ValueError):
        run_command(['hilbert', quartic_file])
