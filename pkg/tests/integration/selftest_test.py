import random

import pytest

from samuel.cli import EXIT_OK, run_command
from samuel.cli_helpers.selftest import CheckResult, catalog, check, cross_engine_suite, describe_failure, \
    reduction_suite, run_catalog, staircase_suite
from samuel.core import local_ring
from samuel.core.local_ring import LocalRingSpec
from samuel.core.parser import parse_polynomials
from samuel.core.polynomials import products
from samuel.core.settings import Settings
from samuel.engines.monomial_engine import MonomialEngine


def test_quick_catalog_passes():
    results = run_catalog(seed=0, quick=True)
    assert [(r.group, r.name) for r in results if not r.passed] == []


def test_catalog_is_seeded():
    first = [r for r in staircase_suite(random.Random(5), 10)]
    second = [r for r in staircase_suite(random.Random(5), 10)]
    assert first == second
    assert len(catalog(quick=True)) == 11


def test_random_suites_pass():
    rng = random.Random(11)
    assert all(r.passed for r in cross_engine_suite(rng, 3))
    assert all(r.passed for r in reduction_suite(rng, 5))


def test_describe_failure():
    assert describe_failure(check('g', 'n', 1, 2)) == 'Expected 1 but found 2'
    description = describe_failure(CheckResult(group='g', name='e', predicted=[16, 6, 0], observed=[16, 6, 1]))
    assert '--- predicted' in description
    assert '+++ observed' in description


def test_selftest_command(capsys):
    assert run_command(['--seed', '3', 'selftest', '--quick']) == EXIT_OK
    assert 'checks passed' in capsys.readouterr().out


@pytest.mark.parametrize('seed', [1, 2, 3])
def test_cross_engine_suite_with_colons(seed):
    results = list(cross_engine_suite(random.Random(seed), 6))
    assert [r.observed for r in results if not r.passed] == []


def test_stabilized_colon_in_three_variables():
    names = ['X1', 'X2', 'X3']
    gens = ['X1^2', 'X2^3', 'X3^2', 'X1*X2*X3']
    engine = MonomialEngine(names)
    I2 = engine.power(engine.ideal(parse_polynomials(gens, names, 0)), 2)
    expected = engine.colength(engine.colon(I2, engine.ideal(parse_polynomials(['X1'], names, 0))))
    ring = LocalRingSpec(vars=tuple(names), char=Settings.prime)
    polys = parse_polynomials(gens, names, Settings.prime)
    x1 = parse_polynomials(['X1'], names, Settings.prime)[0]
    J = local_ring.ideal_colon_local(ring, products(polys, polys), x1)
    assert J.stable
    assert J.colength == expected
