import pytest

from samuel.cli_helpers.selftest import SMALL_E1_CASES, SPAN_IDENTITY_CASES, quartic_example_checks, \
    small_e1_checks, span_identity_checks
from samuel.core.glue import analyze_problem, hilbert_only
from samuel.core.hilbert import compute_hilbert_profile
from samuel.core.local_ring import LocalRingSpec
from samuel.core.problems import quartic_example, small_e1_family
from samuel.engines.local_engine import LocalEngine


def assert_all_pass(results):
    failed = [(r.group, r.name, r.predicted, r.observed) for r in results if not r.passed]
    assert failed == []


@pytest.mark.parametrize('m', [0, 1, 2])
def test_quartic_example(m):
    assert_all_pass(list(quartic_example_checks(m)))


@pytest.mark.parametrize('m, d, lam', SMALL_E1_CASES)
def test_small_e1_family(m, d, lam):
    assert_all_pass(list(small_e1_checks(m, d, lam)))


@pytest.mark.parametrize('m, d', SPAN_IDENTITY_CASES)
def test_span_identities(m, d):
    assert_all_pass(list(span_identity_checks(m, d)))


def test_quartic_closure_is_not_needed_with_a_regular_variable():
    report = analyze_problem(quartic_example(1))
    assert report.sally.rr.delta_length == 0
    assert report.hilbert.e == [16, 6, 0, -1]


def test_small_family_lengths():
    report = analyze_problem(small_e1_family(1, 1))
    assert report.sally.lengths[:4] == [1, 1, 1, 1]
    assert report.sally.rr.generators_added == ['X1']


def test_hilbert_only_matches_full_profile():
    spec = quartic_example(0)
    assert hilbert_only(spec).hilbert == analyze_problem(spec, with_classification=False).hilbert


@pytest.mark.parametrize('m, d, lam', [(1, 1, None), (2, 2, None), (3, 2, [3])])
def test_dense_ambient_matches_graded_on_family(m, d, lam):
    problem = small_e1_family(m, d, lam).parsed()
    ring = LocalRingSpec(vars=problem.names, char=problem.char, relations=problem.relations)
    results = []
    for graded in (True, False):
        engine = LocalEngine(ring, dimension=d, graded=graded)
        I, Q = engine.ideal(problem.I), engine.ideal(problem.Q)
        results.append((
            compute_hilbert_profile(engine, I, n_max=d + 4).table,
            engine.colength(engine.product(Q, I)),
            engine.colength(engine.colon(engine.power(I, 2), I)),
            engine.colength(engine.colon(engine.power(I, 3), Q)),
        ))
    assert results[0] == results[1]
