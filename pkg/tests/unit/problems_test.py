import pytest
from pydantic import ValidationError

from samuel.core.exceptions import ProblemSpecError
from samuel.core.problems import Options, ProblemSpec, builtin_example, load_problem, parse_problem, print_problem, \
    quartic_example, small_e1_family

SAMPLE_PROBLEM = """\
{
  "name": "maximal ideal squared",
  "ring": {"vars": ["X", "Y"], "char": 0},
  "ideal_I": ["X^2", "X*Y", "Y^2"],
  "ideal_Q": ["X^2", "Y^2"]
}
"""


def test_load_problem(tmp_path):
    path = tmp_path / 'problem.json'
    path.write_text(SAMPLE_PROBLEM)
    spec = load_problem(path)
    assert spec.d == 2
    assert spec.ring.relations == []
    assert spec.options == Options()
    problem = spec.parsed()
    assert problem.engine_kind == 'monomial'
    assert len(problem.I) == 3


def test_missing_problem_file(tmp_path):
    with pytest.raises(ProblemSpecError):
        load_problem(tmp_path / 'nope.json')


def test_printed_examples_load_back():
    for spec in [quartic_example(0), quartic_example(2), small_e1_family(3, 2, '3')]:
        assert parse_problem(print_problem(spec)) == spec


def test_quartic_example():
    spec = quartic_example(1)
    assert spec.ring.vars == ['X', 'Y', 'Z1']
    assert spec.ideal_Q == ['X^4', 'Y^4', 'Z1']
    assert spec.ideal_I == ['X^4', 'Y^4', 'Z1', 'X^3*Y', 'X*Y^3']
    with pytest.raises(ProblemSpecError):
        quartic_example(-1)


def test_small_e1_family():
    spec = small_e1_family(3, 2, [3], prime=101)
    assert spec.ring.vars == ['X1', 'X2', 'X3', 'V', 'Y1', 'Y2']
    assert spec.ring.char == 101
    assert spec.d == 2
    assert spec.ideal_I == ['Y1', 'Y2', 'X3', 'V']
    assert spec.ring.relations[-1] == 'V^2 - X1*Y1 - X2*Y2'
    assert 'X1*X3' in spec.ring.relations
    assert spec.parsed().engine_kind == 'local'


@pytest.mark.parametrize('m, d, lam', [
    (1, 2, None),
    (2, 0, None),
    (2, 1, '1'),
    (2, 1, '3'),
    (2, 1, 'a,b'),
])
def test_small_e1_family_rejects(m, d, lam):
    with pytest.raises(ProblemSpecError):
        small_e1_family(m, d, lam)


def test_builtin_example_arguments():
    assert builtin_example('ex32') == quartic_example(0)
    assert builtin_example('sec5', m=2, d=2) == small_e1_family(2, 2)
    with pytest.raises(ProblemSpecError):
        builtin_example('ex32', d=2)
    with pytest.raises(ProblemSpecError):
        builtin_example('sec5', m=2)
    with pytest.raises(ProblemSpecError):
        builtin_example('ex99')


@pytest.mark.parametrize('update', [
    {'ring': {'vars': [], 'char': 0}},
    {'ring': {'vars': ['X', 'X'], 'char': 0}},
    {'ring': {'vars': ['X', '1Y'], 'char': 0}},
    {'ring': {'vars': ['X', 'Y'], 'char': 4}},
    {'ideal_Q': ['X^2']},
    {'dimension': 1},
    {'ring': {'vars': ['X', 'Y'], 'char': 7, 'relations': ['X*Y']}},
    {'options': {'prime': 9}},
    {'options': {'n_max': 0}},
])
def test_invalid_problems(update):
    raw = {
        'ring': {'vars': ['X', 'Y'], 'char': 0},
        'ideal_I': ['X^2', 'X*Y', 'Y^2'],
        'ideal_Q': ['X^2', 'Y^2'],
        **update,
    }
    with pytest.raises(ValidationError):
        ProblemSpec.parse_obj(raw)


def test_local_engine_needs_a_prime():
    spec = ProblemSpec.parse_obj({
        'ring': {'vars': ['X', 'Y'], 'char': 0},
        'ideal_I': ['X^2 + Y^3', 'Y^2'],
        'ideal_Q': ['X^2 + Y^3', 'Y^2'],
    })
    with pytest.raises(ProblemSpecError):
        spec.parsed()
    with_prime = spec.copy(update={'options': Options(prime=7)})
    assert with_prime.parsed().char == 7
