import pytest

from samuel.core.exceptions import NoPolynomialTail, OptionError
from samuel.core.hilbert import binomial, compute_hilbert_profile, fit_hilbert_polynomial, \
    hilbert_polynomial_value, postulation_number
from samuel.core.parser import parse_polynomials
from samuel.engines.monomial_engine import MonomialEngine


def monomial_ideal(engine, gens):
    return engine.ideal(parse_polynomials(gens, engine.names, 0))


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(3, -1) == 0


def test_polynomial_value():
    assert hilbert_polynomial_value((16, 6, 0), 2, 3) == 16 * 10 - 6 * 4


def test_fit_maximal_ideal_table():
    table = [binomial(n + 2, 2) for n in range(9)]
    e, postulation, verified = fit_hilbert_polynomial(table, 2)
    assert e == (1, 0, 0)
    assert postulation == 0
    assert verified == 6


def test_fit_detects_postulation():
    table = [11] + [16 * binomial(n + 2, 2) - 6 * (n + 1) for n in range(1, 11)]
    e, postulation, _ = fit_hilbert_polynomial(table, 2)
    assert e == (16, 6, 0)
    assert postulation == 1


def test_fit_needs_validation_points():
    with pytest.raises(NoPolynomialTail):
        fit_hilbert_polynomial([1, 3, 6, 10], 2)


def test_fit_rejects_disagreeing_tail():
    table = [1, 3, 6, 10, 15, 21, 28, 36, 45]
    table[4] = 16
    with pytest.raises(NoPolynomialTail):
        fit_hilbert_polynomial(table, 2)


def test_quartic_profile():
    engine = MonomialEngine(['X', 'Y'])
    I = monomial_ideal(engine, ['X^4', 'Y^4', 'X^3*Y', 'X*Y^3'])
    profile = compute_hilbert_profile(engine, I, n_max=10)
    assert profile.e == (16, 6, 0)
    assert postulation_number(profile) == 1
    assert profile.table[0] == 11
    assert list(profile.table[1:]) == [16 * binomial(n + 2, 2) - 6 * (n + 1) for n in range(1, 11)]


@pytest.mark.parametrize('gens,e', [
    (['X^2', 'Y^3'], (6, 0, 0)),
    (['X^2', 'X*Y', 'Y^2'], (4, 1, 0)),
])
def test_small_profiles(gens, e):
    engine = MonomialEngine(['X', 'Y'])
    profile = compute_hilbert_profile(engine, monomial_ideal(engine, gens))
    assert profile.e == e
    assert profile.postulation == 0
    assert profile.coefficient(3) == 0


def test_n_max_lower_bound():
    engine = MonomialEngine(['X', 'Y'])
    with pytest.raises(OptionError):
        compute_hilbert_profile(engine, monomial_ideal(engine, ['X', 'Y']), n_max=5)
