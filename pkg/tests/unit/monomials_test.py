import itertools
import random

import pytest

from samuel.core.exceptions import DimensionMismatch, ExponentOverflow, ZeroIdealError
from samuel.core.monomials import EXPONENT_LIMIT, Monomial, ideal_colon, ideal_contains, ideal_equal, ideal_intersect, \
    ideal_minimalize, ideal_power, ideal_product, ideal_sum, maximal_ideal, parameter_ideal, unit_ideal


def exps(ideal):
    return [g.exps for g in ideal.gens]


def test_minimalize_drops_multiples_and_sorts():
    ideal = ideal_minimalize([(2, 0), (1, 1), (2, 1), (0, 2), (1, 1)])
    assert exps(ideal) == [(2, 0), (1, 1), (0, 2)]


def test_minimalize_errors():
    with pytest.raises(ZeroIdealError):
        ideal_minimalize([])
    with pytest.raises(DimensionMismatch):
        ideal_minimalize([(1, 0), (1, 0, 0)])
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_product_and_power():
    m = maximal_ideal(2)
    assert exps(ideal_product(m, m)) == [(2, 0), (1, 1), (0, 2)]
    assert ideal_equal(ideal_power(m, 3), ideal_product(ideal_product(m, m), m))
    assert exps(ideal_power(m, 0)) == exps(unit_ideal(2))
    with pytest.raises(ValueError):
        ideal_power(m, -1)


def test_sum_intersect_colon():
    a = ideal_minimalize([(2, 0), (0, 1)])
    b = ideal_minimalize([(1, 0), (0, 2)])
    assert exps(ideal_sum(a, b)) == [(1, 0), (0, 1)]
    assert exps(ideal_intersect(a, b)) == [(2, 0), (1, 1), (0, 2)]
    q = parameter_ideal([2, 2])
    x = ideal_minimalize([(1, 0)])
    assert exps(ideal_colon(q, x)) == [(1, 0), (0, 2)]


def test_containment():
    m = maximal_ideal(2)
    q = parameter_ideal([2, 3])
    assert ideal_contains(m, q)
    assert not ideal_contains(q, m)
    assert Monomial((3, 1)) in q
    assert Monomial((1, 2)) not in q
    with pytest.raises(DimensionMismatch):
        ideal_contains(m, maximal_ideal(3))


def test_to_string():
    ideal = ideal_minimalize([(3, 1), (1, 3), (4, 0), (0, 4)])
    assert ideal.to_string(['X', 'Y']) == '(X^4, X^3*Y, X*Y^3, Y^4)'
    assert unit_ideal(2).to_strings(['X', 'Y']) == ['1']


def test_exponent_limit():
    with pytest.raises(ExponentOverflow):
        Monomial((EXPONENT_LIMIT, 0))
    big = ideal_minimalize([(EXPONENT_LIMIT // 2, 0), (0, 1)])
    with pytest.raises(ExponentOverflow):
        ideal_product(big, big)


def random_ideal(rng, nvars, count=3, max_exponent=8):
    return ideal_minimalize([tuple(rng.randint(0, max_exponent) for _ in range(nvars)) for _ in range(count)], nvars)


def box(nvars, size=10):
    return [Monomial(u) for u in itertools.product(range(size), repeat=nvars)]


@pytest.mark.parametrize('seed', range(8))
def test_sum_and_product_laws(seed):
    rng = random.Random(seed)
    nvars = rng.randint(1, 3)
    a, b, c = (random_ideal(rng, nvars) for _ in range(3))
    assert ideal_equal(ideal_product(a, b), ideal_product(b, a))
    assert ideal_equal(ideal_sum(a, b), ideal_sum(b, a))
    assert ideal_equal(ideal_product(ideal_product(a, b), c), ideal_product(a, ideal_product(b, c)))
    assert ideal_equal(ideal_sum(ideal_sum(a, b), c), ideal_sum(a, ideal_sum(b, c)))


@pytest.mark.parametrize('seed', range(8))
def test_colon_adjunction(seed):
    rng = random.Random(seed)
    nvars = rng.randint(1, 3)
    a, b = random_ideal(rng, nvars), random_ideal(rng, nvars)
    colon = ideal_colon(a, b)
    assert ideal_contains(a, ideal_product(b, colon))
    for u in box(nvars):
        assert (u in colon) == all(u * g in a for g in b.gens)


@pytest.mark.parametrize('seed', range(8))
def test_intersection_against_membership(seed):
    rng = random.Random(seed)
    nvars = rng.randint(1, 3)
    a, b = random_ideal(rng, nvars), random_ideal(rng, nvars)
    both = ideal_intersect(a, b)
    for u in box(nvars):
        assert (u in both) == (u in a and u in b)


@pytest.mark.parametrize('seed', range(5))
def test_power_is_repeated_product(seed):
    rng = random.Random(seed)
    a = random_ideal(rng, rng.randint(1, 3), max_exponent=4)
    repeated = unit_ideal(a.nvars)
    for n in range(6):
        assert ideal_equal(ideal_power(a, n), repeated)
        repeated = ideal_product(repeated, a)
