import random

import numpy as np
import pytest

from samuel.core import local_ring
from samuel.core.exceptions import CertificationError, TruncationMismatch, UnsupportedCharacteristic
from samuel.core.local_ring import LocalRing, LocalRingSpec
from samuel.core.parser import parse_polynomials
from samuel.core.polynomials import Polynomial
from samuel.core.problems import small_e1_family

P = 32003


def ring_and_polys(names, relations, *ideals, char=P):
    rels = tuple(parse_polynomials(relations, names, char))
    ring = LocalRingSpec(vars=tuple(names), char=char, relations=rels)
    return (ring,) + tuple(parse_polynomials(ideal, names, char) for ideal in ideals)


@pytest.mark.parametrize('graded', [True, False])
def test_colength_power_series(graded):
    ring, q, m2 = ring_and_polys(['X', 'Y'], [], ['X^2', 'Y^3'], ['X^2', 'X*Y', 'Y^2'])
    assert local_ring.colength_certified(ring, q, graded=graded) == 6
    assert local_ring.colength_certified(ring, m2, graded=graded) == 3


def test_colength_non_homogeneous_generators():
    ring, gens = ring_and_polys(['X', 'Y'], [], ['X^2 + Y^3', 'Y^2'])
    assert local_ring.colength_certified(ring, gens) == 4


@pytest.mark.parametrize('graded', [True, False])
def test_colength_with_relation(graded):
    ring, gens = ring_and_polys(['X', 'Y'], ['X*Y'], ['X^2', 'Y^2'])
    assert local_ring.colength_certified(ring, gens, graded=graded) == 3


@pytest.mark.parametrize('graded', [True, False])
def test_graded_and_dense_ambients_agree_on_family(graded):
    problem = small_e1_family(1, 1).parsed()
    ring = LocalRingSpec(vars=problem.names, char=problem.char, relations=problem.relations)
    assert local_ring.colength_certified(ring, problem.Q, graded=graded) == 3
    assert local_ring.colength_certified(ring, problem.I, graded=graded) == 2


def test_membership():
    ring, gens, polys = ring_and_polys(['X', 'Y'], [], ['X', 'Y^2'], ['X*Y', 'Y', 'Y^3 + X'])
    J = local_ring.certify(ring, gens)
    assert J.certified
    assert [J.contains_polynomial(f) for f in polys] == [True, False, True]


def test_minimal_generators():
    ring, gens = ring_and_polys(['X', 'Y'], [], ['X^2', 'X*Y', 'Y^2', 'X^3', 'X^2 + X*Y'])
    J = local_ring.certify(ring, gens)
    assert len(local_ring.minimal_generators(J)) == 3


def test_minimal_generators_modulo():
    ring, small, big = ring_and_polys(['X', 'Y'], [], ['X^2', 'Y^2'], ['X^2', 'Y^2', 'X*Y'])
    a = local_ring.certify(ring, big)
    b = local_ring.at_order(local_ring.certify(ring, small), a.order)
    extra = local_ring.minimal_generators(a, modulo=b)
    assert [f.to_string(['X', 'Y']) for f in extra] == ['X*Y']


def test_colon_is_stable():
    ring, gens, divisor = ring_and_polys(['X', 'Y'], [], ['X^2', 'Y^2'], ['X'])
    J = local_ring.ideal_colon_local(ring, gens, divisor[0])
    assert J.stable
    assert J.colength == 2


def test_quotient_length():
    ring, outer, inner = ring_and_polys(['X', 'Y'], [], ['X', 'Y'], ['X^2', 'Y^2'])
    assert local_ring.quotient_length_local(ring, outer, inner) == 3


def test_sum_and_intersection():
    ring, a, b, c = ring_and_polys(['X', 'Y'], [], ['X^2', 'Y'], ['X', 'Y^2'], ['X^2', 'X*Y', 'Y^2'])
    N = 5
    ta, tb, tc = (local_ring.build_truncated(ring, g, N) for g in (a, b, c))
    assert local_ring.equal_truncated(local_ring.ideal_intersect_local(ta, tb), tc)
    total = local_ring.ideal_sum_local(ta, tb)
    assert total.colength == 1
    assert local_ring.contains_truncated(total, tc)
    assert not local_ring.contains_truncated(tc, total)


def test_mismatched_orders():
    ring, a = ring_and_polys(['X', 'Y'], [], ['X', 'Y'])
    with pytest.raises(TruncationMismatch):
        local_ring.equal_truncated(local_ring.build_truncated(ring, a, 3), local_ring.build_truncated(ring, a, 4))


def test_not_m_primary_fails_certification():
    ring, gens = ring_and_polys(['X', 'Y'], [], ['X'])
    with pytest.raises(CertificationError):
        local_ring.certify(ring, gens, truncation_max=6)


def test_characteristic_must_be_prime():
    with pytest.raises(UnsupportedCharacteristic):
        LocalRingSpec(vars=('X',), char=4)


@pytest.mark.parametrize('relation', ['X*Y', 'X*Y - X^3 - Y^3'])
def test_dense_ambient_keeps_lower_orders(relation):
    rels = tuple(parse_polynomials([relation], ['X', 'Y'], P))
    spec = LocalRingSpec(vars=('X', 'Y'), char=P, relations=rels)
    upward, downward = LocalRing(spec, graded=False), LocalRing(spec, graded=False)
    downward.ambient(9)
    for N in range(2, 9):
        assert upward.ambient(N).dimension == 2 * N - 1
        assert downward.ambient(N).labels(0) == upward.ambient(N).labels(0)


def test_dense_colength_modulo_a_curve():
    ring, x, m = ring_and_polys(['X', 'Y'], ['X*Y - X^3 - Y^3'], ['X'], ['X', 'Y'])
    assert local_ring.colength_certified(ring, x, graded=False) == 3
    assert local_ring.colength_certified(ring, m, graded=False) == 1


def random_polynomial(rng, nvars, degrees, terms=3):
    coefficients = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.choice(degrees)):
            exps[rng.randrange(nvars)] += 1
        coefficients[tuple(exps)] = rng.randint(1, P - 1)
    return Polynomial.from_dict(nvars, P, coefficients)


def random_m_primary(rng, nvars, homogeneous):
    gens = [Polynomial.monomial(tuple(rng.randint(1, 3) if i == j else 0 for j in range(nvars)), P)
            for i in range(nvars)]
    for _ in range(rng.randint(1, 2)):
        degrees = [rng.randint(1, 3)] if homogeneous else [1, 2, 3]
        gens.append(random_polynomial(rng, nvars, degrees))
    return gens


@pytest.mark.parametrize('seed', range(6))
@pytest.mark.parametrize('graded', [True, False])
def test_certificate_holds_at_higher_orders(seed, graded):
    rng = random.Random(seed)
    nvars = rng.randint(2, 3)
    ring = LocalRingSpec(vars=tuple(f'X{i}' for i in range(nvars)), char=P)
    gens = random_m_primary(rng, nvars, homogeneous=graded)
    J = local_ring.certify(ring, gens, graded=graded)
    for step in (1, 2):
        higher = local_ring.build_truncated(ring, gens, J.order + step, graded)
        assert higher.certified
        assert higher.colength == J.colength


@pytest.mark.parametrize('seed', range(6))
def test_graded_and_dense_agree_on_random_ideals(seed):
    rng = random.Random(seed)
    nvars = rng.randint(2, 3)
    ring = LocalRingSpec(vars=tuple(f'X{i}' for i in range(nvars)), char=P)
    gens = random_m_primary(rng, nvars, homogeneous=True)
    graded, dense = (local_ring.certify(ring, gens, graded=g) for g in (True, False))
    assert graded.colength == dense.colength
    divisor = Polynomial.variable(nvars, P, 0)
    colons = [local_ring.ideal_colon_local(ring, J, divisor) for J in (graded, dense)]
    assert colons[0].colength == colons[1].colength


@pytest.mark.parametrize('graded', [True, False])
def test_echelon_is_deterministic(graded):
    rng = random.Random(7)
    ring = LocalRingSpec(vars=('X0', 'X1', 'X2'), char=P)
    gens = random_m_primary(rng, 3, homogeneous=True)
    first = local_ring.build_truncated(ring, gens, 6, graded)
    second = local_ring.build_truncated(ring, list(reversed(gens)), 6, graded)
    assert local_ring.equal_truncated(first, second)
    for (a, pivots_a), (b, pivots_b) in zip(first.blocks, second.blocks):
        assert pivots_a == pivots_b
        assert np.array_equal(a, b)
