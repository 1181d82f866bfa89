from samuel.core.polynomials import Polynomial


def test_coefficients_reduce_mod_p():
    f = Polynomial.from_dict(2, 7, {(1, 0): 8, (0, 1): 7})
    assert f.as_dict() == {(1, 0): 1}
    assert f.is_monomial


def test_arithmetic():
    x = Polynomial.variable(2, 7, 0)
    y = Polynomial.variable(2, 7, 1)
    f = (x + y) * (x - y)
    assert f.as_dict() == {(2, 0): 1, (0, 2): 6}
    assert f.is_homogeneous
    assert f.degree == 2
    assert (f - f).is_zero
    assert not (x * x + y).is_homogeneous
    assert (x * x + y).order == 1


def test_to_string():
    names = ['X', 'Y']
    x = Polynomial.variable(2, 7, 0)
    y = Polynomial.variable(2, 7, 1)
    assert (-x).to_string(names) == '-X'
    assert (x * x - y.scale(3)).to_string(names) == 'X^2 - 3*Y'
    assert Polynomial.constant(2, 7, 2).to_string(names) == '2'


def test_homogeneous_components():
    x = Polynomial.variable(2, 0, 0)
    y = Polynomial.variable(2, 0, 1)
    parts = (x * x + y).homogeneous_components()
    assert sorted(parts) == [1, 2]
    assert parts[1] == y
