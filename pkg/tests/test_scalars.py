from fractions import Fraction

import pytest

from walab.scalars import Poly, RatFunc, is_zero, scalar_str


def test_poly_arithmetic():
    x = Poly.x()
    p = x * x + Poly.const(2) * x + Poly.const(1)
    q = x + Poly.const(1)
    quot, rem = p.divmod(q)
    assert quot == q and rem.is_zero()
    assert p.eval(Fraction(3)) == 16


def test_ratfunc_reduction_and_equality():
    k = RatFunc.variable("k")
    a = (k * k - 1) / (k - 1)
    assert a == k + 1
    assert (a - k - 1).is_zero()
    assert a.as_fraction() is None
    assert (a * 0 + Fraction(5, 2)).as_fraction() == Fraction(5, 2)


def test_ratfunc_negative_powers():
    k = RatFunc.variable("k")
    assert k ** (-2) * k ** 3 == k
    assert (k + 1) ** (-1) * (k + 1) == 1
    with pytest.raises(ZeroDivisionError):
        (k * 0) ** (-1)


def test_ratfunc_eval_and_poles():
    k = RatFunc.variable("k")
    f = (k + 2) / (k - 1)
    assert f.eval(Fraction(3)) == Fraction(5, 2)
    with pytest.raises(ZeroDivisionError):
        f.eval(1)


def test_scalar_helpers():
    k = RatFunc.variable("k")
    assert is_zero(k - k)
    assert not is_zero(k)
    assert is_zero(Fraction(0)) and not is_zero(Fraction(1, 7))
    assert isinstance(scalar_str(k), str)
