"""Tests for integer polynomial arithmetic."""
import pytest

from weyl_explorer.coxeter.group import build_group
from weyl_explorer.klpoly.polynomial import Polynomial, poincare_polynomial


def test_normalization() -> None:
    """Test that trailing zeros are stripped."""
    assert Polynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert Polynomial((0, 0)) == Polynomial.zero()
    assert Polynomial.zero().degree == -1
    assert Polynomial.one().degree == 0
    assert Polynomial.monomial(3, 2) == Polynomial((0, 0, 3))
    assert Polynomial.zero().is_zero()
    assert Polynomial((1,)).is_one()


def test_invalid_coefficients() -> None:
    """Test that only integer coefficients are accepted."""
    with pytest.raises(TypeError, match="float"):
        Polynomial((1.5,))  # type: ignore[arg-type]
    with pytest.raises(TypeError, match="bool"):
        Polynomial((True,))
    with pytest.raises(ValueError):
        Polynomial.monomial(1, -1)


@pytest.mark.parametrize(
    "coefficients, text",
    [
        ((), "0"),
        ((1,), "1"),
        ((1, 1), "1 + q"),
        ((1, 1, 2), "1 + q + 2q^2"),
        ((-1, 1), "-1 + q"),
        ((0, -1, 0, 3), "-q + 3q^3"),
        ((2, -2), "2 - 2q"),
    ],
)
def test_rendering(coefficients: tuple, text: str) -> None:
    """Test rendering in ascending powers."""
    assert str(Polynomial(coefficients)) == text


def test_arithmetic() -> None:
    """Test ring operations."""
    p = Polynomial((1, 1))
    q = Polynomial((-1, 1))
    assert p + q == Polynomial((0, 2))
    assert p - p == Polynomial.zero()
    assert p * q == Polynomial((-1, 0, 1))
    assert -p == Polynomial((-1, -1))
    assert 2 * p == p * 2 == Polynomial((2, 2))
    assert p + 1 == 1 + p == Polynomial((2, 1))
    assert 1 - p == Polynomial((0, -1))
    assert p * Polynomial.zero() == Polynomial.zero()


def test_arithmetic_invalid_operand() -> None:
    """Test that arithmetic with non-integers fails."""
    with pytest.raises(TypeError, match="Polynomial and str"):
        Polynomial.one() + "q"  # type: ignore[operator]
    with pytest.raises(TypeError):
        Polynomial.one() * 0.5  # type: ignore[operator]


def test_big_coefficients() -> None:
    """Test that coefficients never overflow."""
    big = Polynomial((2**62, 2**62))
    assert (big * big).coefficient(1) == 2**125


def test_shift_truncate_reflect() -> None:
    """Test the degree manipulations used by the KL computations."""
    p = Polynomial((1, 2, 3))
    assert p.shift(2) == Polynomial((0, 0, 1, 2, 3))
    assert Polynomial.zero().shift(3).is_zero()
    assert p.truncate(1) == Polynomial((1, 2))
    assert p.truncate(-1).is_zero()
    assert p.reflect(2) == Polynomial((3, 2, 1))
    assert p.reflect(4) == Polynomial((0, 0, 3, 2, 1))
    with pytest.raises(ValueError, match="degree 2"):
        p.reflect(1)
    assert p.coefficient(1) == 2
    assert p.coefficient(7) == 0


def test_evaluate() -> None:
    """Test evaluation at integers."""
    p = Polynomial((1, 1))
    assert p.evaluate(1) == 2
    assert p.evaluate(0) == 1
    assert Polynomial((1, 0, 2)).evaluate(-2) == 9
    assert Polynomial.zero().evaluate(5) == 0


def test_json() -> None:
    """Test the coefficient-array JSON form."""
    p = Polynomial((1, 0, -2))
    assert p.to_json() == [1, 0, -2]
    assert Polynomial.from_json(p.to_json()) == p
    assert Polynomial.from_json([]) == Polynomial.zero()


def test_poincare_polynomial() -> None:
    """Test the rank generating functions of A2, A3 and B2."""
    assert poincare_polynomial(build_group("A2")) == Polynomial((1, 2, 2, 1))
    assert poincare_polynomial(build_group("A3")) == (
        Polynomial((1, 1)) * Polynomial((1, 1, 1)) * Polynomial((1, 1, 1, 1))
    )
    assert poincare_polynomial(build_group("B2")).evaluate(1) == 8
