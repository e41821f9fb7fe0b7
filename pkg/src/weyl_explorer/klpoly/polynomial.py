"""Exact univariate integer polynomials in q."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from weyl_explorer.coxeter.group import WeylGroup

Operand = Union["Polynomial", int]


def _normalize(coefficients: Iterable[int]) -> Tuple[int, ...]:
    values = []
    for coefficient in coefficients:
        if isinstance(coefficient, bool) or not isinstance(coefficient, int):
            raise TypeError(
                "Polynomial coefficients must be integers, got "
                f"{coefficient.__class__.__name__}"
            )
        values.append(coefficient)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in q with arbitrary-precision integer coefficients.

    The coefficient of q^i is stored at position i; the highest stored
    coefficient is never zero, so the zero polynomial is the empty tuple.

    Attributes:
        coefficients: Coefficients in ascending powers of q.
    """

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Strip trailing zero coefficients."""
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def zero(cls) -> "Polynomial":
        """Return the zero polynomial."""
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        """Return the constant polynomial 1."""
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int, power: int) -> "Polynomial":
        """Return coefficient * q^power."""
        if power < 0:
            raise ValueError("No negative exponents")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Polynomial":
        """Build a polynomial from its ascending coefficient array."""
        return cls(tuple(data))

    def to_json(self) -> List[int]:
        """Return the ascending coefficient array."""
        return list(self.coefficients)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coefficients

    def is_one(self) -> bool:  # noqa: D102
        return self.coefficients == (1,)

    def coefficient(self, power: int) -> int:
        """Return the coefficient of q^power."""
        if power < 0:
            raise ValueError("No negative exponents")
        if power >= len(self.coefficients):
            return 0
        return self.coefficients[power]

    def __add__(self, other: Operand) -> "Polynomial":  # noqa: D105
        other = _coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(
            tuple(
                self.coefficient(i) + other.coefficient(i)
                for i in range(size)
            )
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":  # noqa: D105
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Operand) -> "Polynomial":  # noqa: D105
        return self + (-_coerce(other))

    def __rsub__(self, other: Operand) -> "Polynomial":  # noqa: D105
        return _coerce(other) - self

    def __mul__(self, other: Operand) -> "Polynomial":  # noqa: D105
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def shift(self, power: int) -> "Polynomial":
        """Return q^power * self."""
        if power < 0:
            raise ValueError("No negative exponents")
        if self.is_zero():
            return self
        return Polynomial((0,) * power + self.coefficients)

    def truncate(self, degree: int) -> "Polynomial":
        """Keep only the terms of degree at most ``degree``."""
        if degree < 0:
            return Polynomial.zero()
        return Polynomial(self.coefficients[: degree + 1])

    def reflect(self, degree: int) -> "Polynomial":
        """Return q^degree * self(1/q).

        Raises:
            ValueError: If the polynomial has degree above ``degree``.
        """
        if self.degree > degree:
            raise ValueError(
                f"Cannot reflect a polynomial of degree {self.degree} "
                f"in degree {degree}"
            )
        padding = degree + 1 - len(self.coefficients)
        padded = self.coefficients + (0,) * padding
        return Polynomial(tuple(reversed(padded)))

    def evaluate(self, value: int) -> int:
        """Evaluate the polynomial at an integer by Horner's rule."""
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def __str__(self) -> str:
        """Render in ascending powers, e.g. ``1 + q + 2q^2``."""
        if self.is_zero():
            return "0"

        parts = []
        for power, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if power == 0:
                term = str(magnitude)
            else:
                monomial = "q" if power == 1 else f"q^{power}"
                term = monomial if magnitude == 1 else f"{magnitude}{monomial}"

            if not parts:
                parts.append(f"-{term}" if coefficient < 0 else term)
            else:
                parts.append(f"- {term}" if coefficient < 0 else f"+ {term}")
        return " ".join(parts)


def _coerce(value: Union[Polynomial, int]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial((value,))
    raise TypeError(
        f"Cannot perform operations between Polynomial and "
        f"{value.__class__.__name__}"
    )


def poincare_polynomial(group: WeylGroup) -> Polynomial:
    """Return the rank generating function of W, sum over w of q^l(w)."""
    counts = [0] * (group.longest_element.length + 1)
    for element in group:
        counts[element.length] += 1
    return Polynomial(tuple(counts))
