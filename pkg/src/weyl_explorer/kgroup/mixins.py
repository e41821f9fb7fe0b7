"""Mixin classes and utilities for Grothendieck group arithmetic."""
from typing import TYPE_CHECKING, Dict, Mapping

from weyl_explorer.coxeter.group import Element
from weyl_explorer.utils.errors import BasisMismatchError

if TYPE_CHECKING:
    from weyl_explorer.kgroup.kgclass import Basis, KGClass, Regime


def prepare_for_operations(
    object1: "GrothendieckArithmeticMixin",
    object2: object,
) -> Mapping[Element, int]:
    """Prepare two classes for addition or subtraction.

    Args:
        object1: Left operand.
        object2: Right operand.

    Returns:
        Mapping[Element, int]: Terms of the right operand.

    Raises:
        TypeError: If the right operand is not a Grothendieck class.
        BasisMismatchError: If the classes use different bases or regimes.
    """
    if not isinstance(object2, GrothendieckArithmeticMixin):
        raise TypeError(
            f"Cannot perform operations between types "
            f"{object1.__class__.__name__} "
            f"and {object2.__class__.__name__}. Expected KGClass."
        )

    if object1.basis is not object2.basis:
        raise BasisMismatchError(
            f"Cannot combine a class in basis {object1.basis.value} "
            f"with one in basis {object2.basis.value}"
        )
    if object1.regime is not object2.regime:
        raise BasisMismatchError(
            f"Cannot combine a class in characteristic "
            f"{object1.regime.value} with one in characteristic "
            f"{object2.regime.value}"
        )
    return object2.terms


class GrothendieckArithmeticMixin:
    """Mixin providing Z-module operations on sparse term maps."""

    basis: "Basis"
    regime: "Regime"
    terms: Mapping[Element, int]

    def _with_terms(self, terms: Mapping[Element, int]) -> "KGClass":
        return self.__class__(self.basis, self.regime, terms)  # type: ignore

    def __add__(self, other: object) -> "KGClass":  # noqa: D105
        other_terms = prepare_for_operations(self, other)
        combined: Dict[Element, int] = dict(self.terms)
        for element, coefficient in other_terms.items():
            combined[element] = combined.get(element, 0) + coefficient
        return self._with_terms(combined)

    def __neg__(self) -> "KGClass":  # noqa: D105
        return self._with_terms(
            {element: -value for element, value in self.terms.items()}
        )

    def __sub__(self, other: object) -> "KGClass":  # noqa: D105
        prepare_for_operations(self, other)
        return self + (-other)  # type: ignore

    def __mul__(self, scalar: int) -> "KGClass":  # noqa: D105
        if isinstance(scalar, bool) or not isinstance(scalar, int):
            raise TypeError(
                f"Cannot scale a {self.__class__.__name__} by "
                f"{scalar.__class__.__name__}"
            )
        return self._with_terms(
            {element: scalar * value for element, value in self.terms.items()}
        )

    __rmul__ = __mul__
