"""Classes in the Grothendieck group of B-equivariant holonomic D-modules.

A class is a finite Z-linear combination of basis symbols, either the dual
Verma modules [M(w)] or the simple modules [L(w)], tagged with the regime
(positive characteristic or characteristic zero) that decides how the two
bases convert into each other.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple

import gmpy2

from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.coxeter.validation import validate_same_group
from weyl_explorer.kgroup.mixins import GrothendieckArithmeticMixin
from weyl_explorer.utils.errors import ConfigError
from weyl_explorer.utils.parsing import format_word


class Basis(Enum):
    """Basis of the Grothendieck group."""

    M = "M"
    L = "L"


class Regime(Enum):
    """Characteristic of the ground field, up to what matters here."""

    CHAR_P = "p"
    CHAR_0 = "0"

    @classmethod
    def from_characteristic(cls, text: str) -> "Regime":
        """Read ``"0"``, ``"p"`` or a prime number.

        Only the distinction between zero and positive characteristic is
        kept; the identities used in positive characteristic do not depend
        on the prime.

        Raises:
            ConfigError: If the text is neither 0, p nor a prime.
        """
        value = str(text).strip().lower()
        if value == "0":
            return cls.CHAR_0
        if value == "p" or (value.isdecimal() and _is_prime(int(value))):
            return cls.CHAR_P
        raise ConfigError(
            f"Characteristic must be 0, p or a prime number, got '{text}'"
        )


def _is_prime(number: int) -> bool:
    return number >= 2 and bool(gmpy2.is_prime(number))


@dataclass(frozen=True)
class KGClass(GrothendieckArithmeticMixin):
    """Finite formal combination of [M(w)] or [L(w)].

    Zero coefficients are never stored and all elements share one parent
    group.

    Attributes:
        basis: Basis the terms refer to.
        regime: Characteristic regime of the class.
        terms: Map from elements to nonzero integer coefficients.
    """

    basis: Basis
    regime: Regime
    terms: Mapping[Element, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check coefficients and the parent group, drop zeros."""
        for value in self.terms.values():
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(
                    "KGClass coefficients must be integers, got "
                    f"{value.__class__.__name__}"
                )
        terms = {
            element: value
            for element, value in self.terms.items()
            if value != 0
        }
        if terms:
            validate_same_group(*terms)
        object.__setattr__(self, "terms", terms)

    def __hash__(self) -> int:  # noqa: D105
        return hash((self.basis, self.regime, frozenset(self.terms.items())))

    def __len__(self) -> int:  # noqa: D105
        return len(self.terms)

    def __str__(self) -> str:
        """Render as ``[L(1 2 3 2 1)] + [L(1 3)]``, leading terms first."""
        if not self.terms:
            return "0"

        parts = []
        for element, coefficient in self.sorted_terms():
            magnitude = abs(coefficient)
            symbol = f"[{self.basis.value}({format_word(element.word)})]"
            term = symbol if magnitude == 1 else f"{magnitude}{symbol}"
            if not parts:
                parts.append(f"-{term}" if coefficient < 0 else term)
            else:
                parts.append(f"- {term}" if coefficient < 0 else f"+ {term}")
        return " ".join(parts)

    @classmethod
    def delta(cls, w: Element, basis: Basis, regime: Regime) -> "KGClass":
        """Return the class of a single basis symbol at w."""
        return cls(basis, regime, {w: 1})

    @property
    def group(self) -> Optional[WeylGroup]:
        """Parent group, or None for the zero class."""
        if not self.terms:
            return None
        return next(iter(self.terms)).group

    def coefficient(self, w: Element) -> int:
        """Return the coefficient of the basis symbol at w."""
        return self.terms.get(w, 0)

    def support(self) -> List[Element]:
        """Return the elements with nonzero coefficient, leading first."""
        return [element for element, _ in self.sorted_terms()]

    def sorted_terms(self) -> List[Tuple[Element, int]]:
        """Return terms by descending length, then canonical word."""
        return sorted(
            self.terms.items(),
            key=lambda item: (-item[0].length, item[0].word),
        )

    def to_basis(self, target: Basis) -> "KGClass":
        """Rewrite the class in another basis under its own regime."""
        from weyl_explorer.kgroup.decompositions import convert

        return convert(self, target)

    def to_json(self) -> Dict[str, Any]:
        """Return the JSON form of the class."""
        return {
            "basis": self.basis.value,
            "char": self.regime.value,
            "terms": [
                {"word": list(element.word), "coeff": coefficient}
                for element, coefficient in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any], group: WeylGroup) -> "KGClass":
        """Rebuild a class from its JSON form.

        Args:
            data: Mapping with ``basis``, ``char`` and ``terms`` keys.
            group: Group the words refer to.

        Returns:
            KGClass: The decoded class.
        """
        terms: Dict[Element, int] = {}
        for term in data["terms"]:
            element = group.element_from_word(term["word"])
            terms[element] = terms.get(element, 0) + term["coeff"]
        return cls(
            Basis(data["basis"]),
            Regime.from_characteristic(data["char"]),
            terms,
        )
