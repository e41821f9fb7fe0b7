"""Finite Weyl groups enumerated through their reflection representation.

Every element is stored as the integer matrix of its action on the root
lattice, written in the basis of simple roots. The whole group is enumerated
once by breadth-first closure under right multiplication by the simple
reflections; afterwards elements are small handles (group, index) and all
products, descents and lengths are table lookups.

Indices are assigned in (length, canonical word) order, so the identity has
index 0 and sorting elements by index sorts them by length and then by their
ShortLex-least reduced word.
"""
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Literal,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from weyl_explorer.coxeter.cartan import CartanType, parse_cartan_type
from weyl_explorer.coxeter.validation import validate_same_group
from weyl_explorer.utils.config import enumeration_cap
from weyl_explorer.utils.errors import (
    CartanValidationError,
    EnumerationCapError,
    WordParseError,
)
from weyl_explorer.utils.parsing import format_word, parse_word

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]


@dataclass(frozen=True)
class Element:
    """Element of a finite Weyl group.

    Two elements are equal when they have the same parent group and the same
    index, whichever word was used to produce them.

    Attributes:
        group: Parent Weyl group.
        index: Position of the element in (length, canonical word) order.
    """

    group: "WeylGroup" = field(repr=False)
    index: int

    def __repr__(self) -> str:  # noqa: D105
        return f"Element({self.group.cartan}, [{format_word(self.word)}])"

    def __str__(self) -> str:  # noqa: D105
        return format_word(self.word)

    def __mul__(self, other: "Element") -> "Element":  # noqa: D105
        return multiply(self, other)

    @property
    def word(self) -> Tuple[int, ...]:
        """ShortLex-least reduced word, as 1-based generator indices."""
        return self.group._words[self.index]

    @property
    def length(self) -> int:
        """Length of the element."""
        return self.group._lengths[self.index]

    @property
    def matrix(self) -> np.ndarray:
        """Action on the root lattice in the basis of simple roots."""
        return self.group._matrices[self.index]

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Key ordering elements by length, then canonical word."""
        return (self.length, self.word)

    @property
    def is_identity(self) -> bool:
        """Whether the element is the identity."""
        return self.index == 0

    @property
    def left_descents(self) -> FrozenSet[int]:
        """Generators s with l(sw) < l(w)."""
        return self.group._left_descents[self.index]

    @property
    def right_descents(self) -> FrozenSet[int]:
        """Generators s with l(ws) < l(w)."""
        return self.group._right_descents[self.index]

    def left_multiply(self, generator: int) -> "Element":
        """Return s_generator * self."""
        return Element(self.group, self.group._left[self.index][generator - 1])

    def right_multiply(self, generator: int) -> "Element":
        """Return self * s_generator."""
        return Element(
            self.group, self.group._right[self.index][generator - 1]
        )

    def inverse(self) -> "Element":
        """Return the inverse element."""
        return inverse(self)

    def inversion_count(self) -> int:
        """Count the positive roots sent to negative roots."""
        images = self.group.positive_roots @ self.matrix.T
        return int(np.sum(np.all(images <= 0, axis=1)))

    def reduced_words(self) -> List[Tuple[int, ...]]:
        """Return every reduced word of the element, sorted."""
        return sorted(self.group._reduced_words(self.index))


class WeylGroup:
    """Finite Weyl group of a Cartan type, fully enumerated.

    Args:
        cartan: Cartan type of the group.
        max_order: Refuse to enumerate groups larger than this. None
            disables the check.

    Attributes:
        cartan (CartanType): Cartan type of the group.
        rank (int): Number of simple reflections.
        cartan_matrix (np.ndarray): Cartan matrix.
        coxeter_matrix (np.ndarray): Matrix of bond orders.
        positive_roots (np.ndarray): Positive roots, one per row, in the
            basis of simple roots, sorted by height.
        order (int): Number of elements.
    """

    def __init__(  # noqa: D107
        self, cartan: CartanType, max_order: Optional[int] = None
    ) -> None:
        self.cartan = cartan
        self.rank = cartan.rank
        self.cartan_matrix = cartan.cartan_matrix
        self.coxeter_matrix = cartan.coxeter_matrix

        _check_cap(cartan, max_order)

        # s_i fixes every coordinate but the i-th
        basis = np.eye(self.rank, dtype=np.int64)
        self._generators = [
            basis - np.outer(basis[i], self.cartan_matrix[i])
            for i in range(self.rank)
        ]
        self.positive_roots = self._compute_positive_roots()

        start = time.perf_counter()
        self._enumerate()
        expected = cartan.classified_order
        if self.order != expected:
            raise CartanValidationError(
                f"Enumerated {self.order} elements of {cartan}, but the "
                f"classification gives {expected}"
            )
        logger.debug(
            "Enumerated %s: %d elements in %.3fs",
            cartan,
            self.order,
            time.perf_counter() - start,
        )
        self._bruhat_memo: Dict[Tuple[int, int], bool] = {}

    def __repr__(self) -> str:  # noqa: D105
        return f"WeylGroup({self.cartan}, order={self.order})"

    def __len__(self) -> int:  # noqa: D105
        return self.order

    def __iter__(self) -> Iterator[Element]:
        """Iterate over elements in (length, canonical word) order."""
        return (Element(self, index) for index in range(self.order))

    def __getitem__(self, index: int) -> Element:  # noqa: D105
        if not 0 <= index < self.order:
            raise IndexError(f"{self.cartan} has no element {index}")
        return Element(self, index)

    def _compute_positive_roots(self) -> np.ndarray:
        """Close the simple roots under the simple reflections.

        s_i permutes the positive roots other than alpha_i, so the closure
        never leaves the positive cone.
        """
        simple = [tuple(row) for row in np.eye(self.rank, dtype=np.int64)]
        roots = list(simple)
        seen = set(roots)
        position = 0
        while position < len(roots):
            root = np.array(roots[position], dtype=np.int64)
            for i, generator in enumerate(self._generators):
                if roots[position] == simple[i]:
                    continue
                image = tuple((generator @ root).tolist())
                if image not in seen:
                    seen.add(image)
                    roots.append(image)
            position += 1
        roots.sort(key=lambda root: (sum(root), root))
        return np.array(roots, dtype=np.int64)

    def _enumerate(self) -> None:
        identity = np.identity(self.rank, dtype=np.int64)
        matrices = [identity]
        lengths = [0]
        positions = {identity.tobytes(): 0}
        right: List[List[int]] = []

        position = 0
        while position < len(matrices):
            current = matrices[position]
            row = []
            for generator in self._generators:
                product = current @ generator
                key = product.tobytes()
                target = positions.get(key)
                if target is None:
                    target = len(matrices)
                    positions[key] = target
                    matrices.append(product)
                    lengths.append(lengths[position] + 1)
                row.append(target)
            right.append(row)
            position += 1

        left = [
            [
                positions[(generator @ matrix).tobytes()]
                for generator in self._generators
            ]
            for matrix in matrices
        ]

        words: List[Tuple[int, ...]] = [()] * len(matrices)
        for element in range(1, len(matrices)):
            generator = next(
                s
                for s in range(self.rank)
                if lengths[left[element][s]] < lengths[element]
            )
            words[element] = (generator + 1,) + words[left[element][generator]]

        order = sorted(
            range(len(matrices)), key=lambda k: (lengths[k], words[k])
        )
        relabel = {old: new for new, old in enumerate(order)}

        self.order = len(order)
        self._matrices = np.stack([matrices[k] for k in order])
        self._lengths = [lengths[k] for k in order]
        self._words = [words[k] for k in order]
        self._right = [[relabel[j] for j in right[k]] for k in order]
        self._left = [[relabel[j] for j in left[k]] for k in order]

        # w(alpha_s) < 0 iff s is a right descent of w
        negative = self._matrices.sum(axis=1) < 0
        self._right_descents = [
            frozenset(int(s) + 1 for s in np.flatnonzero(row))
            for row in negative
        ]
        self._inverses = [
            self._walk(0, reversed(word)) for word in self._words
        ]
        self._left_descents = [
            self._right_descents[self._inverses[k]] for k in range(self.order)
        ]

    def _walk(self, start: int, word: Iterable[int]) -> int:
        position = start
        for generator in word:
            position = self._right[position][generator - 1]
        return position

    def _reduced_words(self, index: int) -> List[Tuple[int, ...]]:
        if index == 0:
            return [()]
        words = []
        for generator in sorted(self._right_descents[index]):
            shorter = self._right[index][generator - 1]
            words.extend(
                word + (generator,) for word in self._reduced_words(shorter)
            )
        return words

    @property
    def identity(self) -> Element:
        """Identity element."""
        return Element(self, 0)

    @property
    def longest_element(self) -> Element:
        """Longest element w0."""
        return Element(self, self.order - 1)

    @property
    def generators(self) -> List[Element]:
        """Simple reflections s_1..s_n."""
        return [self.generator(i) for i in range(1, self.rank + 1)]

    def generator(self, index: int) -> Element:
        """Return the simple reflection s_index (1-based)."""
        if not 1 <= index <= self.rank:
            raise WordParseError(
                f"generator {index} is not in 1..{self.rank}"
            )
        return Element(self, self._right[0][index - 1])

    def element_from_word(self, word: Union[str, Sequence[int]]) -> Element:
        """Return the product of the generators in a word.

        Args:
            word: Sequence of 1-based generator indices, or a string such
                as ``"1 2 3 2 1"``. The word need not be reduced.

        Returns:
            Element: The product s_{i1} ... s_{ik}.
        """
        if isinstance(word, str):
            indices = parse_word(word, self.rank)
        else:
            indices = parse_word(" ".join(str(i) for i in word), self.rank)
        return Element(self, self._walk(0, indices))

    def elements_of_length(self, length: int) -> List[Element]:
        """Return the elements of a given length, in canonical order."""
        return [
            Element(self, k)
            for k in range(self.order)
            if self._lengths[k] == length
        ]


def _check_cap(cartan: CartanType, max_order: Optional[int]) -> None:
    expected = cartan.classified_order
    if max_order is not None and expected > max_order:
        raise EnumerationCapError(
            f"{cartan} has {expected} elements, more than the "
            f"enumeration cap of {max_order}"
        )


@lru_cache(maxsize=None)
def _build_group(cartan: CartanType) -> WeylGroup:
    return WeylGroup(cartan)


def build_group(
    cartan: Union[str, CartanType], allow_large: bool = False
) -> WeylGroup:
    """Construct and enumerate the Weyl group of a Cartan type.

    Groups are cached, so building the same type twice returns the same
    object and elements of both are interchangeable.

    Args:
        cartan: Cartan type or string such as ``"A3"``.
        allow_large: If True, ignore the enumeration cap.

    Returns:
        WeylGroup: The enumerated group.

    Raises:
        CartanValidationError: If the type is not a finite Weyl type.
        EnumerationCapError: If the group order exceeds the cap.
    """
    cartan_type = parse_cartan_type(cartan)
    _check_cap(cartan_type, enumeration_cap(allow_large))
    return _build_group(cartan_type)


def multiply(a: Element, b: Element) -> Element:
    """Return the product a * b.

    Raises:
        MixedGroupError: If a and b come from different groups.
    """
    group = validate_same_group(a, b)
    return Element(group, group._walk(a.index, b.word))


def inverse(a: Element) -> Element:
    """Return the inverse of an element."""
    return Element(a.group, a.group._inverses[a.index])


def length(w: Element) -> int:
    """Return the length of an element."""
    return w.length


def descents(w: Element, side: Side = "left") -> FrozenSet[int]:
    """Return the left or right descent set of an element.

    Args:
        w: Element.
        side: ``"left"`` for {s : l(sw) < l(w)}, ``"right"`` for
            {s : l(ws) < l(w)}.

    Returns:
        Set of 1-based generator indices.
    """
    if side == "left":
        return w.left_descents
    if side == "right":
        return w.right_descents
    raise ValueError(f"side must be 'left' or 'right', got '{side}'")
