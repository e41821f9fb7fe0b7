"""Tests for Grothendieck group classes."""
import json

import pytest

from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.kgroup.decompositions import (
    dualverma_in_simple_char0,
    simple_in_dualverma_charp,
)
from weyl_explorer.kgroup.kgclass import Basis, KGClass, Regime
from weyl_explorer.utils.errors import (
    BasisMismatchError,
    ConfigError,
    MixedGroupError,
)


def test_regime_from_characteristic() -> None:
    """Test reading characteristics."""
    assert Regime.from_characteristic("0") is Regime.CHAR_0
    assert Regime.from_characteristic("p") is Regime.CHAR_P
    assert Regime.from_characteristic("P") is Regime.CHAR_P
    assert Regime.from_characteristic("2") is Regime.CHAR_P
    assert Regime.from_characteristic("7919") is Regime.CHAR_P
    assert Regime.from_characteristic("1000000000039") is Regime.CHAR_P
    for text in ["1", "4", "91", "-3", "zero", "", "²", "1²"]:
        with pytest.raises(ConfigError, match="prime"):
            Regime.from_characteristic(text)


def test_zero_coefficients_are_dropped(a3: WeylGroup) -> None:
    """Test that explicit zeros are never stored."""
    s1 = a3.generator(1)
    kg_class = KGClass(Basis.M, Regime.CHAR_P, {s1: 0, a3.identity: 2})
    assert kg_class.terms == {a3.identity: 2}
    assert len(kg_class) == 1
    assert kg_class.coefficient(s1) == 0
    assert KGClass(Basis.L, Regime.CHAR_0).group is None
    assert kg_class.group is a3


def test_mixed_groups_rejected(a3: WeylGroup, b2: WeylGroup) -> None:
    """Test that all terms must share a group."""
    with pytest.raises(MixedGroupError):
        KGClass(Basis.M, Regime.CHAR_P, {a3.identity: 1, b2.identity: 1})


def test_rendering(a3: WeylGroup, singular_w: Element, s1s3: Element) -> None:
    """Test text rendering with leading terms first."""
    s1 = a3.generator(1)
    assert str(KGClass(Basis.L, Regime.CHAR_0)) == "0"
    assert (
        str(KGClass(Basis.L, Regime.CHAR_0, {s1s3: 1, singular_w: 1}))
        == "[L(1 2 3 2 1)] + [L(1 3)]"
    )
    assert str(KGClass.delta(a3.identity, Basis.M, Regime.CHAR_P)) == (
        "[M(e)]"
    )
    assert str(KGClass(Basis.M, Regime.CHAR_P, {a3.identity: -1})) == (
        "-[M(e)]"
    )
    assert (
        str(KGClass(Basis.M, Regime.CHAR_P, {s1: 1, a3.identity: -1}))
        == "[M(1)] - [M(e)]"
    )
    assert str(KGClass(Basis.M, Regime.CHAR_0, {s1s3: 2})) == "2[M(1 3)]"


def test_sorted_terms(a3: WeylGroup, s1s3: Element) -> None:
    """Test ordering by descending length, then canonical word."""
    kg_class = simple_in_dualverma_charp(s1s3)
    assert kg_class.support() == [
        s1s3,
        a3.generator(1),
        a3.generator(3),
        a3.identity,
    ]


def test_arithmetic(a3: WeylGroup) -> None:
    """Test Z-module operations."""
    s1 = a3.generator(1)
    e = a3.identity
    x = KGClass(Basis.M, Regime.CHAR_P, {s1: 1, e: -1})
    y = KGClass(Basis.M, Regime.CHAR_P, {e: 1})
    assert x + y == KGClass.delta(s1, Basis.M, Regime.CHAR_P)
    assert x - x == KGClass(Basis.M, Regime.CHAR_P)
    assert -y == KGClass(Basis.M, Regime.CHAR_P, {e: -1})
    assert 3 * x == x * 3 == KGClass(Basis.M, Regime.CHAR_P, {s1: 3, e: -3})
    assert 0 * x == KGClass(Basis.M, Regime.CHAR_P)
    assert hash(x + y) == hash(KGClass.delta(s1, Basis.M, Regime.CHAR_P))


def test_arithmetic_invalid(a3: WeylGroup) -> None:
    """Test that incompatible operands are rejected."""
    e = a3.identity
    m_class = KGClass.delta(e, Basis.M, Regime.CHAR_P)
    with pytest.raises(BasisMismatchError, match="basis"):
        m_class + KGClass.delta(e, Basis.L, Regime.CHAR_P)
    with pytest.raises(BasisMismatchError, match="characteristic"):
        m_class - KGClass.delta(e, Basis.M, Regime.CHAR_0)
    with pytest.raises(TypeError, match="Expected KGClass"):
        m_class + 1
    with pytest.raises(TypeError):
        m_class * True
    with pytest.raises(TypeError):
        m_class * 1.5  # type: ignore[operator]


def test_to_basis_round_trip(a3: WeylGroup) -> None:
    """Test that conversions return the identical term map."""
    for regime in Regime:
        for w in a3:
            delta = KGClass.delta(w, Basis.L, regime)
            in_m = delta.to_basis(Basis.M)
            assert in_m.basis is Basis.M
            assert in_m.to_basis(Basis.L) == delta
            assert delta.to_basis(Basis.L) is delta


def test_json(a3: WeylGroup) -> None:
    """Test the JSON schema and decoding on A3 classes."""
    w0 = a3.longest_element
    data = dualverma_in_simple_char0(w0).to_json()
    assert data["basis"] == "L"
    assert data["char"] == "0"
    assert data["terms"][0] == {"word": [1, 2, 1, 3, 2, 1], "coeff": 1}
    for w in a3:
        kg_class = simple_in_dualverma_charp(w)
        encoded = json.dumps(kg_class.to_json())
        assert KGClass.from_json(json.loads(encoded), a3) == kg_class


def test_large_characteristic() -> None:
    """Test that large primes are accepted and composites refused quickly."""
    mersenne = str(2**127 - 1)
    assert Regime.from_characteristic(mersenne) is Regime.CHAR_P
    assert Regime.from_characteristic("9223372036854775783") is (
        Regime.CHAR_P
    )
    with pytest.raises(ConfigError, match="prime"):
        Regime.from_characteristic(str((2**61 - 1) * (2**89 - 1)))


@pytest.mark.parametrize("value", [0.4, 2.7, 1.0, True, "1", None])
def test_non_integer_coefficients(a3: WeylGroup, value: object) -> None:
    """Test that only integer coefficients are accepted."""
    with pytest.raises(TypeError, match="must be integers"):
        KGClass(Basis.M, Regime.CHAR_0, {a3.identity: value})  # type: ignore


def test_from_json_non_integer(a3: WeylGroup) -> None:
    """Test that fractional JSON coefficients are refused."""
    data = {
        "basis": "M",
        "char": "0",
        "terms": [{"word": [1], "coeff": 2.7}],
    }
    with pytest.raises(TypeError, match="must be integers"):
        KGClass.from_json(data, a3)
