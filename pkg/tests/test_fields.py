from fractions import Fraction

import pytest

from whlab.errors import CharacteristicError, FieldMismatch
from whlab.fields import GF, QQ, Field, field_from_name, same_field


def test_rationals_lowest_terms():
    f = QQ
    x = f.of(Fraction(2, 4))
    assert x == Fraction(1, 2)
    assert x.denominator == 2 and x.numerator == 1
    assert f.of(Fraction(3, -6)) == Fraction(-1, 2)
    assert f.of(Fraction(3, -6)).denominator > 0


def test_residue_arithmetic():
    f = GF(5)
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert f.of(-1) == 4
    assert f.of(Fraction(1, 2)) == 3  # 2·3 = 6 ≡ 1


def test_modulus_must_be_prime():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        GF(1)


def test_mixed_field_rejected():
    with pytest.raises(FieldMismatch):
        same_field(QQ, GF(2))
    assert same_field(GF(3), GF(3)) == GF(3)


def test_floats_banned():
    with pytest.raises(TypeError):
        QQ.of(0.5)


def test_div_int_characteristic():
    assert GF(5).div_int(1, 3) == 2  # 3·2 = 6 ≡ 1
    with pytest.raises(CharacteristicError):
        GF(5).div_int(1, 10)
    assert QQ.div_int(1, 10) == Fraction(1, 10)


def test_field_from_name():
    assert field_from_name("Q") == QQ
    assert field_from_name("F7") == GF(7)
    with pytest.raises(ValueError):
        field_from_name("R")
