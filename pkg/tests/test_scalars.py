import random
from fractions import Fraction

import pytest

from entfam import ModeError, QQi
from entfam.scalars import format_rational, rational_from_string


def test_construction_and_repr():
    assert str(QQi(3)) == "3"
    assert str(QQi(Fraction(1, 2))) == "1/2"
    assert str(QQi(0, 1)) == "1i"
    assert str(QQi(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"


def test_field_arithmetic_is_closed_and_exact():
    rng = random.Random(7)
    for _ in range(200):
        a = QQi(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        b = QQi(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        c = QQi(Fraction(rng.randint(-9, 9), rng.randint(1, 7)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
        assert (a + b) * c == a * c + b * c
        assert a - a == QQi(0)
        if not b.is_zero:
            assert (a / b) * b == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.abs2() == (a * a.conjugate()).re


def test_pow():
    z = QQi(Fraction(1, 2), 1)
    assert z ** 0 == QQi(1)
    assert z ** 3 == z * z * z
    assert z ** -2 == QQi(1) / (z * z)


def test_mixed_mode_rejected():
    with pytest.raises(ModeError):
        QQi(1) + 0.5
    with pytest.raises(ModeError):
        QQi(0.5)
    with pytest.raises(ModeError):
        QQi(1) * (1 + 2j)


def test_explicit_downcast():
    z = QQi(Fraction(1, 4), Fraction(-3, 2))
    assert complex(z) == 0.25 - 1.5j


def test_int_fraction_promotion():
    assert QQi(1) + 2 == QQi(3)
    assert Fraction(1, 2) * QQi(0, 2) == QQi(0, 1)
    assert 1 - QQi(0, 1) == QQi(1, -1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQi(1) / QQi(0)


def test_hash_consistency():
    assert hash(QQi(3)) == hash(Fraction(3))
    assert QQi(3) == 3
    values = {QQi(1, 2): "a"}
    assert values[QQi(1, 2)] == "a"


def test_rational_strings():
    assert rational_from_string("3/4") == Fraction(3, 4)
    assert rational_from_string("-12") == Fraction(-12)
    assert format_rational(Fraction(8, 2)) == "4"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
