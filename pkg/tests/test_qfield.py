from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asm3.qfield import OMEGA, OMEGA_BAR, ONE, Q, QBAR, S, ZERO, QsElem

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=12
)
elements = st.builds(QsElem, rationals, rationals)


def test_construction_and_parts():
    z = QsElem(Fraction(1, 2), Fraction(-3, 4))
    assert z.ra == Fraction(1, 2)
    assert z.sb == Fraction(-3, 4)
    assert QsElem(5).ra == 5 and QsElem(5).sb == 0
    assert QsElem(Fraction(2, 7)).is_rational


def test_rational_embedding_round_trip():
    z = QsElem(Fraction(-9, 4))
    assert z.is_rational
    assert z.to_fraction() == Fraction(-9, 4)
    with pytest.raises(ValueError):
        S.to_fraction()


def test_square_root_of_minus_three():
    assert S * S == -3
    assert S * S == QsElem(-3)


def test_sixth_root_constants():
    assert Q * QBAR == 1
    assert Q + QBAR == 1
    assert Q ** 6 == 1
    assert Q ** 3 == -1
    assert OMEGA == Q * Q
    assert OMEGA ** 3 == 1
    assert OMEGA * OMEGA_BAR == 1
    assert ONE + OMEGA + OMEGA_BAR == ZERO


def test_mixed_arithmetic_with_python_numbers():
    assert 1 + S == QsElem(1, 1)
    assert Fraction(1, 2) * S == QsElem(0, Fraction(1, 2))
    assert (S - 1) + (1 - S) == 0
    assert S / 2 == QsElem(0, Fraction(1, 2))
    assert 3 / QsElem(3) == 1


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(elements)
def test_inverse_cancels(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1
        assert a / a == 1


@given(elements)
def test_norm_is_multiplicative_with_conjugate(a):
    # norm(a) = a * conj(a) as a rational, and it vanishes only at zero
    prod = a * a.conjugate()
    assert prod.is_rational
    assert prod.to_fraction() == a.norm()
    assert (a.norm() == 0) == (not a)


def test_pow_negative_exponent():
    z = QsElem(1, 1)
    assert z ** -2 == (z * z).inverse()
    assert z ** 0 == 1
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


def test_hash_agrees_with_fraction_for_rationals():
    assert QsElem(Fraction(3, 2)) == Fraction(3, 2)
    assert hash(QsElem(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert QsElem(4) == 4
    assert hash(QsElem(4)) == hash(4)
    assert {QsElem(4): "a"}[4] == "a"


def test_equality_rejects_irrational_vs_rational():
    assert S != 0
    assert S != Fraction(1)
    assert QsElem(1, 1) != QsElem(1, -1)


def test_bool_and_repr():
    assert not ZERO
    assert S
    assert "s" in repr(S) or "S" in repr(S) or repr(S)
