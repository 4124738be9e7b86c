import random
from fractions import Fraction

import pytest

from binomial_mc import (
    CloneDistribution,
    FlagForm,
    Ratio,
    basic_file,
    coeff_binomial,
    coeff_clone,
    coeff_empirical,
    coeff_mv2,
    mv2_distribution,
)
from binomial_mc.errors import ConstraintError, ParameterError
from binomial_mc.metrics import coeff_binomial_printed
from binomial_mc.ratio import parse_decimal, to_decimal


@pytest.mark.parametrize("text, value", [
    ("0.5", Fraction(1, 2)),
    ("0.6(6)", Fraction(2, 3)),
    ("0.(6)", Fraction(2, 3)),
    ("0.677083(3)", Fraction(260, 384)),
    ("0,751953125", Fraction(1540, 2048)),
    ("1", Fraction(1)),
    ("0.732(142857)", Fraction(41, 56)),
])
def test_parse_decimal(text, value):
    assert parse_decimal(text) == value


@pytest.mark.parametrize("value, text", [
    (Fraction(2, 3), "0.(6)"),
    (Fraction(65, 96), "0.67708(3)"),
    (Fraction(9, 16), "0.5625"),
    (Fraction(1, 7), "0.(142857)"),
    (Fraction(3), "3"),
])
def test_to_decimal(value, text):
    assert to_decimal(value) == text
    assert parse_decimal(text) == value


def test_ratio_equality_is_by_value():
    assert Ratio(36, 64) == Ratio(9, 16) == Fraction(9, 16)
    assert Ratio(36, 64).reduced() == Ratio(9, 16)
    assert (Ratio(36, 64).numerator, Ratio(36, 64).denominator) == (36, 64)
    assert len({Ratio(1, 2), Ratio(2, 4)}) == 1
    with pytest.raises(ParameterError):
        Ratio(1, 0)


@pytest.mark.parametrize("n, value", [
    (2, Fraction(1, 2)),
    (6, Fraction(260, 384)),
    (8, Fraction(1540, 2048)),
])
def test_coeff_binomial(n, value):
    assert coeff_binomial(n).value == value
    assert coeff_binomial(n).denominator == n * 2 ** n


@pytest.mark.parametrize("n, value", [
    (2, Fraction(3, 4)),
    (3, Fraction(16, 24)),
    (8, Fraction(7587890625, 10 ** 10)),
])
def test_coeff_mv2(n, value):
    assert coeff_mv2(n).value == value


def test_printed_formula_disagrees_at_2():
    assert coeff_binomial_printed(2).value == Fraction(3, 8)
    assert coeff_binomial_printed(2) != coeff_binomial(2)


def test_bad_n():
    for fn in (coeff_binomial, coeff_mv2, basic_file):
        with pytest.raises(ParameterError):
            fn(1)


def test_clone_identity():
    assert coeff_clone(CloneDistribution(5, {5: 32})).value == 1


def test_clone_small():
    # (1*2 + 2*2) / (2*4)
    assert coeff_clone(CloneDistribution(2, {1: 2, 2: 2})) == Ratio(6, 8)


@pytest.mark.parametrize("n", range(2, 9))
def test_clone_mv2(n):
    assert coeff_clone(mv2_distribution(n)) == coeff_mv2(n)


@pytest.mark.parametrize("n, counts", [
    (3, {1: 2, 3: 5}),
    (3, {4: 8}),
    (3, {1: -1, 3: 9}),
])
def test_clone_constraint(n, counts):
    with pytest.raises(ConstraintError):
        CloneDistribution(n, counts)


@pytest.mark.parametrize("n, form, value", [
    (5, FlagForm.ONE, Fraction(5, 8)),
    (7, FlagForm.ONE, Fraction(71875, 10 ** 5)),
    (4, FlagForm.TWO, Fraction(9, 16)),
])
def test_coeff_empirical(n, form, value):
    assert coeff_empirical(n, form).value == value


def test_coeff_empirical_custom_input():
    assert coeff_empirical(4, use_basic_file=False, bits="0101" "0000") == Ratio(4, 8)
    with pytest.raises(ParameterError):
        coeff_empirical(4, use_basic_file=False)


def test_basic_file():
    assert basic_file(2) == "00" "01" "10" "11"
    shuffled = basic_file(6, random.Random(1))
    words = {shuffled[i:i + 6] for i in range(0, len(shuffled), 6)}
    assert len(words) == 64 and len(shuffled) == 6 * 64


@pytest.mark.parametrize("n", range(2, 9))
def test_binomial_not_above_mv2(n):
    assert coeff_binomial(n) <= coeff_mv2(n)
