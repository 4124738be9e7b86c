"""Exact bit-length ratios and repeating-decimal notation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError


@dataclass(frozen=True, eq=False)
class Ratio:
    """``numerator / denominator`` in bits, kept unreduced.

    Equality and hashing go through the reduced value, so ``Ratio(36, 64)``
    equals ``Ratio(9, 16)`` and ``Fraction(9, 16)``.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.numerator < 0 or self.denominator <= 0:
            raise ParameterError(f"bad ratio {self.numerator}/{self.denominator}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reduced(self) -> Ratio:
        v = self.value
        return Ratio(v.numerator, v.denominator)

    def __eq__(self, other):
        if isinstance(other, Ratio):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < (other.value if isinstance(other, Ratio) else other)

    def __le__(self, other):
        return self.value <= (other.value if isinstance(other, Ratio) else other)

    def __float__(self):
        return self.numerator / self.denominator

    def __str__(self):
        return to_decimal(self.value)

    def __repr__(self):
        return f"Ratio({self.numerator}, {self.denominator})"


def to_decimal(x: Fraction) -> str:
    """Exact decimal form with the repetend in parentheses: 2/3 -> ``0.(6)``."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    if not rem:
        return f"{sign}{whole}"
    digits = []
    seen = {}
    while rem and rem not in seen:
        seen[rem] = len(digits)
        d, rem = divmod(rem * 10, x.denominator)
        digits.append(str(d))
    frac = "".join(digits)
    if rem:
        start = seen[rem]
        frac = f"{frac[:start]}({frac[start:]})"
    return f"{sign}{whole}.{frac}"


_DECIMAL = re.compile(r"^\s*(-?)(\d+)(?:[.,](\d*)(?:\((\d+)\))?)?\s*$")


def parse_decimal(text: str) -> Fraction:
    """Inverse of :func:`to_decimal`; accepts ``,`` as the decimal mark.

    ``"0.6(6)"`` and ``"0.(6)"`` both give 2/3.
    """
    m = _DECIMAL.match(text)
    if not m:
        raise ValueError(f"not a decimal: {text!r}")
    sign, whole, fixed, rep = m.groups()
    fixed = fixed or ""
    value = Fraction(int(whole))
    if fixed:
        value += Fraction(int(fixed), 10 ** len(fixed))
    if rep:
        value += Fraction(int(rep), (10 ** len(rep) - 1) * 10 ** len(fixed))
    return -value if sign else value
