"""Binary binomial number system.

A code of the ``(n, k)`` radix is a bit string ``b_1 .. b_r`` read left to
right that stops as soon as it has seen either ``k`` ones (class X, the code
ends in 1) or ``n - k`` zeros (class Y, the code ends in 0).  There are
exactly ``C(n, k)`` such codes and none is a prefix of another.

The numeric value of a code is ``sum(b_j * C(n - j, k - q_j))`` where ``q_j``
counts the ones before position ``j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .errors import CodeRangeError, InvalidCodeError, ParameterError


class CodeClass(enum.Enum):
    X = "X"
    Y = "Y"

    def flipped(self) -> CodeClass:
        return CodeClass.Y if self is CodeClass.X else CodeClass.X


@dataclass(frozen=True)
class BinomialParams:
    n: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.k, int)):
            raise ParameterError("n and k must be integers")
        if not 1 <= self.k <= self.n:
            raise ParameterError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def degenerate(self) -> bool:
        """True for the two-element alphabet ``{0, 1}`` (k == n)."""
        return self.k == self.n

    def dual(self) -> BinomialParams:
        return BinomialParams(self.n, self.n - self.k)


@dataclass(frozen=True)
class BinomialCode:
    bits: str
    params: BinomialParams
    cls: CodeClass

    @classmethod
    def from_bits(cls, bits: str, params: BinomialParams) -> BinomialCode:
        return cls(bits, params, classify_code(bits, params))

    @property
    def r(self) -> int:
        return len(self.bits)

    def __str__(self):
        return self.bits


@dataclass(frozen=True)
class AlphabetTable:
    params: BinomialParams
    x_class: tuple[BinomialCode, ...]
    y_class: tuple[BinomialCode, ...]

    def __iter__(self) -> Iterator[BinomialCode]:
        return iter(sorted(self.x_class + self.y_class, key=code_value))

    def __len__(self):
        return len(self.x_class) + len(self.y_class)

    def x_bits(self) -> set[str]:
        return {c.bits for c in self.x_class}

    def y_bits(self) -> set[str]:
        return {c.bits for c in self.y_class}

    def dump(self) -> str:
        """One ``n k class bits value`` line per code, in value order."""
        n, k = self.params.n, self.params.k
        return "".join(
            f"{n} {k} {c.cls.value} {c.bits} {code_value(c)}\n" for c in self
        )


def _require_proper(params: BinomialParams) -> None:
    if params.degenerate:
        raise ParameterError(
            f"k = n = {params.n} is the degenerate alphabet {{0, 1}}; "
            "it has no binomial codes"
        )


def is_valid_code(bits: str, params: BinomialParams) -> bool:
    if not bits or not isinstance(bits, str) or set(bits) - {"0", "1"}:
        return False
    n, k = params.n, params.k
    if params.degenerate:
        return len(bits) == 1
    if len(bits) > n - 1:
        return False
    ones = bits.count("1")
    zeros = len(bits) - ones
    if bits[-1] == "1":
        # class X: k ones; the length bound leaves fewer than n - k zeros
        return ones == k
    return zeros == n - k and ones <= k - 1


def classify_code(bits: str, params: BinomialParams) -> CodeClass:
    if params.degenerate or not is_valid_code(bits, params):
        raise InvalidCodeError(f"{bits!r} is not a code of B(n={params.n}, k={params.k})")
    return CodeClass.X if bits[-1] == "1" else CodeClass.Y


def _as_code(code: BinomialCode) -> BinomialCode:
    _require_proper(code.params)
    if classify_code(code.bits, code.params) is not code.cls:
        raise InvalidCodeError(f"{code.bits!r} is not of class {code.cls.value}")
    return code


def code_value(code: BinomialCode) -> int:
    _as_code(code)
    n, k = code.params.n, code.params.k
    value = 0
    q = 0
    for j, b in enumerate(code.bits, start=1):
        if b == "1":
            value += comb(n - j, k - q)
            q += 1
    return value


def value_to_code(value: int, params: BinomialParams) -> BinomialCode:
    _require_proper(params)
    n, k = params.n, params.k
    if not 0 <= value < comb(n, k):
        raise CodeRangeError(f"value {value} outside [0, C({n},{k}) = {comb(n, k)})")
    out = []
    ones = zeros = 0
    j = 0
    while ones < k and zeros < n - k:
        j += 1
        # codes continuing with 0 come first; there are C(n-j, k-ones) of them
        w = comb(n - j, k - ones)
        if value >= w:
            value -= w
            ones += 1
            out.append("1")
        else:
            zeros += 1
            out.append("0")
    bits = "".join(out)
    return BinomialCode(bits, params, CodeClass.X if bits[-1] == "1" else CodeClass.Y)


def complement(code: BinomialCode) -> BinomialCode:
    """Bitwise NOT; maps X of (n, k) onto Y of (n, n - k) and back."""
    _as_code(code)
    flipped = code.bits.translate(str.maketrans("01", "10"))
    return BinomialCode(flipped, code.params.dual(), code.cls.flipped())


def _walk(n: int, k: int, prefix: str, ones: int, zeros: int) -> Iterator[str]:
    if ones == k or zeros == n - k:
        yield prefix
        return
    yield from _walk(n, k, prefix + "0", ones, zeros + 1)
    yield from _walk(n, k, prefix + "1", ones + 1, zeros)


def enumerate_alphabet(params: BinomialParams) -> AlphabetTable:
    """All codes of ``params`` split into classes, each sorted by value."""
    _require_proper(params)
    n, k = params.n, params.k
    # the 0-before-1 walk already yields codes in ascending value order
    x, y = [], []
    for bits in _walk(n, k, "", 0, 0):
        if bits[-1] == "1":
            x.append(BinomialCode(bits, params, CodeClass.X))
        else:
            y.append(BinomialCode(bits, params, CodeClass.Y))
    return AlphabetTable(params, tuple(x), tuple(y))


def alphabet_size(params: BinomialParams) -> int:
    _require_proper(params)
    return comb(params.n, params.k)
