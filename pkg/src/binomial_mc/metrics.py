"""Compression coefficients: core length over original length on the basic file.

The basic file for block size N holds every N-bit word once, in ascending
binary order.  All coefficients are exact :class:`~binomial_mc.ratio.Ratio`
values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Mapping, Optional

from .errors import ConstraintError, ParameterError
from .ratio import Ratio
from .transform import FlagForm, TransformParams, encode_stream


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ParameterError(f"block size must be an integer >= 2, got {n!r}")


def coeff_binomial(n: int) -> Ratio:
    """Binomial-recording core ratio, ``(2 + sum(m * 2**m, m < n)) / (n * 2**n)``.

    Each of the ``2**m`` words whose trailing run has length ``n - m`` leaves
    an ``m``-bit code; the two uniform words leave one bit each.
    """
    _check_n(n)
    core = 2 + sum(m * 2 ** m for m in range(1, n))
    return Ratio(core, n * 2 ** n)


def coeff_binomial_printed(n: int) -> Ratio:
    """The binomial coefficient as typeset in the source, kept for comparison.

    ``(2 + sum((l + 1) * C(n, l + 2), l = 0..n-2)) / (n * 2**n)``.  It gives
    3/8 at n = 2 where the published table has 1/2, so it is diagnostic only.
    """
    _check_n(n)
    return Ratio(2 + sum((l + 1) * comb(n, l + 2) for l in range(n - 1)), n * 2 ** n)


def coeff_mv2(n: int) -> Ratio:
    _check_n(n)
    return Ratio(2 * n + 2 * sum((l + 1) * 2 ** l for l in range(n - 1)), n * 2 ** n)


@dataclass(frozen=True)
class CloneDistribution:
    """Element counts ``M_K`` of a constant-length recoding, K in 1..n."""

    n: int
    counts: Mapping[int, int]

    def __post_init__(self):
        _check_n(self.n)
        for size, count in self.counts.items():
            if not 1 <= size <= self.n:
                raise ConstraintError(f"tuple length {size} outside 1..{self.n}")
            if count < 0:
                raise ConstraintError(f"negative count for length {size}")
        total = sum(self.counts.values())
        if total != 2 ** self.n:
            raise ConstraintError(f"counts sum to {total}, not 2**{self.n} = {2 ** self.n}")


def mv2_distribution(n: int) -> CloneDistribution:
    counts = {size: 2 ** size for size in range(1, n)}
    counts[n] = 2
    return CloneDistribution(n, counts)


def coeff_clone(dist: CloneDistribution) -> Ratio:
    n = dist.n
    return Ratio(sum(size * count for size, count in dist.counts.items()), n * 2 ** n)


def basic_file(n: int, shuffle: Optional[random.Random] = None) -> str:
    """Every n-bit word exactly once; ascending unless a ``Random`` is given."""
    _check_n(n)
    words = [format(v, f"0{n}b") for v in range(2 ** n)]
    if shuffle is not None:
        shuffle.shuffle(words)
    return "".join(words)


def coeff_empirical(
    n: int,
    form: FlagForm = FlagForm.ONE,
    use_basic_file: bool = True,
    bits: Optional[str] = None,
) -> Ratio:
    """Core bits over input bits after one encoding round."""
    _check_n(n)
    if use_basic_file:
        bits = basic_file(n)
    elif not bits:
        raise ParameterError("a non-empty input is required when use_basic_file is false")
    channels = encode_stream(bits, TransformParams(n, form, 1))
    return Ratio(len(channels.core), len(bits))


def table_rows(max_n: int) -> list[tuple[int, Ratio, Ratio]]:
    return [(n, coeff_binomial(n), coeff_mv2(n)) for n in range(2, max_n + 1)]
