"""Multichannel stream transform.

A bit stream is zero-padded to a whole number of N-bit blocks, every block
is recorded with :mod:`binomial_mc.blocks`, and the pieces are split into
channels: the concatenated codes (the core), the fixed-width flags, and in
the two-flag form the complement bits.  Further rounds re-encode the core
only; every round keeps its own flag channels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .bits import check_bits, flag_width
from .blocks import encode_word, encode_word_two_flag
from .errors import CorruptChannelError, ParameterError
from .ratio import Ratio

MAX_BLOCK = 64
_FLIP = str.maketrans("01", "10")


class FlagForm(enum.IntEnum):
    ONE = 1
    TWO = 2


@dataclass(frozen=True)
class TransformParams:
    n: int = 8
    form: FlagForm = FlagForm.ONE
    iterations: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or not 2 <= self.n <= MAX_BLOCK:
            raise ParameterError(f"block size must be in 2..{MAX_BLOCK}, got {self.n!r}")
        try:
            object.__setattr__(self, "form", FlagForm(self.form))
        except ValueError:
            raise ParameterError(f"flag form must be 1 or 2, got {self.form!r}") from None
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise ParameterError(f"iterations must be >= 1, got {self.iterations!r}")

    @property
    def width(self) -> int:
        return flag_width(self.n)


@dataclass(frozen=True)
class RoundFlags:
    flag1: str
    flag2: Optional[str] = None


@dataclass(frozen=True)
class ChannelSet:
    """Everything needed to invert :func:`encode_stream`.

    Only the final round's core is kept; earlier cores are implied by the
    later rounds.
    """

    params: TransformParams
    original_bit_length: int
    core: str
    rounds: tuple[RoundFlags, ...] = ()

    def channels(self) -> list[str]:
        """Channel payloads in storage order: core, then flags round by round."""
        out = [self.core]
        for rnd in self.rounds:
            out.append(rnd.flag1)
            if rnd.flag2 is not None:
                out.append(rnd.flag2)
        return out


def _encode_round(bits: str, params: TransformParams) -> tuple[str, RoundFlags]:
    n, w = params.n, params.width
    bits += "0" * (-len(bits) % n)
    two = params.form is FlagForm.TWO
    encode = encode_word_two_flag if two else encode_word
    codes, flags, pflags = [], [], []
    for i in range(0, len(bits), n):
        rec = encode(bits[i:i + n])
        codes.append(rec.code)
        flags.append(format(rec.flag, f"0{w}b"))
        if two:
            pflags.append("1" if rec.pflag else "0")
    return "".join(codes), RoundFlags("".join(flags), "".join(pflags) if two else None)


def encode_stream(bits: str, params: TransformParams) -> ChannelSet:
    check_bits(bits)
    core = bits
    rounds = []
    for _ in range(params.iterations):
        core, flags = _encode_round(core, params)
        rounds.append(flags)
    return ChannelSet(params, len(bits), core, tuple(rounds))


@lru_cache(maxsize=1 << 16)
def _code_length(window: str, n: int, k: int) -> int:
    """Length of the weight-``k`` code at the start of ``window``; 0 if cut off."""
    # the code stops at the k-th one or the (n-k)-th zero, whichever comes first
    ones = zeros = 0
    for i, b in enumerate(window):
        if b == "1":
            ones += 1
            if ones == k:
                return i + 1
        else:
            zeros += 1
            if zeros == n - k:
                return i + 1
    return 0


def _read_code(core: str, pos: int, n: int, k: int) -> int:
    """End position of the weight-``k`` code starting at ``pos``."""
    if k == 0:
        if pos >= len(core):
            raise CorruptChannelError(f"core exhausted at bit {pos}")
        return pos + 1
    # a code never exceeds n - 1 bits
    length = _code_length(core[pos:pos + n - 1], n, k)
    if not length:
        raise CorruptChannelError(f"core exhausted inside the code starting at bit {pos}")
    return pos + length


def _block_count(rnd: RoundFlags, params: TransformParams, index: int) -> int:
    check_bits(rnd.flag1)
    w = params.width
    if len(rnd.flag1) % w:
        raise CorruptChannelError(
            f"round {index}: flag channel length {len(rnd.flag1)} is not a multiple of {w}"
        )
    count = len(rnd.flag1) // w
    two = params.form is FlagForm.TWO
    if two != (rnd.flag2 is not None):
        raise CorruptChannelError(f"round {index}: complement channel does not match the flag form")
    if two:
        check_bits(rnd.flag2)
        if len(rnd.flag2) != count:
            raise CorruptChannelError(
                f"round {index}: {len(rnd.flag2)} complement bits for {count} blocks"
            )
    return count


def _decode_round(core: str, rnd: RoundFlags, params: TransformParams, index: int) -> tuple[str, int]:
    """Invert one round; returns its padded input and the core bits consumed.

    Codes cut from the core by the prefix rule are valid for their flag by
    construction, so words are rebuilt here without the per-record checks of
    :func:`~binomial_mc.blocks.decode_word`.
    """
    n, w = params.n, params.width
    count = _block_count(rnd, params, index)
    two = params.form is FlagForm.TWO
    flag1, flag2 = rnd.flag1, rnd.flag2
    words = []
    pos = 0
    for b in range(count):
        flag = int(flag1[b * w:(b + 1) * w], 2)
        if flag >= n:
            raise CorruptChannelError(f"round {index}, block {b}: flag {flag} >= block size {n}")
        end = _read_code(core, pos, n, flag)
        code = core[pos:end]
        pos = end
        if two and flag2[b] == "1":
            if flag == 0 or code[-1] != "1":
                raise CorruptChannelError(f"round {index}, block {b}: complement flag on {code!r}")
            code = code.translate(_FLIP)
        elif two and flag and code[-1] != "1":
            raise CorruptChannelError(f"round {index}, block {b}: stored code {code!r} is not class X")
        if flag == 0:
            words.append(code * n)
        else:
            # X codes lost a run of zeros, Y codes a run of ones
            words.append(code + ("0" if code[-1] == "1" else "1") * (n - len(code)))
    return "".join(words), pos


def _check_padding(padded: str, length: int, n: int, what: str) -> None:
    if len(padded) != length + (-length % n):
        raise CorruptChannelError(
            f"{what}: {len(padded)} bits do not hold {length} bits in {n}-bit blocks"
        )
    if "1" in padded[length:]:
        raise CorruptChannelError(f"{what}: nonzero block padding")


def _unwind(channels: ChannelSet) -> tuple[str, list[int]]:
    """Invert every round, last to first.

    Returns the original stream and the exact core length after each round.
    Intermediate core lengths are stored nowhere: decoding round ``i``
    consumes exactly the core of round ``i``, and whatever is left of the
    padded output of round ``i + 1`` must be that core's zero block padding.
    """
    params = channels.params
    rounds = channels.rounds
    if len(rounds) != params.iterations:
        raise CorruptChannelError(f"{len(rounds)} flag rounds for {params.iterations} iterations")
    if channels.original_bit_length < 0:
        raise CorruptChannelError("negative original length")
    core = check_bits(channels.core)
    core_lengths = [0] * params.iterations
    core_lengths[-1] = len(core)
    for index in range(params.iterations, 0, -1):
        padded, used = _decode_round(core, rounds[index - 1], params, index)
        if index == params.iterations:
            if used != len(core):
                raise CorruptChannelError(f"{len(core) - used} trailing unconsumed core bits")
        else:
            _check_padding(core, used, params.n, f"round {index} core")
            core_lengths[index - 1] = used
        core = padded
    _check_padding(core, channels.original_bit_length, params.n, "stream")
    return core[:channels.original_bit_length], core_lengths


def decode_stream(channels: ChannelSet) -> str:
    return _unwind(channels)[0]


@dataclass(frozen=True)
class RoundStats:
    round: int
    input_bits: int
    block_count: int
    core_bits: int
    flag1_bits: int
    flag2_bits: int


@dataclass(frozen=True)
class ChannelStats:
    original_bits: int
    core_bits: int
    flag_bits: int
    rounds: tuple[RoundStats, ...]

    @property
    def block_count(self) -> int:
        return sum(r.block_count for r in self.rounds)

    @property
    def core_ratio(self) -> Optional[Ratio]:
        """Final core over original bits; None for an empty stream."""
        return Ratio(self.core_bits, self.original_bits) if self.original_bits else None

    @property
    def flag_ratio(self) -> Optional[Ratio]:
        return Ratio(self.flag_bits, self.original_bits) if self.original_bits else None

    @property
    def total_ratio(self) -> Optional[Ratio]:
        if not self.original_bits:
            return None
        return Ratio(self.core_bits + self.flag_bits, self.original_bits)


def channel_stats(channels: ChannelSet) -> ChannelStats:
    # inner core sizes are only recoverable by decoding
    _, core_lengths = _unwind(channels)
    w = channels.params.width
    inputs = [channels.original_bit_length] + core_lengths[:-1]
    rounds = []
    for i, rnd in enumerate(channels.rounds):
        rounds.append(RoundStats(
            round=i + 1,
            input_bits=inputs[i],
            block_count=len(rnd.flag1) // w,
            core_bits=core_lengths[i],
            flag1_bits=len(rnd.flag1),
            flag2_bits=len(rnd.flag2) if rnd.flag2 is not None else 0,
        ))
    flag_bits = sum(r.flag1_bits + r.flag2_bits for r in rounds)
    return ChannelStats(channels.original_bit_length, len(channels.core), flag_bits, tuple(rounds))
