"""Single-block binomial recording.

An N-bit word is recorded as its popcount ``k`` (the flag) plus the word with
its maximal trailing run of equal bits removed.  What remains is a code of the
``(N, k)`` radix: a word ending in zeros leaves a class X code, a word ending
in ones leaves a class Y code.  The two uniform words get flag 0 and keep a
single bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bits import check_bits
from .core import BinomialParams, is_valid_code
from .errors import MalformedRecordError, ParameterError

_FLIP = str.maketrans("01", "10")


@dataclass(frozen=True)
class BlockRecord:
    flag: int
    code: str
    pflag: Optional[int] = None


def _check_word(word: str) -> int:
    check_bits(word)
    if len(word) < 2:
        raise ParameterError(f"block size must be at least 2, got {len(word)}")
    return len(word)


def encode_word(word: str) -> BlockRecord:
    _check_word(word)
    tail = word[-1]
    code = word.rstrip(tail)
    if not code:
        return BlockRecord(0, tail)
    return BlockRecord(word.count("1"), code)


def decode_word(record: BlockRecord, n: int) -> str:
    flag, code = record.flag, record.code
    if not 0 <= flag < n:
        raise MalformedRecordError(f"flag {flag} outside [0, {n - 1}]")
    if flag == 0:
        if code not in ("0", "1"):
            raise MalformedRecordError(f"uniform block needs a single bit, got {code!r}")
        return code * n
    if not is_valid_code(code, BinomialParams(n, flag)):
        raise MalformedRecordError(f"{code!r} is not a code of B(n={n}, k={flag})")
    # X codes lost a run of zeros, Y codes a run of ones
    fill = "0" if code[-1] == "1" else "1"
    return code + fill * (n - len(code))


def encode_word_two_flag(word: str) -> BlockRecord:
    """Like :func:`encode_word` but Y codes are stored as their complement.

    The stored code is then always a class X code (ends in 1) of weight
    ``flag``; ``pflag`` records whether the complement was taken.
    """
    n = _check_word(word)
    rec = encode_word(word)
    if rec.flag == 0 or rec.code[-1] == "1":
        return BlockRecord(rec.flag, rec.code, 0)
    return BlockRecord(n - rec.flag, rec.code.translate(_FLIP), 1)


def decode_word_two_flag(record: BlockRecord, n: int) -> str:
    flag, code, pflag = record.flag, record.code, record.pflag
    if pflag not in (0, 1):
        raise MalformedRecordError(f"complement flag must be 0 or 1, got {pflag!r}")
    if not 0 <= flag < n:
        raise MalformedRecordError(f"flag {flag} outside [0, {n - 1}]")
    if flag == 0:
        if pflag:
            raise MalformedRecordError("uniform block cannot carry a complement flag")
        return decode_word(BlockRecord(0, code), n)
    if not code or code[-1] != "1":
        raise MalformedRecordError(f"stored code {code!r} is not a class X code")
    if pflag:
        return decode_word(BlockRecord(n - flag, code.translate(_FLIP)), n)
    return decode_word(BlockRecord(flag, code), n)
