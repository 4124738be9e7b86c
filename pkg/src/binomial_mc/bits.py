"""Bit strings.

Bit sequences are plain ``str`` objects over the characters ``"0"`` and
``"1"``, leftmost character first.  Packing into bytes is MSB first with the
final byte zero-padded.
"""

from .errors import BinomialError

_BYTE_BITS = tuple(format(b, "08b") for b in range(256))
_BIT_CHARS = frozenset("01")


def check_bits(bits: str) -> str:
    if not isinstance(bits, str):
        raise TypeError(f"bit sequence must be str, got {type(bits).__name__}")
    if not _BIT_CHARS.issuperset(bits):
        raise BinomialError(f"not a bit string: {bits[:32]!r}")
    return bits


def bytes_to_bits(data: bytes) -> str:
    return "".join([_BYTE_BITS[b] for b in data])


def bits_to_bytes(bits: str) -> bytes:
    """Pack ``bits`` MSB first; the last byte is padded with zero bits."""
    if not bits:
        return b""
    nbytes = (len(bits) + 7) // 8
    padded = bits + "0" * (nbytes * 8 - len(bits))
    return int(padded, 2).to_bytes(nbytes, "big")


def pad_bits(nbits: int) -> int:
    """Number of zero bits appended when ``nbits`` bits are packed."""
    return -nbits % 8


def flag_width(n: int) -> int:
    """Fixed width of one packed flag for block size ``n``: ceil(log2 n)."""
    return (n - 1).bit_length()
