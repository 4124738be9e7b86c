"""Binary container for channel sets.

Layout, all integers big-endian::

    header   magic "BMC1" | version u8 | N u8 | form u8 | iterations u8
             | original_bit_length u64 | channel_count u8        (17 bytes)
    record   bit_length u64 | payload, ceil(bit_length / 8) bytes

Payload bits are packed MSB first and the unused low bits of the last byte
must be zero.  A combined container holds ``1 + iterations * form`` records:
the final core, then each round's flag channel(s) in round order.  A split
part is a standalone container with exactly one record; which channel it
holds is given by its file name.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from typing import BinaryIO, Union

from .bits import bits_to_bytes, bytes_to_bits, pad_bits
from .errors import (
    BadMagicError,
    BadVersionError,
    BinomialError,
    ContainerError,
    MissingChannelError,
    NonzeroPaddingError,
    TruncatedRecordError,
)
from .transform import ChannelSet, FlagForm, RoundFlags, TransformParams

MAGIC = b"BMC1"
VERSION = 1
_HEADER = struct.Struct(">4sBBBBQB")
_LENGTH = struct.Struct(">Q")
HEADER_SIZE = _HEADER.size

PathOrFile = Union[str, "os.PathLike[str]", BinaryIO]


@dataclass(frozen=True)
class ContainerHeader:
    n: int
    form: FlagForm
    iterations: int
    original_bit_length: int
    channel_count: int

    def pack(self) -> bytes:
        return _HEADER.pack(MAGIC, VERSION, self.n, int(self.form), self.iterations,
                            self.original_bit_length, self.channel_count)

    @property
    def params(self) -> TransformParams:
        return TransformParams(self.n, self.form, self.iterations)


def expected_channels(params: TransformParams) -> int:
    return 1 + params.iterations * int(params.form)


def _header_for(channels: ChannelSet, count: int) -> ContainerHeader:
    p = channels.params
    if p.iterations > 255:
        raise ContainerError(f"{p.iterations} iterations do not fit the header")
    return ContainerHeader(p.n, p.form, p.iterations, channels.original_bit_length, count)


def _record(bits: str) -> bytes:
    return _LENGTH.pack(len(bits)) + bits_to_bytes(bits)


def dumps(channels: ChannelSet) -> bytes:
    payloads = channels.channels()
    if len(payloads) != expected_channels(channels.params):
        raise ContainerError(
            f"{len(payloads)} channels, expected {expected_channels(channels.params)}"
        )
    header = _header_for(channels, len(payloads)).pack()
    return header + b"".join(_record(bits) for bits in payloads)


def _parse_header(data: bytes) -> ContainerHeader:
    if len(data) < HEADER_SIZE:
        if len(data) >= 4 and data[:4] != MAGIC:
            raise BadMagicError(f"bad magic {data[:4]!r}")
        raise TruncatedRecordError(f"header needs {HEADER_SIZE} bytes, got {len(data)}")
    magic, version, n, form, iterations, length, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {magic!r}")
    if version != VERSION:
        raise BadVersionError(f"unsupported container version {version}")
    try:
        header = ContainerHeader(n, FlagForm(form), iterations, length, count)
        header.params
    except (ValueError, BinomialError) as exc:
        raise ContainerError(f"bad header: {exc}") from exc
    return header


def _parse_records(data: bytes, count: int) -> list[str]:
    out = []
    pos = HEADER_SIZE
    for i in range(count):
        if pos + _LENGTH.size > len(data):
            raise TruncatedRecordError(f"record {i}: length field cut off")
        (nbits,) = _LENGTH.unpack_from(data, pos)
        pos += _LENGTH.size
        nbytes = (nbits + 7) // 8
        if pos + nbytes > len(data):
            raise TruncatedRecordError(
                f"record {i}: {nbytes} payload bytes announced, {len(data) - pos} present"
            )
        payload = data[pos:pos + nbytes]
        pos += nbytes
        pad = pad_bits(nbits)
        if pad and payload[-1] & ((1 << pad) - 1):
            raise NonzeroPaddingError(f"record {i}: nonzero padding bits")
        out.append(bytes_to_bits(payload)[:nbits])
    if pos != len(data):
        raise ContainerError(f"{len(data) - pos} trailing bytes after the last record")
    return out


def _assemble(header: ContainerHeader, payloads: list[str]) -> ChannelSet:
    params = header.params
    core, rest = payloads[0], payloads[1:]
    step = int(params.form)
    rounds = []
    for r in range(params.iterations):
        chunk = rest[r * step:(r + 1) * step]
        rounds.append(RoundFlags(chunk[0], chunk[1] if step == 2 else None))
    return ChannelSet(params, header.original_bit_length, core, tuple(rounds))


def loads(data: bytes) -> ChannelSet:
    header = _parse_header(data)
    want = expected_channels(header.params)
    if header.channel_count != want:
        raise ContainerError(f"header lists {header.channel_count} channels, expected {want}")
    return _assemble(header, _parse_records(data, want))


def write_container(channels: ChannelSet, destination: PathOrFile) -> int:
    data = dumps(channels)
    if hasattr(destination, "write"):
        destination.write(data)
    else:
        with open(destination, "wb") as fh:
            fh.write(data)
    return len(data)


def _read_bytes(source) -> bytes:
    if isinstance(source, (bytes, bytearray, memoryview)):
        return bytes(source)
    if hasattr(source, "read"):
        return source.read()
    with open(source, "rb") as fh:
        return fh.read()


def read_container(source: PathOrFile) -> ChannelSet:
    return loads(_read_bytes(source))


def part_names(params: TransformParams) -> list[str]:
    """File suffixes of the split parts, in storage order."""
    names = ["core"]
    for r in range(1, params.iterations + 1):
        tag = f".round{r}" if params.iterations > 1 else ""
        names.append(f"flag1{tag}")
        if params.form is FlagForm.TWO:
            names.append(f"flag2{tag}")
    return names


def split_channels(channels: ChannelSet, basename: Union[str, os.PathLike]) -> list[str]:
    """Write each channel to ``<basename>.<part>`` as a one-record container."""
    header = _header_for(channels, 1).pack()
    paths = []
    for name, bits in zip(part_names(channels.params), channels.channels(), strict=True):
        path = f"{os.fspath(basename)}.{name}"
        with open(path, "wb") as fh:
            fh.write(header + _record(bits))
        paths.append(path)
    return paths


def _read_part(path: str) -> tuple[ContainerHeader, str]:
    try:
        data = _read_bytes(path)
    except FileNotFoundError as exc:
        raise MissingChannelError(f"missing channel file {path}") from exc
    header = _parse_header(data)
    if header.channel_count != 1:
        raise ContainerError(f"{path}: split part must hold one channel, has {header.channel_count}")
    return header, _parse_records(data, 1)[0]


def merge_channels(basename: Union[str, os.PathLike]) -> ChannelSet:
    """Inverse of :func:`split_channels`."""
    base = os.fspath(basename)
    header, core = _read_part(f"{base}.core")
    payloads = [core]
    for name in part_names(header.params)[1:]:
        h, bits = _read_part(f"{base}.{name}")
        if h != header:
            raise ContainerError(f"{base}.{name}: header disagrees with {base}.core")
        payloads.append(bits)
    return _assemble(header, payloads)


__all__ = [
    "ContainerHeader",
    "HEADER_SIZE",
    "MAGIC",
    "dumps",
    "loads",
    "merge_channels",
    "part_names",
    "read_container",
    "split_channels",
    "write_container",
]
