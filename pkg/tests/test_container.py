import io
import os
import random

import pytest

from binomial_mc import (
    FlagForm,
    TransformParams,
    basic_file,
    decode_stream,
    encode_stream,
    merge_channels,
    read_container,
    split_channels,
    write_container,
)
from binomial_mc.container import HEADER_SIZE, dumps, loads
from binomial_mc.errors import (
    BadMagicError,
    BadVersionError,
    ContainerError,
    MissingChannelError,
    NonzeroPaddingError,
    TruncatedRecordError,
)


@pytest.fixture
def basic4():
    return encode_stream(basic_file(4), TransformParams(4))


def test_header_size():
    assert HEADER_SIZE == 17


def test_empty_container_size():
    ch = encode_stream("", TransformParams(4))
    buf = io.BytesIO()
    assert write_container(ch, buf) == 33
    assert len(buf.getvalue()) == 33


def test_basic_file_container_bytes(basic4):
    data = dumps(basic4)
    assert len(data) == 42
    assert data[:17] == b"BMC1" + bytes([1, 4, 1, 1]) + (64).to_bytes(8, "big") + bytes([2])
    assert data[17:25] == (36).to_bytes(8, "big")
    assert data[30:38] == (32).to_bytes(8, "big")


def test_dumps_is_deterministic(basic4):
    assert dumps(basic4) == dumps(encode_stream(basic_file(4), TransformParams(4)))


@pytest.mark.parametrize("form", list(FlagForm))
@pytest.mark.parametrize("iterations", [1, 2, 3])
def test_round_trip(tmp_path, form, iterations):
    rng = random.Random(iterations * 10 + form)
    bits = "".join(rng.choice("01") for _ in range(777))
    ch = encode_stream(bits, TransformParams(5, form, iterations))
    path = tmp_path / "x.bmc"
    write_container(ch, path)
    back = read_container(path)
    assert back == ch
    assert dumps(back) == path.read_bytes()
    assert decode_stream(back) == bits


def test_read_from_bytes_and_file(basic4):
    data = dumps(basic4)
    assert read_container(data) == basic4
    assert read_container(io.BytesIO(data)) == basic4


def test_bad_magic(basic4):
    data = b"BMC2" + dumps(basic4)[4:]
    with pytest.raises(BadMagicError):
        loads(data)


def test_bad_version(basic4):
    data = bytearray(dumps(basic4))
    data[4] = 2
    with pytest.raises(BadVersionError):
        loads(bytes(data))


@pytest.mark.parametrize("cut", [0, 5, 16, 17, 20, 26, 41])
def test_truncated(basic4, cut):
    with pytest.raises(TruncatedRecordError):
        loads(dumps(basic4)[:cut])


def test_nonzero_padding(basic4):
    # core has 36 bits -> 4 pad bits in its fifth byte
    data = bytearray(dumps(basic4))
    data[17 + 8 + 4] |= 0x01
    with pytest.raises(NonzeroPaddingError):
        loads(bytes(data))


def test_trailing_bytes(basic4):
    with pytest.raises(ContainerError):
        loads(dumps(basic4) + b"\x00")


def test_channel_count_mismatch(basic4):
    data = bytearray(dumps(basic4))
    data[16] = 3
    with pytest.raises(ContainerError):
        loads(bytes(data))


def test_bad_form_byte(basic4):
    data = bytearray(dumps(basic4))
    data[6] = 3
    with pytest.raises(ContainerError):
        loads(bytes(data))


def test_error_classes_are_distinct():
    classes = [BadMagicError, BadVersionError, TruncatedRecordError, NonzeroPaddingError]
    for a in classes:
        for b in classes:
            assert (a is b) == issubclass(a, b)


@pytest.mark.parametrize("form, iterations, names", [
    (FlagForm.ONE, 1, ["core", "flag1"]),
    (FlagForm.TWO, 1, ["core", "flag1", "flag2"]),
    (FlagForm.TWO, 2, ["core", "flag1.round1", "flag2.round1", "flag1.round2", "flag2.round2"]),
])
def test_split_merge(tmp_path, form, iterations, names):
    bits = basic_file(6)
    ch = encode_stream(bits, TransformParams(6, form, iterations))
    base = tmp_path / "out"
    paths = split_channels(ch, base)
    assert [os.path.basename(p) for p in paths] == [f"out.{n}" for n in names]
    for p in paths:
        # each part is a standalone one-record container
        assert open(p, "rb").read(4) == b"BMC1"
    merged = merge_channels(base)
    assert merged == ch
    assert dumps(merged) == dumps(ch)
    assert decode_stream(merged) == bits


def test_missing_part_fails(tmp_path):
    ch = encode_stream(basic_file(4), TransformParams(4, FlagForm.TWO, 2))
    paths = split_channels(ch, tmp_path / "m")
    for victim in paths:
        data = open(victim, "rb").read()
        os.remove(victim)
        with pytest.raises(MissingChannelError):
            merge_channels(tmp_path / "m")
        with open(victim, "wb") as fh:
            fh.write(data)
    assert decode_stream(merge_channels(tmp_path / "m")) == basic_file(4)


def test_mismatched_part_header(tmp_path):
    a = encode_stream(basic_file(4), TransformParams(4))
    b = encode_stream(basic_file(4)[:40], TransformParams(4))
    split_channels(a, tmp_path / "a")
    split_channels(b, tmp_path / "b")
    os.replace(tmp_path / "b.flag1", tmp_path / "a.flag1")
    with pytest.raises(ContainerError):
        merge_channels(tmp_path / "a")


def test_split_part_is_not_a_full_container(tmp_path, basic4):
    paths = split_channels(basic4, tmp_path / "p")
    with pytest.raises(ContainerError):
        read_container(paths[0])
