"""Binomial multichannel recoding of bit streams."""

from .blocks import (
    BlockRecord,
    decode_word,
    decode_word_two_flag,
    encode_word,
    encode_word_two_flag,
)
from .container import merge_channels, read_container, split_channels, write_container
from .core import (
    AlphabetTable,
    BinomialCode,
    BinomialParams,
    CodeClass,
    alphabet_size,
    classify_code,
    code_value,
    complement,
    enumerate_alphabet,
    is_valid_code,
    value_to_code,
)
from .metrics import (
    CloneDistribution,
    basic_file,
    coeff_binomial,
    coeff_clone,
    coeff_empirical,
    coeff_mv2,
    mv2_distribution,
)
from .ratio import Ratio
from .transform import (
    ChannelSet,
    FlagForm,
    RoundFlags,
    TransformParams,
    channel_stats,
    decode_stream,
    encode_stream,
)

__version__ = "0.1.0"
