"""Sliding-window Shannon coding for large alphabets.

Adaptive prefix coding where the model is the last `ell` symbols of the
input.  Frequent symbols get Shannon-style codewords from a canonical
codebook, rare ones fall back to fixed-width literals, and the working
state (window, frequency dictionary, codebook, partial sums) stays
sublinear in the alphabet size for windows shorter than the alphabet.
"""

from .analysis import (
    BoundReport,
    EntropyStats,
    MemoryAudit,
    check_bound,
    delta_term,
    entropy,
    memory_audit,
    naive_table_bytes,
    oracle_state,
    theorem1_bound,
)
from .bitio import BitReader, BitWriter
from .codebook import Codebook, codeword_length
from .coder import (
    CoderState,
    DecodeReport,
    EncodeReport,
    decode_stream,
    encode_stream,
    encode_to_bytes,
    read_header,
    read_symbols,
    write_header,
    write_symbols,
)
from .corpus import DISTRIBUTIONS, generate, splitmix64
from .dictionary import (
    CodeRecord,
    HashedDictionary,
    TrieDictionary,
    make_dictionary,
    symbol_model_bytes,
)
from .errors import (
    CorruptStreamError,
    InternalInconsistencyError,
    ParameterError,
    SwscError,
)
from .params import CoderParams, derive_params
from .partial_sums import PartialSums

__version__ = "0.1.0"

__all__ = [
    "BitReader",
    "BitWriter",
    "BoundReport",
    "Codebook",
    "CodeRecord",
    "CoderParams",
    "CoderState",
    "CorruptStreamError",
    "DISTRIBUTIONS",
    "DecodeReport",
    "EncodeReport",
    "EntropyStats",
    "HashedDictionary",
    "InternalInconsistencyError",
    "MemoryAudit",
    "ParameterError",
    "PartialSums",
    "SwscError",
    "TrieDictionary",
    "check_bound",
    "codeword_length",
    "decode_stream",
    "delta_term",
    "derive_params",
    "encode_stream",
    "encode_to_bytes",
    "entropy",
    "generate",
    "make_dictionary",
    "memory_audit",
    "naive_table_bytes",
    "oracle_state",
    "read_header",
    "read_symbols",
    "splitmix64",
    "symbol_model_bytes",
    "theorem1_bound",
    "write_header",
    "write_symbols",
]
