"""
Half-V Embedding

Half-V circuits (enumeration, recognition, text format) and the embedding
of multiple-output functions into reversible functions without extra lines.
"""

from .embed import (
    ArityMismatch,
    conventional_line_count,
    embed_decode,
    embed_encode,
    embed_interpret,
)
from .halfv import (
    MAX_HALFV_TUPLES,
    EmbeddingError,
    HalfVCircuit,
    HalfVEnumerator,
    HalfVFormatError,
    NotRealizable,
    UnsupportedSize,
    halfv_enumerate,
    halfv_recognize,
    halfv_to_circuit,
    parse_halfv,
    read_halfv,
    serialize_halfv,
    tuple_count,
    write_halfv,
)

__version__ = "1.0.0"
