"""
Line-Optimal Embedding

Represent a multiple-output function f in B_{k-1,n} (n <= k) as the
half-V circuit whose i-th control function is f_i. Encoding and decoding
are mutually inverse bijections, and the reversible function uses exactly
k lines.

The embedding is representational: f is recovered by recognizing the
half-V circuit of the reversible function and reading its control
functions back (embed_interpret), not by evaluating the reversible
function on constant-padded inputs.
"""

import logging

import numpy as np

from rev_boolfn.truth_table import Permutation, TruthTable, output_component
from rev_embedding.halfv import EmbeddingError, HalfVCircuit, halfv_recognize

_logger = logging.getLogger(__name__)


class ArityMismatch(EmbeddingError):
    pass


def embed_encode(f: TruthTable, k: int) -> HalfVCircuit:
    """
    Args:
        f: Function with k - 1 inputs and n <= k outputs
        k: Line count of the reversible function

    Returns:
        HalfVCircuit with gs[i] = f_(i+1); control x_j of gate i is the
        j-th line in ascending order after skipping line i

    Raises:
        ArityMismatch: If the shape of f does not fit k
    """
    if f.n_inputs != k - 1:
        raise ArityMismatch(f"Function has {f.n_inputs} inputs, expected k-1 = {k - 1}")
    if f.n_outputs > k:
        raise ArityMismatch(f"Function has {f.n_outputs} outputs, more than k = {k} lines")
    gs = tuple(output_component(f, i) for i in range(1, f.n_outputs + 1))
    return HalfVCircuit(k, f.n_outputs, gs)


def embed_decode(h: HalfVCircuit) -> TruthTable:
    if h.n == 0:
        raise ArityMismatch("A half-V circuit without gates encodes no outputs")
    words = np.zeros(1 << (h.k - 1), dtype=np.int64)
    for i, g in enumerate(h.gs, start=1):
        words |= g.as_array() << (h.n - i)
    return TruthTable(h.k - 1, h.n, tuple(words.tolist()))


def embed_interpret(p: Permutation, n: int) -> TruthTable:
    """Interpretation function: recover f from a reversible function."""
    return embed_decode(halfv_recognize(p, n))


def conventional_line_count(f: TruthTable) -> int:
    """
    Lines a conventional embedding with garbage outputs needs:
    m + ceil(log2 mu), where mu is the largest number of inputs sharing an
    output pattern, and never fewer than the input count.
    """
    _, counts = np.unique(f.as_array(), return_counts=True)
    mu = int(counts.max())
    garbage = (mu - 1).bit_length()
    lines = max(f.n_inputs, f.n_outputs + garbage)
    _logger.debug("Conventional embedding: mu=%d, %d lines", mu, lines)
    return lines
