"""
Reversible Logic Synthesis

Young subgroup decomposition into V-shaped single-target gate cascades.
"""

from .young import (
    DecompositionStep,
    SynthesisError,
    YoungSubgroupSynthesizer,
    decompose_once,
    other_lines,
    synth_to_toffoli,
    synth_young,
)

__version__ = "1.0.0"
