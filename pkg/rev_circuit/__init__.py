"""
Reversible Circuits

Single-target and mixed-polarity Toffoli gates, circuits, simulation,
Toffoli mapping and the .rc text format.
"""

from .gates import (
    Circuit,
    CircuitError,
    Gate,
    GateShapeError,
    MpmctGate,
    SingleTargetGate,
    apply_gate,
    circuit_perm,
    concat_circuits,
    drop_constant_gates,
    gate_to_stg,
    invert_circuit,
    map_circuit_to_toffoli,
    simulate,
    stg_to_toffoli,
)
from .rc_format import (
    CircuitFormatError,
    CircuitParser,
    CircuitSyntaxError,
    DuplicateControl,
    LineIndexOutOfRange,
    format_gate,
    parse_circuit,
    read_comments,
    serialize_circuit,
    write_circuit,
)

__version__ = "1.0.0"
