"""Compile small quantum circuits to single-photon linear-optical networks.

A circuit over n qubits maps to one photon spread over 2^n paths, or over
2^(n-1) paths and two polarizations when one qubit rides on polarization.
The compiler lowers each gate to exact beam splitter, phase shifter,
rotator, polarizing splitter, and crossing layers; the simulator side then
checks the whole netlist against a state-vector reference, up to a single
global phase.
"""

from .circuit import (
    CircuitError,
    CircuitParseError,
    Gate,
    GateKind,
    QuantumCircuit,
    gate_text,
    gate_unitary,
    parse_angle,
    parse_circuit,
    render_circuit,
    u2_from_params,
)
from .compiler import (
    CompileError,
    CompileOptions,
    DeviceStats,
    NetlistFormatError,
    QubitAssignment,
    U2Decomposition,
    compile_circuit,
    decompose_u2,
    device_stats,
    lower_gate,
    netlist_from_json,
    netlist_to_json,
    prepare_location_state,
    prepare_path_state,
    prune_dead_paths,
    reconstruct_u2,
)
from .diagram import render_diagram
from .equivalence import EquivalenceReport, basis_bridge, global_phase_distance, state_fidelity
from .optics import (
    BeamSplitter,
    Crossing,
    ModeAmplitudes,
    ModeSpace,
    NetlistError,
    OpticalNetlist,
    PhaseShifter,
    PolarizingBeamSplitter,
    Rotator,
    element_modes,
    element_unitary,
    netlist_unitary,
    propagate,
)
from .scenarios import (
    BranchOutcome,
    DetectorReading,
    ScenarioReport,
    demo_mz,
    demo_teleport,
    mz_circuit,
    mz_rotator_circuit,
    reduced_path_matrix,
    teleport_circuit,
)
from .statevec import (
    DensityMatrix,
    StateVector,
    circuit_unitary,
    conditional_state,
    measurement_probs,
    partial_trace,
    run_circuit,
    run_circuit_dense,
)

__version__ = "0.1.0"

__all__ = [
    "BeamSplitter",
    "BranchOutcome",
    "CircuitError",
    "CircuitParseError",
    "CompileError",
    "CompileOptions",
    "Crossing",
    "DensityMatrix",
    "DetectorReading",
    "DeviceStats",
    "EquivalenceReport",
    "Gate",
    "GateKind",
    "ModeAmplitudes",
    "ModeSpace",
    "NetlistError",
    "NetlistFormatError",
    "OpticalNetlist",
    "PhaseShifter",
    "PolarizingBeamSplitter",
    "QuantumCircuit",
    "QubitAssignment",
    "Rotator",
    "ScenarioReport",
    "StateVector",
    "U2Decomposition",
    "basis_bridge",
    "circuit_unitary",
    "compile_circuit",
    "conditional_state",
    "decompose_u2",
    "demo_mz",
    "demo_teleport",
    "device_stats",
    "element_modes",
    "element_unitary",
    "gate_text",
    "gate_unitary",
    "global_phase_distance",
    "lower_gate",
    "measurement_probs",
    "mz_circuit",
    "mz_rotator_circuit",
    "netlist_from_json",
    "netlist_to_json",
    "netlist_unitary",
    "parse_angle",
    "parse_circuit",
    "partial_trace",
    "prepare_location_state",
    "prepare_path_state",
    "propagate",
    "prune_dead_paths",
    "reconstruct_u2",
    "reduced_path_matrix",
    "render_circuit",
    "render_diagram",
    "run_circuit",
    "run_circuit_dense",
    "state_fidelity",
    "teleport_circuit",
    "u2_from_params",
]
