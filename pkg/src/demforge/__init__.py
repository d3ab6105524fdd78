"""demforge: detector error models for Clifford circuits with general
Markovian (coherent and non-Pauli) noise.

The pipeline: parse a circuit, defer its measurements into an expanded
circuit, propagate a sparse error-generator model to the end of the circuit,
combine the propagated generators (BCH), sort them into detector-flip
classes, split the circuit error into per-class channels (Zassenhaus), and
estimate each event probability.  An exact small-system density-matrix
oracle and a Pauli-twirl baseline are included for validation.
"""

from .pauli import (
    CliffordOp,
    PauliString,
    StabilizerTableau,
    commutes,
    conjugate,
    expectation,
    multiply,
)
from .circuit import Circuit, ExpandedCircuit, expand, ideal_final_state, parse_circuit
from .errgen import EEG, ErrorModel, SparseGenerator, bch_combine, generator_infidelity
from .dembuild import BuildConfig, DemEventKey, build_dem, delta
from .dem import DetectorErrorModel, exact_distribution, parse_dem, sample, tvd

__all__ = [
    "CliffordOp",
    "PauliString",
    "StabilizerTableau",
    "commutes",
    "conjugate",
    "expectation",
    "multiply",
    "Circuit",
    "ExpandedCircuit",
    "expand",
    "ideal_final_state",
    "parse_circuit",
    "EEG",
    "ErrorModel",
    "SparseGenerator",
    "bch_combine",
    "generator_infidelity",
    "BuildConfig",
    "DemEventKey",
    "build_dem",
    "delta",
    "DetectorErrorModel",
    "exact_distribution",
    "parse_dem",
    "sample",
    "tvd",
]
