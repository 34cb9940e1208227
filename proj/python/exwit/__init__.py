"""Qubit-chain exciton transfer with collision-model decoherence."""

from ._core import (
    CapabilityError,
    CollisionOrder,
    ContractViolation,
    Engine,
    Environment,
    ResourceError,
    StructuralError,
    bloch_pswap_update,
    classical_nogo_sharpness,
    compute_fgs,
    evaluate_witness,
    fg_stages,
    homogenize,
    markov_damping,
    markov_final_state,
    partial_trace,
    pswap_unitary,
    reservoir_trace,
    run_protocol,
    xx_hamiltonian,
)

__all__ = [
    "CapabilityError",
    "CollisionOrder",
    "ContractViolation",
    "Engine",
    "Environment",
    "ResourceError",
    "StructuralError",
    "bloch_pswap_update",
    "classical_nogo_sharpness",
    "compute_fgs",
    "evaluate_witness",
    "fg_stages",
    "homogenize",
    "markov_damping",
    "markov_final_state",
    "partial_trace",
    "pswap_unitary",
    "reservoir_trace",
    "run_protocol",
    "xx_hamiltonian",
]
