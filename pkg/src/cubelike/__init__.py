"""Weighted cubelike graphs: exact spectra, transfer pairs, and verification.

A weight vector z of length 2**d generates the XOR-circulant adjacency
matrix A[i][j] = z[i ^ j]. This package computes its exact integer
spectrum through the Walsh-Hadamard transform, classifies the graph as
admitting perfect state transfer at t = pi/2 or being periodic with
period dividing pi/2, reconstructs matrices from partial entries for any
shared eigenbasis, and verifies every claim against an independent dense
matrix-exponential oracle.
"""

from .boolean_domain import (
    DENSE_DIMENSION_LIMIT,
    MAX_DIMENSION,
    GroupElement,
    HadamardEntry,
    hadamard_entry,
    hadamard_sign,
    parity_inner,
    sign_matrix,
    xor,
)
from .eigenbasis_builder import (
    IndexSet,
    OrthogonalBasis,
    ReconstructionResult,
    build_q,
    reconstruct,
    select_index_set,
    walsh_basis,
)
from .exceptions import (
    ConsistencyError,
    CubelikeError,
    DimensionMismatchError,
    DomainError,
    OverflowGuardError,
    ParityError,
    ReconstructionError,
    ResourceLimitError,
    StructureError,
    VerificationError,
)
from .fixtures import REFERENCE_TABLE, ReferenceCase
from .pst_analyzer import (
    TRANSFER_TIME,
    PstResult,
    TransferKind,
    classify,
    sigma_from_spectrum,
    sigma_from_weights,
)
from .spectral_engine import (
    Spectrum,
    StructuralReport,
    WeightedGraph,
    WeightVector,
    adjacency_from_weights,
    eigenvalues_from_weights,
    fwht,
    structural_report,
    weights_from_adjacency,
)
from .walk_oracle import (
    LEAKAGE_LIMIT,
    PST_THRESHOLD,
    PairCheck,
    TransitionMatrix,
    VerificationReport,
    fidelity,
    transition_spectral,
    transition_taylor,
    verify_result,
)

__all__ = [
    "CubelikeError",
    "DimensionMismatchError",
    "StructureError",
    "DomainError",
    "ParityError",
    "ConsistencyError",
    "ReconstructionError",
    "ResourceLimitError",
    "OverflowGuardError",
    "VerificationError",
    "GroupElement",
    "HadamardEntry",
    "MAX_DIMENSION",
    "DENSE_DIMENSION_LIMIT",
    "parity_inner",
    "xor",
    "hadamard_sign",
    "hadamard_entry",
    "sign_matrix",
    "WeightVector",
    "Spectrum",
    "WeightedGraph",
    "StructuralReport",
    "fwht",
    "eigenvalues_from_weights",
    "adjacency_from_weights",
    "weights_from_adjacency",
    "structural_report",
    "OrthogonalBasis",
    "IndexSet",
    "ReconstructionResult",
    "walsh_basis",
    "select_index_set",
    "build_q",
    "reconstruct",
    "TRANSFER_TIME",
    "TransferKind",
    "PstResult",
    "sigma_from_spectrum",
    "sigma_from_weights",
    "classify",
    "TransitionMatrix",
    "PairCheck",
    "VerificationReport",
    "PST_THRESHOLD",
    "LEAKAGE_LIMIT",
    "transition_spectral",
    "transition_taylor",
    "fidelity",
    "verify_result",
    "REFERENCE_TABLE",
    "ReferenceCase",
    "__version__",
]

__version__ = "0.1.0"
