"""Exact signatures of invariant hermitian forms on finite-dimensional
irreducible representations of real reductive Lie groups.

All arithmetic is rational and exact; every computed signature can be
cross-checked against two independent brute-force oracles.
"""

from .errors import (
    ConsistencyError,
    HermsigError,
    InputError,
    UnsupportedInput,
)
from .oracle import (
    MatrixRepresentation,
    build_intertwiner,
    build_representation,
    intertwiner_signature,
    matrix_signature,
    weight_trace,
)
from .realform import (
    RealForm,
    VoganDiagram,
    preset_names,
    resolve_form,
)
from .rootsys import (
    CartanType,
    RootSystem,
    build_root_system,
    dominant_weights_up_to,
    weight_multiplicities,
)
from .signature import (
    SignatureReport,
    SignatureTerm,
    exists_invariant_form,
    signature,
)

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "ConsistencyError",
    "HermsigError",
    "InputError",
    "MatrixRepresentation",
    "RealForm",
    "RootSystem",
    "SignatureReport",
    "SignatureTerm",
    "UnsupportedInput",
    "VoganDiagram",
    "build_intertwiner",
    "build_representation",
    "build_root_system",
    "dominant_weights_up_to",
    "exists_invariant_form",
    "intertwiner_signature",
    "matrix_signature",
    "preset_names",
    "resolve_form",
    "signature",
    "weight_multiplicities",
    "weight_trace",
]
