"""Local Clifford invariants of stabilizer states over GF(2)."""

from .errors import BudgetExceeded
from .gf2 import (
    GF2DimensionError,
    GF2Matrix,
    GF2Vector,
    column_space_equal,
    corank,
    kernel_basis,
    mat_mul,
    rank,
)
from .stabilizer import (
    PauliVector,
    QubitSet,
    Stabilizer,
    StabilizerParseError,
    ValidationReport,
    enumerate_elements,
    graph_state,
    parse_pauli_string,
    random_stabilizer,
    row_pair_submatrix,
    support,
    symplectic_product,
    validate,
)
from .invariants import (
    Fingerprint,
    OmegaTuple,
    downward_closure,
    fingerprint,
    moebius_t_from_v,
    moebius_v_from_t,
    omega_star,
    t_invariant,
    t_table,
    v_count_oracle,
    v_dim_invariant,
)
from .lcequiv import (
    FingerprintComparison,
    LocalCliffordOp,
    apply,
    brute_force_check,
    build_factor_from_pairs,
    constructive_check,
    fingerprint_check,
    gl2_elements,
    iter_equivalences,
)
from .densecheck import (
    DenseOperator,
    dense_check,
    lu_trace_invariant,
    partial_trace,
    projector,
    reduced_operator,
)

__all__ = [
    "BudgetExceeded",
    "GF2DimensionError",
    "GF2Matrix",
    "GF2Vector",
    "column_space_equal",
    "corank",
    "kernel_basis",
    "mat_mul",
    "rank",
    "PauliVector",
    "QubitSet",
    "Stabilizer",
    "StabilizerParseError",
    "ValidationReport",
    "enumerate_elements",
    "graph_state",
    "parse_pauli_string",
    "random_stabilizer",
    "row_pair_submatrix",
    "support",
    "symplectic_product",
    "validate",
    "Fingerprint",
    "OmegaTuple",
    "downward_closure",
    "fingerprint",
    "moebius_t_from_v",
    "moebius_v_from_t",
    "omega_star",
    "t_invariant",
    "t_table",
    "v_count_oracle",
    "v_dim_invariant",
    "FingerprintComparison",
    "LocalCliffordOp",
    "apply",
    "brute_force_check",
    "build_factor_from_pairs",
    "constructive_check",
    "fingerprint_check",
    "gl2_elements",
    "iter_equivalences",
    "DenseOperator",
    "dense_check",
    "lu_trace_invariant",
    "partial_trace",
    "projector",
    "reduced_operator",
]

__version__ = "0.1.0"
