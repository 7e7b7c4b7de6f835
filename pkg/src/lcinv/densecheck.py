"""Dense state-vector cross-checks for small stabilizer states.

Qubit 1 is the leftmost tensor factor.  Generators are densified with sign
+1; other sign choices give locally Pauli-equivalent states.

A reduced operator ``Tr_A(M)`` is returned re-embedded on the full register
as ``Tr_A(M)`` on the kept qubits tensored with the identity on ``A``, so
that reduced operators of different subsets can be multiplied.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .invariants import OmegaTuple, v_dim_invariant
from .stabilizer import PauliVector, QubitSet, Stabilizer

__all__ = [
    "DenseOperator",
    "DenseCheckReport",
    "pauli_matrix",
    "projector",
    "partial_trace",
    "reduced_operator",
    "lu_trace_invariant",
    "dense_check",
    "DENSE_LIMIT",
]

DENSE_LIMIT = 10

_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[1, 0], [0, -1]], dtype=complex),
    (0, 1): np.array([[0, 1], [1, 0]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class DenseOperator:
    n: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (1 << self.n, 1 << self.n):
            raise ValueError(f"expected a {1 << self.n}x{1 << self.n} matrix, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def __matmul__(self, other: DenseOperator) -> DenseOperator:
        return DenseOperator(self.n, self.matrix @ other.matrix)


def pauli_matrix(p: PauliVector) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for bits in zip(p.z, p.x):
        out = np.kron(out, _SINGLE[bits])
    return out


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise BudgetExceeded(f"dense check at n={n} exceeds limit {limit}")


def projector(S: Stabilizer, limit: int = DENSE_LIMIT) -> DenseOperator:
    """Product of ``(I + g)/2`` over the generators: the state's projector."""
    _check_size(S.n, limit)
    dim = 1 << S.n
    P = np.eye(dim, dtype=complex)
    for g in S.generators:
        P = P @ (np.eye(dim) + pauli_matrix(g)) / 2
    return DenseOperator(S.n, P)


def _check_set(M: DenseOperator, traced: QubitSet) -> None:
    if traced.n != M.n:
        raise ValueError(f"qubit set over {traced.n} qubits, operator has {M.n}")


def reduced_operator(M: DenseOperator, traced: QubitSet) -> DenseOperator:
    """``Tr_traced(M)`` on the kept qubits only, in their original order."""
    _check_set(M, traced)
    n = M.n
    tensor = M.matrix.reshape((2,) * (2 * n))
    kept = [i for i in range(n) if i + 1 not in traced]
    rows, cols = list(range(n)), list(range(n, 2 * n))
    for i in traced.indices():
        cols[i - 1] = rows[i - 1]
    out = np.einsum(tensor, rows + cols, kept + [n + i for i in kept])
    dim = 1 << len(kept)
    return DenseOperator(len(kept), out.reshape(dim, dim))


def partial_trace(M: DenseOperator, traced: QubitSet) -> DenseOperator:
    """``Tr_traced(M)`` tensored with the identity on the traced qubits."""
    _check_set(M, traced)
    n = M.n
    tensor = M.matrix.reshape((2,) * (2 * n))
    rows, cols = list(range(n)), list(range(n, 2 * n))
    operands: list = []
    extra = 2 * n
    for i in traced.indices():
        rows[i - 1] = cols[i - 1] = extra
        extra += 1
        operands += [np.eye(2), [i - 1, n + i - 1]]
    out = np.einsum(tensor, rows + cols, *operands, list(range(2 * n)))
    return DenseOperator(n, out.reshape(1 << n, 1 << n))


def lu_trace_invariant(S: Stabilizer, omega: OmegaTuple, limit: int = DENSE_LIMIT) -> float:
    """``Tr[(Tr_~w1 P)(Tr_~w2 P)(Tr_~w12 P)]`` for the projector ``P`` of ``S``."""
    if omega.r != 2:
        raise ValueError(f"the trace formula needs r=2, got r={omega.r}")
    if omega.n != S.n:
        raise ValueError(f"omega over {omega.n} qubits, stabilizer has {S.n}")
    P = projector(S, limit)
    reduced = [
        partial_trace(P, QubitSet(S.n, w).complement())
        for w in (omega.singles[0], omega.singles[1], omega.pairs[0])
    ]
    product = reduced[0] @ reduced[1] @ reduced[2]
    return product.trace().real


@dataclass(frozen=True)
class DenseCheckReport:
    trace: float
    v_count: int

    @property
    def ratio(self) -> float:
        return self.trace / self.v_count

    def __str__(self) -> str:
        return f"trace={self.trace:.12g} |V|={self.v_count} ratio={self.ratio:.12g}"


def dense_check(S: Stabilizer, omega: OmegaTuple, limit: int = DENSE_LIMIT) -> DenseCheckReport:
    """Trace formula next to the containment count ``2^dim V`` for the same tuple."""
    return DenseCheckReport(lu_trace_invariant(S, omega, limit), 1 << v_dim_invariant(S, omega))
