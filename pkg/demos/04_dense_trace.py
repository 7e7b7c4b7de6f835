"""
Cross-checking with dense density matrices
==========================================

"""

import numpy as np

from lcinv import (
    LocalCliffordOp,
    OmegaTuple,
    QubitSet,
    Stabilizer,
    apply,
    dense_check,
    lu_trace_invariant,
    partial_trace,
    projector,
    random_stabilizer,
)

# the projector onto a Bell pair, and its reduction to qubit 1 (padded back to two qubits)
bell = projector(Stabilizer.from_text("XX\nZZ\n"))
print(np.round(partial_trace(bell, QubitSet.from_indices(2, [2])).matrix.real, 3))

# for r=2 the trace of three reduced projectors tracks 2^dim V up to a constant factor
omega = OmegaTuple.parse("r=2; w1={1,2}; w2={2,3}; w12={1,3}", 3)
for seed in range(5):
    print(dense_check(random_stabilizer(3, seed), omega))

# and local Clifford maps leave the trace unchanged
rng = np.random.default_rng(0)
S = random_stabilizer(3, seed=0)
print([round(lu_trace_invariant(apply(LocalCliffordOp.random(3, rng), S), omega), 12)
       for _ in range(5)])
