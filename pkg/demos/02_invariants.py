"""
Counting and dimension invariants
=================================

"""

import numpy as np

from lcinv import (
    LocalCliffordOp,
    OmegaTuple,
    Stabilizer,
    apply,
    downward_closure,
    fingerprint,
    moebius_t_from_v,
    random_stabilizer,
    t_invariant,
    v_count_oracle,
    v_dim_invariant,
)

ghz = Stabilizer.from_text("XXX\nZZI\nIZZ\n")

# pairs of elements with prescribed supports for each member and for their sum
omega = OmegaTuple.parse("r=2; w1={1,2}; w2={2,3}; w12={1,3}", 3)
print(omega, "->", t_invariant(ghz, omega))

# relax exact supports to containment and the count becomes a power of two
print(v_count_oracle(ghz, omega), 2 ** v_dim_invariant(ghz, omega))

# exact counts are recovered from the containment counts by inclusion-exclusion
target = OmegaTuple(3, (0b111,))
v = {w: 2 ** v_dim_invariant(ghz, w) for w in downward_closure(target)}
print(moebius_t_from_v(v, target), t_invariant(ghz, target))

# the dimension is a corank, so it stays cheap at a hundred qubits
big = random_stabilizer(100, seed=0)
everything, first_half = (1 << 100) - 1, (1 << 50) - 1
print(v_dim_invariant(big, OmegaTuple.from_key(100, 2, [everything, first_half, first_half])))

# a fingerprint lists every dimension at one arity; local Clifford maps leave it alone
rng = np.random.default_rng(0)
S = random_stabilizer(4, seed=5)
QS = apply(LocalCliffordOp.random(4, rng), S)
f1, f2 = fingerprint(S, 2), fingerprint(QS, 2)
print(len(f1), f1 == f2)
print(f1.to_text().splitlines()[:4])
