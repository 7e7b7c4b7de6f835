"""
Deciding local Clifford equivalence
===================================

"""

import time

import numpy as np

from lcinv import (
    LocalCliffordOp,
    Stabilizer,
    apply,
    brute_force_check,
    column_space_equal,
    constructive_check,
    fingerprint_check,
    omega_star,
    random_stabilizer,
    t_invariant,
)

ghz = Stabilizer.from_text("XXX\nZZI\nIZZ\n")
triangle = Stabilizer.from_text("XZZ\nZXZ\nZZX\n")
product = Stabilizer.from_text("ZII\nIZI\nIIZ\n")

# search all 6^n per-qubit factors; the witness maps one subspace onto the other
Q = brute_force_check(ghz, triangle)
print(Q.to_text())
print(column_space_equal(apply(Q, ghz).gens, triangle.gens))

# the support pattern of ghz's generators, and whether the triangle state realises it
star = omega_star(ghz)
print(star)
print(t_invariant(triangle, star), t_invariant(product, star))

# matching that pattern inside the target fixes every factor
print(constructive_check(ghz, triangle) is not None, constructive_check(ghz, product))

# comparing single-element weight counts already separates ghz from a product state
res = fingerprint_check(ghz, product, r=1)
print(res.label, res.witness)

# a scrambled copy of an eight-qubit state is recognised quickly
rng = np.random.default_rng(3)
S = random_stabilizer(8, seed=3)
T = apply(LocalCliffordOp.random(8, rng), S)
t0 = time.perf_counter()
print(brute_force_check(S, T) is not None, f"{time.perf_counter() - t0:.3f} s")
