"""
Stabilizer states as binary subspaces
=====================================

"""

from lcinv import (
    GF2Matrix,
    QubitSet,
    Stabilizer,
    corank,
    enumerate_elements,
    graph_state,
    parse_pauli_string,
    row_pair_submatrix,
    support,
    symplectic_product,
    validate,
)

# a Pauli string becomes a z-block and an x-block; signs are dropped
p = parse_pauli_string("-XZZXI")
print(p, p.z, p.x, support(p))

# two Paulis commute exactly when their symplectic product is zero
print(symplectic_product(parse_pauli_string("ZI"), parse_pauli_string("XI")))

# the three-qubit GHZ state, and a check that its generators commute
ghz = Stabilizer.from_text("XXX\nZZI\nIZZ\n")
print(validate(ghz))
print(ghz.gens.to_text())

# all 2^n group elements, listed with their supports
for e in enumerate_elements(ghz):
    print(e, support(e))

# elements supported inside {1,2}: count them, then read the same number off a corank
inside = QubitSet.from_indices(3, [1, 2])
count = sum(support(e).issubset(inside) for e in enumerate_elements(ghz))
print(count, 2 ** corank(row_pair_submatrix(ghz, inside)))

# graph states come straight from an adjacency matrix
tri = graph_state(GF2Matrix.from_rows(["011", "101", "110"]))
print(tri.to_text())
