"""Local Clifford operations and three equivalence deciders.

A local Clifford operation is, up to Paulis, one invertible 2x2 binary
matrix per qubit acting on that qubit's ``(z, x)`` bit pair.  Two stabilizer
states are local Clifford equivalent iff some such operation maps one
subspace onto the other.

* :func:`brute_force_check` tries all ``6^n`` operations.
* :func:`constructive_check` searches the second state for a basis with the
  same support pattern as the first state's generators, then reads the
  per-qubit factors off the matched bases.
* :func:`fingerprint_check` compares invariant fingerprints; it can prove
  inequivalence, and proves equivalence only when ``r >= n``.

Serialized operations are ``n`` lines ``"i: a b c d"`` for the factor
``[[a, b], [c, d]]`` of qubit ``i`` (1-based).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .gf2 import GF2Matrix, column_space_equal
from .invariants import FINGERPRINT_BUDGET, OmegaTuple, fingerprint, omega_star
from .stabilizer import _GL2, Stabilizer, StabilizerParseError, _local_transform, support_mask

__all__ = [
    "LocalCliffordOp",
    "FingerprintComparison",
    "gl2_elements",
    "apply",
    "iter_equivalences",
    "brute_force_check",
    "build_factor_from_pairs",
    "constructive_check",
    "fingerprint_check",
    "BRUTE_FORCE_LIMIT",
    "CONSTRUCTIVE_LIMIT",
]

BRUTE_FORCE_LIMIT = 8
CONSTRUCTIVE_LIMIT = 6

Factor = tuple[tuple[int, int], tuple[int, int]]


def gl2_elements() -> tuple[Factor, ...]:
    """The six invertible 2x2 binary matrices.

    Identity first, the rest ordered by their row bits ``abcd``.
    """
    return _GL2


def _act(q: Factor, pair: tuple[int, int]) -> tuple[int, int]:
    (a, b), (c, d) = q
    z, x = pair
    return ((a & z) ^ (b & x), (c & z) ^ (d & x))


def _mul(p: Factor, q: Factor) -> Factor:
    (a, b), (c, d) = p
    (e, f), (g, h) = q
    return (((a & e) ^ (b & g), (a & f) ^ (b & h)), ((c & e) ^ (d & g), (c & f) ^ (d & h)))


@dataclass(frozen=True)
class LocalCliffordOp:
    """Per-qubit factors ``factors[i-1] = ((a, b), (c, d))`` for qubit ``i``."""

    factors: tuple[Factor, ...]

    def __post_init__(self):
        factors = tuple(
            tuple(tuple(int(x) for x in row) for row in f) for f in self.factors
        )
        for f in factors:
            if f not in _GL2:
                raise ValueError(f"factor {f} is not an invertible 2x2 binary matrix")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    @classmethod
    def identity(cls, n: int) -> LocalCliffordOp:
        return cls((_GL2[0],) * n)

    @classmethod
    def from_indices(cls, indices: Sequence[int]) -> LocalCliffordOp:
        """Factor ``i`` is ``gl2_elements()[indices[i]]``."""
        return cls(tuple(_GL2[k] for k in indices))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> LocalCliffordOp:
        return cls.from_indices(rng.integers(0, 6, size=n).tolist())

    def compose(self, first: LocalCliffordOp) -> LocalCliffordOp:
        """The operation applying ``first``, then ``self``."""
        if first.n != self.n:
            raise ValueError("qubit counts differ")
        return LocalCliffordOp(tuple(_mul(p, q) for p, q in zip(self.factors, first.factors)))

    def inverse(self) -> LocalCliffordOp:
        inv = {q: p for p in _GL2 for q in _GL2 if _mul(p, q) == _GL2[0]}
        return LocalCliffordOp(tuple(inv[f] for f in self.factors))

    def as_matrix(self) -> GF2Matrix:
        """The ``2n x 2n`` block matrix with diagonal blocks."""
        n = self.n
        M = np.zeros((2 * n, 2 * n), dtype=np.uint8)
        for i, ((a, b), (c, d)) in enumerate(self.factors):
            M[i, i], M[i, n + i], M[n + i, i], M[n + i, n + i] = a, b, c, d
        return GF2Matrix.from_array(M)

    def to_text(self) -> str:
        return "".join(
            f"{i}: {a} {b} {c} {d}\n" for i, ((a, b), (c, d)) in enumerate(self.factors, 1)
        )

    @classmethod
    def from_text(cls, text: str) -> LocalCliffordOp:
        factors = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            head, _, bits = line.partition(":")
            try:
                i = int(head)
                a, b, c, d = (int(t) for t in bits.split())
            except ValueError:
                raise StabilizerParseError(f"bad factor line {line!r}") from None
            factors[i] = ((a, b), (c, d))
        if sorted(factors) != list(range(1, len(factors) + 1)):
            raise StabilizerParseError("factor lines must number qubits 1..n")
        return cls(tuple(factors[i] for i in sorted(factors)))


def apply(Q: LocalCliffordOp, S: Stabilizer) -> Stabilizer:
    """Image of ``S`` under ``Q``, generator by generator."""
    if Q.n != S.n:
        raise ValueError(f"operation on {Q.n} qubits, stabilizer on {S.n}")
    return Stabilizer.from_columns(S.n, _local_transform(S.columns, S.n, Q.factors))


def _pair(v: int, n: int, i: int) -> tuple[int, int]:
    return (v >> i & 1, v >> (n + i) & 1)


def _check_pair(S1: Stabilizer, S2: Stabilizer, limit: int, what: str) -> None:
    if S1.n != S2.n:
        raise ValueError(f"qubit counts differ: {S1.n} vs {S2.n}")
    if S1.n > limit:
        raise BudgetExceeded(f"{what} at n={S1.n} exceeds limit {limit}")


def iter_equivalences(
    S1: Stabilizer, S2: Stabilizer, limit: int = BRUTE_FORCE_LIMIT
) -> Iterator[LocalCliffordOp]:
    """Every local Clifford operation mapping ``S1`` onto ``S2``.

    Candidates are visited in odometer order over :func:`gl2_elements`, the
    last qubit varying fastest.  Because ``S2`` is self-dual, ``Q S1 = S2``
    holds iff every image ``Q v`` of a generator of ``S1`` has zero
    symplectic product with every generator of ``S2``.  That product splits
    into per-qubit terms, so each factor choice contributes a fixed
    ``n x n`` bit table and a candidate passes iff its tables XOR to zero.
    """
    _check_pair(S1, S2, limit, "brute-force search")
    n = S1.n
    v, w = S1.columns, S2.columns
    # table[i][q]: bit (k*n + l) = symplectic product of Q_i v^k and w^l on qubit i
    table = []
    for i in range(n):
        row = []
        for q in _GL2:
            bits = 0
            for k in range(n):
                z, x = _act(q, _pair(v[k], n, i))
                for l in range(n):
                    wz, wx = _pair(w[l], n, i)
                    if (z & wx) ^ (x & wz):
                        bits |= 1 << (k * n + l)
            row.append(bits)
        table.append(row)

    chosen = [0] * n

    def dfs(i: int, acc: int) -> Iterator[LocalCliffordOp]:
        if i == n - 1:
            for q, bits in enumerate(table[i]):
                if bits == acc:
                    chosen[i] = q
                    yield LocalCliffordOp.from_indices(chosen)
            return
        for q, bits in enumerate(table[i]):
            chosen[i] = q
            yield from dfs(i + 1, acc ^ bits)

    yield from dfs(0, 0)


def brute_force_check(
    S1: Stabilizer, S2: Stabilizer, limit: int = BRUTE_FORCE_LIMIT
) -> LocalCliffordOp | None:
    """First operation (in odometer order) mapping ``S1`` onto ``S2``, if any."""
    for Q in iter_equivalences(S1, S2, limit):
        if not column_space_equal(apply(Q, S1).gens, S2.gens):
            raise RuntimeError(f"brute-force witness failed verification:\n{Q.to_text()}")
        return Q
    return None


def build_factor_from_pairs(
    constraints: Sequence[tuple[tuple[int, int], tuple[int, int]]],
) -> Factor | None:
    """First element of :func:`gl2_elements` mapping each source pair to its target."""
    for q in _GL2:
        if all(_act(q, tuple(src)) == tuple(tgt) for src, tgt in constraints):
            return q
    return None


def constructive_check(
    S1: Stabilizer, S2: Stabilizer, limit: int = CONSTRUCTIVE_LIMIT
) -> LocalCliffordOp | None:
    """Match the support pattern of ``S1``'s generators inside ``S2``.

    A tuple ``(w1, ..., wn)`` of ``S2`` elements with the same supports and
    pairwise-sum supports as the generators exists iff the states are
    equivalent, and any such tuple fixes the factor of every qubit.
    """
    _check_pair(S1, S2, limit, "constructive search")
    n = S1.n
    star = omega_star(S1)
    buckets: dict[int, list[int]] = {}
    for e in S2.element_values:
        buckets.setdefault(support_mask(e, n), []).append(e)
    levels = [buckets.get(s, []) for s in star.singles]
    if any(not lv for lv in levels):
        return None
    targets = [[star.pair(l, k) for l in range(1, k)] for k in range(1, n + 1)]
    v = S1.columns
    chosen: list[int] = []

    def assemble() -> LocalCliffordOp:
        factors = []
        for i in range(n):
            q = build_factor_from_pairs([(_pair(v[k], n, i), _pair(chosen[k], n, i)) for k in range(n)])
            if q is None:
                raise RuntimeError(f"no factor for qubit {i + 1} despite matching supports")
            factors.append(q)
        Q = LocalCliffordOp(tuple(factors))
        if not column_space_equal(apply(Q, S1).gens, S2.gens):
            raise RuntimeError(f"constructed operation failed verification:\n{Q.to_text()}")
        return Q

    def dfs(k: int) -> LocalCliffordOp | None:
        if k == n:
            return assemble()
        for e in levels[k]:
            if all(support_mask(e ^ chosen[l], n) == targets[k][l] for l in range(k)):
                chosen.append(e)
                found = dfs(k + 1)
                chosen.pop()
                if found is not None:
                    return found
        return None

    return dfs(0)


@dataclass(frozen=True)
class FingerprintComparison:
    """Result of :func:`fingerprint_check`.

    ``equal`` at ``r < n`` is only evidence of equivalence; ``conclusive``
    says whether the verdict settles the question.
    """

    n: int
    r: int
    equal: bool
    witness: OmegaTuple | None = None

    @property
    def conclusive(self) -> bool:
        return not self.equal or self.r >= self.n

    @property
    def label(self) -> str:
        return f"EQUAL-AT-{self.r}" if self.equal else "DISTINCT"

    def __bool__(self) -> bool:
        return self.equal


def fingerprint_check(
    S1: Stabilizer, S2: Stabilizer, r: int, budget: int = FINGERPRINT_BUDGET
) -> FingerprintComparison:
    if S1.n != S2.n:
        raise ValueError(f"qubit counts differ: {S1.n} vs {S2.n}")
    f1 = fingerprint(S1, r, budget)
    f2 = fingerprint(S2, r, budget)
    witness = f1.first_difference(f2)
    return FingerprintComparison(S1.n, r, witness is None, witness)
