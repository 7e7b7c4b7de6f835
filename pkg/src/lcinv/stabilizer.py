"""Stabilizer states as self-dual subspaces of F2^(2n).

A phase-free Pauli operator on ``n`` qubits is a length-``2n`` bit vector
``v``: for qubit ``i`` (1-based) bit ``i-1`` is its z-bit and bit ``n+i-1``
its x-bit, so that ``Z = (1,0)``, ``X = (0,1)`` and ``Y = (1,1)``.  The
symplectic form pairs the z-block with the x-block, ``P = [[0, I], [I, 0]]``.

A stabilizer state is stored as its ``2n x n`` generator matrix whose
columns are the generators.  Signs are discarded when parsing: states whose
generators differ only in sign are related by a local Pauli operator, which
is itself local Clifford, so no quantity computed here depends on them.

Text format: one generator per line as a Pauli string such as ``-XZZXI``,
``#`` starts a comment line.  Qubit sets print as ``{1,3}`` (1-based).
"""

from __future__ import annotations

import functools
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gf2 import GF2Matrix, GF2Vector, rank

__all__ = [
    "StabilizerParseError",
    "QubitSet",
    "PauliVector",
    "Stabilizer",
    "ValidationReport",
    "parse_pauli_string",
    "support",
    "support_mask",
    "symplectic_product",
    "validate",
    "enumerate_elements",
    "row_pair_submatrix",
    "graph_state",
    "random_stabilizer",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 16

_PAULI_BITS = {"I": (0, 0), "Z": (1, 0), "X": (0, 1), "Y": (1, 1)}
_BITS_PAULI = {bits: ch for ch, bits in _PAULI_BITS.items()}
_SIGN = re.compile(r"^(\+i|-i|\+|-)?")


class StabilizerParseError(ValueError):
    """Malformed Pauli string, stabilizer file, or qubit set."""


# ---------------------------------------------------------------------------
# qubit sets


@dataclass(frozen=True, order=True)
class QubitSet:
    """Subset of ``{1, ..., n}``; qubit ``i`` is bit ``i-1`` of ``mask``."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} not within {self.n} qubits")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> QubitSet:
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"qubit {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> QubitSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def parse(cls, text: str, n: int) -> QubitSet:
        text = text.strip()
        if text in ("∅", "{}"):
            return cls(n, 0)
        if not (text.startswith("{") and text.endswith("}")):
            raise StabilizerParseError(f"qubit set must be braced: {text!r}")
        body = text[1:-1].strip()
        try:
            indices = [int(tok) for tok in body.split(",")] if body else []
            return cls.from_indices(n, indices)
        except ValueError as exc:
            raise StabilizerParseError(f"bad qubit set {text!r}: {exc}") from None

    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def complement(self) -> QubitSet:
        return QubitSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def issubset(self, other: QubitSet) -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.indices())) + "}"


# ---------------------------------------------------------------------------
# Pauli vectors


@dataclass(frozen=True)
class PauliVector:
    """Phase-free ``n``-qubit Pauli operator as a vector of length ``2n``."""

    n: int
    v: GF2Vector

    def __post_init__(self):
        if self.v.length != 2 * self.n:
            raise ValueError(f"vector length {self.v.length} != 2n = {2 * self.n}")

    @classmethod
    def from_int(cls, n: int, value: int) -> PauliVector:
        return cls(n, GF2Vector(2 * n, value))

    @classmethod
    def from_zx(cls, z: Sequence[int], x: Sequence[int]) -> PauliVector:
        if len(z) != len(x):
            raise ValueError("z and x blocks differ in length")
        return cls(len(z), GF2Vector.from_bits(list(z) + list(x)))

    @property
    def value(self) -> int:
        return self.v.value

    @property
    def z(self) -> tuple[int, ...]:
        return tuple(self.v.value >> i & 1 for i in range(self.n))

    @property
    def x(self) -> tuple[int, ...]:
        return tuple(self.v.value >> (self.n + i) & 1 for i in range(self.n))

    def __add__(self, other: PauliVector) -> PauliVector:
        if self.n != other.n:
            raise ValueError(f"qubit counts differ: {self.n} vs {other.n}")
        return PauliVector(self.n, self.v + other.v)

    def __str__(self) -> str:
        return "".join(_BITS_PAULI[bits] for bits in zip(self.z, self.x))


def parse_pauli_string(s: str, n: int | None = None) -> PauliVector:
    """Parse ``"XZZXI"``-style text, dropping any ``+``/``-``/``+i``/``-i`` prefix."""
    body = _SIGN.sub("", s.strip(), count=1)
    bad = set(body) - set(_PAULI_BITS)
    if bad or not body:
        raise StabilizerParseError(f"illegal Pauli string {s!r}")
    if n is not None and len(body) != n:
        raise StabilizerParseError(f"{s!r} has length {len(body)}, expected {n}")
    z = [_PAULI_BITS[ch][0] for ch in body]
    x = [_PAULI_BITS[ch][1] for ch in body]
    return PauliVector.from_zx(z, x)


def support_mask(value: int, n: int) -> int:
    """Support of a packed Pauli vector as a qubit bitmask."""
    return (value | value >> n) & ((1 << n) - 1)


def support(p: PauliVector) -> QubitSet:
    return QubitSet(p.n, support_mask(p.value, p.n))


def _sympl(a: int, b: int, n: int) -> int:
    mask = (1 << n) - 1
    t = (a & mask) & (b >> n) ^ (a >> n) & (b & mask)
    return bin(t).count("1") & 1


def symplectic_product(p: PauliVector, q: PauliVector) -> int:
    """0 when the two operators commute, 1 when they anticommute."""
    if p.n != q.n:
        raise ValueError(f"qubit counts differ: {p.n} vs {q.n}")
    return _sympl(p.value, q.value, p.n)


# ---------------------------------------------------------------------------
# stabilizers


@dataclass(frozen=True, eq=True)
class Stabilizer:
    """Generator matrix of shape ``2n x n``; columns are the generators.

    Construction only checks the shape; use :func:`validate` to confirm the
    columns describe a stabilizer state.
    """

    gens: GF2Matrix
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        rows, cols = self.gens.shape
        if rows != 2 * cols:
            raise ValueError(f"generator matrix must be 2n x n, got {rows} x {cols}")
        if cols < 1:
            raise ValueError("a stabilizer needs at least one qubit")
        object.__setattr__(self, "n", cols)

    @classmethod
    def from_columns(cls, n: int, values: Sequence[int]) -> Stabilizer:
        """From ``n`` packed Pauli vectors (see :func:`support_mask` layout)."""
        if len(values) != n:
            raise ValueError(f"need {n} generators, got {len(values)}")
        return cls(GF2Matrix.from_int_rows(list(values), 2 * n).transpose())

    @classmethod
    def from_paulis(cls, paulis: Sequence[str | PauliVector]) -> Stabilizer:
        vecs = [p if isinstance(p, PauliVector) else parse_pauli_string(p) for p in paulis]
        n = len(vecs)
        for p in vecs:
            if p.n != n:
                raise StabilizerParseError(
                    f"{n} generators but a generator acts on {p.n} qubits"
                )
        return cls.from_columns(n, [p.value for p in vecs])

    @classmethod
    def from_text(cls, text: str) -> Stabilizer:
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise StabilizerParseError("no generators")
        return cls.from_paulis(lines)

    @classmethod
    def read(cls, path: str | Path) -> Stabilizer:
        return cls.from_text(Path(path).read_text())

    def to_text(self) -> str:
        return "".join(str(p) + "\n" for p in self.generators)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())

    @functools.cached_property
    def columns(self) -> tuple[int, ...]:
        """Generators as packed ints."""
        return tuple(self.gens.transpose().int_rows())

    @functools.cached_property
    def array(self) -> np.ndarray:
        """Read-only ``uint8`` copy of the generator matrix."""
        a = self.gens.to_array()
        a.setflags(write=False)
        return a

    @property
    def generators(self) -> list[PauliVector]:
        return [PauliVector.from_int(self.n, c) for c in self.columns]

    @functools.cached_property
    def element_values(self) -> tuple[int, ...]:
        """All span elements as packed ints, in coefficient order."""
        cols = self.columns
        out = [0] * (1 << self.n)
        for c in range(1, 1 << self.n):
            low = c & -c
            out[c] = out[c ^ low] ^ cols[low.bit_length() - 1]
        return tuple(out)

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.generators)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`; truthy when the stabilizer is valid."""

    n: int
    rank: int
    anticommuting: tuple[tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.rank == self.n and not self.anticommuting

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"valid, n={self.n}"
        problems = [f"columns {i},{j} anticommute" for i, j in self.anticommuting]
        if self.rank < self.n:
            problems.append(f"rank {self.rank} < {self.n}")
        return "invalid: " + "; ".join(problems)


def validate(S: Stabilizer) -> ValidationReport:
    """Check independence and pairwise commutation; never raises."""
    cols = S.columns
    bad = tuple(
        (i + 1, j + 1)
        for i in range(S.n)
        for j in range(i + 1, S.n)
        if _sympl(cols[i], cols[j], S.n)
    )
    return ValidationReport(S.n, rank(S.gens), bad)


def enumerate_elements(S: Stabilizer, limit: int = ENUMERATION_LIMIT) -> list[PauliVector]:
    """All ``2^n`` elements of the column span.

    Element ``c`` is the sum of the generators ``k`` whose bit ``k-1`` is set
    in ``c``, listed for ``c = 0, 1, ..., 2^n - 1``.
    """
    if S.n > limit:
        raise ValueError(f"n={S.n} exceeds enumeration limit {limit}")
    return [PauliVector.from_int(S.n, v) for v in S.element_values]


def row_pair_submatrix(S: Stabilizer, omega: QubitSet) -> GF2Matrix:
    """Rows ``j`` and ``n+j`` of ``S`` for every qubit ``j`` outside ``omega``.

    Its kernel is the set of coefficient vectors whose element is supported
    inside ``omega``.
    """
    if omega.n != S.n:
        raise ValueError(f"qubit set over {omega.n} qubits, stabilizer has {S.n}")
    rows = []
    for j in range(S.n):
        if not omega.mask >> j & 1:
            rows += [j, S.n + j]
    return S.gens.take_rows(rows)


def graph_state(adjacency: GF2Matrix) -> Stabilizer:
    """Generator ``i`` is X on qubit ``i`` and Z on each neighbour of ``i``."""
    a = adjacency.to_array()
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"adjacency must be square, got {a.shape}")
    if np.any(a != a.T):
        raise ValueError("adjacency matrix is not symmetric")
    if np.any(np.diag(a)):
        raise ValueError("adjacency matrix has a nonzero diagonal")
    return Stabilizer(GF2Matrix.from_array(np.vstack([a, np.eye(n, dtype=np.uint8)])))


def _local_transform(values: Sequence[int], n: int, factors) -> list[int]:
    # factors[i] = ((a, b), (c, d)) acts on (z_i, x_i)
    out = []
    for v in values:
        w = 0
        for i, ((a, b), (c, d)) in enumerate(factors):
            z = v >> i & 1
            x = v >> (n + i) & 1
            w |= ((a & z) ^ (b & x)) << i
            w |= ((c & z) ^ (d & x)) << (n + i)
        out.append(w)
    return out


_GL2 = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, 1), (1, 1)),
    ((1, 0), (1, 1)),
    ((1, 1), (0, 1)),
    ((1, 1), (1, 0)),
)


def _random_invertible(n: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, 2, size=(n, n), dtype=np.uint8)
        if rank(GF2Matrix.from_array(g)) == n:
            return g


def random_stabilizer(n: int, seed: int) -> Stabilizer:
    """Random graph state, scrambled by a random local Clifford and basis change."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), 1)
    S = graph_state(GF2Matrix.from_array(upper + upper.T))
    factors = [_GL2[k] for k in rng.integers(0, len(_GL2), size=n)]
    cols = _local_transform(S.columns, n, factors)
    g = _random_invertible(n, rng)
    mixed = [0] * n
    for j in range(n):
        for k in range(n):
            if g[k, j]:
                mixed[j] ^= cols[k]
    return Stabilizer.from_columns(n, mixed)
