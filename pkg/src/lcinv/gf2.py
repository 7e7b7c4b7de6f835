"""Packed-bit linear algebra over GF(2).

Matrices keep each row as a run of little-endian ``uint64`` words: column
``j`` is bit ``j % 64`` of word ``j // 64``.  Pad bits past the last column
are always zero, so two matrices are equal exactly when their word arrays
are.  Every operation returns a fresh matrix; stored word arrays are marked
read-only.

Text form is one line per row made of ``'0'``/``'1'`` characters.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ._kernels import echelon_inplace, matmul_into

__all__ = [
    "GF2DimensionError",
    "GF2Vector",
    "GF2Matrix",
    "rank",
    "corank",
    "kernel_basis",
    "column_space_equal",
    "mat_mul",
    "hstack",
    "vstack",
]

WORD_BITS = 64


class GF2DimensionError(ValueError):
    """Operand shapes are incompatible."""


def _nwords(bits: int) -> int:
    return (bits + WORD_BITS - 1) // WORD_BITS


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    out = np.zeros((rows, _nwords(cols) * 8), dtype=np.uint8)
    if cols:
        packed = np.packbits(dense, axis=1, bitorder="little")
        out[:, : packed.shape[1]] = packed
    return out.view("<u8").astype(np.uint64)


@dataclass(frozen=True)
class GF2Vector:
    """Bit vector of fixed length; ``value`` holds bit ``i`` at position ``i``."""

    length: int
    value: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value has bits beyond length {self.length}")

    @classmethod
    def from_bits(cls, bits: Iterable[int] | str) -> GF2Vector:
        bits = [int(b) for b in bits]
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"not a bit: {b!r}")
            value |= b << i
        return cls(len(bits), value)

    def to_bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.length)]

    def words(self) -> np.ndarray:
        """Packed little-endian ``uint64`` words."""
        nw = _nwords(self.length)
        raw = self.value.to_bytes(nw * 8, "little")
        return np.frombuffer(raw, dtype="<u8").astype(np.uint64)

    def weight(self) -> int:
        return bin(self.value).count("1")

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: GF2Vector) -> GF2Vector:
        if self.length != other.length:
            raise GF2DimensionError(f"length {self.length} != {other.length}")
        return GF2Vector(self.length, self.value ^ other.value)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_bits())


class GF2Matrix:
    """Dense matrix over GF(2) with bit-packed rows."""

    __slots__ = ("_words", "_cols")

    def __init__(self, words: np.ndarray, cols: int):
        words = np.array(words, dtype=np.uint64, order="C", copy=True)
        if words.ndim != 2 or words.shape[1] != _nwords(cols):
            raise GF2DimensionError(
                f"word array of shape {words.shape} cannot hold {cols} columns"
            )
        tail = cols % WORD_BITS
        if tail and words.shape[0]:
            pad = np.uint64(~((1 << tail) - 1) & (2**64 - 1))
            if np.any(words[:, -1] & pad):
                raise ValueError("nonzero pad bits")
        words.setflags(write=False)
        self._words = words
        self._cols = cols

    # construction -------------------------------------------------------

    @classmethod
    def from_array(cls, data) -> GF2Matrix:
        dense = np.asarray(data)
        if dense.ndim != 2:
            raise GF2DimensionError("expected a 2-d array")
        dense = (dense.astype(np.int64) & 1).astype(np.uint8)
        return cls(_pack(dense), dense.shape[1])

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]], cols: int | None = None) -> GF2Matrix:
        """Build from row strings like ``"0110"`` or bit sequences."""
        parsed = []
        for row in rows:
            bits = [int(ch) for ch in row]
            if any(b not in (0, 1) for b in bits):
                raise ValueError(f"row {row!r} is not binary")
            parsed.append(bits)
        if cols is None:
            if not parsed:
                raise ValueError("column count needed for an empty row list")
            cols = len(parsed[0])
        if any(len(bits) != cols for bits in parsed):
            raise GF2DimensionError("ragged rows")
        dense = np.array(parsed, dtype=np.uint8).reshape(len(parsed), cols)
        return cls(_pack(dense), cols)

    @classmethod
    def from_int_rows(cls, rows: Sequence[int], cols: int) -> GF2Matrix:
        nw = _nwords(cols)
        buf = bytearray()
        for value in rows:
            if value < 0 or value >> cols:
                raise ValueError(f"row value {value} exceeds {cols} columns")
            buf += value.to_bytes(nw * 8, "little")
        words = np.frombuffer(bytes(buf), dtype="<u8").astype(np.uint64)
        return cls(words.reshape(len(rows), nw), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> GF2Matrix:
        return cls(np.zeros((rows, _nwords(cols)), dtype=np.uint64), cols)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls.from_array(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_text(cls, text: str, cols: int | None = None) -> GF2Matrix:
        lines = [ln.strip() for ln in text.splitlines()]
        return cls.from_rows([ln for ln in lines if ln], cols)

    # access -------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._words.shape[0]

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self._cols)

    @property
    def words(self) -> np.ndarray:
        """Read-only packed storage, shape ``(rows, ceil(cols / 64))``."""
        return self._words

    def to_array(self) -> np.ndarray:
        raw = self._words.astype("<u8").view(np.uint8)
        raw = raw.reshape(self.rows, self._words.shape[1] * 8)
        bits = np.unpackbits(raw, axis=1, bitorder="little")
        return bits[:, : self._cols].copy()

    def int_rows(self) -> list[int]:
        raw = self._words.astype("<u8")
        return [int.from_bytes(raw[i].tobytes(), "little") for i in range(self.rows)]

    def row(self, i: int) -> GF2Vector:
        word_bytes = self._words[i].astype("<u8").tobytes()
        return GF2Vector(self._cols, int.from_bytes(word_bytes, "little"))

    def take_rows(self, indices: Sequence[int]) -> GF2Matrix:
        idx = np.asarray(indices, dtype=np.int64)
        return GF2Matrix(self._words[idx].reshape(len(idx), self._words.shape[1]), self._cols)

    def transpose(self) -> GF2Matrix:
        return GF2Matrix.from_array(self.to_array().T)

    @property
    def T(self) -> GF2Matrix:
        return self.transpose()

    def to_text(self) -> str:
        return "".join("".join(map(str, r)) + "\n" for r in self.to_array())

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.shape, self._words.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(repr("".join(map(str, r))) for r in self.to_array())
        return f"GF2Matrix.from_rows([{body}], cols={self._cols})"


def hstack(*mats: GF2Matrix) -> GF2Matrix:
    if len({m.rows for m in mats}) > 1:
        raise GF2DimensionError("row counts differ")
    return GF2Matrix.from_array(np.hstack([m.to_array() for m in mats]))


def vstack(*mats: GF2Matrix) -> GF2Matrix:
    if len({m.cols for m in mats}) > 1:
        raise GF2DimensionError("column counts differ")
    return GF2Matrix(np.vstack([m.words for m in mats]), mats[0].cols)


def _echelon(M: GF2Matrix, reduced: bool) -> tuple[np.ndarray, np.ndarray]:
    work = np.array(M.words, order="C", copy=True)
    pivots = echelon_inplace(work, M.cols, reduced)
    return work, pivots


def rank(M: GF2Matrix) -> int:
    """Dimension of the row space."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_echelon(M, False)[1])


def corank(M: GF2Matrix) -> int:
    """Kernel dimension, ``cols - rank``."""
    return M.cols - rank(M)


def kernel_basis(M: GF2Matrix) -> GF2Matrix:
    """Rows spanning ``{x : M x = 0}``, one per free column of the RREF."""
    if M.rows == 0 or M.cols == 0:
        return GF2Matrix.identity(M.cols)
    work, pivots = _echelon(M, True)
    r = len(pivots)
    reduced = GF2Matrix(work[:r], M.cols).to_array()
    free = np.setdiff1d(np.arange(M.cols), pivots)
    basis = np.zeros((len(free), M.cols), dtype=np.uint8)
    basis[np.arange(len(free)), free] = 1
    if r:
        basis[:, pivots] = reduced[:, free].T
    return GF2Matrix.from_array(basis)


def column_space_equal(A: GF2Matrix, B: GF2Matrix) -> bool:
    """True iff ``A`` and ``B`` have the same column span."""
    if A.rows != B.rows:
        raise GF2DimensionError(f"row counts differ: {A.rows} vs {B.rows}")
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(hstack(A, B)) == ra


def mat_mul(A: GF2Matrix, B: GF2Matrix) -> GF2Matrix:
    if A.cols != B.rows:
        raise GF2DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    out = np.zeros((A.rows, B.words.shape[1]), dtype=np.uint64)
    if A.cols and B.cols:
        matmul_into(out, A.words, A.cols, B.words)
    return GF2Matrix(out, B.cols)
