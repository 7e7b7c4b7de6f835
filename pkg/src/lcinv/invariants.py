"""Support-pattern invariants of stabilizer states.

For an arity ``r`` an :class:`OmegaTuple` fixes one qubit set per position
``k`` and one per pair ``k < l``.  Two families are computed over r-tuples
``(v1, ..., vr)`` of stabilizer elements:

* the count of tuples with ``supp(vk) == w_k`` and ``supp(vk + vl) == w_kl``
  (:func:`t_invariant`, exponential enumeration);
* the dimension of the space of tuples with ``supp(vk) <= w_k`` and
  ``supp(vk + vl) <= w_kl`` (:func:`v_dim_invariant`, one corank).

Both are unchanged by local Clifford operations, and at ``r = n`` either
family separates local Clifford classes.  The counts of the two families
are related by inclusion-exclusion over the product of subset lattices,
see :func:`moebius_t_from_v` and :func:`moebius_v_from_t`.

Canonical order
---------------
A tuple's key is ``(w_1, ..., w_r, w_12, w_13, ..., w_1r, w_23, ...)`` with
every set written as its integer bitmask (qubit ``i`` is bit ``i-1``).
Fingerprints list all ``(2^n)^(r + r(r-1)/2)`` keys in lexicographic order,
the last position varying fastest; the position of a key is therefore the
integer whose base-``2^n`` digits are the key.
"""

from __future__ import annotations

import itertools
import json
import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded
from .gf2 import GF2Matrix, corank
from .stabilizer import QubitSet, Stabilizer, StabilizerParseError, support_mask

__all__ = [
    "OmegaTuple",
    "Fingerprint",
    "pair_order",
    "t_invariant",
    "v_dim_invariant",
    "v_count_oracle",
    "moebius_t_from_v",
    "moebius_v_from_t",
    "downward_closure",
    "t_table",
    "fingerprint",
    "omega_star",
    "ENUMERATION_BUDGET",
    "FINGERPRINT_BUDGET",
]

# limits on r*n for tuple enumeration and on the number of fingerprint entries
ENUMERATION_BUDGET = 25
FINGERPRINT_BUDGET = 1 << 18

FORMAT_NAME = "lcinv-fingerprint"
FORMAT_VERSION = 1


def pair_order(r: int) -> list[tuple[int, int]]:
    """1-based pairs ``(k, l)``, ``k < l``, in canonical order."""
    return [(k, l) for k in range(1, r + 1) for l in range(k + 1, r + 1)]


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=True)
class OmegaTuple:
    """Support constraints for an r-tuple: ``r`` singles and all pairs ``k < l``.

    Sets are bitmasks over ``n`` qubits.  ``pairs`` follows :func:`pair_order`.
    """

    n: int
    singles: tuple[int, ...]
    pairs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "singles", tuple(int(s) for s in self.singles))
        object.__setattr__(self, "pairs", tuple(int(s) for s in self.pairs))
        r = len(self.singles)
        if r < 1:
            raise ValueError("an omega tuple needs at least one set")
        if len(self.pairs) != r * (r - 1) // 2:
            raise ValueError(f"r={r} needs {r * (r - 1) // 2} pair sets, got {len(self.pairs)}")
        for s in self.key():
            if s < 0 or s >> self.n:
                raise ValueError(f"set {s:#x} not within {self.n} qubits")

    @property
    def r(self) -> int:
        return len(self.singles)

    @classmethod
    def from_sets(
        cls,
        singles: Sequence[QubitSet],
        pairs: Mapping[tuple[int, int], QubitSet] | None = None,
    ) -> OmegaTuple:
        """From :class:`QubitSet` values; ``pairs`` is keyed by 1-based ``(k, l)``."""
        if not singles:
            raise ValueError("an omega tuple needs at least one set")
        n = singles[0].n
        pairs = dict(pairs or {})
        order = pair_order(len(singles))
        missing = [kl for kl in order if kl not in pairs]
        if missing or len(pairs) != len(order):
            raise ValueError(f"pair sets must cover exactly {order}")
        sets = list(singles) + [pairs[kl] for kl in order]
        if any(s.n != n for s in sets):
            raise ValueError("qubit sets over different qubit counts")
        return cls(n, tuple(s.mask for s in singles), tuple(pairs[kl].mask for kl in order))

    @classmethod
    def from_key(cls, n: int, r: int, key: Sequence[int]) -> OmegaTuple:
        return cls(n, tuple(key[:r]), tuple(key[r:]))

    @classmethod
    def full(cls, n: int, r: int) -> OmegaTuple:
        f = (1 << n) - 1
        return cls(n, (f,) * r, (f,) * (r * (r - 1) // 2))

    def key(self) -> tuple[int, ...]:
        return self.singles + self.pairs

    def pair(self, k: int, l: int) -> int:
        if not 1 <= k < l <= self.r:
            raise KeyError((k, l))
        # position of (k, l) in pair_order(r)
        idx = (k - 1) * self.r - (k - 1) * k // 2 + (l - k - 1)
        return self.pairs[idx]

    def single_sets(self) -> list[QubitSet]:
        return [QubitSet(self.n, s) for s in self.singles]

    def pair_sets(self) -> dict[tuple[int, int], QubitSet]:
        return {kl: QubitSet(self.n, s) for kl, s in zip(pair_order(self.r), self.pairs)}

    def index(self) -> int:
        """Position in the canonical fingerprint order."""
        idx = 0
        for s in self.key():
            idx = (idx << self.n) | s
        return idx

    def permute(self, perm: Sequence[int]) -> OmegaTuple:
        """Relabel qubit ``i`` as ``perm[i-1]`` (both 1-based)."""
        def move(mask):
            out = 0
            for i in range(self.n):
                if mask >> i & 1:
                    out |= 1 << (perm[i] - 1)
            return out
        return OmegaTuple(self.n, tuple(map(move, self.singles)), tuple(map(move, self.pairs)))

    def __str__(self) -> str:
        sep = "_" if self.r >= 10 else ""
        parts = [f"r={self.r}"]
        parts += [f"w{k}={s}" for k, s in enumerate(self.single_sets(), 1)]
        parts += [f"w{k}{sep}{l}={s}" for (k, l), s in self.pair_sets().items()]
        return "; ".join(parts)

    @classmethod
    def parse(cls, text: str, n: int) -> OmegaTuple:
        """Parse ``"r=2; w1={1,2}; w2={2,3}; w12={1,3}"`` (1-based, spaces ignored).

        Pair names may also be written ``w1_2``; this form is required once
        ``r >= 10``.  When ``r=`` is absent it is inferred from the singles.
        """
        fields: dict[str, str] = {}
        for part in text.split(";"):
            part = re.sub(r"\s+", "", part)
            if not part:
                continue
            name, eq, value = part.partition("=")
            if not eq:
                raise StabilizerParseError(f"expected name=value, got {part!r}")
            if name in fields:
                raise StabilizerParseError(f"duplicate entry {name!r}")
            fields[name] = value
        r_text = fields.pop("r", None)
        names = {}
        for name in fields:
            m = re.fullmatch(r"w(\d+)(?:[_,](\d+))?", name)
            if not m:
                raise StabilizerParseError(f"unknown entry {name!r}")
            names[name] = m
        if r_text is not None:
            try:
                r = int(r_text)
            except ValueError:
                raise StabilizerParseError(f"bad arity {r_text!r}") from None
        else:
            r = max((int(m.group(1)) for m in names.values() if m.group(2) is None
                     and (len(m.group(1)) == 1)), default=0)
        if r < 1:
            raise StabilizerParseError("arity must be at least 1")
        singles: dict[int, QubitSet] = {}
        pairs: dict[tuple[int, int], QubitSet] = {}
        for name, m in names.items():
            a, b = m.group(1), m.group(2)
            if b is None and r < 10 and len(a) == 2:
                a, b = a[0], a[1]
            qs = QubitSet.parse(fields[name], n)
            if b is None:
                singles[int(a)] = qs
            else:
                pairs[(int(a), int(b))] = qs
        if sorted(singles) != list(range(1, r + 1)):
            raise StabilizerParseError(f"need single sets w1..w{r}")
        try:
            return cls.from_sets([singles[k] for k in range(1, r + 1)], pairs)
        except ValueError as exc:
            raise StabilizerParseError(str(exc)) from None


def _check(S: Stabilizer, omega: OmegaTuple) -> None:
    if omega.n != S.n:
        raise ValueError(f"omega over {omega.n} qubits, stabilizer has {S.n}")


def _check_budget(S: Stabilizer, omega: OmegaTuple, budget: int) -> None:
    if omega.r * S.n > budget:
        raise BudgetExceeded(
            f"tuple enumeration with r*n = {omega.r * S.n} exceeds budget {budget}"
        )


def _count_tuples(S: Stabilizer, omega: OmegaTuple, exact: bool) -> int:
    # Depth-first over positions; each level draws only elements that already
    # satisfy their own support constraint, and pair constraints with earlier
    # positions are checked as soon as the element is placed.
    n, r = S.n, omega.r
    full = (1 << n) - 1

    def ok(mask: int, target: int) -> bool:
        return mask == target if exact else not mask & ~target & full

    elems = S.element_values
    levels = [[e for e in elems if ok(support_mask(e, n), w)] for w in omega.singles]
    if any(not lv for lv in levels):
        return 0
    pair_targets = [[omega.pair(l, k) for l in range(1, k)] for k in range(1, r + 1)]
    chosen: list[int] = []

    def dfs(k: int) -> int:
        targets = pair_targets[k]
        total = 0
        for e in levels[k]:
            if all(ok(support_mask(e ^ chosen[l], n), targets[l]) for l in range(k)):
                if k + 1 == r:
                    total += 1
                else:
                    chosen.append(e)
                    total += dfs(k + 1)
                    chosen.pop()
        return total

    return dfs(0)


def t_invariant(S: Stabilizer, omega: OmegaTuple, budget: int = ENUMERATION_BUDGET) -> int:
    """Number of r-tuples of stabilizer elements with exactly the supports in ``omega``."""
    _check(S, omega)
    _check_budget(S, omega, budget)
    return _count_tuples(S, omega, exact=True)


def v_count_oracle(S: Stabilizer, omega: OmegaTuple, budget: int = ENUMERATION_BUDGET) -> int:
    """Size of the constrained tuple space, counted by enumeration."""
    _check(S, omega)
    _check_budget(S, omega, budget)
    return _count_tuples(S, omega, exact=False)


def _outside_rows(n: int, mask: int) -> list[int]:
    rows = []
    for j in range(n):
        if not mask >> j & 1:
            rows += [j, n + j]
    return rows


def v_dim_invariant(S: Stabilizer, omega: OmegaTuple) -> int:
    """Dimension of the space of r-tuples whose supports lie inside ``omega``.

    The tuple is a coefficient vector in F2^(r n).  Each single constraint
    contributes the row block ``S_w`` under its own coefficient block, each
    pair constraint ``S_w`` under both of its blocks; the answer is the
    corank of the stacked matrix.
    """
    _check(S, omega)
    n, r = S.n, omega.r
    A = S.array
    blocks = [(_outside_rows(n, w), (k,)) for k, w in enumerate(omega.singles)]
    blocks += [
        (_outside_rows(n, w), (k - 1, l - 1))
        for (k, l), w in zip(pair_order(r), omega.pairs)
    ]
    total = sum(len(rows) for rows, _ in blocks)
    M = np.zeros((total, r * n), dtype=np.uint8)
    at = 0
    for rows, where in blocks:
        if rows:
            sub = A[rows]
            for k in where:
                M[at : at + len(rows), k * n : (k + 1) * n] = sub
            at += len(rows)
    return corank(GF2Matrix.from_array(M))


def downward_closure(omega: OmegaTuple) -> Iterator[OmegaTuple]:
    """Every tuple obtained by shrinking each set of ``omega`` to a subset."""
    subs = [list(_submasks(s)) for s in omega.key()]
    for key in itertools.product(*subs):
        yield OmegaTuple.from_key(omega.n, omega.r, key)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def moebius_t_from_v(v_values: Mapping[OmegaTuple, int], omega0: OmegaTuple) -> int:
    """Exact-support count from the containment counts of the downward closure.

    ``v_values`` maps tuples to counts (not dimensions).  Inversion is
    applied independently in every coordinate:
    ``T(W) = sum over W' <= W of (-1)^(|W| - |W'|) V(W')``.
    """
    size0 = sum(_popcount(s) for s in omega0.key())
    total = 0
    for sub in downward_closure(omega0):
        try:
            count = v_values[sub]
        except KeyError:
            raise KeyError(f"no containment count supplied for {sub}") from None
        sign = -1 if (size0 - sum(_popcount(s) for s in sub.key())) & 1 else 1
        total += sign * count
    return total


def moebius_v_from_t(t_values: Mapping[OmegaTuple, int], omega0: OmegaTuple) -> int:
    """Containment count as the sum of exact-support counts below ``omega0``."""
    total = 0
    for sub in downward_closure(omega0):
        try:
            total += t_values[sub]
        except KeyError:
            raise KeyError(f"no exact count supplied for {sub}") from None
    return total


def omega_star(S: Stabilizer) -> OmegaTuple:
    """Support pattern of the stored generators and of their pairwise sums."""
    cols, n = S.columns, S.n
    singles = tuple(support_mask(c, n) for c in cols)
    pairs = tuple(support_mask(cols[k - 1] ^ cols[l - 1], n) for k, l in pair_order(n))
    return OmegaTuple(n, singles, pairs)


# ---------------------------------------------------------------------------
# fingerprints


def _entry_count(n: int, r: int) -> int:
    return 1 << (n * (r + r * (r - 1) // 2))


def _check_fingerprint_budget(n: int, r: int, budget: int) -> None:
    if r < 1:
        raise ValueError("arity must be at least 1")
    count = _entry_count(n, r)
    if count > budget:
        raise BudgetExceeded(
            f"fingerprint at n={n}, r={r} has {count} entries, exceeding budget {budget}"
        )


def t_table(S: Stabilizer, r: int, budget: int = FINGERPRINT_BUDGET) -> np.ndarray:
    """Exact-support counts for every omega tuple, in canonical order.

    Each of the ``2^(r n)`` tuples of elements lands in exactly one entry.
    """
    n = S.n
    _check_fingerprint_budget(n, r, budget)
    m = r + r * (r - 1) // 2
    elems = np.array(S.element_values, dtype=np.int64)
    full = (1 << n) - 1
    grids = np.meshgrid(*([elems] * r), indexing="ij")
    grids = [g.ravel() for g in grids]

    def supp(v):
        return (v | (v >> n)) & full

    keys = [supp(g) for g in grids]
    keys += [supp(grids[k - 1] ^ grids[l - 1]) for k, l in pair_order(r)]
    index = np.zeros_like(grids[0])
    for part in keys:
        index = (index << n) | part
    return np.bincount(index, minlength=1 << (n * m)).astype(np.int64)


def _zeta(counts: np.ndarray, bits: int) -> np.ndarray:
    # sum over all sub-masks, one bit at a time
    out = counts.copy()
    for b in range(bits):
        view = out.reshape(-1, 2, 1 << b)
        view[:, 1, :] += view[:, 0, :]
    return out


@dataclass(frozen=True, eq=False)
class Fingerprint:
    """Containment dimensions for all omega tuples of one arity.

    ``values[i]`` belongs to the tuple whose canonical index is ``i``.
    """

    n: int
    r: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.int64)
        if vals.shape != (_entry_count(self.n, self.r),):
            raise ValueError("value count does not match n and r")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return self.r + self.r * (self.r - 1) // 2

    def key_at(self, index: int) -> OmegaTuple:
        digits = []
        for _ in range(self.m):
            digits.append(index & ((1 << self.n) - 1))
            index >>= self.n
        return OmegaTuple.from_key(self.n, self.r, digits[::-1])

    def __getitem__(self, omega: OmegaTuple) -> int:
        return int(self.values[omega.index()])

    def __len__(self) -> int:
        return len(self.values)

    def entries(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for key, value in zip(
            itertools.product(range(1 << self.n), repeat=self.m), self.values.tolist()
        ):
            yield key, value

    def first_difference(self, other: Fingerprint) -> OmegaTuple | None:
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("fingerprints of different shape")
        diff = np.flatnonzero(self.values != other.values)
        return self.key_at(int(diff[0])) if diff.size else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and np.array_equal(
            self.values, other.values
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.values.tobytes()))

    def to_text(self) -> str:
        lines = [f"# {FORMAT_NAME} version={FORMAT_VERSION} n={self.n} r={self.r}\n"]
        for key, value in self.entries():
            lines.append(f"{','.join(map(str, key))} {value}\n")
        return "".join(lines)

    @classmethod
    def from_text(cls, text: str) -> Fingerprint:
        lines = text.splitlines()
        header = dict(tok.split("=") for tok in lines[0].split()[2:])
        if lines[0].split()[1] != FORMAT_NAME or int(header["version"]) != FORMAT_VERSION:
            raise ValueError("not a fingerprint file of a supported version")
        n, r = int(header["n"]), int(header["r"])
        values = np.zeros(_entry_count(n, r), dtype=np.int64)
        for line in lines[1:]:
            key, value = line.split()
            omega = OmegaTuple.from_key(n, r, [int(t) for t in key.split(",")])
            values[omega.index()] = int(value)
        return cls(n, r, values)

    def to_json(self) -> str:
        obj = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "n": self.n,
            "r": self.r,
            "kind": "V-dimension",
            "entries": [[list(key), value] for key, value in self.entries()],
        }
        return json.dumps(obj, separators=(",", ":")) + "\n"


def fingerprint(
    S: Stabilizer,
    r: int,
    budget: int = FINGERPRINT_BUDGET,
    method: str = "lattice",
) -> Fingerprint:
    """Containment dimensions for every omega tuple of arity ``r``.

    ``method="lattice"`` tabulates exact-support counts with :func:`t_table`
    and sums them over sub-tuples; ``method="corank"`` calls
    :func:`v_dim_invariant` once per entry.  Both give identical output.
    """
    n = S.n
    _check_fingerprint_budget(n, r, budget)
    m = r + r * (r - 1) // 2
    if method == "lattice":
        counts = _zeta(t_table(S, r, budget), n * m)
        dims = np.array([int(c).bit_length() - 1 for c in counts.tolist()], dtype=np.int64)
    elif method == "corank":
        dims = np.fromiter(
            (
                v_dim_invariant(S, OmegaTuple.from_key(n, r, key))
                for key in itertools.product(range(1 << n), repeat=m)
            ),
            dtype=np.int64,
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fingerprint(n, r, dims)
