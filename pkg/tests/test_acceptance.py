"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line that the terminal summary prints
under "acceptance criteria".  Run directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import statistics
import sys
import time

import numpy as np
import pytest

from lcinv.gf2 import GF2Matrix, column_space_equal, corank, rank
from lcinv.invariants import (
    OmegaTuple,
    fingerprint,
    moebius_t_from_v,
    moebius_v_from_t,
    t_invariant,
    v_dim_invariant,
)
from lcinv.lcequiv import (
    LocalCliffordOp,
    apply,
    brute_force_check,
    constructive_check,
    fingerprint_check,
)
from lcinv.densecheck import dense_check, lu_trace_invariant
from lcinv.stabilizer import (
    QubitSet,
    Stabilizer,
    enumerate_elements,
    graph_state,
    random_stabilizer,
    row_pair_submatrix,
    support_mask,
)

from conftest import ACCEPTANCE_LINES, ghz3, path3, triangle3


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def random_omega(rng, n, r):
    m = r + r * (r - 1) // 2
    bits = rng.integers(0, 2, size=(m, n))
    return OmegaTuple.from_key(n, r, [sum(int(b) << i for i, b in enumerate(row)) for row in bits])


def all_omegas(n, r):
    m = r + r * (r - 1) // 2
    for key in itertools.product(range(1 << n), repeat=m):
        yield OmegaTuple.from_key(n, r, key)


def graph_corpus(n):
    edges = list(itertools.combinations(range(n), 2))
    for chosen in itertools.product((0, 1), repeat=len(edges)):
        adj = np.zeros((n, n), dtype=np.uint8)
        for on, (i, j) in zip(chosen, edges):
            adj[i, j] = adj[j, i] = on
        yield graph_state(GF2Matrix.from_array(adj))


def test_criterion_1_corank_formula():
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    mismatches = checked = 0
    for i in range(50):
        n = 2 + i % 7
        S = random_stabilizer(n, 100 + i)
        supports = [support_mask(p.value, n) for p in enumerate_elements(S)]
        masks = range(1 << n) if n <= 6 else rng.integers(0, 1 << n, size=100).tolist()
        for mask in masks:
            inside = sum(1 for s in supports if s & ~mask == 0)
            checked += 1
            if 2 ** corank(row_pair_submatrix(S, QubitSet(n, int(mask)))) != inside:
                mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 30
    record(1, "corank formula", ok,
           f"{checked} subsets over 50 states, {mismatches} mismatches, {elapsed:.2f} s (< 30 s)")
    assert ok


def test_criterion_2_lc_invariance():
    rng = np.random.default_rng(2)
    t0 = time.perf_counter()
    mismatches = checked = 0
    for i in range(200):
        n = 1 + i % 5
        S = random_stabilizer(n, 200 + i)
        QS = apply(LocalCliffordOp.random(n, rng), S)
        for _ in range(100):
            omega = random_omega(rng, n, int(rng.integers(1, 4)))
            checked += 1
            if (t_invariant(S, omega) != t_invariant(QS, omega)
                    or v_dim_invariant(S, omega) != v_dim_invariant(QS, omega)):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60
    record(2, "local Clifford invariance of T and V", ok,
           f"200 pairs x 100 tuples, {mismatches} mismatches, {elapsed:.2f} s (< 60 s)")
    assert ok


def test_criterion_3_completeness_n3():
    t0 = time.perf_counter()
    corpus = list(graph_corpus(3)) + [random_stabilizer(3, 300 + i) for i in range(20)]
    prints = [fingerprint(S, 3).values for S in corpus]
    disagreements = 0
    for a, b in itertools.product(range(len(corpus)), repeat=2):
        same_print = np.array_equal(prints[a], prints[b])
        equivalent = brute_force_check(corpus[a], corpus[b]) is not None
        disagreements += same_print != equivalent
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and elapsed < 60
    record(3, "r=3 fingerprint completeness at n=3", ok,
           f"{len(corpus) ** 2} pairs, {disagreements} disagreements, {elapsed:.2f} s (< 60 s)")
    assert ok


def test_criterion_4_constructive_vs_brute():
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    disagreements = unverified = equivalent = 0
    for i in range(100):
        n = 1 + i % 5
        S1 = random_stabilizer(n, 400 + i)
        if i % 2 == 0:
            S2 = apply(LocalCliffordOp.random(n, rng), S1)
        else:
            S2 = random_stabilizer(n, 10_000 + i)
        Qc = constructive_check(S1, S2)
        Qb = brute_force_check(S1, S2)
        disagreements += (Qc is None) != (Qb is None)
        for Q in (Qc, Qb):
            if Q is not None and not column_space_equal(apply(Q, S1).gens, S2.gens):
                unverified += 1
        equivalent += Qb is not None
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and unverified == 0 and elapsed < 120
    record(4, "constructive search agrees with brute force", ok,
           f"100 pairs ({equivalent} equivalent), {disagreements} disagreements, "
           f"{unverified} unverified, {elapsed:.2f} s (< 120 s)")
    assert ok


def test_criterion_5_moebius_relations():
    mismatches = checked = 0
    for seed in range(3):
        S = random_stabilizer(3, 500 + seed)
        for r in (1, 2):
            v = {w: 2 ** v_dim_invariant(S, w) for w in all_omegas(3, r)}
            t = {w: t_invariant(S, w) for w in all_omegas(3, r)}
            for w in all_omegas(3, r):
                checked += 1
                if moebius_t_from_v(v, w) != t[w] or moebius_v_from_t(t, w) != v[w]:
                    mismatches += 1
    ok = mismatches == 0
    record(5, "Moebius relations, n=3, r<=2", ok,
           f"{checked} tuples over 3 states, {mismatches} mismatches")
    assert ok


def test_criterion_6_partition():
    failures = checked = 0
    for seed in range(10):
        for n in range(1, 5):
            S = random_stabilizer(n, 600 + 10 * seed + n)
            for r in (1, 2):
                checked += 1
                if sum(t_invariant(S, w) for w in all_omegas(n, r)) != 2 ** (r * n):
                    failures += 1
    ok = failures == 0
    record(6, "partition property", ok,
           f"{checked} (state, n, r) cases, {failures} failures")
    assert ok


def test_criterion_7_dense_trace():
    n = 3
    omegas = [
        OmegaTuple(n, (0b011, 0b110), (0b101,)),
        OmegaTuple(n, (0b111, 0b001), (0b110,)),
        OmegaTuple(n, (0b111, 0b111), (0b011,)),
    ]
    spread = 0.0
    for omega in omegas:
        ratios = [dense_check(random_stabilizer(n, 700 + s), omega).ratio for s in range(20)]
        spread = max(spread, max(ratios) - min(ratios))
    rng = np.random.default_rng(7)
    drift = 0.0
    S = random_stabilizer(n, 799)
    for _ in range(20):
        QS = apply(LocalCliffordOp.random(n, rng), S)
        for omega in omegas:
            drift = max(drift, abs(lu_trace_invariant(S, omega) - lu_trace_invariant(QS, omega)))
    ok = spread <= 1e-9 and drift <= 1e-9
    record(7, "dense r=2 trace cross-check", ok,
           f"ratio spread {spread:.1e}, LC drift {drift:.1e} (<= 1e-9)")
    assert ok


def product_states(n):
    for choice in itertools.product("XYZ", repeat=n):
        gens = ["I" * i + p + "I" * (n - i - 1) for i, p in enumerate(choice)]
        yield Stabilizer.from_paulis(gens)


def test_criterion_8_ghz_class():
    ghz = ghz3()
    positives = all(
        brute_force_check(ghz, S) is not None
        and constructive_check(ghz, S) is not None
        and fingerprint_check(ghz, S, 3).equal
        for S in (path3(), triangle3())
    )
    products = list(product_states(3))
    negatives = 0
    for S in products:
        cmp = fingerprint_check(ghz, S, 1)
        if (brute_force_check(ghz, S) is None and constructive_check(ghz, S) is None
                and not cmp.equal and cmp.witness is not None and cmp.witness.r == 1):
            negatives += 1
    ok = positives and negatives == len(products)
    record(8, "GHZ class on three qubits", ok,
           f"path/triangle equivalent: {positives}; "
           f"{negatives}/{len(products)} product states rejected with r=1 witness")
    assert ok


def median_time(fn, repeats=10):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_criterion_9_performance():
    rng = np.random.default_rng(9)
    M = GF2Matrix.from_array(rng.integers(0, 2, size=(2000, 1000), dtype=np.uint8))
    S = random_stabilizer(100, 9)
    omega = random_omega(rng, 100, 2)
    rank(M), v_dim_invariant(S, omega)  # compile kernels before timing
    t_rank = median_time(lambda: rank(M))
    t_vdim = median_time(lambda: v_dim_invariant(S, omega))
    ok = t_rank < 0.050 and t_vdim < 0.010
    record(9, "packed kernel performance", ok,
           f"rank 2000x1000 {t_rank * 1e3:.1f} ms (< 50 ms), "
           f"v_dim n=100 r=2 {t_vdim * 1e3:.2f} ms (< 10 ms), median of 10")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
