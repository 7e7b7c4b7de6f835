import itertools
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcinv.errors import BudgetExceeded
from lcinv.gf2 import GF2Matrix, column_space_equal
from lcinv.invariants import omega_star, t_invariant
from lcinv.lcequiv import (
    LocalCliffordOp,
    _act,
    apply,
    brute_force_check,
    build_factor_from_pairs,
    constructive_check,
    fingerprint_check,
    gl2_elements,
    iter_equivalences,
)
from lcinv.stabilizer import (
    Stabilizer,
    StabilizerParseError,
    enumerate_elements,
    graph_state,
    random_stabilizer,
)

from conftest import ghz3, path3, product3, triangle3


def element_set(S):
    return frozenset(p.value for p in enumerate_elements(S))


def naive_equivalences(S1, S2):
    """All operations whose image has exactly the element set of S2."""
    target = element_set(S2)
    return [
        Q for idx in itertools.product(range(6), repeat=S1.n)
        if element_set(apply(Q := LocalCliffordOp.from_indices(idx), S1)) == target
    ]


def graphs(n):
    edges = list(itertools.combinations(range(n), 2))
    for chosen in itertools.product((0, 1), repeat=len(edges)):
        adj = np.zeros((n, n), dtype=np.uint8)
        for on, (i, j) in zip(chosen, edges):
            adj[i, j] = adj[j, i] = on
        yield graph_state(GF2Matrix.from_array(adj))


def random_pair(rng, n, equivalent):
    S1 = random_stabilizer(n, int(rng.integers(2**32)))
    if equivalent:
        return S1, apply(LocalCliffordOp.random(n, rng), S1)
    return S1, random_stabilizer(n, int(rng.integers(2**32)))


# ---------------------------------------------------------------------------
# operations


def test_gl2_elements():
    els = gl2_elements()
    assert len(els) == 6 and els[0] == ((1, 0), (0, 1))
    dets = [(a * d + b * c) % 2 for (a, b), (c, d) in els]
    assert dets == [1] * 6
    assert len(set(els)) == 6
    keys = [(a, b, c, d) for (a, b), (c, d) in els[1:]]
    assert keys == sorted(keys)


def test_apply_hadamard_swaps_blocks():
    H = ((0, 1), (1, 0))
    Q = LocalCliffordOp((H,) * 3)
    S = Stabilizer.from_paulis(["ZII", "IZI", "IIZ"])
    assert apply(Q, S) == Stabilizer.from_paulis(["XII", "IXI", "IIX"])
    with pytest.raises(ValueError):
        apply(LocalCliffordOp.identity(2), S)


def test_rejects_singular_factor():
    with pytest.raises(ValueError):
        LocalCliffordOp((((1, 1), (1, 1)),))


def test_block_matrix_acts_like_apply():
    rng = np.random.default_rng(0)
    for n in (1, 3, 5):
        S = random_stabilizer(n, n)
        Q = LocalCliffordOp.random(n, rng)
        assert Q.as_matrix() @ S.gens == apply(Q, S).gens


def test_text_round_trip():
    Q = LocalCliffordOp.from_indices([0, 3, 5])
    assert Q.to_text() == "1: 1 0 0 1\n2: 1 0 1 1\n3: 1 1 1 0\n"
    assert LocalCliffordOp.from_text(Q.to_text()) == Q
    for bad in ["1: 1 0 0\n", "2: 1 0 0 1\n", "x: 1 0 0 1\n"]:
        with pytest.raises(StabilizerParseError):
            LocalCliffordOp.from_text(bad)


@given(st.integers(1, 5), st.integers(0, 2**32 - 1), st.data())
def test_group_action(n, seed, data):
    idx = st.lists(st.integers(0, 5), min_size=n, max_size=n)
    Q1 = LocalCliffordOp.from_indices(data.draw(idx))
    Q2 = LocalCliffordOp.from_indices(data.draw(idx))
    S = random_stabilizer(n, seed)
    assert apply(Q2, apply(Q1, S)) == apply(Q2.compose(Q1), S)
    assert apply(Q1.inverse(), apply(Q1, S)) == S
    assert Q1.compose(Q1.inverse()) == LocalCliffordOp.identity(n)


@settings(max_examples=50)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_invariance_witness(n, seed, qseed):
    S = random_stabilizer(n, seed)
    QS = apply(LocalCliffordOp.random(n, np.random.default_rng(qseed)), S)
    star = omega_star(S)
    assert t_invariant(QS, star) == t_invariant(S, star) >= 1


# ---------------------------------------------------------------------------
# brute force


def test_brute_force_examples():
    Q = brute_force_check(ghz3(), triangle3())
    assert Q is not None
    assert column_space_equal(apply(Q, ghz3()).gens, triangle3().gens)
    assert brute_force_check(ghz3(), product3()) is None
    S = random_stabilizer(4, 3)
    assert brute_force_check(S, S) == LocalCliffordOp.identity(4)


def test_brute_force_limits():
    S = random_stabilizer(9, 0)
    with pytest.raises(BudgetExceeded, match="limit 8"):
        brute_force_check(S, S)
    assert brute_force_check(random_stabilizer(3, 0), random_stabilizer(3, 0), limit=3)
    with pytest.raises(ValueError):
        brute_force_check(ghz3(), random_stabilizer(2, 0))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_equivalences_match_naive_enumeration(n):
    rng = np.random.default_rng(n)
    for trial in range(4):
        S1, S2 = random_pair(rng, n, trial % 2 == 0)
        assert list(iter_equivalences(S1, S2)) == naive_equivalences(S1, S2)


def test_brute_force_returns_first_in_odometer_order():
    rng = np.random.default_rng(9)
    for _ in range(5):
        S1, S2 = random_pair(rng, 3, True)
        assert brute_force_check(S1, S2) == naive_equivalences(S1, S2)[0]


def test_brute_force_at_limit_is_fast():
    S1 = random_stabilizer(8, 5)
    S2 = apply(LocalCliffordOp.random(8, np.random.default_rng(5)), S1)
    t0 = time.perf_counter()
    Q = brute_force_check(S1, S2)
    assert Q is not None and time.perf_counter() - t0 < 10


# ---------------------------------------------------------------------------
# constructive


def test_build_factor_examples():
    assert build_factor_from_pairs([((1, 0), (0, 0))]) is None
    assert build_factor_from_pairs([((1, 0), (0, 1)), ((0, 1), (1, 0))]) == ((0, 1), (1, 0))
    assert build_factor_from_pairs([]) == gl2_elements()[0]
    # underdetermined: first match in canonical order
    assert build_factor_from_pairs([((1, 0), (1, 0))]) == gl2_elements()[0]


def test_build_factor_exhaustive():
    vecs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    for q in gl2_elements():
        pairs = [(v, _act(q, v)) for v in vecs]
        assert build_factor_from_pairs(pairs) == q


def test_constructive_examples():
    Q = constructive_check(ghz3(), path3())
    assert Q is not None
    assert column_space_equal(apply(Q, ghz3()).gens, path3().gens)
    assert constructive_check(ghz3(), product3()) is None
    with pytest.raises(BudgetExceeded, match="limit 6"):
        constructive_check(random_stabilizer(7, 0), random_stabilizer(7, 0))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_soundness(n, seed, qseed):
    S1 = random_stabilizer(n, seed)
    S2 = apply(LocalCliffordOp.random(n, np.random.default_rng(qseed)), S1)
    for Q in (brute_force_check(S1, S2), constructive_check(S1, S2)):
        assert Q is not None
        assert element_set(apply(Q, S1)) == element_set(S2)


def test_deciders_agree_on_random_pairs():
    rng = np.random.default_rng(2024)
    for i in range(200):
        n = 1 + i % 4
        S1, S2 = random_pair(rng, n, i % 2 == 0)
        b = brute_force_check(S1, S2) is not None
        c = constructive_check(S1, S2) is not None
        assert b == c
        if n <= 3:
            assert fingerprint_check(S1, S2, n).equal == b


def test_graph_corpus_classes():
    # three classes on three qubits: product, edge plus isolated vertex, connected
    for n in (2, 3):
        states = list(graphs(n))
        for a, b in itertools.product(states, repeat=2):
            verdict = brute_force_check(a, b) is not None
            assert verdict == (constructive_check(a, b) is not None)
            assert verdict == fingerprint_check(a, b, n).equal
            assert verdict == bool(naive_equivalences(a, b))
    states = list(graphs(3))
    classes = {frozenset(j for j, b in enumerate(states) if brute_force_check(a, b))
               for a in states}
    assert sorted(len(c) for c in classes) == [1, 1, 1, 1, 4]


# ---------------------------------------------------------------------------
# fingerprint decider


def test_fingerprint_check_examples():
    res = fingerprint_check(ghz3(), product3(), 1)
    assert not res and res.label == "DISTINCT" and res.conclusive
    assert str(res.witness) == "r=1; w1={1}"
    res = fingerprint_check(ghz3(), triangle3(), 2)
    assert res and res.label == "EQUAL-AT-2" and not res.conclusive
    assert fingerprint_check(ghz3(), triangle3(), 3).conclusive
    with pytest.raises(ValueError):
        fingerprint_check(ghz3(), random_stabilizer(2, 0), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_fingerprint_equal_for_equivalent_states(n, seed, qseed):
    S1 = random_stabilizer(n, seed)
    S2 = apply(LocalCliffordOp.random(n, np.random.default_rng(qseed)), S1)
    assert fingerprint_check(S1, S2, min(n, 2)).equal
