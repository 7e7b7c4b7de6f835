"""Word-level elimination kernels for packed GF(2) matrices.

Rows are stored as ``uint64`` words, bit ``j`` of a row living in word
``j >> 6`` at position ``j & 63``.  All kernels mutate their first argument.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def echelon_inplace(words, cols, reduced):
    """Gaussian elimination; returns the pivot column of each pivot row.

    With ``reduced`` the pivot columns are cleared above the pivot as well,
    leaving reduced row echelon form.
    """
    m, nw = words.shape
    pivots = np.empty(min(m, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == m:
            break
        w = c >> 6
        mask = np.uint64(1) << np.uint64(c & 63)
        p = -1
        for i in range(r, m):
            if words[i, w] & mask:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for k in range(w, nw):
                t = words[r, k]
                words[r, k] = words[p, k]
                words[p, k] = t
        start = 0 if reduced else r + 1
        for i in range(start, m):
            if i != r and words[i, w] & mask:
                for k in range(w, nw):
                    words[i, k] ^= words[r, k]
        pivots[r] = c
        r += 1
    return pivots[:r]


@njit(cache=True)
def matmul_into(out, a, a_cols, b):
    """``out ^= a @ b`` over F2, ``out`` and ``b`` sharing a word width."""
    m = a.shape[0]
    nw = b.shape[1]
    for i in range(m):
        for j in range(a_cols):
            if (a[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1):
                for k in range(nw):
                    out[i, k] ^= b[j, k]
