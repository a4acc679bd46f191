"""Dense Gaussian elimination over F_p for word-size primes (p < 2**31)."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _rank_inplace(A, p):
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(c, cols):
                tmp = A[rank, j]
                A[rank, j] = A[piv, j]
                A[piv, j] = tmp
        # Fermat inverse
        inv = 1
        base = A[rank, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(c, cols):
            A[rank, j] = A[rank, j] * inv % p
        for i in range(rank + 1, rows):
            f = A[i, c]
            if f != 0:
                for j in range(c, cols):
                    A[i, j] = (A[i, j] - f * A[rank, j]) % p
        rank += 1
    return rank


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix modulo the prime ``p``."""
    if p >= 2**31:
        raise ValueError("prime must be below 2**31 so products fit in int64")
    A = np.ascontiguousarray(np.asarray(M, dtype=np.int64) % p)
    if A.size == 0:
        return 0
    # fewer rows than columns keeps the pivot search short
    if A.shape[0] > A.shape[1]:
        A = np.ascontiguousarray(A.T)
    return int(_rank_inplace(A, np.int64(p)))
