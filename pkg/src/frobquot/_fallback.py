"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

import numpy as np


def rref_modp(A: np.ndarray, p: int) -> list[int]:
    """Reduce ``A`` in place to reduced row echelon form mod ``p``."""
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def matmul_modp(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return (A @ B) % p
