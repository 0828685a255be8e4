# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan elimination over prime fields."""

import numpy as np

ctypedef long long i64


cdef inline i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, new_t = 1, r = p, new_r = a % p, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rref_modp(i64[:, ::1] A, i64 p):
    """Reduce ``A`` in place to reduced row echelon form mod ``p``.

    Entries must already lie in ``[0, p)``. Returns the pivot columns.
    """
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, tmp
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        inv = _inv_mod(A[r, c], p)
        if inv != 1:
            for j in range(c, n):
                A[r, j] = (A[r, j] * inv) % p
        for i in range(m):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            f = p - f
            for j in range(c, n):
                if A[r, j] != 0:
                    A[i, j] = (A[i, j] + f * A[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots


def matmul_modp(i64[:, ::1] A, i64[:, ::1] B, i64 p):
    """Return ``A @ B mod p`` for entries in ``[0, p)``."""
    cdef Py_ssize_t m = A.shape[0], k = A.shape[1], n = B.shape[1]
    cdef Py_ssize_t i, j, l
    cdef i64 a
    out = np.zeros((m, n), dtype=np.int64)
    cdef i64[:, ::1] C = out
    for i in range(m):
        for l in range(k):
            a = A[i, l]
            if a == 0:
                continue
            for j in range(n):
                C[i, j] += a * B[l, j]
        for j in range(n):
            C[i, j] %= p
    return out
