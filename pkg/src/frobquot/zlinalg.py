"""Homogeneous matrices over ``K[z]`` (``deg z = 1``) in compact scalar form.

A homogeneous matrix between free ``K[z]``-modules with integer generator
degrees has, at entry ``(i, a)``, either zero or ``c * z^(src[a] - tgt[i])``.
It is therefore determined by the scalar matrix of the ``c``'s, and
composition is ordinary scalar multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import GradedBase, HomogeneityError, HomogMatrix


class ZMat:
    __slots__ = ("K", "M", "tgt", "src")

    def __init__(self, K, M, tgt, src, check=True):
        self.K = K
        self.M = M
        self.tgt = [int(x) for x in tgt]
        self.src = [int(x) for x in src]
        if M.shape != (len(self.tgt), len(self.src)):
            raise ValueError(f"shape {M.shape} does not match degrees {len(self.tgt)}x{len(self.src)}")
        if check:
            for i, a in zip(*np.nonzero(M != K.zero)):
                if self.src[a] < self.tgt[i]:
                    raise HomogeneityError(f"entry ({i},{a}) would need exponent {self.src[a] - self.tgt[i]}")

    @classmethod
    def identity(cls, K, degs):
        return cls(K, K.eye(len(degs)), degs, degs)

    @classmethod
    def zero(cls, K, tgt, src):
        return cls(K, K.zeros(len(tgt), len(src)), tgt, src)

    @classmethod
    def from_homog(cls, m: HomogMatrix) -> "ZMat":
        K = m.base.field
        M = K.zeros(*m.shape)
        for C in m.terms.values():
            M = K.reduce(M + C)
        return cls(K, M, [d.coords[0] for d in m.tgt], [d.coords[0] for d in m.src])

    def to_homog(self, base: GradedBase) -> HomogMatrix:
        K = self.K
        G = base.group
        terms: dict = {}
        for i, a in zip(*np.nonzero(self.M != K.zero)):
            e = self.src[a] - self.tgt[i]
            if (e,) not in terms:
                terms[(e,)] = K.zeros(*self.M.shape)
            terms[(e,)][i, a] = self.M[i, a]
        return HomogMatrix(base, [G(d) for d in self.tgt], [G(d) for d in self.src], terms)

    @property
    def shape(self):
        return self.M.shape

    def exponent(self, i, a):
        return self.src[a] - self.tgt[i]

    def __matmul__(self, other: "ZMat") -> "ZMat":
        if self.src != other.tgt:
            raise HomogeneityError("degree lists do not match in composition")
        return ZMat(self.K, self.K.matmul(self.M, other.M), self.tgt, other.src, check=False)

    def __eq__(self, other):
        return (
            isinstance(other, ZMat)
            and self.tgt == other.tgt
            and self.src == other.src
            and self.K.equal(self.M, other.M)
        )

    def __neg__(self):
        return ZMat(self.K, self.K.reduce(-self.M), self.tgt, self.src, check=False)

    def slice(self, d: int):
        """Scalar matrix between degree-``d`` slices plus the kept row/column indices."""
        rows = [i for i, h in enumerate(self.tgt) if h <= d]
        cols = [a for a, g in enumerate(self.src) if g <= d]
        if rows and cols:
            return self.M[np.ix_(rows, cols)], rows, cols
        return self.K.zeros(len(rows), len(cols)), rows, cols

    def __repr__(self):
        return f"ZMat(tgt={self.tgt}, src={self.src}, M={self.K.to_int_list(self.M)})"


@dataclass
class GradedDiag:
    """``U @ M @ V = D`` with ``D`` diagonal of monomials ``z^e``."""

    exponents: list
    U: ZMat
    V: ZMat
    Uinv: ZMat
    Vinv: ZMat
    D: ZMat

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def pivot_rows(self):
        return list(range(self.rank))

    def free_rows(self):
        return list(range(self.rank, self.D.shape[0]))


def graded_diag(Z: ZMat) -> GradedDiag:
    """Homogeneous Smith-style reduction over ``K[z]``.

    The pivot is always a nonzero entry of least exponent; since every
    homogeneous element of ``K[z]`` is a unit times a power of ``z``, it
    divides everything in its row and column.
    """
    K = Z.K
    A = Z.M.copy()
    m, n = A.shape
    h = list(Z.tgt)
    g = list(Z.src)
    U = K.eye(m)
    V = K.eye(n)
    rowperm = list(range(m))
    colperm = list(range(n))
    exps = []
    k = 0
    while k < min(m, n):
        best = None
        sub = A[k:, k:]
        for i, a in zip(*np.nonzero(sub != K.zero)):
            e = g[k + a] - h[k + i]
            if best is None or e < best[0]:
                best = (e, k + i, k + a)
        if best is None:
            break
        e, i, a = best
        if i != k:
            A[[k, i]] = A[[i, k]]
            U[[k, i]] = U[[i, k]]
            h[k], h[i] = h[i], h[k]
            rowperm[k], rowperm[i] = rowperm[i], rowperm[k]
        if a != k:
            A[:, [k, a]] = A[:, [a, k]]
            V[:, [k, a]] = V[:, [a, k]]
            g[k], g[a] = g[a], g[k]
            colperm[k], colperm[a] = colperm[a], colperm[k]
        inv = K.inv(A[k, k])
        A[k] = K.reduce(A[k] * inv)
        U[k] = K.reduce(U[k] * inv)
        for i2 in range(m):
            if i2 != k and A[i2, k] != K.zero:
                f = A[i2, k]
                A[i2] = K.reduce(A[i2] - f * A[k])
                U[i2] = K.reduce(U[i2] - f * U[k])
        for a2 in range(k + 1, n):
            if A[k, a2] != K.zero:
                f = A[k, a2]
                A[:, a2] = K.reduce(A[:, a2] - f * A[:, k])
                V[:, a2] = K.reduce(V[:, a2] - f * V[:, k])
        exps.append(e)
        k += 1
    Uz = ZMat(K, U, h, Z.tgt)
    Vz = ZMat(K, V, Z.src, g)
    Dz = ZMat(K, A, h, g)
    Uinv = ZMat(K, K.inverse(U), Z.tgt, h)
    Vinv = ZMat(K, K.inverse(V), g, Z.src)
    res = GradedDiag(exps, Uz, Vz, Uinv, Vinv, Dz)
    if not (Uz @ Z @ Vz) == Dz:
        raise AssertionError("graded diagonalization certificate failed")
    return res


def column_rank(Z: ZMat) -> int:
    """Rank over the fraction field ``K(z)`` (equal to the scalar rank)."""
    return Z.K.rank(Z.M)
