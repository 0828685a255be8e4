"""Exact scalar fields and dense linear algebra over them.

Two fields are provided: prime fields ``F_l`` (elements are ints in
``[0, l)``, matrices are ``int64`` arrays) and the rationals (elements are
``Fraction``, matrices are object arrays). Every routine is exact.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import kernels


class FieldError(ValueError):
    pass


class _Field:
    """Shared matrix algorithms; subclasses supply element arithmetic and rref."""

    dtype: object

    # -- matrices ---------------------------------------------------------
    def zeros(self, m: int, n: int) -> np.ndarray:
        if self.dtype is object:
            out = np.empty((m, n), dtype=object)
            out.fill(self.zero)
            return out
        return np.zeros((m, n), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def array(self, rows, shape=None) -> np.ndarray:
        rows = [list(r) for r in rows]
        if shape is None:
            m = len(rows)
            n = len(rows[0]) if m else 0
        else:
            m, n = shape
        out = self.zeros(m, n)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise FieldError("ragged matrix")
            for j, x in enumerate(row):
                out[i, j] = self(x)
        return out

    def vector(self, xs) -> np.ndarray:
        xs = list(xs)
        return self.array([xs], shape=(1, len(xs)))[0]

    def is_zero_matrix(self, A: np.ndarray) -> bool:
        if A.size == 0:
            return True
        return not np.any(A != self.zero)

    def equal(self, A: np.ndarray, B: np.ndarray) -> bool:
        return A.shape == B.shape and (A.size == 0 or bool(np.all(A == B)))

    def rank(self, A: np.ndarray) -> int:
        if A.size == 0:
            return 0
        return len(self.rref(A)[1])

    def nullspace(self, A: np.ndarray) -> np.ndarray:
        """Columns spanning ``{v : A v = 0}``."""
        m, n = A.shape
        if m == 0 or n == 0:
            return self.eye(n)
        R, piv = self.rref(A)
        free = [c for c in range(n) if c not in set(piv)]
        N = self.zeros(n, len(free))
        for k, f in enumerate(free):
            N[f, k] = self.one
            for row, pc in enumerate(piv):
                N[pc, k] = self.neg(R[row, f])
        return N

    def column_basis(self, A: np.ndarray) -> np.ndarray:
        """A basis (as columns) of the column space of ``A``."""
        m, n = A.shape
        if n == 0 or m == 0:
            return self.zeros(m, 0)
        R, piv = self.rref(A.T.copy())
        return R[: len(piv)].T.copy()

    def solve(self, A: np.ndarray, B: np.ndarray):
        """One solution ``X`` of ``A X = B``, or ``None`` when inconsistent."""
        m, n = A.shape
        k = B.shape[1]
        if m == 0:
            return self.zeros(n, k)
        aug = np.concatenate([A, B], axis=1)
        R, piv = self.rref(aug)
        if piv and piv[-1] >= n:
            return None
        X = self.zeros(n, k)
        for row, pc in enumerate(piv):
            X[pc, :] = R[row, n:]
        return X

    def inverse(self, A: np.ndarray) -> np.ndarray:
        n = A.shape[0]
        if A.shape != (n, n):
            raise FieldError("inverse of a non-square matrix")
        if n == 0:
            return self.zeros(0, 0)
        R, piv = self.rref(np.concatenate([A, self.eye(n)], axis=1))
        if len(piv) < n or piv[n - 1] != n - 1:
            raise FieldError("matrix is singular")
        return R[:, n:].copy()

    def is_invertible(self, A: np.ndarray) -> bool:
        n = A.shape[0]
        return A.shape == (n, n) and self.rank(A) == n

    def quotient(self, dim: int, S: np.ndarray):
        """Projection onto ``K^dim / span(S)``.

        Returns ``(Q, L)`` with ``Q`` of shape ``(q, dim)`` killing the columns
        of ``S`` and ``L`` of shape ``(dim, q)`` a section, ``Q @ L = I``.
        """
        if S.shape[1] == 0:
            return self.eye(dim), self.eye(dim)
        R, piv = self.rref(S.T.copy())
        pivset = set(piv)
        rest = [j for j in range(dim) if j not in pivset]
        Q = self.zeros(len(rest), dim)
        L = self.zeros(dim, len(rest))
        pos = {j: k for k, j in enumerate(rest)}
        for j in rest:
            Q[pos[j], j] = self.one
            L[j, pos[j]] = self.one
        for row, pc in enumerate(piv):
            for j in rest:
                Q[pos[j], pc] = self.neg(R[row, j])
        return Q, L

    def power(self, A: np.ndarray, k: int) -> np.ndarray:
        result = self.eye(A.shape[0])
        base = A
        while k:
            if k & 1:
                result = self.matmul(result, base)
            k >>= 1
            if k:
                base = self.matmul(base, base)
        return result

    def random_matrix(self, rng, m: int, n: int) -> np.ndarray:
        out = self.zeros(m, n)
        for i in range(m):
            for j in range(n):
                out[i, j] = self.random_element(rng)
        return out

    def random_invertible(self, rng, n: int) -> np.ndarray:
        while True:
            A = self.random_matrix(rng, n, n)
            if self.is_invertible(A):
                return A

    def kron(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.size == 0 or B.size == 0:
            return self.zeros(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])
        return self.reduce(np.kron(A, B))

    def block(self, rows) -> np.ndarray:
        """Assemble a block matrix from a grid of arrays."""
        return self.reduce(np.block(rows))

    def to_int_list(self, A: np.ndarray):
        return [[self.to_json(x) for x in row] for row in A]


class PrimeField(_Field):
    """The prime field ``F_p`` for a prime ``p < 2**16``."""

    dtype = np.int64

    def __init__(self, p: int = 5):
        if p < 2 or p >= 1 << 16 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not a supported prime")
        self.p = p
        self.zero = 0
        self.one = 1
        self.name = f"f{p}"

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator % self.p * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(a), -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random_element(self, rng) -> int:
        return int(rng.integers(self.p))

    def random_nonzero(self, rng) -> int:
        return int(rng.integers(1, self.p))

    def elements(self):
        return range(self.p)

    def to_json(self, a):
        a = int(a) % self.p
        return a - self.p if a > self.p // 2 else a

    def format(self, a) -> str:
        return str(self.to_json(a))

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.shape[1] != B.shape[0]:
            raise FieldError(f"shape mismatch {A.shape} @ {B.shape}")
        if A.size == 0 or B.size == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        return (A @ B) % self.p

    def rref(self, A: np.ndarray):
        R = np.ascontiguousarray(A, dtype=np.int64) % self.p
        piv = kernels.rref_modp(R, self.p)
        return R, list(piv)

    def reduce(self, A: np.ndarray) -> np.ndarray:
        return np.asarray(A, dtype=np.int64) % self.p


class RationalField(_Field):
    """The rationals, with ``Fraction`` entries in object arrays."""

    dtype = object

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.name = "rational"

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def random_element(self, rng) -> Fraction:
        return Fraction(int(rng.integers(-3, 4)))

    def random_nonzero(self, rng) -> Fraction:
        while True:
            x = self.random_element(rng)
            if x:
                return x

    def elements(self):
        return (Fraction(k) for k in range(-3, 4))

    def to_json(self, a):
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def format(self, a) -> str:
        return str(self.to_json(a))

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.shape[1] != B.shape[0]:
            raise FieldError(f"shape mismatch {A.shape} @ {B.shape}")
        out = self.zeros(A.shape[0], B.shape[1])
        if A.size and B.size:
            out[:, :] = A.dot(B)
        return out

    def rref(self, A: np.ndarray):
        R = np.array(A, dtype=object, copy=True)
        m, n = R.shape
        r = 0
        piv = []
        for c in range(n):
            if r == m:
                break
            i = next((i for i in range(r, m) if R[i, c] != 0), None)
            if i is None:
                continue
            if i != r:
                R[[r, i]] = R[[i, r]]
            R[r] = R[r] / R[r, c]
            for i in range(m):
                if i != r and R[i, c] != 0:
                    R[i] = R[i] - R[i, c] * R[r]
            piv.append(c)
            r += 1
        return R, piv

    def reduce(self, A: np.ndarray) -> np.ndarray:
        return np.array(A, dtype=object)


def make_field(spec: str | int | None = None) -> _Field:
    """Field from a CLI-style name: ``f5``, ``f101``, ``rational``, or a prime."""
    if spec is None:
        return PrimeField(5)
    if isinstance(spec, int):
        return PrimeField(spec)
    s = str(spec).strip().lower()
    if s in ("q", "rational", "rationals"):
        return RationalField()
    if s.startswith("f"):
        s = s[1:]
    try:
        return PrimeField(int(s))
    except ValueError as exc:
        raise FieldError(f"unknown field {spec!r}") from exc


DEFAULT_FIELD = PrimeField(5)
