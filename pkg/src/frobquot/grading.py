"""Finitely generated abelian grading groups with unique normal forms.

A group is presented by generator names and integer relation rows. The
relation lattice is put in row Hermite normal form once; a word is then
reduced top to bottom so that every pivot coordinate lies in ``[0, h)``.
Two words are equal in the group iff their reduced vectors agree.

For ``L(p,q,r)`` with generators ``x, y, z`` the lattice has the echelon
basis ``(p,0,-r), (0,q,-r)``, so normal forms are the familiar triples
``(i, j, n)`` with ``0 <= i < p`` and ``0 <= j < q``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


class GroupMismatchError(ValueError):
    pass


def hermite_rows(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``."""
    A = [list(map(int, r)) for r in rows if any(r)]
    out = []
    col = 0
    while A and col < ncols:
        live = [r for r in A if r[col] != 0]
        rest = [r for r in A if r[col] == 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col] != 0:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for k, prev in enumerate(out):
            q = prev[col] // piv[col]
            if q:
                out[k] = [a - q * b for a, b in zip(prev, piv)]
        out.append(piv)
        A = [r for r in rest if any(r)]
        col += 1
    return out


def smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    diag = []
    t = 0
    while t < min(m, ncols):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, ncols) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    done = False
                    break
            if not done:
                continue
            p = A[t][t]
            for j in range(t + 1, ncols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if not done:
                continue
            # divisibility of the remaining block
            p = A[t][t]
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, ncols) if A[i][j] % p),
                None,
            )
            if bad is not None:
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                done = False
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _rational_kernel(rows: list[list[int]], n: int) -> list[list[Fraction]]:
    """Basis of ``{v in Q^n : rows @ v = 0}``."""
    A = [[Fraction(a) for a in r] for r in rows]
    piv = []
    r = 0
    for c in range(n):
        i = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if i is None:
            continue
        A[r], A[i] = A[i], A[r]
        A[r] = [a / A[r][c] for a in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c] != 0:
                f = A[k][c]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
        piv.append(c)
        r += 1
    basis = []
    for f in (c for c in range(n) if c not in piv):
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(piv):
            v[pc] = -A[row][f]
        basis.append(v)
    return basis


class GradingGroup:
    """An abelian group ``Z^k / (relation lattice)`` with named generators."""

    def __init__(self, generators, relations=()):
        self.generators = tuple(str(g) for g in generators)
        k = len(self.generators)
        rel = [list(map(int, r)) for r in relations]
        for r in rel:
            if len(r) != k:
                raise ValueError(f"relation {r} has {len(r)} entries, expected {k}")
        self.relations = tuple(tuple(r) for r in rel)
        self._hnf = [tuple(r) for r in hermite_rows(rel, k)]
        self._pivots = [next(c for c, a in enumerate(r) if a) for r in self._hnf]
        self.token = (self.generators, tuple(self._hnf))
        sd = smith_diagonal(rel, k) if rel else []
        self.torsion = tuple(d for d in sd if d > 1)
        self.free_rank = k - len(sd)
        self.zero = GDegree(self, (0,) * k)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, GradingGroup) and other.token == self.token

    def __hash__(self):
        return hash(self.token)

    def __repr__(self):
        return f"GradingGroup({list(self.generators)}, {[list(r) for r in self.relations]})"

    # -- normal forms ---------------------------------------------------------
    def reduce(self, word) -> tuple:
        w = list(map(int, word))
        if len(w) != len(self.generators):
            raise ValueError(f"word {word} has wrong length for {self.generators}")
        for row, c in zip(self._hnf, self._pivots):
            q = w[c] // row[c]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return tuple(w)

    def normalize(self, word) -> "GDegree":
        return GDegree(self, self.reduce(word))

    def __call__(self, *word) -> "GDegree":
        if len(word) == 1 and not isinstance(word[0], int):
            word = tuple(word[0])
        return self.normalize(word)

    def gen(self, name: str) -> "GDegree":
        w = [0] * len(self.generators)
        w[self.generators.index(name)] = 1
        return self.normalize(w)

    def coordinate(self, name: str) -> int:
        return self.generators.index(name)

    @property
    def pivot_moduli(self) -> dict:
        return {c: row[c] for row, c in zip(self._hnf, self._pivots)}

    @property
    def is_finite(self) -> bool:
        return len(self._pivots) == len(self.generators)

    def order(self):
        if not self.is_finite:
            return None
        n = 1
        for row, c in zip(self._hnf, self._pivots):
            n *= row[c]
        return n

    def elements(self):
        """All elements of a finite group, in normal-form order."""
        if not self.is_finite:
            raise ValueError("group is infinite")
        mods = self.pivot_moduli
        ranges = [range(mods[c]) for c in range(len(self.generators))]
        return [GDegree(self, t) for t in itertools.product(*ranges)]

    def weight(self):
        """A rational functional killing the relations (``None`` if only zero does)."""
        ker = _rational_kernel([list(r) for r in self.relations], len(self.generators))
        if not ker:
            return None
        v = ker[0]
        if all(a <= 0 for a in v):
            v = [-a for a in v]
        den = 1
        for a in v:
            den = den * a.denominator // gcd(den, a.denominator)
        return [int(a * den) for a in v]

    def weight_of(self, d: "GDegree", weight=None) -> int:
        w = self.weight() if weight is None else weight
        return sum(a * b for a, b in zip(w, d.coords))

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "relations": [list(r) for r in self.relations]}

    @classmethod
    def from_json(cls, data) -> "GradingGroup":
        return cls(data["generators"], data.get("relations", []))


class GDegree:
    """An element of a grading group, stored in normal form."""

    __slots__ = ("group", "coords", "_h")

    def __init__(self, group: GradingGroup, coords: tuple):
        self.group = group
        self.coords = coords
        self._h = hash(coords)

    def _check(self, other):
        if not isinstance(other, GDegree):
            raise TypeError(f"cannot combine a degree with {type(other).__name__}")
        if other.group is not self.group and other.group.token != self.group.token:
            raise GroupMismatchError(f"degrees from different groups: {self.group} vs {other.group}")

    def __add__(self, other):
        self._check(other)
        return self.group.normalize([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return self.group.normalize([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self.group.normalize([-a for a in self.coords])

    def __mul__(self, k: int):
        return self.group.normalize([k * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GDegree):
            return NotImplemented
        self._check(other)
        return self.coords == other.coords

    def __hash__(self):
        return self._h

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def word(self) -> list:
        return list(self.coords)

    def __getitem__(self, k):
        return self.coords[k]


def make_group(generators, relations=()) -> GradingGroup:
    return GradingGroup(generators, relations)


def group_Z(name: str = "z") -> GradingGroup:
    return GradingGroup([name], [])


def group_V4() -> GradingGroup:
    return GradingGroup(["x", "y"], [[2, 0], [0, 2]])


def group_trivial() -> GradingGroup:
    return GradingGroup(["t"], [[1]])


def group_L(p: int, q: int, r: int) -> GradingGroup:
    """``L(p,q,r)`` on ``x, y, z`` with ``p x = q y = r z``."""
    return GradingGroup(["x", "y", "z"], [[p, -q, 0], [0, q, -r]])


def group_chart(cycle: str, base: str, p: int, r: int) -> GradingGroup:
    """Rank-one group on ``[cycle, base]`` with ``p*cycle = r*base``.

    Normal forms are ``(i, n)``: the cycle coset ``0 <= i < p`` and the base
    coordinate ``n``.
    """
    return GradingGroup([cycle, base], [[p, -r]])
