"""Graded polynomial bases, homogeneous polynomials and homogeneous matrices.

A homogeneous matrix is stored as a sparse sum ``sum_m m * C_m`` over
monomials ``m`` with scalar coefficient matrices ``C_m``. Products are then
sums of scalar products, and hom-space equations can be written directly in
terms of the ``C_m``.

Convention: the image of source generator ``a`` is
``sum_i entry[i][a] * (target generator i)``, so
``deg(entry[i][a]) = deg(src a) - deg(tgt i)``.
"""

from __future__ import annotations

import re
from functools import lru_cache

import numpy as np

from .field import DEFAULT_FIELD
from .grading import GDegree, GradingGroup


class HomogeneityError(ValueError):
    pass


class PolySyntaxError(ValueError):
    pass


class WindowError(ValueError):
    pass


class GradedBase:
    """A polynomial ring ``K[vars]`` graded by a group.

    ``relation=(cycle, p, base, r, s)`` makes the ring the hypersurface
    ``K[...]/(cycle^p + s*base^r)``; monomials are then kept with cycle
    exponent below ``p``.
    """

    def __init__(self, group: GradingGroup, names, degrees, field=None, relation=None):
        self.group = group
        self.names = tuple(names)
        self.degrees = tuple(d if isinstance(d, GDegree) else group(d) for d in degrees)
        if len(self.names) != len(self.degrees):
            raise ValueError("one degree per variable")
        self.field = field or DEFAULT_FIELD
        self.relation = None
        if relation is not None:
            cyc, p, bas, r, s = relation
            self.relation = (self.names.index(cyc), int(p), self.names.index(bas), int(r), int(s))
        self.nvars = len(self.names)
        w = group.weight()
        self._weight = w
        if w is not None:
            self._vw = [group.weight_of(d, w) for d in self.degrees]
            if any(v <= 0 for v in self._vw):
                self._vw = [-v for v in self._vw]
                self._weight = [-a for a in w]
        else:
            self._vw = None
        self._mono_cache: dict = {}

    def __repr__(self):
        rel = ""
        if self.relation:
            c, p, b, r, s = self.relation
            rel = f"/({self.names[c]}^{p}{'+' if s > 0 else '-'}{self.names[b]}^{r})"
        return f"K[{','.join(self.names)}]{rel}"

    def key(self):
        return (self.group.token, self.names, self.degrees, self.field, self.relation)

    def __eq__(self, other):
        return isinstance(other, GradedBase) and other.key() == self.key()

    def __hash__(self):
        return hash((self.names, self.relation))

    def with_field(self, field) -> "GradedBase":
        rel = None
        if self.relation:
            c, p, b, r, s = self.relation
            rel = (self.names[c], p, self.names[b], r, s)
        return GradedBase(self.group, self.names, self.degrees, field, rel)

    def without_relation(self) -> "GradedBase":
        return GradedBase(self.group, self.names, self.degrees, self.field)

    def var(self, name: str) -> int:
        return self.names.index(name)

    def mono_degree(self, e) -> GDegree:
        w = [0] * len(self.group.generators)
        for k, ek in enumerate(e):
            if ek:
                for c, a in enumerate(self.degrees[k].coords):
                    w[c] += ek * a
        return self.group.normalize(w)

    def unit(self, k: int) -> tuple:
        e = [0] * self.nvars
        e[k] = 1
        return tuple(e)

    def is_normal(self, e) -> bool:
        return self.relation is None or e[self.relation[0]] < self.relation[1]

    def normal_mono(self, e):
        """Rewrite a monomial under the hypersurface relation; returns (mono, sign)."""
        if self.relation is None:
            return tuple(e), 1
        c, p, b, r, s = self.relation
        q, rem = divmod(e[c], p)
        if q == 0:
            return tuple(e), 1
        e = list(e)
        e[c] = rem
        e[b] += q * r
        return tuple(e), (-s) ** q

    def monomials(self, d: GDegree) -> list:
        """Normal monomials of degree ``d`` (finite for positively weighted bases)."""
        hit = self._mono_cache.get(d)
        if hit is not None:
            return hit
        if self._vw is None:
            raise WindowError("monomial enumeration needs a positive weight on the variables")
        W = self.group.weight_of(d, self._weight)
        out = []
        if W >= 0:
            vw = self._vw
            n = self.nvars

            def rec(k, rem, acc):
                if k == n - 1:
                    if rem % vw[k] == 0:
                        out.append(tuple(acc + [rem // vw[k]]))
                    return
                for ek in range(rem // vw[k] + 1):
                    rec(k + 1, rem - ek * vw[k], acc + [ek])

            rec(0, W, [])
            out = [e for e in out if self.is_normal(e) and self.mono_degree(e) == d]
            out.sort()
        self._mono_cache[d] = out
        return out

    def format_mono(self, e) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)


def _tadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


class HomPoly:
    """A homogeneous polynomial: ``{exponent tuple: coefficient}`` plus degree."""

    __slots__ = ("base", "terms", "degree")

    def __init__(self, base: GradedBase, terms: dict, degree: GDegree | None = None):
        K = base.field
        clean = {}
        for e, c in terms.items():
            e, sgn = base.normal_mono(e)
            c = K(c) if sgn == 1 else K.neg(K(c))
            clean[e] = K.add(clean.get(e, K.zero), c)
        clean = {e: c for e, c in clean.items() if not K.is_zero(c)}
        self.base = base
        self.terms = clean
        degs = {base.mono_degree(e) for e in clean}
        if len(degs) > 1:
            a, b = sorted(degs)[:2]
            raise HomogeneityError(f"inhomogeneous polynomial: terms of degrees {a} and {b}")
        if degs:
            self.degree = degs.pop()
            if degree is not None and degree != self.degree:
                raise HomogeneityError(f"polynomial has degree {self.degree}, expected {degree}")
        else:
            self.degree = None  # zero: any degree

    @classmethod
    def monomial(cls, base, e, c=1):
        return cls(base, {tuple(e): c})

    @classmethod
    def zero(cls, base):
        return cls(base, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        t = dict(self.terms)
        K = self.base.field
        for e, c in other.terms.items():
            t[e] = K.add(t.get(e, K.zero), c)
        return HomPoly(self.base, t)

    def __neg__(self):
        K = self.base.field
        return HomPoly(self.base, {e: K.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        K = self.base.field
        if not isinstance(other, HomPoly):
            c0 = K(other)
            return HomPoly(self.base, {e: K.mul(c, c0) for e, c in self.terms.items()})
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _tadd(e1, e2)
                t[e] = K.add(t.get(e, K.zero), K.mul(c1, c2))
        return HomPoly(self.base, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = HomPoly(self.base, {(0,) * self.base.nvars: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        K = self.base.field
        out = []
        for e in sorted(self.terms, reverse=True):
            c = K.to_json(self.terms[e])
            neg = isinstance(c, int) and c < 0 or isinstance(c, str) and c.startswith("-")
            mag = str(c)[1:] if neg else str(c)
            mono = self.base.format_mono(e)
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            out.append(("-" if neg else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sgn, body in out[1:]:
            s += f" {sgn} {body}"
        return s

    __repr__ = __str__


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\^)|(\*)|([+-]))")


def parse_poly(base: GradedBase, text: str) -> HomPoly:
    """Parse ``coeff*var^k*... +/- ...`` into a homogeneous polynomial."""
    K = base.field
    s = text.strip()
    if not s:
        raise PolySyntaxError("empty polynomial")
    pos = 0
    toks = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {s[pos]!r} at {pos} in {text!r}")
        pos = m.end()
        if m.group(1):
            toks.append(("num", m.group(1)))
        elif m.group(2):
            toks.append(("var", m.group(2)))
        elif m.group(3):
            toks.append(("^", None))
        elif m.group(4):
            toks.append(("*", None))
        elif m.group(5):
            toks.append(("sign", m.group(5)))
        while pos < len(s) and s[pos].isspace():
            pos += 1
    terms: dict = {}
    degs: dict = {}
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        if toks[i][0] == "sign":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolySyntaxError(f"expected '+' or '-' in {text!r}")
        first = False
        coeff = K(sign)
        e = [0] * base.nvars
        need_factor = True
        while need_factor:
            if i >= len(toks):
                raise PolySyntaxError(f"dangling operator in {text!r}")
            kind, val = toks[i]
            if kind == "num":
                from fractions import Fraction

                coeff = K.mul(coeff, K(Fraction(val)))
                i += 1
            elif kind == "var":
                if val not in base.names:
                    raise PolySyntaxError(f"unknown variable {val!r} in {text!r}")
                k = 1
                i += 1
                if i < len(toks) and toks[i][0] == "^":
                    if i + 1 >= len(toks) or toks[i + 1][0] != "num" or "/" in toks[i + 1][1]:
                        raise PolySyntaxError(f"exponent must be a natural number in {text!r}")
                    k = int(toks[i + 1][1])
                    i += 2
                e[base.var(val)] += k
            else:
                raise PolySyntaxError(f"unexpected {kind!r} in {text!r}")
            if i < len(toks) and toks[i][0] == "*":
                i += 1
            else:
                need_factor = False
        e = tuple(e)
        if not K.is_zero(coeff):
            deg = base.mono_degree(e)
            degs[deg] = degs.get(deg, str(base.format_mono(e) or "1"))
            terms[e] = K.add(terms.get(e, K.zero), coeff)
    if len(degs) > 1:
        (d1, t1), (d2, t2) = list(degs.items())[:2]
        raise HomogeneityError(f"inhomogeneous polynomial {text!r}: {t1} has degree {d1}, {t2} has degree {d2}")
    return HomPoly(base, terms)


class FreeGradedModule:
    """A finite-rank free module ``sum_a base(-g_a)`` listed by generator degrees."""

    def __init__(self, base: GradedBase, degrees):
        self.base = base
        self.degrees = tuple(degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def __eq__(self, other):
        return isinstance(other, FreeGradedModule) and self.base == other.base and self.degrees == other.degrees

    def __repr__(self):
        return f"F{list(self.degrees)}"

    def shift(self, d: GDegree) -> "FreeGradedModule":
        return FreeGradedModule(self.base, [g + d for g in self.degrees])

    def __add__(self, other):
        return FreeGradedModule(self.base, self.degrees + other.degrees)

    def slice_basis(self, d: GDegree) -> list:
        """Basis ``[(generator index, monomial)]`` of the degree-``d`` part."""
        out = []
        for a, g in enumerate(self.degrees):
            for e in self.base.monomials(d - g):
                out.append((a, e))
        return out


class HomogMatrix:
    """A degree-preserving map between free graded modules."""

    __slots__ = ("base", "tgt", "src", "terms")

    def __init__(self, base: GradedBase, tgt, src, terms: dict | None = None, check=True):
        self.base = base
        self.tgt = tuple(tgt)
        self.src = tuple(src)
        K = base.field
        shape = (len(self.tgt), len(self.src))
        out: dict = {}
        for e, C in (terms or {}).items():
            e2, sgn = base.normal_mono(e)
            if C.shape != shape:
                raise ValueError(f"coefficient matrix shape {C.shape}, expected {shape}")
            if sgn != 1:
                C = K.reduce(-C)
            if e2 in out:
                out[e2] = K.reduce(out[e2] + C)
            else:
                out[e2] = C
        self.terms = {e: C for e, C in out.items() if not K.is_zero_matrix(C)}
        if check:
            bad = self.degree_violations()
            if bad:
                i, a, e = bad[0]
                raise HomogeneityError(
                    f"entry ({i},{a}) has monomial {base.format_mono(e) or '1'} of degree "
                    f"{base.mono_degree(e)}, expected {self.src[a] - self.tgt[i]}"
                )

    # -- construction -------------------------------------------------------
    @classmethod
    def from_entries(cls, base, tgt, src, entries, check=True):
        """From a grid of ``HomPoly``/strings/ints, ``entries[i][a]``."""
        K = base.field
        m, n = len(tgt), len(src)
        terms: dict = {}
        for i in range(m):
            for a in range(n):
                x = entries[i][a]
                if isinstance(x, str):
                    x = parse_poly(base, x)
                elif not isinstance(x, HomPoly):
                    x = HomPoly(base, {(0,) * base.nvars: x})
                for e, c in x.terms.items():
                    if e not in terms:
                        terms[e] = K.zeros(m, n)
                    terms[e][i, a] = K.add(terms[e][i, a], c)
        return cls(base, tgt, src, terms, check=check)

    @classmethod
    def identity(cls, base, degrees):
        n = len(degrees)
        return cls(base, degrees, degrees, {(0,) * base.nvars: base.field.eye(n)})

    @classmethod
    def zero(cls, base, tgt, src):
        return cls(base, tgt, src, {})

    @classmethod
    def scalar_poly(cls, base, poly: HomPoly, tgt, src, check=True):
        """``poly * I`` between modules of equal rank."""
        n = len(src)
        K = base.field
        return cls(base, tgt, src, {e: K.reduce(K.eye(n) * c) for e, c in poly.terms.items()}, check=check)

    # -- inspection ---------------------------------------------------------
    @property
    def shape(self):
        return (len(self.tgt), len(self.src))

    def degree_violations(self) -> list:
        bad = []
        K = self.base.field
        for e, C in self.terms.items():
            d = self.base.mono_degree(e)
            rows, cols = np.nonzero(C != K.zero) if C.size else ((), ())
            for i, a in zip(rows, cols):
                if self.src[a] - self.tgt[i] != d:
                    bad.append((int(i), int(a), e))
        return bad

    def entry(self, i: int, a: int) -> HomPoly:
        return HomPoly(self.base, {e: C[i, a] for e, C in self.terms.items() if C[i, a] != 0})

    def entries(self):
        return [[self.entry(i, a) for a in range(len(self.src))] for i in range(len(self.tgt))]

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomogMatrix):
            return NotImplemented
        if self.shape != other.shape or set(self.terms) != set(other.terms):
            return False
        K = self.base.field
        return all(K.equal(C, other.terms[e]) for e, C in self.terms.items())

    def same_entries(self, other) -> bool:
        """Equality of entries ignoring degree bookkeeping."""
        return self.shape == other.shape and (self - other.relabel(self.tgt, self.src)).is_zero()

    # -- algebra ------------------------------------------------------------
    def relabel(self, tgt, src) -> "HomogMatrix":
        return HomogMatrix(self.base, tgt, src, dict(self.terms), check=False)

    def shift(self, d: GDegree) -> "HomogMatrix":
        return HomogMatrix(self.base, [g + d for g in self.tgt], [g + d for g in self.src], dict(self.terms), check=False)

    def __add__(self, other):
        K = self.base.field
        t = dict(self.terms)
        for e, C in other.terms.items():
            t[e] = K.reduce(t[e] + C) if e in t else C
        return HomogMatrix(self.base, self.tgt, self.src, t, check=False)

    def __neg__(self):
        K = self.base.field
        return HomogMatrix(self.base, self.tgt, self.src, {e: K.reduce(-C) for e, C in self.terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HomogMatrix":
        K = self.base.field
        c = K(c)
        return HomogMatrix(self.base, self.tgt, self.src, {e: K.reduce(C * c) for e, C in self.terms.items()}, check=False)

    def times_poly(self, poly: HomPoly, tgt=None) -> "HomogMatrix":
        K = self.base.field
        t: dict = {}
        for e, C in self.terms.items():
            for e2, c in poly.terms.items():
                k = _tadd(e, e2)
                D = K.reduce(C * c)
                t[k] = K.reduce(t[k] + D) if k in t else D
        return HomogMatrix(self.base, tgt if tgt is not None else self.tgt, self.src, t, check=False)

    def compose(self, other: "HomogMatrix", check=True) -> "HomogMatrix":
        """``self o other``; ``other.tgt`` must match ``self.src`` when checked."""
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        if check and other.tgt != self.src:
            raise HomogeneityError("degree lists do not match in composition")
        K = self.base.field
        t: dict = {}
        for e1, A in self.terms.items():
            for e2, B in other.terms.items():
                k = _tadd(e1, e2)
                P = K.matmul(A, B)
                t[k] = K.reduce(t[k] + P) if k in t else P
        return HomogMatrix(self.base, self.tgt, other.src, t, check=False)

    def __matmul__(self, other):
        return self.compose(other)

    def transpose_blocks(self):
        return {e: C for e, C in self.terms.items()}

    def direct_sum(self, other) -> "HomogMatrix":
        K = self.base.field
        m1, n1 = self.shape
        m2, n2 = other.shape
        t: dict = {}
        for e in set(self.terms) | set(other.terms):
            C = K.zeros(m1 + m2, n1 + n2)
            if e in self.terms:
                C[:m1, :n1] = self.terms[e]
            if e in other.terms:
                C[m1:, n1:] = other.terms[e]
            t[e] = C
        return HomogMatrix(self.base, self.tgt + other.tgt, self.src + other.src, t, check=False)

    def submatrix(self, rows, cols) -> "HomogMatrix":
        rows, cols = list(rows), list(cols)
        t = {e: C[np.ix_(rows, cols)] for e, C in self.terms.items()} if rows and cols else {}
        return HomogMatrix(self.base, [self.tgt[i] for i in rows], [self.src[a] for a in cols], t, check=False)

    def conjugate_scalar(self, P, Qinv) -> "HomogMatrix":
        """``P * self * Qinv`` for scalar matrices (used for basis changes)."""
        K = self.base.field
        return HomogMatrix(
            self.base, self.tgt, self.src, {e: K.matmul(K.matmul(P, C), Qinv) for e, C in self.terms.items()}
        )

    def to_strings(self):
        return [[str(p) for p in row] for row in self.entries()]

    def __repr__(self):
        return f"HomogMatrix({self.to_strings()})"


def slice_matrix(m: HomogMatrix, d: GDegree, src_basis=None, tgt_basis=None):
    """Scalar matrix of ``m`` from the degree-``d`` slice of its source to that of its target."""
    base = m.base
    K = base.field
    if src_basis is None:
        src_basis = FreeGradedModule(base, m.src).slice_basis(d)
    if tgt_basis is None:
        tgt_basis = FreeGradedModule(base, m.tgt).slice_basis(d)
    index = {b: k for k, b in enumerate(tgt_basis)}
    M = K.zeros(len(tgt_basis), len(src_basis))
    for col, (a, mu) in enumerate(src_basis):
        for e, C in m.terms.items():
            colv = C[:, a]
            nz = np.nonzero(colv != K.zero)[0] if colv.size else ()
            if len(nz) == 0:
                continue
            mono, sgn = base.normal_mono(_tadd(e, mu))
            for i in nz:
                row = index.get((int(i), mono))
                if row is None:
                    raise WindowError(f"target slice at {d} misses monomial {mono}")
                c = colv[i] if sgn == 1 else K.neg(colv[i])
                M[row, col] = K.add(M[row, col], c)
    return M


def variable_map(base: GradedBase, degrees, var: str, d: GDegree):
    """Multiplication by a variable from slice ``d`` to slice ``d + deg var``."""
    k = base.var(var)
    mod = FreeGradedModule(base, degrees)
    src = mod.slice_basis(d)
    tgt = mod.slice_basis(d + base.degrees[k])
    index = {b: j for j, b in enumerate(tgt)}
    K = base.field
    M = K.zeros(len(tgt), len(src))
    for col, (a, mu) in enumerate(src):
        e = list(mu)
        e[k] += 1
        mono, sgn = base.normal_mono(e)
        M[index[(a, mono)], col] = K.one if sgn == 1 else K.neg(K.one)
    return M


def window_instantiate(m: HomogMatrix, window, require_generators=False) -> dict:
    """Per-degree scalar matrices ``{d: (matrix, src_basis, tgt_basis)}``."""
    window = list(window)
    if require_generators:
        wset = set(window)
        missing = [g for g in m.src + m.tgt if g not in wset]
        if missing:
            raise WindowError(f"window misses generator degree {missing[0]}")
    out = {}
    for d in window:
        sb = FreeGradedModule(m.base, m.src).slice_basis(d)
        tb = FreeGradedModule(m.base, m.tgt).slice_basis(d)
        out[d] = (slice_matrix(m, d, sb, tb), sb, tb)
    return out


@lru_cache(maxsize=None)
def _z_base_cached(field, name):
    from .grading import group_Z

    G = group_Z(name)
    return GradedBase(G, [name], [G(1)], field)


def univariate_base(field=None, name: str = "z") -> GradedBase:
    """``K[z]`` graded by ``Z`` with ``deg z = 1``."""
    return _z_base_cached(field or DEFAULT_FIELD, name)
