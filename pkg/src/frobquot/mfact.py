"""Graded projective-module factorizations of a homogeneous element ``omega``.

A factorization has free components ``P^0, ..., P^n`` and differentials
``d^t : P^t -> P^{t+1}`` (``t < n``) and ``d^n : P^n -> P^0(c)``, where ``c``
is the degree of ``omega`` and ``P^0(c)`` has every generator degree lowered
by ``c``. Every cyclic composite equals ``sign * omega * id``. A cycle of
``k`` differentials is called a ``k``-factorization.

The trivial factorization ``psi^i(F(h))`` has one ``omega`` entry, on
``d^{i-1}`` (on ``d^n`` for ``i = 0``), and identities elsewhere; its
components before position ``i`` sit in degree ``h + c``, the others in ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grading import GDegree, GradingGroup
from .poly import GradedBase, HomogMatrix, HomPoly, parse_poly
from .rep import InconclusiveError


class FactorizationError(ValueError):
    pass


@dataclass
class Report:
    ok: bool
    errors: list = field(default_factory=list)
    composite_index: int | None = None

    def __bool__(self):
        return self.ok


class Factorization:
    def __init__(self, base: GradedBase, omega: HomPoly, sign: int, comps, maps):
        if sign not in (1, -1):
            raise FactorizationError("sign must be +1 or -1")
        self.base = base
        self.omega = omega
        self.sign = sign
        self.comps = [tuple(c) for c in comps]
        self.maps = list(maps)
        if len(self.maps) != len(self.comps):
            raise FactorizationError("need one differential per component")
        if omega.degree is None:
            raise FactorizationError("omega must be nonzero")
        self.c = omega.degree

    @property
    def n(self) -> int:
        """Index of the last component (``n+1`` differentials)."""
        return len(self.comps) - 1

    @property
    def length(self) -> int:
        return len(self.comps)

    @property
    def K(self):
        return self.base.field

    def rank(self) -> int:
        return len(self.comps[0])

    def expected_degrees(self, t):
        """``(tgt, src)`` degree lists that ``d^t`` must respect."""
        src = self.comps[t]
        if t < self.n:
            return self.comps[t + 1], src
        return tuple(g - self.c for g in self.comps[0]), src

    def __repr__(self):
        maps = [m.to_strings() for m in self.maps]
        return f"Factorization(sign={self.sign}, omega={self.omega}, comps={self.comps}, maps={maps})"

    # -- structure --------------------------------------------------------------
    def composite(self, start: int) -> HomogMatrix:
        """``d^{start-1} o ... o d^0 o d^n o ... o d^start`` (entries only)."""
        k = self.length
        M = HomogMatrix.identity(self.base, self.comps[start])
        for s in range(k):
            t = (start + s) % k
            M = self.maps[t].compose(M, check=False)
        return M

    def path(self, a: int, b: int) -> HomogMatrix:
        """Composite of differentials from component ``a`` forward to ``b`` (entries only)."""
        k = self.length
        M = HomogMatrix.identity(self.base, self.comps[a])
        t = a
        while t != b:
            M = self.maps[t].compose(M, check=False)
            t = (t + 1) % k
        return M

    def direct_sum(self, other: "Factorization") -> "Factorization":
        _check_params(self, other)
        comps = [a + b for a, b in zip(self.comps, other.comps)]
        maps = [m1.direct_sum(m2) for m1, m2 in zip(self.maps, other.maps)]
        return Factorization(self.base, self.omega, self.sign, comps, maps)

    __add__ = direct_sum

    def shift(self, h: GDegree) -> "Factorization":
        comps = [tuple(g + h for g in c) for c in self.comps]
        return Factorization(self.base, self.omega, self.sign, comps, [m.shift(h) for m in self.maps])

    def conjugate(self, autos) -> "Factorization":
        """Transport along componentwise automorphisms ``[(phi^t, phi^t^{-1})]``."""
        k = self.length
        maps = []
        for t in range(k):
            phi_next, _ = autos[(t + 1) % k]
            _, inv = autos[t]
            tgt, src = self.expected_degrees(t)
            m = phi_next.compose(self.maps[t], check=False).compose(inv, check=False)
            maps.append(m.relabel(tgt, src))
        return Factorization(self.base, self.omega, self.sign, self.comps, maps)

    def identity(self) -> "FactMorphism":
        return FactMorphism(self, self, [HomogMatrix.identity(self.base, c) for c in self.comps])

    def negate_last(self) -> "Factorization":
        """Flip the sign convention by negating the last differential."""
        maps = self.maps[:-1] + [-self.maps[-1]]
        return Factorization(self.base, self.omega, -self.sign, self.comps, maps)

    def to_json(self) -> dict:
        return {
            "kind": "factorization",
            "base": base_to_json(self.base),
            "omega": str(self.omega),
            "sign": self.sign,
            "components": [[g.word for g in c] for c in self.comps],
            "maps": [m.to_strings() for m in self.maps],
        }

    @classmethod
    def from_json(cls, data, field=None) -> "Factorization":
        base = base_from_json(data["base"], field)
        G = base.group
        omega = parse_poly(base, data["omega"])
        comps = [tuple(G.normalize(w) for w in c) for c in data["components"]]
        F = cls.__new__(cls)
        Factorization.__init__(F, base, omega, int(data["sign"]), comps, [None] * len(comps))
        maps = []
        for t, rows in enumerate(data["maps"]):
            tgt, src = F.expected_degrees(t)
            maps.append(HomogMatrix.from_entries(base, tgt, src, rows, check=False))
        F.maps = maps
        return F


def base_to_json(base: GradedBase) -> dict:
    out = {"group": base.group.to_json(), "vars": list(base.names), "degrees": [d.word for d in base.degrees]}
    if base.relation:
        c, p, b, r, s = base.relation
        out["relation"] = [base.names[c], p, base.names[b], r, s]
    return out


def base_from_json(data, field=None) -> GradedBase:
    G = GradingGroup.from_json(data["group"])
    return GradedBase(G, data["vars"], [G.normalize(w) for w in data["degrees"]], field, data.get("relation"))


def _check_params(X: Factorization, Y: Factorization):
    if X.base != Y.base or X.omega != Y.omega or X.sign != Y.sign or X.length != Y.length:
        raise FactorizationError("factorizations of different data")


class FactMorphism:
    def __init__(self, src: Factorization, tgt: Factorization, comps):
        self.src = src
        self.tgt = tgt
        self.comps = list(comps)

    def compose(self, other: "FactMorphism") -> "FactMorphism":
        return FactMorphism(other.src, self.tgt, [a.compose(b, check=False) for a, b in zip(self.comps, other.comps)])

    def __add__(self, other):
        return FactMorphism(self.src, self.tgt, [a + b for a, b in zip(self.comps, other.comps)])

    def scale(self, c):
        return FactMorphism(self.src, self.tgt, [a.scale(c) for a in self.comps])

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps)

    def commutes(self) -> bool:
        X, Y = self.src, self.tgt
        k = X.length
        for t in range(k):
            lhs = self.comps[(t + 1) % k].compose(X.maps[t], check=False)
            rhs = Y.maps[t].compose(self.comps[t], check=False)
            if not (lhs - rhs.relabel(lhs.tgt, lhs.src)).is_zero():
                return False
        return True


# -- validation ----------------------------------------------------------------
def validate_factorization(F: Factorization) -> Report:
    """Degree compatibility, all cyclic composites ``= sign*omega*id`` and monic differentials."""
    errors = []
    first = None
    base = F.base
    shapes_ok = True
    for t, m in enumerate(F.maps):
        tgt, src = F.expected_degrees(t)
        if m.shape != (len(tgt), len(src)):
            errors.append(f"d^{t} has shape {m.shape}, expected {(len(tgt), len(src))}")
            shapes_ok = False
            continue
        probe = HomogMatrix(base, tgt, src, dict(m.terms), check=False)
        bad = probe.degree_violations()
        if bad:
            i, a, e = bad[0]
            errors.append(
                f"d^{t} entry ({i},{a}) has degree {base.mono_degree(e)}, expected {src[a] - tgt[i]}"
            )
    if not shapes_ok:
        return Report(False, errors, None)
    # composites are still checked after a degree error so the report names the first bad one
    target = F.omega * F.sign
    for t in range(F.length):
        C = F.composite(t)
        want = HomogMatrix.scalar_poly(base, target, C.tgt, C.src, check=False)
        diff = C - want
        if not diff.is_zero():
            first = t if first is None else first
            e = next(iter(diff.terms))
            i, a = [int(x[0]) for x in np.nonzero(diff.terms[e] != F.K.zero)]
            got = C.entry(i, a)
            errors.append(
                f"composite {t}: entry ({i},{a}) is {got} (degree {got.degree}), expected "
                f"{want.entry(i, a)} (degree {F.c if i == a else 'none'})"
            )
    if not errors and base.nvars == 1:
        from .zlinalg import ZMat, column_rank

        for t, m in enumerate(F.maps):
            tgt, src = F.expected_degrees(t)
            Z = ZMat.from_homog(m.relabel(tgt, src))
            if column_rank(Z) < len(src):
                errors.append(f"d^{t} is not monic")
    # over several variables a nonzero omega with composite omega*id already forces monic maps
    return Report(not errors, errors, first)


# -- trivial factorizations -------------------------------------------------------
def psi(i: int, h: GDegree, base: GradedBase, omega: HomPoly, n: int, sign: int = 1) -> Factorization:
    """``psi^i(F(h))`` with ``n+1`` differentials."""
    if not 0 <= i <= n:
        raise FactorizationError(f"psi index {i} outside 0..{n}")
    c = omega.degree
    comps = [((h + c) if t < i else h,) for t in range(n + 1)]
    F = Factorization(base, omega, sign, comps, [None] * (n + 1))
    pos = n if i == 0 else i - 1
    maps = []
    for t in range(n + 1):
        tgt, src = F.expected_degrees(t)
        if t == pos:
            maps.append(HomogMatrix.scalar_poly(base, omega * sign, tgt, src))
        else:
            maps.append(HomogMatrix.identity(base, src).relabel(tgt, src))
    F.maps = maps
    return F


def strand(base: GradedBase, omega: HomPoly, exps, h: GDegree, sign: int = 1) -> Factorization:
    """Rank-one factorization ``(z^{a_0}, ..., z^{a_n})`` over ``K[z]`` starting in degree ``h``."""
    if base.degrees[0] * sum(exps) != omega.degree:
        raise FactorizationError(f"exponents {exps} do not add up to the degree of omega")
    comps = [(h,)]
    z = base.degrees[0]
    for a in exps[:-1]:
        comps.append((comps[-1][0] - z * a,))
    F = Factorization(base, omega, sign, comps, [None] * len(exps))
    maps = []
    for t, a in enumerate(exps):
        tgt, src = F.expected_degrees(t)
        coeff = sign if t == len(exps) - 1 else 1
        maps.append(HomogMatrix.from_entries(base, tgt, src, [[HomPoly(base, {(a,): coeff})]]))
    F.maps = maps
    return F


# -- Hom spaces -----------------------------------------------------------------
class HomSystem:
    """Linear system for degree-0 factorization morphisms ``X -> Y``.

    Unknowns are the scalar coefficients ``(t, i, a, monomial)`` of the entries
    of every component map.
    """

    def __init__(self, X: Factorization, Y: Factorization):
        _check_params(X, Y)
        self.X, self.Y = X, Y
        base = X.base
        self.vars = []
        for t in range(X.length):
            for i, hi in enumerate(Y.comps[t]):
                for a, ga in enumerate(X.comps[t]):
                    for mu in base.monomials(ga - hi):
                        self.vars.append((t, i, a, mu))
        self.index = {v: k for k, v in enumerate(self.vars)}
        self._matrix = None

    def matrix(self):
        if self._matrix is not None:
            return self._matrix
        X, Y = self.X, self.Y
        K = X.K
        base = X.base
        k = X.length
        rows: dict = {}
        entries = []
        for col, (t, i, a, mu) in enumerate(self.vars):
            # as f^t in equation t:  - d_Y^t E_{ia} mu
            for e, D in Y.maps[t].terms.items():
                mono, sgn = base.normal_mono(tuple(x + y for x, y in zip(e, mu)))
                for row in np.nonzero(D[:, i] != K.zero)[0]:
                    key = (t, int(row), a, mono)
                    c = K.neg(D[row, i]) if sgn == 1 else D[row, i]
                    entries.append((rows.setdefault(key, len(rows)), col, c))
            # as f^{t'+1} in equation t' = t-1:  E_{ia} mu d_X^{t'}
            tp = (t - 1) % k
            for e, D in X.maps[tp].terms.items():
                mono, sgn = base.normal_mono(tuple(x + y for x, y in zip(e, mu)))
                for cc in np.nonzero(D[a, :] != K.zero)[0]:
                    key = (tp, i, int(cc), mono)
                    c = D[a, cc] if sgn == 1 else K.neg(D[a, cc])
                    entries.append((rows.setdefault(key, len(rows)), col, c))
        A = K.zeros(len(rows), len(self.vars))
        for r, c, v in entries:
            A[r, c] = K.add(A[r, c], v)
        self._matrix = A
        return A

    def basis(self) -> list[FactMorphism]:
        K = self.X.K
        if not self.vars:
            return []
        A = self.matrix()
        N = K.nullspace(A) if A.shape[0] else K.eye(len(self.vars))
        return [self.from_vector(N[:, k]) for k in range(N.shape[1])]

    def dim(self) -> int:
        if not self.vars:
            return 0
        A = self.matrix()
        return len(self.vars) - (self.X.K.rank(A) if A.shape[0] else 0)

    def from_vector(self, v) -> FactMorphism:
        X, Y = self.X, self.Y
        K = X.K
        terms = [dict() for _ in range(X.length)]
        for k, (t, i, a, mu) in enumerate(self.vars):
            if v[k] == K.zero:
                continue
            T = terms[t]
            if mu not in T:
                T[mu] = K.zeros(len(Y.comps[t]), len(X.comps[t]))
            T[mu][i, a] = v[k]
        comps = [HomogMatrix(X.base, Y.comps[t], X.comps[t], terms[t], check=False) for t in range(X.length)]
        return FactMorphism(X, Y, comps)

    def to_vector(self, f: FactMorphism) -> np.ndarray:
        K = self.X.K
        v = K.zeros(1, len(self.vars))[0]
        for t, m in enumerate(f.comps):
            for e, C in m.terms.items():
                for i, a in zip(*np.nonzero(C != K.zero)):
                    k = self.index.get((t, int(i), int(a), e))
                    if k is None:
                        raise FactorizationError("map has an entry of the wrong degree")
                    v[k] = C[i, a]
        return v


def fact_hom_space(X: Factorization, Y: Factorization) -> list[FactMorphism]:
    return HomSystem(X, Y).basis()


def fact_hom_dim(X: Factorization, Y: Factorization) -> int:
    return HomSystem(X, Y).dim()


def _unit_maps(base, tgt, src, shift: GDegree):
    """All monomial-times-matrix-unit maps ``src -> tgt`` with entry degree ``src - tgt - shift``."""
    K = base.field
    out = []
    for i, hi in enumerate(tgt):
        for a, ga in enumerate(src):
            for mu in base.monomials(ga - hi - shift):
                C = K.zeros(len(tgt), len(src))
                C[i, a] = K.one
                out.append(HomogMatrix(base, tgt, src, {mu: C}, check=False))
    return out


def envelope_factoring_maps(X: Factorization, Y: Factorization) -> list[FactMorphism]:
    """Spanning set of maps ``X -> Y`` factoring through a trivial factorization.

    A map through ``psi^i(P)`` has components
    ``(path in Y from i to t) o u o (path in X from t to i-1)`` for a
    homogeneous ``u : P^{i-1}_X -> P^i_Y``; the union over ``i`` is the set of
    maps through the injective envelope ``sum_i psi^i(P^{i-1}_X)``.
    """
    k = X.length
    base = X.base
    zero = X.c - X.c
    out = []
    for i in range(k):
        im1 = (i - 1) % k
        shift = zero if i == 0 else X.c
        for u in _unit_maps(base, Y.comps[i], X.comps[im1], shift):
            comps = []
            for t in range(k):
                left = Y.path(i, t)
                right = X.path(t, im1)
                m = left.compose(u, check=False).compose(right, check=False)
                comps.append(m.relabel(Y.comps[t], X.comps[t]))
            out.append(FactMorphism(X, Y, comps))
    return out


def fact_stable_hom_dim(X: Factorization, Y: Factorization) -> int:
    """``dim Hom(X, Y)`` minus the maps factoring through trivial factorizations."""
    S = HomSystem(X, Y)
    d = S.dim()
    if d == 0:
        return 0
    vecs = [S.to_vector(f) for f in envelope_factoring_maps(X, Y)]
    if not vecs:
        return d
    return d - X.K.rank(np.stack(vecs))


def _weight(base, d):
    return base.group.weight_of(d, base._weight)


def _monomials_up_to(base, W):
    vw = base._vw
    out = []

    def rec(k, rem, acc):
        if k == base.nvars:
            out.append(tuple(acc))
            return
        for e in range(rem // vw[k] + 1):
            rec(k + 1, rem - e * vw[k], acc + [e])

    rec(0, W, [])
    return [e for e in out if base.is_normal(e)]


def psi_window(X: Factorization, Y: Factorization, W: int):
    """Candidate ``h`` for ``psi^i(F(h))``: generator degrees minus monomials of weight ``<= W``."""
    base = X.base
    gens = {g for F in (X, Y) for c in F.comps for g in c}
    out = set()
    for g in gens:
        for mu in _monomials_up_to(base, W):
            d = base.mono_degree(mu)
            out.add(g - d)
            out.add(g - d - X.c)
    return sorted(out, key=lambda d: d.coords)


def fact_stable_hom_window(X: Factorization, Y: Factorization, max_growths: int = 6):
    """Stable Hom via compositions through single ``psi^i(F(h))`` over a growing window.

    Returns ``(value, history)``; raises :class:`InconclusiveError` without stabilization.
    """
    S = HomSystem(X, Y)
    d = S.dim()
    if d == 0:
        return 0, [0]
    base = X.base
    step = _weight(base, X.c)
    W = step
    seen = set()
    vecs = []
    history = []
    for _ in range(max_growths + 1):
        for h in psi_window(X, Y, W):
            if h in seen:
                continue
            seen.add(h)
            for i in range(X.length):
                T = psi(i, h, base, X.omega, X.n, X.sign)
                to_T = fact_hom_space(X, T)
                if not to_T:
                    continue
                for g in fact_hom_space(T, Y):
                    for f in to_T:
                        vecs.append(S.to_vector(g.compose(f)))
        rk = X.K.rank(np.stack(vecs)) if vecs else 0
        history.append(d - rk)
        if len(history) >= 2 and history[-1] == history[-2]:
            return history[-1], history
        W += step
    raise InconclusiveError(f"window did not stabilize: {history}")


# -- random objects over K[z] --------------------------------------------------------
def random_automorphism(base: GradedBase, degrees, rng, steps: int = 4):
    """A random graded automorphism of a free module and its inverse."""
    K = base.field
    n = len(degrees)
    phi = HomogMatrix.identity(base, degrees)
    inv = HomogMatrix.identity(base, degrees)
    D = K.zeros(n, n)
    Dinv = K.zeros(n, n)
    for k in range(n):
        c = K.random_nonzero(rng)
        D[k, k] = c
        Dinv[k, k] = K.inv(c)
    zero = (0,) * base.nvars
    phi = HomogMatrix(base, degrees, degrees, {zero: D})
    inv = HomogMatrix(base, degrees, degrees, {zero: Dinv})
    for _ in range(steps):
        if n < 2:
            break
        i, a = rng.choice(n, 2, replace=False)
        monos = base.monomials(degrees[a] - degrees[i])
        if not monos:
            continue
        mu = monos[int(rng.integers(len(monos)))]
        c = K.random_nonzero(rng)
        E = K.zeros(n, n)
        E[i, a] = c
        Einv = K.reduce(-E)
        I = K.eye(n)
        terms = {zero: I}
        terms_inv = {zero: I}
        if mu == zero:
            terms = {zero: K.reduce(I + E)}
            terms_inv = {zero: K.reduce(I + Einv)}
        else:
            terms = {zero: I, mu: E}
            terms_inv = {zero: I, mu: Einv}
        step = HomogMatrix(base, degrees, degrees, terms)
        step_inv = HomogMatrix(base, degrees, degrees, terms_inv)
        phi = step.compose(phi)
        inv = inv.compose(step_inv)
    return phi, inv


def random_factorization(rng, base, omega, length, max_rank=3, hrange=(-3, 3), sign=1, with_psi=True):
    """A sum of random rank-one strands over ``K[z]``, transported by random automorphisms."""
    r = omega.degree.coords[0]
    G = base.group
    rank = int(rng.integers(1, max_rank + 1))
    F = None
    for _ in range(rank):
        if with_psi and rng.random() < 0.3:
            i = int(rng.integers(length))
            S = psi(i, G(int(rng.integers(hrange[0], hrange[1] + 1))), base, omega, length - 1, sign)
        else:
            cuts = sorted(int(x) for x in rng.integers(0, r + 1, size=length - 1))
            exps = [b - a for a, b in zip([0] + cuts, cuts + [r])]
            S = strand(base, omega, exps, G(int(rng.integers(hrange[0], hrange[1] + 1))), sign)
        F = S if F is None else F + S
    autos = [random_automorphism(base, c, rng) for c in F.comps]
    return F.conjugate(autos)


# -- chains of factorizations --------------------------------------------------------
def zero_factorization(base: GradedBase, omega: HomPoly, length: int, sign: int = 1) -> Factorization:
    comps = [()] * length
    maps = [HomogMatrix.zero(base, (), ()) for _ in range(length)]
    return Factorization(base, omega, sign, comps, maps)


def zero_morphism(X: Factorization, Y: Factorization) -> FactMorphism:
    return FactMorphism(X, Y, [HomogMatrix.zero(X.base, b, a) for a, b in zip(X.comps, Y.comps)])


def direct_sum_morphism(f: FactMorphism, g: FactMorphism) -> FactMorphism:
    return FactMorphism(f.src + g.src, f.tgt + g.tgt, [a.direct_sum(b) for a, b in zip(f.comps, g.comps)])


def theta_chain(j: int, X: Factorization, k: int):
    """``theta^j(X)``: ``j-1`` zeros then ``X = ... = X`` (``j`` is 1-based), as (objects, maps)."""
    Z = zero_factorization(X.base, X.omega, X.length, X.sign)
    objs = [Z if s < j - 1 else X for s in range(k)]
    maps = []
    for s in range(k - 1):
        maps.append(objs[s].identity() if s >= j - 1 else zero_morphism(objs[s], objs[s + 1]))
    return objs, maps


def chain_sum(A, B):
    objs = [x + y for x, y in zip(A[0], B[0])]
    maps = [direct_sum_morphism(f, g) for f, g in zip(A[1], B[1])]
    return objs, maps


def random_fact_automorphism(X: Factorization, rng, tries: int = 64):
    """A random automorphism of a factorization over ``K[z]`` with its inverse."""
    from .zlinalg import ZMat

    K = X.K
    basis = fact_hom_space(X, X)
    for _ in range(tries):
        f = None
        for b in basis:
            term = b.scale(K.random_element(rng))
            f = term if f is None else f + term
        if f is None:
            return X.identity(), X.identity()
        inv = []
        for m, degs in zip(f.comps, X.comps):
            Z = ZMat.from_homog(m.relabel(degs, degs))
            if not K.is_invertible(Z.M):
                break
            inv.append(ZMat(K, K.inverse(Z.M), Z.tgt, Z.src, check=False).to_homog(X.base))
        else:
            return f, FactMorphism(X, X, inv)
    raise InconclusiveError("no invertible endomorphism found")


def conjugate_chain(chain, rng):
    """Replace each chain map ``f^s`` by ``phi^{s+1} f^s (phi^s)^{-1}`` for random automorphisms."""
    objs, maps = chain
    autos = [random_fact_automorphism(X, rng) for X in objs]
    new = [autos[s + 1][0].compose(f).compose(autos[s][1]) for s, f in enumerate(maps)]
    return objs, new
