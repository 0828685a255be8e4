"""Functors out of factorization categories.

* ``cok_functor`` sends a factorization of ``z^r`` over ``K[z]`` to the chain
  of cokernels ``C^s = coker(d^{s-1} o ... o d^0)``, a chain of graded
  ``K[t]/(t^r)``-modules with ``t`` acting as ``z``.
* ``theta_assemble`` / ``theta_disassemble`` pass between factorizations with
  ``k`` differentials and graded modules over ``K[x,z]/(x^k + z^r)``, the
  latter kept as presentations.
* ``coset_restrict`` splits such a module into its ``x``-degree cosets, each a
  free ``K[z]``-module, with ``x`` acting between them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grading import GDegree, group_chart
from .inflation import GridObject, inflation
from .mfact import FactMorphism, Factorization
from .poly import GradedBase, HomogMatrix, HomPoly, WindowError, univariate_base
from .rep import Morphism, Rep
from .tmod import BarModule, t_key
from .zlinalg import ZMat, graded_diag


class NotMCMError(ValueError):
    """A coset restriction is not free over the base ring."""


# -- presentations over K[x,z]/(x^p + s z^r) ---------------------------------------------
def chart_base(p: int, r: int, field=None, cycle: str = "x", base: str = "z", s: int = 1) -> GradedBase:
    """``K[cycle, base]/(cycle^p + s*base^r)`` graded by ``p*cycle = r*base``."""
    G = group_chart(cycle, base, p, r)
    return GradedBase(G, [cycle, base], [G.gen(cycle), G.gen(base)], field, (cycle, p, base, r, s))


@dataclass
class Presentation:
    """``coker(A : F1 -> F0)`` over a chart base; ``A`` is a ``HomogMatrix``."""

    base: GradedBase
    A: HomogMatrix

    @property
    def gens(self):
        return self.A.tgt

    @property
    def p(self):
        return self.base.relation[1]

    @property
    def r(self):
        return self.base.relation[3]

    @property
    def s(self):
        return self.base.relation[4]

    @property
    def K(self):
        return self.base.field


def coset_basis(base: GradedBase, gens, i: int):
    """``K[z]``-basis ``x^a e_b`` of the coset-``i`` part of a free module, with integer degrees."""
    p = base.relation[1]
    xdeg = base.degrees[0]
    out = []
    for b, g in enumerate(gens):
        for a in range(p):
            d = g + xdeg * a
            if d.coords[0] == i:
                out.append(((b, a), d.coords[1]))
    return out


def _coset_columns(base, M: HomogMatrix, cols, index, nrows):
    """Coordinates of ``x^a * (column c of M)`` for ``(c, a)`` in ``cols``, in the basis ``index``."""
    K = base.field
    out = K.zeros(nrows, len(cols))
    for k, (c, a) in enumerate(cols):
        for e, C in M.terms.items():
            nz = np.nonzero(C[:, c] != K.zero)[0]
            if not len(nz):
                continue
            mono, sgn = base.normal_mono((e[0] + a, e[1]))
            for b in nz:
                row = index[(int(b), mono[0])]
                v = C[b, c] if sgn == 1 else K.neg(C[b, c])
                out[row, k] = K.add(out[row, k], v)
    return out


@dataclass
class CosetData:
    basis: list  # [((b, a), degree)]
    pi: ZMat  # coordinates -> free part
    sigma: ZMat  # free part -> coordinates
    exponents: list


def coset_data(N: Presentation, i: int) -> CosetData:
    base = N.base
    K = N.K
    basis = coset_basis(base, N.gens, i)
    index = {key: k for k, (key, _) in enumerate(basis)}
    rels = coset_basis(base, N.A.src, i)
    R = _coset_columns(base, N.A, [key for key, _ in rels], index, len(basis))
    Z = ZMat(K, R, [d for _, d in basis], [d for _, d in rels])
    D = graded_diag(Z)
    bad = [e for e in D.exponents if e > 0]
    if bad:
        raise NotMCMError(f"coset {i} has torsion z^{bad[0]}; the module is not maximal Cohen-Macaulay")
    free = D.free_rows()
    h = D.U.tgt
    pi = ZMat(K, D.U.M[free, :], [h[k] for k in free], Z.tgt, check=False)
    sigma = ZMat(K, D.Uinv.M[:, free], Z.tgt, [h[k] for k in free], check=False)
    return CosetData(basis, pi, sigma, D.exponents)


def _shift(Z: ZMat, k: int) -> ZMat:
    return ZMat(Z.K, Z.M, [d + k for d in Z.tgt], [d + k for d in Z.src], check=False)


def coset_map(base, M: HomogMatrix, src: CosetData, tgt: CosetData, shift_tgt: int = 0) -> ZMat:
    """Matrix of ``M`` (a map of free modules over the chart base) between coset bases."""
    index = {key: k for k, (key, _) in enumerate(tgt.basis)}
    cols = [key for key, _ in src.basis]
    R = _coset_columns(base, M, cols, index, len(tgt.basis))
    return ZMat(base.field, R, [d + shift_tgt for _, d in tgt.basis], [d for _, d in src.basis])


def _x_matrix(N: Presentation, src: CosetData, tgt: CosetData, wrap: bool) -> ZMat:
    base = N.base
    K = N.K
    xmono = HomogMatrix(
        base, [g + base.degrees[0] for g in N.gens], N.gens, {(1, 0): K.eye(len(N.gens))}, check=False
    )
    index = {key: k for k, (key, _) in enumerate(tgt.basis)}
    R = _coset_columns(base, xmono, [key for key, _ in src.basis], index, len(tgt.basis))
    shift = -N.r if wrap else 0
    return ZMat(K, R, [d + shift for _, d in tgt.basis], [d for _, d in src.basis])


@dataclass
class Restriction:
    fact: Factorization
    cosets: list  # CosetData per coset


def coset_restrict_data(N: Presentation, zbase: GradedBase | None = None) -> Restriction:
    p, r, s = N.p, N.r, N.s
    K = N.K
    zbase = zbase or univariate_base(K, N.base.names[1])
    G = zbase.group
    data = [coset_data(N, i) for i in range(p)]
    maps = []
    for i in range(p):
        wrap = i == p - 1
        nxt = data[(i + 1) % p]
        X = _x_matrix(N, data[i], nxt, wrap)
        pi = _shift(nxt.pi, -r) if wrap else nxt.pi
        maps.append((pi @ X @ data[i].sigma).to_homog(zbase))
    omega = HomPoly(zbase, {(r,): 1})
    comps = [tuple(G(d) for d in c.pi.tgt) for c in data]
    F = Factorization(zbase, omega, -s, comps, maps)
    return Restriction(F, data)


def coset_restrict(N: Presentation, zbase: GradedBase | None = None) -> Factorization:
    """Factorization of ``z^r`` with ``p`` differentials (``x``-action between cosets); sign ``-s``."""
    return coset_restrict_data(N, zbase).fact


def induced_restriction_map(base, phi: HomogMatrix, RX: Restriction, RY: Restriction) -> FactMorphism:
    """Factorization morphism induced by a map of presentations' free modules ``F0_X -> F0_Y``."""
    zbase = RX.fact.base
    comps = []
    for cx, cy in zip(RX.cosets, RY.cosets):
        M = coset_map(base, phi, cx, cy)
        comps.append((cy.pi @ M @ cx.sigma).to_homog(zbase))
    return FactMorphism(RX.fact, RY.fact, comps)


def theta_assemble(F: Factorization, cycle: str = "x") -> Presentation:
    """Presentation of ``Theta(F)`` over ``K[x,z]/(x^{n+1} + z^r)``.

    Generators are the generators of all components; relations are
    ``x e^t = d^t e^{t+1}`` and, on the last component, ``x e^n = -sign * d^n e^0``
    so that ``x^{n+1}`` acts as ``-omega``.
    """
    k = F.length
    r = F.c.coords[0]
    zname = F.base.names[0]
    B = chart_base(k, r, F.K, cycle, zname, 1)
    G = B.group
    gens, offs = [], []
    for t, comp in enumerate(F.comps):
        offs.append(len(gens))
        gens.extend(G.normalize([t, g.coords[0]]) for g in comp)
    K = F.K
    rel_degs = []
    terms: dict = {}

    def put(e, row, col, v):
        if e not in terms:
            terms[e] = {}
        terms[e][(row, col)] = K.add(terms[e].get((row, col), K.zero), v)

    col = 0
    kappa = -F.sign
    for t in range(k):
        nxt = (t + 1) % k
        coef = K(kappa) if t == k - 1 else K.one
        for a in range(len(F.comps[t])):
            rel_degs.append(gens[offs[t] + a] + B.degrees[0])
            put((1, 0), offs[t] + a, col, K.one)
            for e, C in F.maps[t].terms.items():
                for b in np.nonzero(C[:, a] != K.zero)[0]:
                    put((0, e[0]), offs[nxt] + int(b), col, K.neg(K.mul(coef, C[b, a])))
            col += 1
    mats = {}
    for e, entries in terms.items():
        M = K.zeros(len(gens), len(rel_degs))
        for (i, j), v in entries.items():
            M[i, j] = v
        mats[e] = M
    return Presentation(B, HomogMatrix(B, gens, rel_degs, mats))


def theta_disassemble(N: Presentation) -> Factorization:
    """Inverse of :func:`theta_assemble`, normalized to sign ``+1``."""
    F = coset_restrict(N)
    return F.negate_last() if F.sign == -1 else F


# -- the cokernel functor ----------------------------------------------------------------
@dataclass
class CokData:
    """Per-degree quotient data of every ``C^s``: ``{d: (Q, L)}`` and gens of ``P^s``."""

    grid: GridObject
    quot: list  # per s (0-based for C^{s+1}): {d: (Q, L)}
    window: list


def _zmaps(F: Factorization):
    return [ZMat.from_homog(F.maps[t].relabel(*F.expected_degrees(t))) for t in range(F.n)]


def cok_data(F: Factorization, slack: int = 2) -> CokData:
    if F.base.nvars != 1:
        raise ValueError("the cokernel functor needs a one-variable base")
    K = F.K
    G = F.base.group
    r = F.c.coords[0]
    g = G(1)
    Z = _zmaps(F)
    comps, quot, windows = [], [], []
    comp = ZMat.identity(K, [d.coords[0] for d in F.comps[0]])
    for s in range(1, F.length):
        comp = Z[s - 1] @ comp
        degs = comp.tgt
        if degs:
            lo, hi = min(degs) - slack, max(degs) + r + slack
        else:
            lo, hi = 0, 0
        q = {}
        for d in range(lo, hi + 1):
            M, rows, _ = comp.slice(d)
            Q, L = K.quotient(len(rows), M)
            q[d] = (Q, L, rows)
        for d in (lo, hi):
            if q[d][0].shape[0]:
                raise WindowError(f"cokernel C^{s} does not vanish at the window boundary {d}")
        dims = {G(d): q[d][0].shape[0] for d in range(lo, hi + 1) if q[d][0].shape[0]}
        tmaps = {}
        for d in range(lo, hi):
            Q1, _, rows1 = q[d + 1]
            Q0, L0, rows0 = q[d]
            if not Q0.shape[0] or not Q1.shape[0]:
                continue
            pos = {k: i for i, k in enumerate(rows1)}
            E = K.zeros(len(rows1), len(rows0))
            for j, k in enumerate(rows0):
                E[pos[k], j] = K.one
            tmaps[G(d)] = K.matmul(K.matmul(Q1, E), L0)
        comps.append(BarModule.from_components(G, r, g, dims, tmaps, K))
        quot.append(q)
        windows.append((lo, hi))
    maps = []
    for s in range(len(comps) - 1):
        blocks = {}
        for d in range(max(windows[s][0], windows[s + 1][0]), min(windows[s][1], windows[s + 1][1]) + 1):
            Q1, _, _ = quot[s + 1][d]
            Q0, L0, _ = quot[s][d]
            if not Q0.shape[0] or not Q1.shape[0]:
                continue
            M, _, _ = Z[s + 1].slice(d)
            blocks[G(d)] = K.matmul(K.matmul(Q1, M), L0)
        maps.append(blocks)
    if not comps:
        raise ValueError("the cokernel functor needs at least two components")
    return CokData(inflation(comps, maps), quot, windows)


def cok_functor(F: Factorization, slack: int = 2) -> GridObject:
    """The chain ``C^1 -> ... -> C^n`` of cokernels as a ``1 x n`` grid."""
    return cok_data(F, slack).grid


def _zslice(Z: ZMat, d: int):
    rows = [i for i, h in enumerate(Z.tgt) if h <= d]
    cols = [a for a, g in enumerate(Z.src) if g <= d]
    if rows and cols:
        return Z.M[np.ix_(rows, cols)]
    return Z.K.zeros(len(rows), len(cols))


def cok_morphism(f: FactMorphism, CX: CokData, CY: CokData) -> Morphism:
    """``Cok(f)`` as a morphism of grid representations."""
    K = f.src.K
    G = f.src.base.group
    blocks = {}
    for s in range(len(CX.quot)):
        Zf = ZMat.from_homog(f.comps[s + 1].relabel(f.tgt.comps[s + 1], f.src.comps[s + 1]))
        for d, (Q0, L0, _) in CX.quot[s].items():
            if d not in CY.quot[s]:
                continue
            Q1 = CY.quot[s][d][0]
            if not Q0.shape[0] or not Q1.shape[0]:
                continue
            blocks[(0, s, G(d))] = K.matmul(K.matmul(Q1, _zslice(Zf, d)), L0)
    return Morphism(CX.grid.rep, CY.grid.rep, blocks)


def inf_cok(objects: list, maps: list, slack: int = 2) -> GridObject:
    """``Inf_k(Cok)`` of a chain ``X^1 -> ... -> X^k`` of factorizations: a ``k x n`` grid.

    Row ``s`` is ``Cok(X^{s+1})``; vertical maps are ``Cok`` of the chain maps.
    """
    data = [cok_data(X, slack) for X in objects]
    k = len(objects)
    n = objects[0].length - 1
    like = data[0].grid.component(0, 0)
    dims, arrows = {}, {}
    for s, D in enumerate(data):
        for (_, j, d), m in D.grid.rep.dims.items():
            dims[(s, j, d)] = m
        for (lab, a, b), M in D.grid.rep.maps.items():
            arrows[(lab, (s, a[1], a[2]), (s, b[1], b[2]))] = M
    for s, f in enumerate(maps):
        mor = cok_morphism(f, data[s], data[s + 1])
        for (_, j, d), M in mor.blocks.items():
            arrows[("v", (s, j, d), (s + 1, j, d))] = M
    return GridObject(like.group, like.r, like.g, k, n, Rep(like.K, dims, arrows))
