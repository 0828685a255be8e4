"""Weighted projective lines: MCM presentations and the double cokernel.

Graded maximal Cohen-Macaulay modules over ``S = K[x,y,z]/(x^p+y^q+z^r)``
(graded by ``L(p,q,r)``) are stored as ``y``-cycles: ``q`` free
``K[x,z]``-modules ``F^0, ..., F^{q-1}`` (the ``y``-degree cosets) with ``y``
acting by the differentials, so the cycle composes to ``-(x^p+z^r)``.

Component ``j`` stores its generator degrees with ``y``-coordinate ``0``; the
actual degree in ``S``-grading is the stored one plus ``j*y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .field import DEFAULT_FIELD
from .functors import (
    Presentation,
    chart_base,
    coset_restrict,
    coset_restrict_data,
    cok_functor,
    induced_restriction_map,
    inf_cok,
    NotMCMError,
    theta_assemble,
)
from .grading import GDegree, group_L, group_Z
from .inflation import GridObject, grid_stable_hom, validate_grid
from .mfact import (
    Factorization,
    Report,
    fact_stable_hom_dim,
    random_automorphism,
    random_factorization,
    validate_factorization,
)
from .poly import FreeGradedModule, GradedBase, HomogMatrix, HomPoly, WindowError, slice_matrix, univariate_base
from .rep import InconclusiveError, Rep, is_isomorphic_random
from .tmod import BarModule


_BASES: dict = {}


def wpl_base(p: int, q: int, r: int, field=None) -> GradedBase:
    """``K[x,z]`` graded by ``L(p,q,r)``."""
    key = (p, q, r, field or DEFAULT_FIELD)
    if key not in _BASES:
        L = group_L(p, q, r)
        _BASES[key] = GradedBase(L, ["x", "z"], [L.gen("x"), L.gen("z")], key[3])
    return _BASES[key]


class MCMPresentation:
    def __init__(self, p: int, q: int, r: int, fact: Factorization):
        self.p, self.q, self.r = p, q, r
        self.fact = fact

    @property
    def base(self):
        return self.fact.base

    @property
    def group(self):
        return self.fact.base.group

    @property
    def K(self):
        return self.fact.K

    def true_degrees(self, j: int):
        y = self.group.gen("y")
        return [g + y * j for g in self.fact.comps[j]]

    def rank(self) -> int:
        return self.fact.rank()

    def __add__(self, other: "MCMPresentation") -> "MCMPresentation":
        return MCMPresentation(self.p, self.q, self.r, self.fact + other.fact)

    def __repr__(self):
        return f"MCMPresentation({self.p},{self.q},{self.r}, maps={[m.to_strings() for m in self.fact.maps]})"

    def conjugate(self, rng) -> "MCMPresentation":
        autos = [random_automorphism(self.base, c, rng) for c in self.fact.comps]
        return MCMPresentation(self.p, self.q, self.r, self.fact.conjugate(autos))

    def to_json(self) -> dict:
        data = self.fact.to_json()
        data["kind"] = "mcm"
        data["weights"] = [self.p, self.q, self.r]
        return data

    @classmethod
    def from_json(cls, data, field=None) -> "MCMPresentation":
        p, q, r = data["weights"]
        F = Factorization.from_json(data, field)
        base = wpl_base(p, q, r, F.K)
        if F.base != base:
            raise ValueError("mcm base must be K[x,z] graded by L(p,q,r)")
        return cls(p, q, r, F)


def omega_of(base: GradedBase, p: int, r: int) -> HomPoly:
    return HomPoly(base, {(p, 0): 1, (0, r): 1})


def _assemble(p, q, r, comps, entries, K) -> MCMPresentation:
    base = wpl_base(p, q, r, K)
    w = omega_of(base, p, r)
    F = Factorization(base, w, -1, comps, [None] * q)
    maps = []
    for t in range(q):
        tgt, src = F.expected_degrees(t)
        maps.append(HomogMatrix.from_entries(base, tgt, src, entries[t]))
    F.maps = maps
    return MCMPresentation(p, q, r, F)


def line_bundle(p: int, q: int, r: int, l, field=None) -> MCMPresentation:
    """The presentation of ``S(l)`` (generator ``1`` in degree ``-l``)."""
    K = field or DEFAULT_FIELD
    base = wpl_base(p, q, r, K)
    L = base.group
    l = l if isinstance(l, GDegree) else L.normalize(l)
    jl = l.coords[1]
    y = L.gen("y")
    comps, entries = [], []
    w = omega_of(base, p, r)
    for j in range(q):
        k = (j + jl) % q
        comps.append((y * k - l - y * j,))
        entries.append([[-w if k == q - 1 else 1]])
    return _assemble(p, q, r, comps, entries, K)


def rank2_bundle(p, q, r, a: int, b: int, k: int = 1, h=None, field=None) -> MCMPresentation:
    """``y``-cycle with ``d^0 = A``, ``d^k = -B`` and identities elsewhere.

    ``A = [[x^a, z^b], [z^(r-b), -x^(p-a)]]`` and
    ``B = [[x^(p-a), z^b], [z^(r-b), -x^a]]`` satisfy ``A B = B A = (x^p+z^r) I``.
    """
    if not (0 <= a <= p and 0 <= b <= r and 1 <= k <= q - 1):
        raise ValueError("rank-two block parameters out of range")
    K = field or DEFAULT_FIELD
    base = wpl_base(p, q, r, K)
    L = base.group
    x, z = L.gen("x"), L.gen("z")
    u1 = h if h is not None else L.zero
    u2 = u1 + x * a - z * (r - b)
    s = (u1 + x * a, u1 + z * b)
    c = L.normalize([0, 0, r])
    lower = tuple(g - c for g in s)
    comps = [s] + [(u1, u2)] * k + [lower] * (q - 1 - k)
    A = [[f"x^{a}", f"z^{b}"], [f"z^{r - b}", f"-x^{p - a}"]]
    B = [[f"-x^{p - a}", f"-z^{b}"], [f"-z^{r - b}", f"x^{a}"]]
    ident = [[1, 0], [0, 1]]
    entries = [A] + [ident] * (k - 1) + [B] + [ident] * (q - 1 - k)
    return _assemble(p, q, r, comps, entries, K)


def example_6_5_objects(field=None):
    """The six orbit representatives for weights ``(2,2,3)``."""
    L = group_L(2, 2, 3)
    return [
        ("O", line_bundle(2, 2, 3, L.zero, field)),
        ("O(x)", line_bundle(2, 2, 3, L.gen("x"), field)),
        ("O(y)", line_bundle(2, 2, 3, L.gen("y"), field)),
        ("O(x+y)", line_bundle(2, 2, 3, L.gen("x") + L.gen("y"), field)),
        ("E[x,z^2;z,-x]", rank2_bundle(2, 2, 3, 1, 2, 1, None, field)),
        ("E[x,z;z^2,-x]", rank2_bundle(2, 2, 3, 1, 1, 1, None, field)),
    ]


def essential_kernel_predicate(p, q, r, l) -> bool:
    """``O(l)`` lies in the essential kernel iff ``l = i x + n z`` or ``l = j y + n z``."""
    L = group_L(p, q, r)
    l = l if isinstance(l, GDegree) else L.normalize(l)
    i, j, _ = l.coords
    return i == 0 or j == 0


# -- stage one: cokernels along y ----------------------------------------------------------
def _to_chart(m: MCMPresentation):
    B = chart_base(m.p, m.r, m.K, "x", "z", 1)
    G = B.group

    def conv(d):
        i, j, n = d.coords
        if j:
            raise ValueError("stored degrees must have y-coordinate 0")
        return G.normalize([i, n])

    return B, conv


def _rebase(M: HomogMatrix, B: GradedBase, conv) -> HomogMatrix:
    return HomogMatrix(B, [conv(d) for d in M.tgt], [conv(d) for d in M.src], dict(M.terms))


def y_composite(m: MCMPresentation, j: int) -> HomogMatrix:
    """``D_j = d^{j-1} o ... o d^0 : F^0 -> F^j``."""
    F = m.fact
    M = HomogMatrix.identity(F.base, F.comps[0])
    for t in range(j):
        M = F.maps[t].compose(M, check=False)
    return M.relabel(F.comps[j], F.comps[0])


def stage_one(m: MCMPresentation, j: int) -> Presentation:
    """``coker(D_j)`` as a module over ``K[x,z]/(x^p + z^r)``."""
    B, conv = _to_chart(m)
    return Presentation(B, _rebase(y_composite(m, j), B, conv))


def validate_mcm(m: MCMPresentation) -> Report:
    rep = validate_factorization(m.fact)
    errors = list(rep.errors)
    if m.fact.sign != -1:
        errors.append("y-cycle sign must be -1")
    if m.fact.omega != omega_of(m.base, m.p, m.r):
        errors.append("omega must be x^p + z^r")
    if not errors:
        for j in range(1, m.q):
            try:
                coset_restrict(stage_one(m, j))
            except NotMCMError as exc:
                errors.append(f"stage-one cokernel {j}: {exc}")
    return Report(not errors, errors, rep.composite_index)


# -- the double cokernel, directly ----------------------------------------------------------
def _n_window(m: MCMPresentation, comps, slack):
    ns = []
    x = m.group.gen("x")
    for c in comps:
        for g in c:
            for a in range(m.p):
                ns.append((g + x * a).coords[2])
    if not ns:
        return 0, 0
    return min(ns) - slack, max(ns) + m.r + slack


def dcok_direct(m: MCMPresentation, slack: int = 2) -> GridObject:
    """The ``(p-1) x (q-1)`` grid ``C^{i,j} = M_{i,j} / (y^j M_{i,0} + x^i M_{0,j})``.

    Rows are indexed by ``i`` (``x``-direction), columns by ``j``.
    """
    p, q, r = m.p, m.q, m.r
    F = m.fact
    K = m.K
    base = F.base
    L = m.group
    Z = group_Z("z")
    g = Z(1)
    lo, hi = _n_window(m, F.comps, slack)
    deg = {(i, n): L.normalize([i, 0, n]) for i in range(p) for n in range(lo, hi + 2)}
    xdeg, zdeg = base.degrees
    cells, quot = {}, {}
    for j in range(1, q):
        Fj = F.comps[j]
        Dj = y_composite(m, j)
        modj = FreeGradedModule(base, Fj)
        mod0 = FreeGradedModule(base, F.comps[0])
        for i in range(1, p):
            Xi = HomogMatrix(base, [h + xdeg * i for h in Fj], Fj, {(i, 0): K.eye(len(Fj))}, check=False)
            for n in range(lo, hi + 1):
                d = deg[(i, n)]
                tb = modj.slice_basis(d)
                parts = []
                sb0 = mod0.slice_basis(d)
                if sb0 and tb:
                    parts.append(slice_matrix(Dj, d, sb0, tb))
                d0 = deg[(0, n)]
                sbx = modj.slice_basis(d0)
                if sbx and tb:
                    parts.append(slice_matrix(Xi, d0, sbx, tb))
                S = np.concatenate(parts, axis=1) if parts else K.zeros(len(tb), 0)
                Q, Lsec = K.quotient(len(tb), S)
                quot[(i, j, n)] = (Q, Lsec, tb)
            for n in (lo, hi):
                if quot[(i, j, n)][0].shape[0]:
                    raise WindowError(f"C^({i},{j}) does not vanish at the window boundary n={n}")
    dims, arrows = {}, {}
    zmat = {}
    for (i, j, n), (Q, Ls, tb) in quot.items():
        if Q.shape[0]:
            dims[(i - 1, j - 1, Z(n))] = Q.shape[0]
    for (i, j, n), (Q, Ls, tb) in quot.items():
        if not Q.shape[0]:
            continue
        src = (i - 1, j - 1, Z(n))
        Fj = F.comps[j]
        d = deg[(i, n)]
        # t = z
        if (i, j, n + 1) in quot and quot[(i, j, n + 1)][0].shape[0]:
            Q1, _, tb1 = quot[(i, j, n + 1)]
            M = _mult_slice(base, Fj, (0, 1), tb, tb1, K)
            arrows[("t", src, (i - 1, j - 1, Z(n + 1)))] = K.matmul(K.matmul(Q1, M), Ls)
        # x: row i -> i + 1
        if i + 1 < p and quot[(i + 1, j, n)][0].shape[0]:
            Q1, _, tb1 = quot[(i + 1, j, n)]
            M = _mult_slice(base, Fj, (1, 0), tb, tb1, K)
            arrows[("v", src, (i, j - 1, Z(n)))] = K.matmul(K.matmul(Q1, M), Ls)
        # y: column j -> j + 1
        if j + 1 < q and quot[(i, j + 1, n)][0].shape[0]:
            Q1, _, tb1 = quot[(i, j + 1, n)]
            M = slice_matrix(F.maps[j], d, tb, tb1)
            arrows[("h", src, (i - 1, j, Z(n)))] = K.matmul(K.matmul(Q1, M), Ls)
    return GridObject(Z, r, g, p - 1, q - 1, Rep(K, dims, arrows))


def _mult_slice(base, gens, mono, src_basis, tgt_basis, K):
    index = {b: k for k, b in enumerate(tgt_basis)}
    M = K.zeros(len(tgt_basis), len(src_basis))
    for col, (a, mu) in enumerate(src_basis):
        e = tuple(u + v for u, v in zip(mu, mono))
        M[index[(a, e)], col] = K.one
    return M


# -- the double cokernel in two stages ------------------------------------------------------
def dcok_staged(m: MCMPresentation, slack: int = 2) -> GridObject:
    """Cokernels along ``y`` restricted to ``x``-cosets, then the cokernel functor along ``x``."""
    B, conv = _to_chart(m)
    zbase = univariate_base(m.K, "z")
    res = [coset_restrict_data(stage_one(m, j), zbase) for j in range(1, m.q)]
    maps = []
    for j in range(1, m.q - 1):
        phi = _rebase(m.fact.maps[j].relabel(m.fact.comps[j + 1], m.fact.comps[j]), B, conv)
        maps.append(induced_restriction_map(B, phi, res[j - 1], res[j]))
    G = inf_cok([R.fact for R in res], maps, slack)
    return _renamed(G).transpose()


def _renamed(G: GridObject) -> GridObject:
    """Regrade onto the group ``Z`` named ``z`` used by :func:`dcok_direct`."""
    Z = group_Z("z")
    dims = {(i, j, Z(d.coords[0])): k for (i, j, d), k in G.rep.dims.items()}
    maps = {}
    for (lab, a, b), M in G.rep.maps.items():
        maps[(lab, (a[0], a[1], Z(a[2].coords[0])), (b[0], b[1], Z(b[2].coords[0])))] = M
    return GridObject(Z, G.r, Z(1), G.m, G.n, Rep(G.K, dims, maps))


@dataclass
class IsoResult:
    same_bars: bool
    certified: bool
    inconclusive: bool

    @property
    def ok(self):
        return self.same_bars and self.certified


def certify_grid_iso(X: GridObject, Y: GridObject, rng, samples: int = 256) -> IsoResult:
    """Equal cellwise bars, then a random search for an invertible morphism."""
    if (X.m, X.n) != (Y.m, Y.n) or X.bar_table() != Y.bar_table():
        return IsoResult(False, False, False)
    f = is_isomorphic_random(X.rep, Y.rep, rng, samples)
    return IsoResult(True, f is not None, f is None)


# -- random objects ----------------------------------------------------------------------------
def random_mcm(rng, p, q, r, field=None, pieces=(1, 2), nrange=(-2, 2), conjugate=True) -> MCMPresentation:
    K = field or DEFAULT_FIELD
    L = group_L(p, q, r)
    out = None
    for _ in range(int(rng.integers(pieces[0], pieces[1] + 1))):
        n = int(rng.integers(nrange[0], nrange[1] + 1))
        if rng.random() < 0.5:
            l = L.normalize([int(rng.integers(p)), int(rng.integers(q)), n])
            piece = line_bundle(p, q, r, l, K)
        else:
            a = int(rng.integers(0, p + 1))
            b = int(rng.integers(0, r + 1))
            k = int(rng.integers(1, q))
            h = L.normalize([int(rng.integers(p)), 0, n])
            piece = rank2_bundle(p, q, r, a, b, k, h, K)
        out = piece if out is None else out + piece
    if conjugate:
        out = out.conjugate(rng)
    return out


# -- Happel-Seidel ------------------------------------------------------------------------------
def _swap_presentation(N: Presentation) -> Presentation:
    """View ``K[x,y]/(x^p + y^q)`` with ``y`` as the cycle variable."""
    c, p, b, q, s = N.base.relation
    names = N.base.names
    B2 = chart_base(q, p, N.K, names[b], names[c], s)
    G2 = B2.group

    def conv(d):
        i, n = d.coords
        return G2.normalize([n, i])

    terms = {(e[1], e[0]): C for e, C in N.A.terms.items()}
    A = HomogMatrix(B2, [conv(d) for d in N.A.tgt], [conv(d) for d in N.A.src], terms)
    return Presentation(B2, A)


def hs_sides(X: Factorization):
    """Both cokernel images of an ``x``-cycle factorization of ``y^q`` over ``K[y]``."""
    side1 = cok_functor(X)
    N = _swap_presentation(theta_assemble(X, "x"))
    side2 = cok_functor(coset_restrict(N, univariate_base(X.K, "x")))
    return side1, side2


@dataclass
class HSReport:
    p: int
    q: int
    rows: list = field(default_factory=list)  # (a, b, mcm, side1, side2)
    inconclusive: int = 0

    @property
    def agree(self) -> bool:
        return self.inconclusive == 0 and all(r[2] == r[3] == r[4] for r in self.rows)


def happel_seidel_report(p: int, q: int, samples: int = 50, seed: int = 0, field=None) -> HSReport:
    """Stable Hom through ``S_{p-1}(q)`` and ``S_{q-1}(p)`` for pairs of common MCM objects."""
    K = field or DEFAULT_FIELD
    rng = np.random.default_rng(seed)
    ybase = univariate_base(K, "y")
    w = HomPoly(ybase, {(q,): 1})
    # no trivial summands, so most sampled objects are stably nonzero
    objs = [
        random_factorization(rng, ybase, w, p, max_rank=2, hrange=(0, 1), with_psi=False)
        for _ in range(max(2, samples // 4))
    ]
    images = [hs_sides(X) for X in objs]
    rep = HSReport(p, q)
    for k in range(samples):
        if k < len(objs):
            a = b = k
        else:
            a, b = int(rng.integers(len(objs))), int(rng.integers(len(objs)))
        mid = fact_stable_hom_dim(objs[a], objs[b])
        s1 = grid_stable_hom(images[a][0], images[b][0])
        s2 = grid_stable_hom(images[a][1], images[b][1])
        if s1.inconclusive or s2.inconclusive:
            rep.inconclusive += 1
            continue
        rep.rows.append((a, b, mid, s1.value, s2.value))
    return rep
