"""Graded modules over ``K[t]/(t^r)`` with ``t`` of degree ``g``.

Every such module is a sum of bars ``M(l, s)``: a chain of length
``1 <= l <= r`` starting in degree ``s`` with basis ``e_0, ..., e_{l-1}``,
``e_k`` in degree ``s + k*g`` and ``t e_k = e_{k+1}``. A length-``r`` bar is
projective and injective.

With ``R(a, s)`` the rank of ``t^a`` on the degree-``s`` component, the number
of bars of length ``l`` starting at ``s`` is::

    R(l-1, s) - R(l, s-g) - R(l, s) + R(l+1, s-g)

``R(a, s) - R(a+1, s-g)`` counts bars starting at ``s`` of length ``> a``,
and this holds for torsion ``g`` as well.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .field import DEFAULT_FIELD
from .grading import GDegree, GradingGroup
from .rep import (
    InconclusiveError,
    Morphism,
    Rep,
    cokernel,
    decompose_fitting,
    direct_sum,
    hom_dim,
    hom_space,
    hom_vertex_order,
    kernel,
    span_rank,
)


class NilpotencyError(ValueError):
    pass


class ParameterMismatch(ValueError):
    pass


def t_key(d: GDegree, g: GDegree):
    return ("t", d, d + g)


class BarModule:
    """A finite-dimensional graded ``K[t]/(t^r)``-module and its realization."""

    def __init__(self, group: GradingGroup, r: int, g: GDegree, rep: Rep):
        if r < 1:
            raise ValueError("nilpotency index must be at least 1")
        self.group = group
        self.r = int(r)
        self.g = g
        self.rep = rep
        self.K = rep.K
        self._bars = None
        self._jordan = None

    # -- construction -----------------------------------------------------------
    @classmethod
    def from_bars(cls, group, r, g, bars, K=None) -> "BarModule":
        K = K or DEFAULT_FIELD
        rep, _ = canonical_rep(K, g, list(_expand(bars)))
        X = cls(group, r, g, rep)
        for l, _ in _expand(bars):
            if not 1 <= l <= r:
                raise ValueError(f"bar length {l} outside 1..{r}")
        X._bars = Counter(_expand(bars))
        return X

    @classmethod
    def from_components(cls, group, r, g, dims: dict, tmaps: dict, K=None) -> "BarModule":
        """From component dimensions ``{d: n}`` and t-maps ``{d: V_{d+g} <- V_d}``."""
        K = K or DEFAULT_FIELD
        maps = {}
        for d, M in tmaps.items():
            M = K.reduce(np.asarray(M, dtype=K.dtype))
            if M.shape != (dims.get(d + g, 0), dims.get(d, 0)):
                raise ValueError(
                    f"t-map at {d} has shape {M.shape}, expected {(dims.get(d + g, 0), dims.get(d, 0))}"
                )
            maps[t_key(d, g)] = M
        X = cls(group, r, g, Rep(K, dims, maps))
        for s in X.rep.dims:
            if X.rank_power(r, s):
                raise NilpotencyError(f"t^{r} is nonzero on the component of degree {s}")
        return X

    @classmethod
    def zero(cls, group, r, g, K=None) -> "BarModule":
        return cls(group, r, g, Rep.zero(K or DEFAULT_FIELD))

    def like(self, rep: Rep) -> "BarModule":
        return BarModule(self.group, self.r, self.g, rep)

    # -- structure --------------------------------------------------------------
    def tmap(self, d: GDegree) -> np.ndarray:
        return self.rep.arrow(t_key(d, self.g))

    def dim(self, d=None) -> int:
        return self.rep.total_dim() if d is None else self.rep.dim(d)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def support(self):
        return self.rep.vertices()

    def t_power(self, a: int, s: GDegree) -> np.ndarray:
        K = self.K
        P = K.eye(self.dim(s))
        d = s
        for _ in range(a):
            P = K.matmul(self.tmap(d), P)
            d = d + self.g
            if P.shape[0] == 0 or P.shape[1] == 0:
                return P
        return P

    def rank_power(self, a: int, s: GDegree) -> int:
        if a >= self.r + 1 or not self.dim(s):
            return 0
        return self.K.rank(self.t_power(a, s))

    @property
    def bars(self) -> Counter:
        """Bar multiset from the rank formula."""
        if self._bars is None:
            g = self.g
            R = {}

            def rk(a, s):
                if a > self.r or not self.dim(s):
                    return 0
                if a == 0:
                    return self.dim(s)
                key = (a, s)
                if key not in R:
                    R[key] = self.rank_power(a, s)
                return R[key]

            out = Counter()
            for s in self.rep.dims:
                for l in range(1, self.r + 1):
                    m = rk(l - 1, s) - rk(l, s - g) - rk(l, s) + rk(l + 1, s - g)
                    if m < 0:
                        raise AssertionError(f"negative bar multiplicity at {(l, s)}")
                    if m:
                        out[(l, s)] = m
            if sum(l * m for (l, _), m in out.items()) != self.dim():
                raise AssertionError("bar multiplicities do not add up to the dimension")
            self._bars = out
        return self._bars

    def bar_list(self):
        return sorted(self.bars.elements(), key=lambda b: (b[0], b[1].coords))

    def is_projective(self) -> bool:
        return all(l == self.r for l, _ in self.bars)

    def top_dim(self) -> int:
        n = 0
        for v, d in self.rep.dims.items():
            n += d - self.K.rank(self.tmap(v - self.g))
        return n

    def same_parameters(self, other: "BarModule") -> bool:
        return self.group == other.group and self.r == other.r and self.g == other.g

    def check_compatible(self, other: "BarModule"):
        if not self.same_parameters(other):
            raise ParameterMismatch("modules over different rings or gradings")

    def isomorphic(self, other: "BarModule") -> bool:
        self.check_compatible(other)
        return self.bars == other.bars

    def shift(self, h: GDegree) -> "BarModule":
        """Move every bar start by ``h``."""
        return BarModule.from_bars(self.group, self.r, self.g, [(l, s + h) for l, s in self.bar_list()], self.K)

    def __add__(self, other: "BarModule") -> "BarModule":
        self.check_compatible(other)
        return self.like(direct_sum(self.rep, other.rep)[0])

    def __repr__(self):
        inner = ", ".join(f"({l},{s})" for l, s in self.bar_list())
        return f"BarModule(r={self.r}, bars=[{inner}])"

    def bar_string(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"M({l},{_fmt(s)})" for l, s in self.bar_list())

    # -- Jordan basis ---------------------------------------------------------------
    def jordan(self):
        """Chains ``(l, s, v)``: ``v`` in degree ``s`` with ``t^l v = 0`` spanning a bar."""
        if self._jordan is not None:
            return self._jordan
        K = self.K
        g = self.g
        chains = []
        for l in range(self.r, 0, -1):
            for s in self.support():
                n = self.dim(s)
                kl = K.nullspace(self.t_power(l, s)) if l < self.r + 1 else K.eye(n)
                kl1 = K.nullspace(self.t_power(l - 1, s)) if l > 1 else K.zeros(n, 0)
                prev = s - g
                if self.dim(prev):
                    kup = K.nullspace(self.t_power(l + 1, prev))
                    img = K.matmul(self.tmap(prev), kup)
                else:
                    img = K.zeros(n, 0)
                cur = np.concatenate([kl1, img], axis=1)
                rank = K.rank(cur) if cur.shape[1] else 0
                for c in range(kl.shape[1]):
                    trial = np.concatenate([cur, kl[:, c : c + 1]], axis=1)
                    rk = K.rank(trial)
                    if rk > rank:
                        cur, rank = trial, rk
                        chains.append((l, s, kl[:, c].copy()))
        self._jordan = chains
        return chains

    def jordan_iso(self):
        """Isomorphism ``canon -> self`` where ``canon`` realizes the Jordan bars."""
        K = self.K
        chains = self.jordan()
        canon, slots = canonical_rep(K, self.g, [(l, s) for l, s, _ in chains])
        cols: dict = {v: [None] * n for v, n in canon.dims.items()}
        for (l, s, v), pos in zip(chains, slots):
            x = v
            d = s
            for k in range(l):
                cols[d][pos[k]] = x
                x = K.matmul(self.tmap(d), x.reshape(-1, 1)).reshape(-1)
                d = d + self.g
        blocks = {d: np.stack(c, axis=1) for d, c in cols.items()}
        phi = Morphism(canon, self.rep, blocks)
        if not (phi.is_iso() and phi.commutes()):
            raise AssertionError("Jordan basis does not give an isomorphism")
        return BarModule(self.group, self.r, self.g, canon), phi

    # -- serialization ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "kind": "barmodule",
            "r": self.r,
            "deg_t": self.g.word,
            "group": self.group.to_json(),
            "bars": [{"len": l, "start": s.word} for l, s in self.bar_list()],
        }

    @classmethod
    def from_json(cls, data, K=None) -> "BarModule":
        G = GradingGroup.from_json(data["group"])
        g = G.normalize(data["deg_t"])
        bars = [(int(b["len"]), G.normalize(b["start"])) for b in data["bars"]]
        return cls.from_bars(G, int(data["r"]), g, bars, K)


def _fmt(s: GDegree) -> str:
    return str(s.coords[0]) if len(s.coords) == 1 else str(s)


def _expand(bars):
    if isinstance(bars, Counter):
        for b, m in bars.items():
            for _ in range(m):
                yield b
    else:
        yield from bars


def canonical_rep(K, g: GDegree, bars: list):
    """Realize an ordered bar list; returns the rep and per-bar slot positions."""
    dims: dict = {}
    slots = []
    for l, s in bars:
        pos = []
        d = s
        for _ in range(l):
            pos.append(dims.get(d, 0))
            dims[d] = dims.get(d, 0) + 1
            d = d + g
        slots.append(pos)
    maps: dict = {}
    for (l, s), pos in zip(bars, slots):
        d = s
        for k in range(l - 1):
            e = d + g
            key = ("t", d, e)
            if key not in maps:
                maps[key] = K.zeros(dims[e], dims[d])
            maps[key][pos[k + 1], pos[k]] = K.one
            d = e
    return Rep(K, dims, maps), slots


def bar_module(group, r, g, bars, K=None) -> BarModule:
    return BarModule.from_bars(group, r, g, bars, K)


# -- Hom, kernels, envelopes ------------------------------------------------------------
def hom(X: BarModule, Y: BarModule) -> list[Morphism]:
    X.check_compatible(Y)
    return hom_space(X.rep, Y.rep)


def hom_dimension(X: BarModule, Y: BarModule) -> int:
    X.check_compatible(Y)
    return hom_dim(X.rep, Y.rep)


def ker_coker(f: Morphism, X: BarModule, Y: BarModule):
    """``(ker, inclusion, coker, projection)`` of a module map."""
    Kr, inc = kernel(f)
    C, proj, _ = cokernel(f)
    return X.like(Kr), inc, Y.like(C), proj


def injective_envelope(X: BarModule):
    """``(E, iota)``: each bar ``(l, s)`` embeds as the socle part of ``(r, s-(r-l)g)``."""
    K = X.K
    canon, phi = X.jordan_iso()
    chains = X.jordan()
    ebars = [(X.r, s - (X.r - l) * X.g) for l, s, _ in chains]
    E, eslots = canonical_rep(K, X.g, ebars)
    _, cslots = canonical_rep(K, X.g, [(l, s) for l, s, _ in chains])
    blocks = {d: K.zeros(E.dim(d), n) for d, n in canon.rep.dims.items()}
    for (l, s, _), cpos, epos in zip(chains, cslots, eslots):
        d = s
        for k in range(l):
            blocks[d][epos[k + X.r - l], cpos[k]] = K.one
            d = d + X.g
    iota_c = Morphism(canon.rep, E, blocks)
    iota = iota_c.compose(phi.inverse())
    return X.like(E), iota


def stable_hom_dim(X: BarModule, Y: BarModule) -> int:
    """``dim Hom(X, Y)`` minus maps factoring through the injective envelope of ``X``."""
    X.check_compatible(Y)
    H = hom_space(X.rep, Y.rep)
    if not H:
        return 0
    E, iota = injective_envelope(X)
    comps = [h.compose(iota) for h in hom_space(E.rep, Y.rep)]
    order = hom_vertex_order(X.rep, Y.rep)
    return len(H) - span_rank(X.K, comps, order)


def cosyzygy(X: BarModule) -> BarModule:
    E, iota = injective_envelope(X)
    C, _, _ = cokernel(iota)
    return X.like(C)


def decompose(X: BarModule, rng, budget: int = 64):
    """Fitting-oracle summands, each identified as a bar ``(length, top degree)``."""
    summands = decompose_fitting(X.rep, rng, budget, is_local=lambda Y: _top_dim(X, Y) == 1)
    out = Counter()
    for Y, _ in summands:
        tops = [v for v, n in Y.dims.items() if n - X.K.rank(Y.arrow(t_key(v - X.g, X.g))) > 0]
        if len(tops) != 1 or _top_dim(X, Y) != 1:
            raise InconclusiveError("summand is not cyclic")
        out[(Y.total_dim(), tops[0])] += 1
    return out


def _top_dim(X: BarModule, Y: Rep) -> int:
    n = 0
    for v, d in Y.dims.items():
        n += d - X.K.rank(Y.arrow(t_key(v - X.g, X.g)))
    return n


def random_bar_module(rng, group, r, g, max_dim=12, K=None, support=None) -> BarModule:
    """Random bars (total dim <= ``max_dim``) with a random basis in every degree."""
    K = K or DEFAULT_FIELD
    if support is None:
        support = group.elements() if group.is_finite else [group.normalize([k]) for k in range(-3, 4)]
    bars = []
    total = 0
    target = int(rng.integers(0, max_dim + 1))
    while True:
        l = int(rng.integers(1, r + 1))
        if total + l > target:
            break
        s = support[int(rng.integers(len(support)))]
        bars.append((l, s))
        total += l
    X = BarModule.from_bars(group, r, g, bars, K)
    return scramble(X, rng)


def scramble(X: BarModule, rng) -> BarModule:
    """Conjugate the realization by random invertible matrices in every degree."""
    K = X.K
    P = {v: K.random_invertible(rng, n) for v, n in X.rep.dims.items()}
    new, _ = X.rep.change_basis(P)
    Y = X.like(new)
    return Y
