"""Finite-dimensional representations of quivers with exact linear algebra.

Graded ``K[t]/(t^r)``-modules, inflation chains and grids are all stored as
representations: vertices are hashable labels (degrees, ``(s, d)`` pairs,
``(i, j, d)`` triples) and arrows are keys ``(label, src, tgt)``. Only the
support is stored; a missing vertex or arrow means zero.
"""

from __future__ import annotations

import numpy as np


class InconclusiveError(RuntimeError):
    """A randomized certification ran out of budget."""


class Rep:
    __slots__ = ("K", "dims", "maps")

    def __init__(self, K, dims: dict, maps: dict, check=True):
        self.K = K
        self.dims = {v: int(n) for v, n in dims.items() if n > 0}
        self.maps = {}
        for key, M in maps.items():
            _, v, w = key
            if v in self.dims and w in self.dims:
                if check and M.shape != (self.dims[w], self.dims[v]):
                    raise ValueError(f"arrow {key}: shape {M.shape} vs dims {self.dims[w]}x{self.dims[v]}")
                self.maps[key] = M

    # -- basic ---------------------------------------------------------------
    def dim(self, v) -> int:
        return self.dims.get(v, 0)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return not self.dims

    def arrow(self, key) -> np.ndarray:
        M = self.maps.get(key)
        if M is None:
            _, v, w = key
            return self.K.zeros(self.dim(w), self.dim(v))
        return M

    def vertices(self):
        return sorted(self.dims, key=_vkey)

    def __repr__(self):
        return f"Rep(dims={ {v: self.dims[v] for v in self.vertices()} })"

    @classmethod
    def zero(cls, K):
        return cls(K, {}, {})

    def identity(self) -> "Morphism":
        return Morphism(self, self, {v: self.K.eye(n) for v, n in self.dims.items()})

    def zero_map(self, other) -> "Morphism":
        return Morphism(self, other, {})

    def change_basis(self, P: dict) -> tuple["Rep", "Morphism"]:
        """Conjugate by invertible ``P[v]``; returns the new rep and the iso ``self -> new``."""
        K = self.K
        Pinv = {v: K.inverse(M) for v, M in P.items()}
        maps = {}
        for key, M in self.maps.items():
            _, v, w = key
            maps[key] = K.matmul(K.matmul(P[w], M), Pinv[v])
        new = Rep(K, self.dims, maps)
        return new, Morphism(self, new, dict(P))


def _vkey(v):
    if isinstance(v, tuple):
        return tuple(_vkey(x) for x in v)
    coords = getattr(v, "coords", None)
    if coords is not None:
        return coords
    return v


class Morphism:
    __slots__ = ("src", "tgt", "blocks")

    def __init__(self, src: Rep, tgt: Rep, blocks: dict):
        self.src = src
        self.tgt = tgt
        self.blocks = {v: M for v, M in blocks.items() if src.dim(v) and tgt.dim(v)}

    def block(self, v) -> np.ndarray:
        M = self.blocks.get(v)
        if M is None:
            return self.src.K.zeros(self.tgt.dim(v), self.src.dim(v))
        return M

    def compose(self, other: "Morphism") -> "Morphism":
        """``self o other``."""
        K = self.src.K
        out = {}
        for v in other.blocks:
            if v in self.blocks:
                out[v] = K.matmul(self.blocks[v], other.blocks[v])
        return Morphism(other.src, self.tgt, out)

    __matmul__ = compose

    def __add__(self, other):
        K = self.src.K
        out = dict(self.blocks)
        for v, M in other.blocks.items():
            out[v] = K.reduce(out[v] + M) if v in out else M
        return Morphism(self.src, self.tgt, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "Morphism":
        K = self.src.K
        c = K(c)
        return Morphism(self.src, self.tgt, {v: K.reduce(M * c) for v, M in self.blocks.items()})

    def is_zero(self) -> bool:
        K = self.src.K
        return all(K.is_zero_matrix(M) for M in self.blocks.values())

    def vector(self, order=None) -> np.ndarray:
        K = self.src.K
        if order is None:
            order = hom_vertex_order(self.src, self.tgt)
        parts = [self.block(v).reshape(-1) for v in order]
        if not parts:
            return K.zeros(1, 0)[0]
        return np.concatenate(parts)

    def rank(self) -> int:
        return sum(self.src.K.rank(M) for M in self.blocks.values())

    def is_mono(self) -> bool:
        K = self.src.K
        return all(v in self.blocks and K.rank(self.blocks[v]) == n for v, n in self.src.dims.items())

    def is_epi(self) -> bool:
        K = self.src.K
        return all(v in self.blocks and K.rank(self.blocks[v]) == n for v, n in self.tgt.dims.items())

    def is_iso(self) -> bool:
        return set(self.src.dims.items()) == set(self.tgt.dims.items()) and self.is_mono()

    def inverse(self) -> "Morphism":
        K = self.src.K
        return Morphism(self.tgt, self.src, {v: K.inverse(M) for v, M in self.blocks.items()})

    def commutes(self) -> bool:
        K = self.src.K
        for key in set(self.src.maps) | set(self.tgt.maps):
            _, v, w = key
            lhs = K.matmul(self.tgt.arrow(key), self.block(v))
            rhs = K.matmul(self.block(w), self.src.arrow(key))
            if not K.equal(lhs, rhs):
                return False
        return True


def hom_vertex_order(X: Rep, Y: Rep):
    return sorted((v for v in X.dims if v in Y.dims), key=_vkey)


def hom_system(X: Rep, Y: Rep):
    """Linear system whose nullspace is ``Hom(X, Y)``; returns (matrix, order, offsets)."""
    K = X.K
    order = hom_vertex_order(X, Y)
    offs = {}
    n = 0
    for v in order:
        offs[v] = n
        n += Y.dims[v] * X.dims[v]
    rows = []
    for key in set(X.maps) | set(Y.maps):
        _, v, w = key
        xv, yw = X.dim(v), Y.dim(w)
        if not xv or not yw:
            continue
        blk = K.zeros(yw * xv, n)
        touched = False
        if v in offs and key in Y.maps:
            # Y_a f_v
            blk[:, offs[v] : offs[v] + Y.dims[v] * xv] = K.kron(Y.maps[key], K.eye(xv))
            touched = True
        if w in offs and key in X.maps:
            # - f_w X_a
            part = K.kron(K.eye(yw), X.maps[key].T.copy())
            sl = slice(offs[w], offs[w] + yw * X.dims[w])
            blk[:, sl] = K.reduce(blk[:, sl] - part)
            touched = True
        if touched:
            rows.append(blk)
    A = np.concatenate(rows, axis=0) if rows else K.zeros(0, n)
    return A, order, offs


def _unflatten(X, Y, vec, order, offs):
    blocks = {}
    for v in order:
        sz = Y.dims[v] * X.dims[v]
        blocks[v] = vec[offs[v] : offs[v] + sz].reshape(Y.dims[v], X.dims[v]).copy()
    return Morphism(X, Y, blocks)


def hom_space(X: Rep, Y: Rep) -> list[Morphism]:
    """A basis of ``Hom(X, Y)``."""
    A, order, offs = hom_system(X, Y)
    if A.shape[1] == 0:
        return []
    N = X.K.nullspace(A)
    return [_unflatten(X, Y, N[:, k], order, offs) for k in range(N.shape[1])]


def hom_dim(X: Rep, Y: Rep) -> int:
    A, _, _ = hom_system(X, Y)
    return A.shape[1] - X.K.rank(A)


def span_rank(K, morphisms, order=None) -> int:
    if not morphisms:
        return 0
    if order is None:
        order = hom_vertex_order(morphisms[0].src, morphisms[0].tgt)
    vecs = [f.vector(order) for f in morphisms]
    if len(vecs[0]) == 0:
        return 0
    return K.rank(np.stack(vecs))


# -- subobjects and quotients ---------------------------------------------------
def subrep(X: Rep, S: dict) -> tuple[Rep, Morphism]:
    """Subrepresentation with column bases ``S[v]`` (assumed invariant)."""
    K = X.K
    S = {v: M for v, M in S.items() if M.shape[1] > 0}
    maps = {}
    for key, M in X.maps.items():
        _, v, w = key
        if v in S and w in S:
            img = K.matmul(M, S[v])
            sol = K.solve(S[w], img)
            if sol is None:
                raise ValueError(f"subspace not invariant under arrow {key}")
            maps[key] = sol
        elif v in S and w not in S:
            if not K.is_zero_matrix(K.matmul(M, S[v])):
                raise ValueError(f"subspace not invariant under arrow {key}")
    sub = Rep(K, {v: M.shape[1] for v, M in S.items()}, maps)
    return sub, Morphism(sub, X, S)


def quotient_rep(Y: Rep, S: dict) -> tuple[Rep, Morphism, dict]:
    """Quotient by an invariant subspace ``S[v]``; returns (C, projection, sections)."""
    K = Y.K
    Q, L = {}, {}
    for v, n in Y.dims.items():
        Sv = S.get(v)
        if Sv is None:
            Sv = K.zeros(n, 0)
        Q[v], L[v] = K.quotient(n, Sv)
    maps = {}
    for key, M in Y.maps.items():
        _, v, w = key
        maps[key] = K.matmul(K.matmul(Q[w], M), L[v])
    C = Rep(K, {v: Q[v].shape[0] for v in Y.dims}, maps)
    return C, Morphism(Y, C, Q), L


def kernel(f: Morphism) -> tuple[Rep, Morphism]:
    K = f.src.K
    S = {v: K.nullspace(f.block(v)) for v in f.src.dims}
    return subrep(f.src, S)


def image_basis(f: Morphism) -> dict:
    K = f.src.K
    return {v: K.column_basis(M) for v, M in f.blocks.items()}


def cokernel(f: Morphism) -> tuple[Rep, Morphism, dict]:
    return quotient_rep(f.tgt, image_basis(f))


def image(f: Morphism) -> tuple[Rep, Morphism]:
    return subrep(f.tgt, image_basis(f))


def induced_on_quotients(f: Morphism, q_src: Morphism, l_src: dict, q_tgt: Morphism) -> Morphism:
    """Map ``C_X -> C_Y`` induced by ``f`` through projections with sections ``l_src``."""
    K = f.src.K
    blocks = {}
    for v in q_src.tgt.dims:
        if q_tgt.tgt.dim(v):
            blocks[v] = K.matmul(K.matmul(q_tgt.block(v), f.block(v)), l_src[v])
    return Morphism(q_src.tgt, q_tgt.tgt, blocks)


def span_closure(X: Rep, gens: dict) -> dict:
    """Column bases of the smallest subrepresentation containing ``gens[v]``."""
    K = X.K
    out = {v: K.column_basis(M) for v, M in gens.items() if M.shape[1]}
    out_arrows: dict = {}
    for key in X.maps:
        out_arrows.setdefault(key[1], []).append(key)
    todo = list(out)
    while todo:
        v = todo.pop()
        for key in out_arrows.get(v, []):
            w = key[2]
            img = K.matmul(X.maps[key], out[v])
            if K.is_zero_matrix(img):
                continue
            cur = out.get(w)
            new = img if cur is None else np.concatenate([cur, img], axis=1)
            nb = K.column_basis(new)
            if cur is None or nb.shape[1] > cur.shape[1]:
                out[w] = nb
                todo.append(w)
    return out


def intersect_bases(K, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Column basis of ``span(A) ∩ span(B)``."""
    if A.shape[1] == 0 or B.shape[1] == 0:
        return K.zeros(A.shape[0], 0)
    N = K.nullspace(np.concatenate([A, K.reduce(-B)], axis=1))
    if N.shape[1] == 0:
        return K.zeros(A.shape[0], 0)
    return K.column_basis(K.matmul(A, N[: A.shape[1]]))


def direct_sum(X: Rep, Y: Rep) -> tuple[Rep, list, list]:
    """``X ⊕ Y`` with inclusions ``[iX, iY]`` and projections ``[pX, pY]``."""
    K = X.K
    dims = {}
    for v in set(X.dims) | set(Y.dims):
        dims[v] = X.dim(v) + Y.dim(v)
    maps = {}
    for key in set(X.maps) | set(Y.maps):
        _, v, w = key
        M = K.zeros(dims[w], dims[v])
        if key in X.maps:
            M[: X.dim(w), : X.dim(v)] = X.maps[key]
        if key in Y.maps:
            M[X.dim(w) :, X.dim(v) :] = Y.maps[key]
        maps[key] = M
    S = Rep(K, dims, maps)
    iX, iY, pX, pY = {}, {}, {}, {}
    for v, n in dims.items():
        a, b = X.dim(v), Y.dim(v)
        E = K.eye(n)
        iX[v], iY[v] = E[:, :a].copy(), E[:, a:].copy()
        pX[v], pY[v] = E[:a, :].copy(), E[a:, :].copy()
    return (
        S,
        [Morphism(X, S, iX), Morphism(Y, S, iY)],
        [Morphism(S, X, pX), Morphism(S, Y, pY)],
    )


def direct_sum_many(reps, K=None) -> Rep:
    if not reps:
        return Rep.zero(K)
    out = reps[0]
    for R in reps[1:]:
        out = direct_sum(out, R)[0]
    return out


def random_morphism(basis: list, K, rng):
    f = None
    for b in basis:
        c = K.random_element(rng)
        if c == K.zero:
            continue
        term = b.scale(c)
        f = term if f is None else f + term
    return f


def is_isomorphic_random(X: Rep, Y: Rep, rng, samples: int = 256):
    """Search ``Hom(X, Y)`` for an isomorphism; returns it or ``None``."""
    if X.dims != Y.dims:
        return None
    if X.is_zero():
        return Morphism(X, Y, {})
    basis = hom_space(X, Y)
    if not basis:
        return None
    for _ in range(samples):
        f = random_morphism(basis, X.K, rng)
        if f is not None and f.is_mono():
            return f
    return None


# -- Fitting decomposition -----------------------------------------------------------
def _power_morphism(f: Morphism, N: int) -> Morphism:
    K = f.src.K
    return Morphism(f.src, f.tgt, {v: K.power(M, N) for v, M in f.blocks.items()})


def _eigen_candidates(K, f: Morphism, total: int):
    tr = K.zero
    for M in f.blocks.values():
        for i in range(M.shape[0]):
            tr = K.add(tr, M[i, i])
    out = []
    try:
        out.append(K.div(tr, K(total)))
    except ZeroDivisionError:
        pass
    if hasattr(K, "p") and K.p <= 64:
        out.extend(x for x in K.elements() if x not in out)
    return out


def local_certificate(X: Rep, basis=None) -> bool:
    """Exact check that ``End(X) = K*id + N`` with ``N`` a nilpotent ideal."""
    K = X.K
    if basis is None:
        basis = hom_space(X, X)
    if len(basis) <= 1:
        return len(basis) == 1
    total = X.total_dim()
    ident = X.identity()
    Nmax = max(X.dims.values())
    rad = []
    for b in basis:
        found = None
        for lam in _eigen_candidates(K, b, total):
            n = b - ident.scale(lam)
            if _power_morphism(n, Nmax).is_zero():
                found = n
                break
        if found is None:
            return False
        rad.append(found)
    order = hom_vertex_order(X, X)
    # powers of the span of ``rad`` must reach zero
    cur = rad
    for _ in range(total + 1):
        vecs = [f.vector(order) for f in cur if not f.is_zero()]
        if not vecs:
            return True
        B = X.K.column_basis(np.stack(vecs).T)
        cur = [_unflatten_like(X, B[:, k], order) for k in range(B.shape[1])]
        cur = [a.compose(b) for a in cur for b in rad]
    return False


def _unflatten_like(X, vec, order):
    blocks = {}
    pos = 0
    for v in order:
        n = X.dims[v]
        blocks[v] = vec[pos : pos + n * n].reshape(n, n).copy()
        pos += n * n
    return Morphism(X, X, blocks)


def split_once(X: Rep, rng, budget: int = 64, basis=None):
    """Try to split ``X`` by a Fitting decomposition of a random endomorphism.

    Returns ``(S_ker, S_im)`` subspace dictionaries, or ``None``.
    """
    K = X.K
    if basis is None:
        basis = hom_space(X, X)
    if len(basis) <= 1:
        return None
    total = X.total_dim()
    N = max(X.dims.values())
    ident = X.identity()
    for _ in range(budget):
        f = random_morphism(basis, K, rng)
        if f is None:
            continue
        for lam in _eigen_candidates(K, f, total)[:8] or [K.zero]:
            g = f - ident.scale(lam) if lam != K.zero else f
            gN = _power_morphism(g, N)
            r = gN.rank()
            if 0 < r < total:
                ker = {v: K.nullspace(gN.block(v)) for v in X.dims}
                im = {v: K.column_basis(gN.block(v)) for v in X.dims}
                return ker, im
    return None


def decompose_fitting(X: Rep, rng, budget: int = 64, is_local=None):
    """Indecomposable summands of ``X`` as ``(Rep, inclusion into X)`` pairs.

    ``is_local`` is an optional fast sufficient test for indecomposability.
    Raises :class:`InconclusiveError` when neither a split nor a locality
    certificate is found.
    """
    out = []
    stack = [(X, X.identity())]
    while stack:
        Y, inc = stack.pop()
        if Y.is_zero():
            continue
        if is_local is not None and is_local(Y):
            out.append((Y, inc))
            continue
        basis = hom_space(Y, Y)
        if len(basis) == 1:
            out.append((Y, inc))
            continue
        parts = split_once(Y, rng, budget, basis)
        if parts is None:
            if local_certificate(Y, basis):
                out.append((Y, inc))
                continue
            raise InconclusiveError("Fitting search found no idempotent and locality was not certified")
        for S in parts:
            sub, j = subrep(Y, S)
            stack.append((sub, inc.compose(j)))
    return out
