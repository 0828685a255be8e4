import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobquot.field import PrimeField, RationalField, make_field
from frobquot.functors import chart_base
from frobquot.glinalg import (
    HomogeneityError,
    HomogMatrix,
    PolySyntaxError,
    WindowError,
    ZMat,
    graded_diag,
    parse_poly,
    univariate_base,
    window_instantiate,
)
from frobquot.wpl import wpl_base


def test_parse_homogeneous_relation(K):
    B = wpl_base(2, 2, 3, K)
    f = parse_poly(B, "x^2 + z^3")
    L = B.group
    assert f.degree == L(0, 0, 3)
    assert f.degree == L(2, 0, 0)


def test_parse_zero_and_errors(K):
    B = wpl_base(2, 2, 3, K)
    assert parse_poly(B, "0").is_zero()
    with pytest.raises(HomogeneityError):
        parse_poly(B, "x + z")
    with pytest.raises(PolySyntaxError):
        parse_poly(B, "x^^2")


def test_identity_instantiation(K):
    B = univariate_base(K)
    G = B.group
    I = HomogMatrix.identity(B, [G(0)])
    inst = window_instantiate(I, [G(0), G(1), G(2)])
    for d, (M, sb, tb) in inst.items():
        assert M.shape == (1, 1) and M[0, 0] == 1


def test_z_entry_instantiation(K):
    B = univariate_base(K)
    G = B.group
    m = HomogMatrix.from_entries(B, [G(0)], [G(1)], [["z"]])
    inst = window_instantiate(m, [G(0), G(1)])
    assert inst[G(0)][0].shape == (1, 0)
    M, sb, tb = inst[G(1)]
    assert M.tolist() == [[1]]


def test_window_error(K):
    B = univariate_base(K)
    G = B.group
    m = HomogMatrix.from_entries(B, [G(0)], [G(3)], [["z^3"]])
    with pytest.raises(WindowError):
        window_instantiate(m, [G(0)], require_generators=True)


def _quotient_oracle(K, B, d, poly_exp):
    """Matrix of multiplication by the monomial ``poly_exp`` from degree ``d - deg`` to ``d``,
    computed in the free ring modulo the span of relation multiples (no rewriting)."""
    free = B.without_relation()
    ci, p, bi, r, s = B.relation
    rel = {tuple(p if k == ci else 0 for k in range(2)): 1, tuple(r if k == bi else 0 for k in range(2)): s}
    c = free.mono_degree(next(iter(rel)))
    mons = free.monomials(d)
    idx = {e: k for k, e in enumerate(mons)}
    normal = [e for e in mons if e[ci] < p]
    shifts = free.monomials(d - c)
    N = K.zeros(len(mons), len(normal) + len(shifts))
    for k, e in enumerate(normal):
        N[idx[e], k] = 1
    for k, m in enumerate(shifts):
        for e, a in rel.items():
            N[idx[tuple(x + y for x, y in zip(m, e))], len(normal) + k] = a % K.p
    A = N
    src = [e for e in B.monomials(d - free.mono_degree(poly_exp))]
    out = K.zeros(len(normal), len(src))
    for k, m in enumerate(src):
        v = K.zeros(len(mons), 1)
        v[idx[tuple(x + y for x, y in zip(m, poly_exp))], 0] = 1
        sol = K.solve(A, v)
        out[:, k] = sol[: len(normal), 0]
    return out, normal, src


def test_relation_rewrite_matches_quotient(K):
    # x^2 = -z^3 in K[x,z]/(x^2 + z^3): instantiating x^2 equals -(z^3) and the quotient-space oracle
    B = chart_base(2, 3, K)
    G = B.group
    x2 = HomogMatrix.from_entries(B, [G.zero], [G(2, 0)], [["x^2"]])
    z3 = HomogMatrix.from_entries(B, [G.zero], [G(2, 0)], [["z^3"]])
    window = [G(i, n) for i in range(2) for n in range(0, 8)]
    a = window_instantiate(x2, window)
    b = window_instantiate(z3, window)
    for d in window:
        Ma, sb, tb = a[d]
        assert K.equal(Ma, K.reduce(-b[d][0]))
        oracle, normal, src = _quotient_oracle(K, B, d, (2, 0))
        assert [e for _, e in tb] == normal
        assert K.equal(Ma, oracle)


def test_graded_diag_examples(K):
    d = graded_diag(ZMat(K, K.array([[1]]), [0], [1]))
    assert d.exponents == [1]
    # [[z, z^2], [z^2, z^3]] with target degrees (0, -1), source degrees (1, 2)
    Z = ZMat(K, K.array([[1, 1], [1, 1]]), [0, -1], [1, 2])
    d = graded_diag(Z)
    assert d.exponents == [1]
    assert d.D.shape == (2, 2)
    assert d.rank == 1
    d = graded_diag(ZMat.zero(K, [0, 1], [2]))
    assert d.exponents == []


@st.composite
def zmats(draw):
    m = draw(st.integers(1, 4))
    n = draw(st.integers(1, 4))
    tgt = draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m))
    src = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    vals = draw(st.lists(st.integers(0, 4), min_size=m * n, max_size=m * n))
    M = [[vals[i * n + a] if src[a] >= tgt[i] else 0 for a in range(n)] for i in range(m)]
    return M, tgt, src


@settings(max_examples=150, deadline=None)
@given(zmats())
def test_graded_diag_certificate(data):
    K = PrimeField(5)
    M, tgt, src = data
    Z = ZMat(K, K.array(M), tgt, src)
    d = graded_diag(Z)
    assert (d.U @ Z @ d.V) == d.D
    assert K.is_invertible(d.U.M) and K.is_invertible(d.V.M)
    # rank over the fraction field K(z): substitute z = 1 (all entries are monomials)
    assert d.rank == K.rank(K.array(M))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_instantiation_commutes_with_composition(seed):
    K = PrimeField(5)
    rng = np.random.default_rng(seed)
    B = univariate_base(K)
    G = B.group
    degs = [sorted(rng.integers(-2, 3, size=int(rng.integers(1, 4))).tolist()) for _ in range(3)]

    def rand(tgt, src):
        M = [[int(rng.integers(5)) if s >= t else 0 for s in src] for t in tgt]
        return ZMat(K, K.array(M), tgt, src).to_homog(B)

    f = rand(degs[1], degs[0])
    g = rand(degs[2], degs[1])
    window = [G(n) for n in range(-3, 6)]
    gf = window_instantiate(g.compose(f), window)
    wf, wg = window_instantiate(f, window), window_instantiate(g, window)
    for d in window:
        assert K.equal(gf[d][0], K.matmul(wg[d][0], wf[d][0]))


def test_fields():
    assert make_field("f101").p == 101
    Q = make_field("rational")
    assert isinstance(Q, RationalField)
    A = Q.array([[1, 2], [2, 4]])
    assert Q.rank(A) == 1
    F = PrimeField(7)
    assert F.rank(F.array([[1, 2], [2, 4]])) == 1
    assert F.equal(F.matmul(F.inverse(F.array([[2, 1], [1, 1]])), F.array([[2, 1], [1, 1]])), F.eye(2))
