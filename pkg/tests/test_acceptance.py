"""The nine primary acceptance criteria, each at its stated size and tolerance.

Every criterion prints one ``PASS``/``FAIL`` line; run ``python3
tests/test_acceptance.py`` to get only those lines.
"""

import json
import sys
import time
from itertools import combinations_with_replacement

import numpy as np
import pytest

from frobquot.cli import example_6_5_table, golden_path
from frobquot.field import PrimeField
from frobquot.functors import cok_functor, inf_cok
from frobquot.grading import group_L
from frobquot.inflation import grid_stable_hom, make_theta, validate_grid
from frobquot.mfact import (
    chain_sum,
    conjugate_chain,
    fact_stable_hom_dim,
    psi,
    random_factorization,
    strand,
    theta_chain,
)
from frobquot.poly import HomPoly, univariate_base
from frobquot.tmod import BarModule
from frobquot.verify import verify
from frobquot.wpl import (
    certify_grid_iso,
    dcok_direct,
    dcok_staged,
    essential_kernel_predicate,
    happel_seidel_report,
    line_bundle,
    random_mcm,
)

K = PrimeField(5)
WEIGHTS = [(2, 2, 3), (2, 3, 3), (3, 2, 2)]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        # bypass capture so the line lands in the test log
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok

    return emit


def _setup(r):
    B = univariate_base(K)
    return B, HomPoly(B, {(r,): 1})


def line_bundles(p, q, r, nmax=6):
    L = group_L(p, q, r)
    for i in range(p):
        for j in range(q):
            for n in range(-nmax, nmax + 1):
                yield L(i, j, n)


def test_1_barcode_vs_fitting(report):
    t = time.perf_counter()
    rep = verify("barcode", 1000, seed=1, field=K)
    dt = time.perf_counter() - t
    n = rep.counts["pass"]
    ok = rep.ok and n == 1000 and rep.counts["inconclusive"] == 0 and dt < 60
    assert report(1, ok, f"{n}/1000 barcode trials agree with the Fitting oracle in {dt:.1f} s (limit 60 s)")


def test_2_lemma22(report):
    rep = verify("lemma22", 500, seed=2, field=K)
    n = rep.counts["pass"]
    ok = rep.ok and n == 500
    assert report(2, ok, f"{n}/500 mono squares, {rep.counts['fail']} discrepancies")


def test_3_cok_essential_kernel(report):
    bad = []
    checked = 0
    for k, r in [(2, 2), (2, 3), (3, 3)]:
        B, w = _setup(r)
        n = k - 1
        for h in range(-10, 11):
            hd = B.group(h)
            checked += 1
            if not cok_functor(psi(0, hd, B, w, n)).is_zero():
                bad.append(("psi0", k, r, h))
            P = BarModule.from_bars(B.group, r, B.group(1), [(r, hd)], K)
            for i in range(1, n + 1):
                checked += 1
                if cok_functor(psi(i, hd, B, w, n)).bar_table() != make_theta(i, P, n).bar_table():
                    bad.append((f"psi{i}", k, r, h))
    assert report(3, not bad, f"{checked} psi objects with |h| <= 10, {len(bad)} mismatches {bad[:3]}")


def test_4_stable_hom_through_cok(report):
    parts = []
    ok = True
    for k, r in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        B, w = _setup(r)
        rng = np.random.default_rng([4, k, r])
        mism = inconc = 0
        pairs = 100
        for _ in range(pairs):
            X = random_factorization(rng, B, w, k, max_rank=2, hrange=(-1, 1))
            Y = random_factorization(rng, B, w, k, max_rank=2, hrange=(-1, 1))
            res = grid_stable_hom(cok_functor(X), cok_functor(Y))
            if res.inconclusive:
                inconc += 1
            elif res.value != fact_stable_hom_dim(X, Y):
                mism += 1
        ok = ok and mism == 0 and inconc == 0
        parts.append(f"{(k, r)}: {pairs} pairs, {mism} mismatches, {inconc} inconclusive")
    assert report(4, ok, "(n+1, r) " + "; ".join(parts))


def test_5_inf_essential_kernel(report):
    total = bad = 0
    rng = np.random.default_rng(5)
    for k, r in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        B, w = _setup(r)
        for cuts in combinations_with_replacement(range(r + 1), k - 1):
            exps = [b - a for a, b in zip((0,) + cuts, cuts + (r,))]
            S = strand(B, w, exps, B.group(0))
            in_kernel = exps[-1] == r
            for length in (1, 2, 3):
                for j in range(1, length + 1):
                    total += 1
                    # plain theta^j and a conjugated copy plus a kernel summand
                    chain = theta_chain(j, S, length)
                    G = inf_cok(*chain)
                    T = theta_chain(1, psi(0, B.group(1), B, w, k - 1), length)
                    G2 = inf_cok(*conjugate_chain(chain_sum(chain, T), rng))
                    if G.is_zero() != in_kernel or not validate_grid(G).ok:
                        bad += 1
                    elif G2.bar_table() != G.bar_table():
                        bad += 1
    assert report(5, bad == 0, f"{total} enumerated theta^j chains (length <= 3), {bad} wrong")


def test_6_dcok_line_bundle_kernel(report):
    lines = []
    ok = True
    for p, q, r in WEIGHTS:
        mism = count = 0
        for l in line_bundles(p, q, r):
            count += 1
            if dcok_direct(line_bundle(p, q, r, l, K)).is_zero() != essential_kernel_predicate(p, q, r, l):
                mism += 1
        ok = ok and mism == 0
        lines.append(f"{(p, q, r)}: {count} bundles, {mism} mismatches")
    assert report(6, ok, "; ".join(lines))


def test_7_staged_vs_direct(report):
    rng = np.random.default_rng(7)
    total = mism = inconc = 0

    def check(m):
        nonlocal total, mism, inconc
        total += 1
        A, B = dcok_direct(m), dcok_staged(m)
        res = certify_grid_iso(A, B, rng)
        if not res.same_bars:
            mism += 1
            return
        tries = 0
        while not res.certified and tries < 3:  # re-seeded retries
            tries += 1
            res = certify_grid_iso(A, B, np.random.default_rng([7, total, tries]))
        if not res.certified:
            inconc += 1

    for p, q, r in WEIGHTS:
        for l in line_bundles(p, q, r):
            check(line_bundle(p, q, r, l, K))
        for _ in range(50):
            check(random_mcm(rng, p, q, r, K))
    ok = mism == 0 and inconc <= 0.01 * total
    assert report(7, ok, f"{total} presentations, {mism} mismatches, {inconc} inconclusive ({100 * inconc / total:.1f}%)")


def test_8_example_6_5_golden(report):
    table = example_6_5_table(K)
    golden = json.loads(golden_path().read_text(encoding="utf-8"))
    images = [row["cells"]["1,1"] for row in table["rows"]]
    shape = (
        images[:3] == ["0", "0", "0"]
        and table["rows"][3]["projective"]
        and images[4].startswith("M(1,")
        and images[5].startswith("M(2,")
    )
    survivors = sum(1 for row in table["rows"] if not row["zero"] and not row["projective"])
    ok = table == golden and shape and survivors == 2
    assert report(8, ok, f"images {images}; {survivors} non-projective survivors; golden {'match' if table == golden else 'MISMATCH'}")


def test_9_happel_seidel(report):
    rep = happel_seidel_report(2, 3, samples=50, seed=9, field=K)
    nonzero = sum(1 for row in rep.rows if row[2])
    ok = rep.agree and len(rep.rows) >= 50
    assert report(9, ok, f"(p,q) = (2,3): {len(rep.rows)} pairs ({nonzero} stably nonzero), agree={rep.agree}, {rep.inconclusive} inconclusive")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
