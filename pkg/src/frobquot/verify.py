"""Randomized property checks, one trial at a time with a derived seed.

Every trial gets ``numpy.random.default_rng([seed, trial])`` so a failure can
be replayed from the printed pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .field import DEFAULT_FIELD
from .functors import cok_functor, inf_cok
from .grading import group_L, group_trivial, group_V4, group_Z
from .inflation import (
    grid_stable_hom,
    make_theta,
    pullback_matches,
    random_mono_square,
    strictly_inflated_check,
    validate_grid,
)
from .mfact import (
    chain_sum,
    conjugate_chain,
    fact_stable_hom_dim,
    psi,
    random_factorization,
    strand,
    theta_chain,
)
from .poly import HomPoly, univariate_base
from .rep import InconclusiveError
from .tmod import BarModule, decompose, random_bar_module
from .wpl import (
    certify_grid_iso,
    dcok_direct,
    dcok_staged,
    essential_kernel_predicate,
    hs_sides,
    line_bundle,
    random_mcm,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

WEIGHTS = [(2, 2, 3), (2, 3, 3), (3, 2, 2)]


def _omega(base, r):
    return HomPoly(base, {(r,): 1})


def trial_barcode(rng, K):
    choice = int(rng.integers(3))
    if choice == 0:
        G = group_Z("d")
        g = G(1)
    elif choice == 1:
        G = group_V4()
        g = G.gen("x") if rng.random() < 0.5 else G.gen("x") + G.gen("y")
    else:
        G = group_trivial()
        g = G.zero
    r = int(rng.integers(2, 5))
    X = random_bar_module(rng, G, r, g, 12, K)
    return PASS if X.bars == decompose(X, rng) else FAIL


def trial_lemma22(rng, K):
    sq = random_mono_square(rng, K)
    c = strictly_inflated_check(sq)
    return PASS if len(set(c)) == 1 and c[0] == pullback_matches(sq) else FAIL


def trial_cok_kernel(rng, K):
    k, r = [(2, 2), (2, 3), (3, 3)][int(rng.integers(3))]
    B = univariate_base(K)
    h = B.group(int(rng.integers(-10, 11)))
    w = _omega(B, r)
    if not cok_functor(psi(0, h, B, w, k - 1)).is_zero():
        return FAIL
    i = int(rng.integers(1, k))
    got = cok_functor(psi(i, h, B, w, k - 1))
    want = make_theta(i, BarModule.from_bars(B.group, r, B.group(1), [(r, h)], K), k - 1)
    return PASS if got.bar_table() == want.bar_table() else FAIL


def trial_cok_sthom(rng, K):
    k, r = [(2, 2), (2, 3), (3, 2), (3, 3)][int(rng.integers(4))]
    B = univariate_base(K)
    w = _omega(B, r)
    X = random_factorization(rng, B, w, k, max_rank=2, hrange=(-1, 1))
    Y = random_factorization(rng, B, w, k, max_rank=2, hrange=(-1, 1))
    res = grid_stable_hom(cok_functor(X), cok_functor(Y))
    if res.inconclusive:
        return INCONCLUSIVE
    return PASS if res.value == fact_stable_hom_dim(X, Y) else FAIL


def _strands(B, w, k, r, h):
    out = []
    for cuts in combinations_with_replacement(range(r + 1), k - 1):
        exps = [b - a for a, b in zip((0,) + cuts, cuts + (r,))]
        out.append((exps[-1] == r, strand(B, w, exps, h)))
    return out


def trial_inf_kernel(rng, K):
    k, r = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)][int(rng.integers(5))]
    B = univariate_base(K)
    w = _omega(B, r)
    length = int(rng.integers(1, 4))
    chain = None
    in_kernel = True
    for _ in range(int(rng.integers(1, 3))):
        h = B.group(int(rng.integers(-1, 2)))
        options = _strands(B, w, k, r, h)
        kern, S = options[int(rng.integers(len(options)))]
        j = int(rng.integers(1, length + 1))
        piece = theta_chain(j, S, length)
        chain = piece if chain is None else chain_sum(chain, piece)
        in_kernel = in_kernel and kern
    G = inf_cok(*conjugate_chain(chain, rng))
    if not validate_grid(G).ok:
        return FAIL
    return PASS if G.is_zero() == in_kernel else FAIL


def trial_dcok_kernel(rng, K):
    p, q, r = WEIGHTS[int(rng.integers(3))]
    L = group_L(p, q, r)
    l = L.normalize([int(rng.integers(p)), int(rng.integers(q)), int(rng.integers(-6, 7))])
    zero = dcok_direct(line_bundle(p, q, r, l, K)).is_zero()
    return PASS if zero == essential_kernel_predicate(p, q, r, l) else FAIL


def trial_dcok_oracle(rng, K):
    p, q, r = WEIGHTS[int(rng.integers(3))]
    m = random_mcm(rng, p, q, r, K)
    res = certify_grid_iso(dcok_direct(m), dcok_staged(m), rng)
    if not res.same_bars:
        return FAIL
    return PASS if res.certified else INCONCLUSIVE


def trial_hs_symmetry(rng, K):
    p, q = 2, 3
    B = univariate_base(K, "y")
    w = _omega(B, q)
    X = random_factorization(rng, B, w, p, max_rank=2, hrange=(0, 1))
    Y = X if rng.random() < 0.3 else random_factorization(rng, B, w, p, max_rank=2, hrange=(0, 1))
    (a1, a2), (b1, b2) = hs_sides(X), hs_sides(Y)
    s1, s2 = grid_stable_hom(a1, b1), grid_stable_hom(a2, b2)
    if s1.inconclusive or s2.inconclusive:
        return INCONCLUSIVE
    return PASS if s1.value == s2.value == fact_stable_hom_dim(X, Y) else FAIL


PROPERTIES = {
    "barcode": trial_barcode,
    "lemma22": trial_lemma22,
    "cok-kernel": trial_cok_kernel,
    "cok-sthom": trial_cok_sthom,
    "inf-kernel": trial_inf_kernel,
    "dcok-kernel": trial_dcok_kernel,
    "dcok-oracle": trial_dcok_oracle,
    "hs-symmetry": trial_hs_symmetry,
}


@dataclass
class VerifyReport:
    name: str
    trials: int
    seed: int
    counts: dict = field(default_factory=lambda: {PASS: 0, FAIL: 0, INCONCLUSIVE: 0})
    failing: list = field(default_factory=list)  # trial indices
    inconclusive: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counts[FAIL] == 0

    def to_json(self) -> dict:
        return {
            "property": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "pass": self.counts[PASS],
            "fail": self.counts[FAIL],
            "inconclusive": self.counts[INCONCLUSIVE],
            "failing_seeds": [[self.seed, t] for t in self.failing],
            "inconclusive_seeds": [[self.seed, t] for t in self.inconclusive],
        }


def run_trial(name: str, seed: int, t: int, field=None) -> str:
    K = field or DEFAULT_FIELD
    rng = np.random.default_rng([seed, t])
    try:
        return PROPERTIES[name](rng, K)
    except InconclusiveError:
        return INCONCLUSIVE


def _trial_with_retries(name, seed, t, field, retries):
    out = run_trial(name, seed, t, field)
    attempt = 0
    while out == INCONCLUSIVE and attempt < retries:
        attempt += 1
        out = run_trial(name, seed + 7919 * attempt, t, field)
    return out


def verify(name: str, trials: int, seed: int = 0, field=None, retries: int = 0, jobs: int = 1) -> VerifyReport:
    """Run ``trials`` trials; inconclusive trials may be re-seeded up to ``retries`` times.

    With ``jobs > 1`` trials run in worker processes; results are collected in
    trial order, so the report does not depend on scheduling.
    """
    if name not in PROPERTIES:
        raise KeyError(name)
    rep = VerifyReport(name, trials, seed)
    args = [(name, seed, t, field, retries) for t in range(trials)]
    if jobs > 1 and trials > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_trial_with_retries, *zip(*args), chunksize=max(1, trials // (4 * jobs))))
    else:
        outcomes = [_trial_with_retries(*a) for a in args]
    for t, out in enumerate(outcomes):
        rep.counts[out] += 1
        if out == FAIL:
            rep.failing.append(t)
        elif out == INCONCLUSIVE:
            rep.inconclusive.append(t)
    return rep
