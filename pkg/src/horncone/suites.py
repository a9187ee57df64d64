"""Cross-module property suites shared by the CLI ``verify`` command and the tests.

Every suite returns a dict with ``suite``, ``passed``, ``checked`` and a
list of ``failures`` (each a JSON-ready counterexample record).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from . import cone, flagq, genlr, horn, pgroups, spectra
from .errors import EquivalenceViolation, SaturationViolation
from .seqcore import partitions_of

# Inequalities of S(2, 4), in the rendering of HornInequality.render().
EXAMPLE_EX_INEQUALITIES = frozenset([
    "lambda_2(2) + |lambda(4)| <= lambda_2(1) + |lambda(3)|",
    "lambda_1(2) + |lambda(4)| <= lambda_1(1) + |lambda(3)|",
    "lambda_1(4) <= lambda_1(3)",
    "lambda_2(4) <= lambda_2(3)",
    "lambda_2(2) + lambda_1(4) <= lambda_1(1) + lambda_1(3)",
    "lambda_1(2) + lambda_2(4) <= lambda_1(1) + lambda_1(3)",
    "lambda_2(2) + lambda_2(4) <= lambda_2(1) + lambda_1(3)",
    "lambda_2(2) + lambda_2(4) <= lambda_1(1) + lambda_2(3)",
])
EXAMPLE_EX_REDUNDANT = "|lambda(4)| <= |lambda(3)|"

# Outside K(2, 4) although it meets the necessary conditions below.
NON_MEMBER = ((2, 1), (3, 1), (4, 1), (2, 2))


def _necessary_24(lam) -> list:
    """Conditions forced by H(2) + H(4) = H(1) + H(3) and H(1) <= H(2) alone."""
    l = {(j, i): lam[i - 1][j - 1] for i in range(1, 5) for j in (1, 2)}
    w = [sum(s) for s in lam]
    return [
        w[1] + w[3] == w[0] + w[2],
        l[2, 2] + l[1, 4] <= l[1, 1] + l[1, 3],
        l[1, 2] + l[2, 4] <= l[1, 1] + l[1, 3],
        l[2, 2] + l[2, 4] <= l[2, 1] + l[1, 3],
        l[2, 2] + l[2, 4] <= l[1, 1] + l[2, 3],
        l[1, 1] <= l[1, 2],
        l[2, 1] <= l[2, 2],
    ]


def _result(name, checked, failures, **extra) -> dict:
    out = {"suite": name, "passed": not failures, "checked": checked, "failures": failures[:20]}
    out.update(extra)
    return out


def random_tuple(rng: random.Random, n_max=3, m_max=5, lo=-4, hi=4):
    n = rng.randint(1, n_max)
    m = rng.randint(3, m_max)
    seqs = [tuple(sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True)) for _ in range(m)]
    return genlr.SpectraTuple(n, tuple(seqs))


def balanced_tuple(rng: random.Random, n_max=3, m_max=5, lo=-4, hi=4):
    """Random tuple adjusted so the trace equality holds, when that stays in range."""
    for _ in range(50):
        t = random_tuple(rng, n_max, m_max, lo, hi)
        seqs = [list(s) for s in t.seqs]
        gap = sum(sum(s) for s in seqs[1::2]) - sum(sum(s) for s in seqs[0::2])
        # shift the last entry of lambda(1) up by gap
        seqs[0][-1] += gap
        s0 = seqs[0]
        if lo <= s0[-1] <= hi and all(a >= b for a, b in zip(s0, s0[1:])):
            return genlr.SpectraTuple(t.n, tuple(tuple(s) for s in seqs))
    return t


def exhaustive_n2(max_part=3, ms=(3, 4)):
    parts = [(a, b) for a in range(max_part + 1) for b in range(a + 1)]
    for m in ms:
        for combo in itertools.product(parts, repeat=m):
            yield genlr.SpectraTuple(2, combo)


def example_ex() -> dict:
    failures = []
    sys_ = horn.enumerate_S(2, 4, "minimal")
    lines = [q.render() for q in sys_.inequalities]
    expected = set(EXAMPLE_EX_INEQUALITIES) | {EXAMPLE_EX_REDUNDANT}
    if len(lines) != 9 or set(lines) != expected:
        failures.append({"check": "S(2,4)", "got": lines})
    rep = cone.check_membership(NON_MEMBER, sys_)
    viol = [(t.to_json(), int(a), int(b)) for t, a, b in rep.violations]
    if rep.member or viol != [([[], [], [2], [2]], 2, 1)]:
        failures.append({"check": "non-member report", "got": rep.to_json()})
    if genlr.f_dp(genlr.SpectraTuple(2, NON_MEMBER)) != 0:
        failures.append({"check": "f of non-member"})
    if not all(_necessary_24(NON_MEMBER)):
        failures.append({"check": "necessary conditions", "got": _necessary_24(NON_MEMBER)})
    return _result("example-ex", 4, failures)


def saturation(samples=200, seed=0, r_max=3) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        t = balanced_tuple(rng)
        try:
            genlr.saturation_scan(t, r_max)
        except SaturationViolation as exc:
            failures.append({"seqs": [list(s) for s in t.seqs], "values": exc.values})
    return _result("saturation", samples, failures)


def equivalence(samples=500, seed=0) -> dict:
    rng = random.Random(seed)
    failures = []
    nonzero = 0
    for k in range(samples):
        t = balanced_tuple(rng) if k % 2 else random_tuple(rng)
        try:
            nonzero += equivalence_one(t)
        except EquivalenceViolation as exc:
            failures.append({"seqs": [list(s) for s in t.seqs], "verdicts": exc.verdicts})
    return _result("equivalence", samples, failures, nonzero=nonzero)


def equivalence_one(t) -> bool:
    return cone.equivalence_harness(t)[0]


def descset(n_max=3, m_max=5) -> dict:
    checked, failures = 0, []
    for n in range(1, n_max + 1):
        for m in range(3, m_max + 1):
            for t in horn.enumerate_S(n, m, "nonzero").tuples:
                checked += 1
                a, b = horn.underline_value(t), horn.dim_si_value(t)
                if a != b:
                    failures.append({"tuple": t.to_json(), "underline": a, "dim_si": b})
    return _result("descset", checked, failures)


def pgroup_suite(max_weight=3, p=2, ms=(3, 4)) -> dict:
    parts = [q for k in range(max_weight + 1) for q in partitions_of(k, max_weight)]
    bound = p**max_weight
    checked, failures = 0, []
    for m in ms:
        for types in itertools.product(parts, repeat=m):
            q = pgroups.ExactSequenceQuery(p, types)
            a, b = pgroups.decide_les(q), pgroups.brute_force_les(q, bound)
            checked += 1
            if a != b:
                failures.append({"types": [list(t) for t in types], "criterion": a, "brute_force": b})
    return _result("pgroups", checked, failures)


def forward(n=3, m=5, count=100, seed=0, slack=Fraction(1, 10**8)) -> dict:
    rng = np.random.default_rng(seed)
    sys_ = horn.enumerate_S(n, m, "minimal")
    failures = []
    for _ in range(count):
        _fam, lam = spectra.forward_sample(n, m, rng)
        rep = cone.check_membership(lam, sys_, slack)
        if not rep.member:
            failures.append(rep.to_json() | {"lambda": lam.to_json()})
    return _result("forward", count, failures)


def quiver_identity(samples=100, seed=0, rs=(1, 2, 3)) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        t = balanced_tuple(rng)
        s = flagq.build_setting(t.n, t.m)
        sig = flagq.sigma_lambda(s, t)
        for r in rs:
            a = flagq.dim_si(s, s.beta, flagq.scaled_weight(sig, r))
            b = genlr.f_dp(t.scaled(r))
            if a != b:
                failures.append({"seqs": [list(x) for x in t.seqs], "r": r, "dim_si": a, "f": b})
    return _result("quiver", samples, failures)


SUITES = {
    "example-ex": example_ex,
    "saturation": saturation,
    "equivalence": equivalence,
    "descset": descset,
    "pgroups": pgroup_suite,
    "forward": forward,
}
