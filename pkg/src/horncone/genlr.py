"""Generalized Littlewood-Richardson coefficients f(lambda(1), ..., lambda(m)).

The chain sum is read exactly as

    c^{l(2)}_{l(1), mu(1)} * c^{l(3)}_{mu(1), mu(2)} * ... * c^{l(m-1)}_{mu(m-3), l(m)}

with ``l(i)`` the i-th argument (1-based) and the sum over partitions
``mu(1), ..., mu(m-3)`` with at most n parts.  Upper indices are the
arguments 2..m-1; the two outer arguments only appear as lower indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InvalidTuple, SaturationViolation
from .lr import _skew, lr_coeff
from .seqcore import (
    as_partition,
    conjugate,
    contains,
    is_weakly_decreasing,
    partitions_of,
)


@dataclass(frozen=True)
class SpectraTuple:
    """m weakly decreasing integer sequences of common length n."""

    n: int
    seqs: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InvalidTuple("n must be >= 1")
        if len(self.seqs) < 3:
            raise InvalidTuple(f"need m >= 3 sequences, got {len(self.seqs)}")
        for s in self.seqs:
            if len(s) != self.n:
                raise InvalidTuple(f"sequence {s!r} does not have length {self.n}")
            if not is_weakly_decreasing(s):
                raise InvalidTuple(f"sequence {s!r} is not weakly decreasing")

    @property
    def m(self) -> int:
        return len(self.seqs)

    @classmethod
    def from_lists(cls, seqs, n: int | None = None) -> "SpectraTuple":
        """Zero-pad each sequence to length n (default: the longest one)."""
        seqs = [tuple(int(x) for x in s) for s in seqs]
        if n is None:
            n = max([len(s) for s in seqs] + [1])
        padded = []
        for s in seqs:
            if len(s) > n:
                if any(s[n:]):
                    raise InvalidTuple(f"{s!r} has more than {n} entries")
                s = s[:n]
            padded.append(s + (0,) * (n - len(s)))
        return cls(n, tuple(padded))

    def scaled(self, r: int) -> "SpectraTuple":
        return SpectraTuple(self.n, tuple(tuple(r * x for x in s) for s in self.seqs))


def _as_tuple(t) -> SpectraTuple:
    if isinstance(t, SpectraTuple):
        return t
    return SpectraTuple.from_lists(t)


def gamma_normalize(t: SpectraTuple) -> SpectraTuple:
    """Shift the outer pairs so that the first and last sequences end in 0.

    For m > 3, ``(l_n(1)^n)`` comes off l(1), l(2) and ``(l_n(m)^n)`` off
    l(m-1), l(m).  For m = 3 the middle sequence loses ``(l_n(1) + l_n(3))^n``.
    The value of f is unchanged; the result may contain non-partitions.
    """
    t = _as_tuple(t)
    seqs = [list(s) for s in t.seqs]
    m = t.m
    a = seqs[0][-1]
    b = seqs[-1][-1]
    if m == 3:
        shifts = [a, a + b, b]
    else:
        shifts = [a, a] + [0] * (m - 4) + [b, b]
    return SpectraTuple(t.n, tuple(tuple(x - k for x in s) for s, k in zip(seqs, shifts)))


def _normalized_partitions(t: SpectraTuple):
    """Normalized sequences as canonical partitions, or None if any is not one."""
    g = gamma_normalize(t)
    out = []
    for s in g.seqs:
        if s[-1] < 0:
            return None
        out.append(as_partition(s))
    return out


@lru_cache(maxsize=200_000)
def _f_partitions(parts: tuple, n: int) -> int:
    m = len(parts)
    if m == 3:
        return lr_coeff(parts[0], parts[2], parts[1], n)
    # weight bookkeeping: |mu(k)| is forced by the chain
    sizes = []
    w = sum(parts[1]) - sum(parts[0])
    for k in range(1, m - 2):
        if w < 0:
            return 0
        sizes.append(w)
        w = sum(parts[k + 1]) - w
    if sum(parts[m - 2]) != sizes[-1] + sum(parts[m - 1]):
        return 0
    # state: {mu(k): accumulated count}
    if not contains(parts[1], parts[0]) or len(parts[1]) > n:
        return 0
    state = {}
    for mu, c in _skew(parts[1], parts[0], n).items():
        state[mu] = c
    for k in range(1, m - 3):
        upper = parts[k + 1]
        if len(upper) > n:
            return 0
        nxt = {}
        for mu, c in state.items():
            if not contains(upper, mu):
                continue
            for nu, d in _skew(upper, mu, n).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        state = nxt
        if not state:
            return 0
    total = 0
    last_upper, last_lower = parts[m - 2], parts[m - 1]
    for mu, c in state.items():
        total += c * lr_coeff(mu, last_lower, last_upper, n)
    return total


def f_dp(t) -> int:
    """Generalized LR coefficient by dynamic programming over the chain."""
    t = _as_tuple(t)
    parts = _normalized_partitions(t)
    if parts is None:
        return 0
    return _f_partitions(tuple(parts), t.n)


def f_naive(t) -> int:
    """Generalized LR coefficient by explicit enumeration of every chain."""
    t = _as_tuple(t)
    parts = _normalized_partitions(t)
    if parts is None:
        return 0
    n, m = t.n, t.m
    if m == 3:
        return lr_coeff(parts[0], parts[2], parts[1], n)

    def chains(k, prev, acc):
        # k: index of the LR factor whose upper index is parts[k]
        if k == m - 2:
            yield acc * lr_coeff(prev, parts[m - 1], parts[m - 2], n)
            return
        size = sum(parts[k]) - sum(prev)
        if size < 0:
            return
        for mu in partitions_of(size, n):
            if not contains(parts[k], mu):
                continue
            c = lr_coeff(prev, mu, parts[k], n)
            if c:
                yield from chains(k + 1, mu, acc * c)

    return sum(chains(1, parts[0], 1))


f = f_dp


def saturation_scan(t, r_max: int = 3) -> dict:
    """Values f(r t) for r = 1..r_max; raises if nonvanishing is not uniform."""
    t = _as_tuple(t)
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    values = [f_dp(t.scaled(r)) for r in range(1, r_max + 1)]
    nonzero = [v != 0 for v in values]
    if any(nonzero) and not all(nonzero):
        raise SaturationViolation(t.seqs, values)
    return {"seqs": [list(s) for s in t.seqs], "values": values, "nonzero": all(nonzero)}


@dataclass(frozen=True)
class KLQuery:
    lambda_quotient: tuple
    mu_quotient: tuple

    def __post_init__(self):
        if len(self.lambda_quotient) != len(self.mu_quotient):
            raise InvalidTuple("quotients must have the same number of entries")
        if len(self.lambda_quotient) < 1:
            raise InvalidTuple("N must be >= 1")

    @property
    def N(self) -> int:
        return len(self.lambda_quotient)


def kl_delta(lam: Sequence, mu: Sequence) -> int:
    """delta = sum_{0 <= j <= N-2} (N-1-j)(|lambda^j| - |mu^j|)."""
    N = len(lam)
    return sum((N - 1 - j) * (sum(lam[j]) - sum(mu[j])) for j in range(N - 1))


def kl_argument_tuple(lam: Sequence, mu: Sequence) -> list:
    """The 2N-tuple (mu^0, lambda^0, (mu^1)', (lambda^1)', mu^2, lambda^2, ...).

    Odd-indexed pairs are conjugated; for even N this conjugates the last pair.
    """
    args = []
    for j, (a, b) in enumerate(zip(mu, lam)):
        a, b = as_partition(a), as_partition(b)
        if j % 2:
            a, b = conjugate(a), conjugate(b)
        args.extend([a, b])
    return args


def kl_monomial(q: KLQuery) -> tuple:
    """(delta, coefficient) of the single Kazhdan-Lusztig monomial.

    N = 1 is outside the generalized coefficient's range (m = 2); the scalar
    product there is 1 when the two partitions coincide and 0 otherwise.
    """
    lam = [as_partition(x) for x in q.lambda_quotient]
    mu = [as_partition(x) for x in q.mu_quotient]
    delta = kl_delta(lam, mu)
    if q.N == 1:
        return delta, int(lam[0] == mu[0])
    args = kl_argument_tuple(lam, mu)
    n = max([len(a) for a in args] + [1])
    return delta, f_dp(SpectraTuple.from_lists(args, n))
