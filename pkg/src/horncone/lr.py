"""Littlewood-Richardson coefficients.

Two independent routes are provided:

* the tableau route (:func:`skew_expand`, :func:`lr_coeff`) counts LR skew
  tableaux with the enumerator selected in :mod:`horncone._backend`;
* the polynomial route (:func:`lr_oracle`) multiplies Schur polynomials in
  ``n`` variables, built from Gelfand-Tsetlin branching, and peels off the
  dominance-maximal dominant monomial until nothing is left.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import _backend
from .errors import LengthMismatch, NotAPartition
from .seqcore import as_partition, contains, is_weakly_decreasing, partitions_of

SchurExpansion = dict  # {partition: positive int}


class SkewShape(NamedTuple):
    outer: tuple
    inner: tuple


@lru_cache(maxsize=None)
def _skew(outer: tuple, inner: tuple, n: int) -> dict:
    return _backend.lr_fillings(outer, inner, n)


def skew_expand(shape: SkewShape, n: int) -> SchurExpansion:
    """Census of LR tableaux of ``shape`` by content, contents with <= n rows.

    Returns a fresh dict; ``{(): 1}`` for an empty skew shape.
    """
    outer = as_partition(shape.outer)
    inner = as_partition(shape.inner)
    if not contains(outer, inner):
        raise NotAPartition(f"{inner!r} is not contained in {outer!r}")
    if n <= 0:
        return {(): 1} if outer == inner else {}
    return dict(_skew(outer, inner, n))


def lr_coeff(inner, content, outer, n: int) -> int:
    """c^{outer}_{inner, content}, restricted to partitions with <= n rows."""
    inner = as_partition(inner)
    content = as_partition(content)
    outer = as_partition(outer)
    if len(outer) > n or len(inner) > n or len(content) > n:
        return 0
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if not contains(outer, inner) or not contains(outer, content):
        return 0
    return _skew(outer, inner, n).get(content, 0)


def lr_coeff_signature(inner, content, outer) -> int:
    """LR coefficient for GL(n) signatures ``inner``, ``outer`` and a partition ``content``.

    Both signatures are shifted by ``-inner[-1]``; the value is zero when the
    shifted outer signature is not a partition.
    """
    inner = tuple(int(x) for x in inner)
    outer = tuple(int(x) for x in outer)
    if len(inner) != len(outer):
        raise LengthMismatch(f"signature lengths {len(inner)} and {len(outer)} differ")
    n = len(inner)
    if not (is_weakly_decreasing(inner) and is_weakly_decreasing(outer)):
        raise NotAPartition("signatures must be weakly decreasing")
    if n == 0:
        return 1 if not as_partition(content) else 0
    k = inner[-1]
    inner_s = tuple(x - k for x in inner)
    outer_s = tuple(x - k for x in outer)
    if outer_s[-1] < 0:
        return 0
    return lr_coeff(inner_s, content, outer_s, n)


# --- polynomial oracle -------------------------------------------------------

@lru_cache(maxsize=None)
def schur_polynomial(kappa: tuple, n: int) -> np.ndarray:
    """Dense coefficient array of s_kappa(x_1..x_n); shape (kappa_1 + 1,) * n.

    Uses the branching rule s_kappa(x_1..x_n) = sum over nu interlacing kappa
    of s_nu(x_1..x_{n-1}) * x_n^{|kappa| - |nu|}.
    """
    kappa = as_partition(kappa)
    top = kappa[0] if kappa else 0
    out = np.zeros((top + 1,) * n, dtype=np.int64)
    if len(kappa) > n:
        return out
    if n == 1:
        out[top] = 1
        return out
    k = kappa + (0,) * (n - len(kappa))
    total = sum(k)
    ranges = [range(k[i + 1], k[i] + 1) for i in range(n - 1)]

    def walk(i, nu):
        if i == n - 1:
            sub = schur_polynomial(as_partition(nu), n - 1)
            idx = tuple(slice(0, s) for s in sub.shape) + (total - sum(nu),)
            out[idx] += sub
            return
        for x in ranges[i]:
            walk(i + 1, nu + (x,))

    walk(0, ())
    out.setflags(write=False)
    return out


def _product_dominant_coeffs(mu: tuple, nu: tuple, n: int) -> dict:
    """Coefficients of the dominant monomials of s_mu * s_nu in n variables."""
    size = sum(mu) + sum(nu)
    bound = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    shape = (bound + 1,) * n
    a = np.zeros(shape, dtype=np.int64)
    b = np.zeros(shape, dtype=np.int64)
    sa = schur_polynomial(mu, n)
    sb = schur_polynomial(nu, n)
    a[tuple(slice(0, s) for s in sa.shape)] = sa
    b[tuple(slice(0, s) for s in sb.shape)] = sb
    coeffs = {}
    for alpha in partitions_of(size, n, bound):
        alpha = alpha + (0,) * (n - len(alpha))
        # [x^alpha](a*b) = sum over beta <= alpha of a[beta] * b[alpha - beta]
        fwd = a[tuple(slice(0, x + 1) for x in alpha)]
        rev = b[tuple(slice(x, None, -1) if x else slice(0, 1) for x in alpha)]
        c = int((fwd * rev).sum())
        if c:
            coeffs[as_partition(alpha)] = c
    return coeffs


@lru_cache(maxsize=None)
def oracle_expansion(mu: tuple, nu: tuple, n: int) -> dict:
    """s_mu * s_nu in n variables, as {lambda: c}, by dominant-monomial peeling."""
    mu = as_partition(mu)
    nu = as_partition(nu)
    if len(mu) > n or len(nu) > n:
        return {}
    if n == 0:
        return {(): 1}
    remaining = _product_dominant_coeffs(mu, nu, n)
    result = {}
    # lexicographic descending order refines dominance
    order = sorted(remaining, reverse=True)
    for kappa in order:
        c = remaining.get(kappa, 0)
        if c == 0:
            continue
        if c < 0:
            raise ArithmeticError(f"negative peel coefficient at {kappa!r}")
        result[kappa] = c
        s = schur_polynomial(kappa, n)
        for alpha in order:
            if alpha > kappa or alpha not in remaining:
                continue
            idx = alpha + (0,) * (n - len(alpha))
            if all(i < d for i, d in zip(idx, s.shape)):
                k = int(s[idx])
                if k:
                    remaining[alpha] -= c * k
    return result


def lr_oracle(inner, content, outer, n: int) -> int:
    """c^{outer}_{inner, content} from the Schur polynomial product in n variables."""
    inner = as_partition(inner)
    content = as_partition(content)
    outer = as_partition(outer)
    if len(outer) > n:
        return 0
    return oracle_expansion(inner, content, n).get(outer, 0)
