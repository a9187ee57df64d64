"""Hermitian-matrix realizations of points of K(n, m).

A family consists of Hermitian H(1..m) and positive semi-definite
B(1..m-3) tied by the chain

    H(1) + B(1) = H(2),  B(k-1) + B(k) = H(k+1)  (2 <= k <= m-3),
    H(m) + B(m-3) = H(m-1),

and for m = 3 simply H(2) = H(1) + H(3).  ``forward_sample`` builds such a
family from random data; ``witness_search`` tries to find one with
prescribed spectra by cyclic projections.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, InvalidParameters, InvalidTuple

log = logging.getLogger(__name__)

_RAT_DEN = 10**6
_RAT_TOL = 1e-12


def _rationalize(x: float) -> Fraction:
    """Continued-fraction truncation; the exact binary value if that is too lossy."""
    q = Fraction(float(x)).limit_denominator(_RAT_DEN)
    if abs(float(q) - float(x)) <= _RAT_TOL * max(1.0, abs(float(x))):
        return q
    return Fraction(float(x))


@dataclass(frozen=True)
class RationalSpectra:
    n: int
    m: int
    seqs: tuple  # m tuples of n Fractions, weakly decreasing

    def __post_init__(self):
        seqs = tuple(tuple(Fraction(x) for x in s) for s in self.seqs)
        object.__setattr__(self, "seqs", seqs)
        if len(seqs) != self.m or any(len(s) != self.n for s in seqs):
            raise InvalidTuple(f"expected {self.m} sequences of length {self.n}")
        for s in seqs:
            if any(a < b for a, b in zip(s, s[1:])):
                raise InvalidTuple(f"{[str(x) for x in s]} is not weakly decreasing")

    @classmethod
    def from_lists(cls, seqs) -> "RationalSpectra":
        seqs = [tuple(Fraction(x) for x in s) for s in seqs]
        if not seqs:
            raise InvalidTuple("no sequences")
        return cls(len(seqs[0]), len(seqs), tuple(seqs))

    @classmethod
    def from_floats(cls, seqs) -> "RationalSpectra":
        rows = []
        for s in seqs:
            vals = sorted((float(x) for x in s), reverse=True)
            r = [_rationalize(x) for x in vals]
            if any(a < b for a, b in zip(r, r[1:])):
                r = [Fraction(x) for x in vals]
            rows.append(tuple(r))
        return cls.from_lists(rows)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in s] for s in self.seqs], dtype=float)

    def scaled(self, r) -> "RationalSpectra":
        r = Fraction(r)
        return RationalSpectra(self.n, self.m, tuple(tuple(r * x for x in s) for s in self.seqs))

    def to_json(self) -> list:
        return [[_num_json(x) for x in s] for s in self.seqs]


def _num_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _herm(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))


@dataclass
class HermitianFamily:
    H: list
    B: list = field(default_factory=list)

    def __post_init__(self):
        self.H = [_herm(np.asarray(h, dtype=complex)) for h in self.H]
        self.B = [_herm(np.asarray(b, dtype=complex)) for b in self.B]
        m = len(self.H)
        if m < 3:
            raise InvalidParameters("need at least three matrices")
        n = self.H[0].shape[0]
        if any(h.shape != (n, n) for h in self.H + self.B):
            raise DimensionMismatch("matrices of different sizes")
        if len(self.B) != m - 3:
            raise DimensionMismatch(f"need {m - 3} coupling matrices, got {len(self.B)}")

    @property
    def m(self) -> int:
        return len(self.H)

    @property
    def n(self) -> int:
        return self.H[0].shape[0]

    def spectra(self) -> list:
        return [np.sort(np.linalg.eigvalsh(h))[::-1] for h in self.H]

    def to_json(self) -> dict:
        def enc(a):
            return [[[float(z.real), float(z.imag)] for z in row] for row in a]

        return {"H": [enc(h) for h in self.H], "B": [enc(b) for b in self.B]}

    @classmethod
    def from_json(cls, data: dict) -> "HermitianFamily":
        def dec(a):
            return np.array([[complex(re, im) for re, im in row] for row in a])

        return cls([dec(h) for h in data["H"]], [dec(b) for b in data.get("B", [])])


@dataclass(frozen=True)
class ProjectionConfig:
    max_iterations: int = 10_000
    tolerance: float = 1e-9
    restarts: int = 20
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_iterations <= 0 or self.tolerance <= 0 or self.restarts <= 0:
            raise InvalidParameters("iteration count, tolerance and restarts must be positive")
        if self.rng_seed < 0:
            raise InvalidParameters("rng_seed must be nonnegative")


def _random_hermitian(n, rng, scale=1.0):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * _herm(a) / np.sqrt(2.0)


def _random_psd(n, rng, scale=1.0):
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2 * n)
    return scale * (g @ g.conj().T)


def _random_unitary(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def chain_family(H1, Hm, B, m: int) -> HermitianFamily:
    """Solve the chain for the H's given H(1), H(m) (or H(3) when m = 3) and the B's."""
    if m == 3:
        return HermitianFamily([H1, H1 + Hm, Hm], [])
    H = [None] * m
    H[0] = H1
    H[m - 1] = Hm
    H[1] = H1 + B[0]
    for k in range(2, m - 2):
        H[k] = B[k - 2] + B[k - 1]
    H[m - 2] = Hm + B[m - 4]
    return HermitianFamily(H, list(B))


def forward_sample(n: int, m: int, rng=None):
    """A random family and its spectra, which lie in K(n, m) by construction."""
    if n < 1 or m < 3:
        raise InvalidParameters(f"need n >= 1 and m >= 3, got n={n}, m={m}")
    rng = np.random.default_rng(rng)
    H1 = _random_hermitian(n, rng)
    Hm = _random_hermitian(n, rng)
    B = [_random_psd(n, rng) for _ in range(m - 3)]
    fam = chain_family(H1, Hm, B, m)
    return fam, RationalSpectra.from_floats(fam.spectra())


def partial_sums(H: list) -> list:
    """The alternating sums that must be PSD: sum_{j<=i} (-1)^(i+j) H(j), 2 <= i <= m-2, and H(m-1) - H(m)."""
    m = len(H)
    if m == 3:
        return []
    out = []
    for i in range(2, m - 1):
        out.append(sum((-1) ** (i + j) * H[j - 1] for j in range(1, i + 1)))
    out.append(H[m - 2] - H[m - 1])
    return out


def residual_report(fam: HermitianFamily, lam) -> dict:
    """Spectrum deviation, trace-chain residual and PSD violations of a family."""
    if not isinstance(lam, RationalSpectra):
        lam = RationalSpectra.from_lists(lam)
    if fam.m != lam.m or fam.n != lam.n:
        raise DimensionMismatch(f"family is ({fam.n}, {fam.m}), spectra are ({lam.n}, {lam.m})")
    target = lam.as_array()
    spec = np.array(fam.spectra())
    spectrum_dev = float(np.max(np.abs(spec - target)))
    even = sum(fam.H[i] for i in range(1, fam.m, 2))
    odd = sum(fam.H[i] for i in range(0, fam.m, 2))
    chain = float(np.linalg.norm(even - odd))
    mins = [float(np.min(np.linalg.eigvalsh(p))) for p in partial_sums(fam.H)]
    psd = max([0.0] + [-x for x in mins])
    return {
        "spectrum_deviation": spectrum_dev,
        "chain_residual": chain,
        "partial_sum_min_eigenvalues": mins,
        "psd_violation": psd,
        "max": max(spectrum_dev, chain, psd),
    }


# --- projection machinery ------------------------------------------------------

def _constraint_matrix(m: int) -> np.ndarray:
    """Rows of the homogeneous chain equations over the variables (H(1..m), B(1..m-3))."""
    K = m + max(m - 3, 0)
    if m == 3:
        return np.array([[-1.0, 1.0, -1.0]])
    A = np.zeros((m - 2, K))
    b = lambda k: m + k - 1  # column of B(k)
    A[0, 1], A[0, 0], A[0, b(1)] = 1, -1, -1
    for r, k in enumerate(range(2, m - 2), start=1):
        A[r, k], A[r, b(k - 1)], A[r, b(k)] = 1, -1, -1
    A[m - 3, m - 2], A[m - 3, m - 1], A[m - 3, b(m - 3)] = 1, -1, -1
    return A


class _Projector:
    def __init__(self, lam: RationalSpectra):
        self.m, self.n = lam.m, lam.n
        self.target = lam.as_array()
        A = _constraint_matrix(self.m)
        self.P = np.eye(A.shape[1]) - A.T @ np.linalg.solve(A @ A.T, A)

    def affine(self, X):
        return np.tensordot(self.P, X, axes=(1, 0))

    def sets(self, X):
        m = self.m
        w, v = np.linalg.eigh(_herm(X))
        # eigh is ascending; targets are descending
        vals = np.empty_like(w)
        vals[:m] = self.target[:, ::-1]
        vals[m:] = np.clip(w[m:], 0.0, None)
        return (v * vals[:, None, :]) @ np.conj(np.swapaxes(v, -1, -2))

    def family(self, X) -> HermitianFamily:
        return HermitianFamily(list(X[: self.m]), list(X[self.m:]))


@dataclass
class WitnessResult:
    success: bool
    family: HermitianFamily | None
    best_residual: float
    iterations: int
    restarts_used: int
    report: dict

    def __bool__(self):
        return self.success

    def to_json(self) -> dict:
        out = {
            "success": self.success,
            "best_residual": self.best_residual,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "residual": self.report,
        }
        if self.family is not None:
            out["family"] = self.family.to_json()
        return out


def _cold_start(proj: _Projector, rng) -> np.ndarray:
    n, m = proj.n, proj.m
    scale = max(1.0, float(np.max(np.abs(proj.target))))
    mats = []
    for i in range(m):
        u = _random_unitary(n, rng)
        mats.append((u * proj.target[i]) @ u.conj().T)
    for _ in range(max(m - 3, 0)):
        mats.append(_random_psd(n, rng, scale))
    return proj.affine(np.array(mats))


def witness_search(lam, cfg: ProjectionConfig | None = None, start: HermitianFamily | None = None) -> WitnessResult:
    """Search for a family with spectra lam by cyclic projections.

    Each sweep projects onto the chain equations and then onto the product
    of the isospectral sets and the PSD cone.  A run restarts from fresh
    random unitaries when it stalls; a failure is not a proof of
    non-membership.
    """
    if not isinstance(lam, RationalSpectra):
        lam = RationalSpectra.from_lists(lam)
    cfg = cfg or ProjectionConfig()
    rng = np.random.default_rng(cfg.rng_seed)
    proj = _Projector(lam)
    best = (np.inf, None, None)
    total_iters = 0
    window = 250
    for attempt in range(cfg.restarts):
        if attempt == 0 and start is not None:
            X = np.array(start.H + start.B, dtype=complex)
        else:
            X = _cold_start(proj, rng)
        history = []
        for it in range(cfg.max_iterations):
            Y = proj.sets(X)
            gap = float(np.linalg.norm(proj.affine(Y) - Y))
            total_iters += 1
            if gap <= 10 * cfg.tolerance or it % 50 == 0:
                rep = residual_report(proj.family(Y), lam)
                if rep["max"] < best[0]:
                    best = (rep["max"], proj.family(Y), rep)
                if rep["max"] <= cfg.tolerance:
                    return WitnessResult(True, best[1], best[0], total_iters, attempt, best[2])
            X = proj.affine(Y)
            history.append(gap)
            if len(history) > window and history[-1] > 0.99 * history[-1 - window]:
                break  # stalled
        log.debug("restart %d after %d iterations, best residual %.3g", attempt, total_iters, best[0])
    return WitnessResult(False, best[1], float(best[0]), total_iters, cfg.restarts, best[2] or {})
