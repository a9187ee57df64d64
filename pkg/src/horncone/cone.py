"""Exact membership in K(n, m) and the cross-checks of its descriptions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EquivalenceViolation, InvalidParameters, SamplerUnavailable, SystemMismatch
from .genlr import SpectraTuple, f_dp
from .horn import InequalitySystem, enumerate_S
from .spectra import RationalSpectra


@dataclass
class MembershipReport:
    member: bool
    trace_gap: Fraction
    violations: list = field(default_factory=list)  # (HornTuple, lhs, rhs)
    slack: Fraction = Fraction(0)

    def to_json(self) -> dict:
        def q(x):
            x = Fraction(x)
            return int(x) if x.denominator == 1 else str(x)

        return {
            "member": self.member,
            "trace_gap": q(self.trace_gap),
            "slack": q(self.slack),
            "violations": [{"tuple": t.to_json(), "lhs": q(lhs), "rhs": q(rhs)}
                           for t, lhs, rhs in self.violations],
        }


def _as_spectra(lam) -> RationalSpectra:
    if isinstance(lam, RationalSpectra):
        return lam
    if isinstance(lam, SpectraTuple):
        return RationalSpectra(lam.n, lam.m, lam.seqs)
    return RationalSpectra.from_lists(lam)


def check_membership(lam, sys: InequalitySystem, slack=0) -> MembershipReport:
    """Evaluate the trace equality and every inequality of sys exactly; lists all violations."""
    lam = _as_spectra(lam)
    if lam.n != sys.n or lam.m != sys.m:
        raise SystemMismatch(f"spectra are ({lam.n}, {lam.m}), system is ({sys.n}, {sys.m})")
    slack = Fraction(slack)
    gap = sys.trace_gap(lam.seqs)
    violations = []
    for q in sys.inequalities:
        lhs, rhs = q.sides(lam.seqs)
        if lhs > rhs + slack:
            violations.append((q.tuple, lhs, rhs))
    member = abs(gap) <= slack and not violations
    return MembershipReport(member, gap, violations, slack)


def is_member(lam, mode: str = "minimal", slack=0) -> bool:
    lam = _as_spectra(lam)
    return check_membership(lam, enumerate_S(lam.n, lam.m, mode), slack).member


def equivalence_harness(t) -> tuple:
    """(f != 0, nonzero-mode member, minimal-mode member); raises if they differ."""
    if not isinstance(t, SpectraTuple):
        t = SpectraTuple.from_lists(t)
    a = f_dp(t) != 0
    b = check_membership(t, enumerate_S(t.n, t.m, "nonzero"))
    c = check_membership(t, enumerate_S(t.n, t.m, "minimal"))
    verdicts = (a, b.member, c.member)
    if len(set(verdicts)) != 1:
        raise EquivalenceViolation(t.seqs, verdicts, {"nonzero": b.to_json(), "minimal": c.to_json()})
    return verdicts


def scaling_check(lam, factors, sys: InequalitySystem | None = None) -> bool:
    """True when the membership verdict is the same for lam and every r * lam."""
    lam = _as_spectra(lam)
    if sys is None:
        sys = enumerate_S(lam.n, lam.m, "minimal")
    base = check_membership(lam, sys).member
    for r in factors:
        r = Fraction(r)
        if r <= 0:
            raise InvalidParameters("scaling factors must be positive")
        if check_membership(lam.scaled(r), sys).member != base:
            return False
    return True


def dimension_probe(n: int, m: int, samples: int, rng=None, rel_tol: float = 1e-6) -> int:
    """Numerical rank of the span of sampled points of K(n, m); expected mn - 1."""
    if samples < m * n + 5:
        raise InvalidParameters(f"need at least {m * n + 5} samples")
    try:
        import numpy as np

        from .spectra import forward_sample
    except ImportError as exc:  # pragma: no cover - numpy is a hard dependency
        raise SamplerUnavailable(str(exc)) from exc
    rng = np.random.default_rng(rng)
    rows = []
    for _ in range(samples):
        fam, _spec = forward_sample(n, m, rng)
        rows.append(np.concatenate(fam.spectra()))
    sv = np.linalg.svd(np.array(rows), compute_uv=False)
    return int(np.sum(sv > rel_tol * sv[0]))


__all__ = [
    "MembershipReport",
    "check_membership",
    "dimension_probe",
    "equivalence_harness",
    "is_member",
    "scaling_check",
]
