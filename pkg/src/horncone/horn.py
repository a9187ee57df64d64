"""Horn-type index tuples, their inequalities and the enumeration of S(n, m).

A tuple I = (I_1, ..., I_m) of subsets of {1..n} induces the inequality

    sum_{i even} sum_{j in I_i} lambda_j(i)  <=  sum_{i odd} sum_{j in I_i} lambda_j(i)

and belongs to S(n, m) when |I_1| = |I_2|, |I_(m-1)| = |I_m|, not every
I_i is the full set, and the underline sequences form a tuple with
generalized LR coefficient 1.  The zero tuple is left out since its
inequality is vacuous.  The "nonzero" mode keeps every tuple whose
coefficient is nonzero; both lists cut out the same cone.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from . import __version__
from .errors import InvalidParameters, InvalidTuple
from .flagq import beta_of_jump_sets, build_setting, dim_si, euler_weight
from .genlr import SpectraTuple, f_dp
from .seqcore import conjugate, lambda_of_subset, subsets

MODES = ("nonzero", "minimal")
FORMAT_VERSION = 1


@dataclass(frozen=True)
class HornTuple:
    n: int
    I: tuple  # m ascending tuples

    def __post_init__(self):
        I = tuple(tuple(sorted(int(z) for z in x)) for x in self.I)
        object.__setattr__(self, "I", I)
        if self.n < 1 or len(I) < 3:
            raise InvalidTuple("need n >= 1 and at least three subsets")
        for x in I:
            if len(set(x)) != len(x) or any(not 1 <= z <= self.n for z in x):
                raise InvalidTuple(f"{x!r} is not a subset of 1..{self.n}")
        if len(I[0]) != len(I[1]) or len(I[-2]) != len(I[-1]):
            raise InvalidTuple(f"cardinalities {[len(x) for x in I]} break the central conditions")
        if all(len(x) == self.n for x in I):
            raise InvalidTuple("all subsets are full")

    @property
    def m(self) -> int:
        return len(self.I)

    def sizes(self) -> list:
        return [len(x) for x in self.I]

    def to_json(self) -> list:
        return [list(x) for x in self.I]


@dataclass(frozen=True)
class NotPartition:
    """Marker returned when an underline sequence has a negative entry."""

    index: int  # 1-based position in the tuple
    seq: tuple

    def __bool__(self):
        return False


def _conj_padded(subset, n_entries: int) -> list:
    lam = conjugate(lambda_of_subset(subset))
    return list(lam) + [0] * (n_entries - len(lam))


def underline_lambda(I: HornTuple):
    """The m underline sequences of I, or a NotPartition marker."""
    n, m, sets = I.n, I.m, I.I
    sizes = I.sizes()
    out = []
    for i in range(1, m + 1):
        cur = sets[i - 1]
        if i == m and m % 2 == 0:
            cur = tuple(z for z in cur if z != n)
        seq = _conj_padded(cur, n - len(sets[i - 1]))
        if i % 2 == 1 and 2 <= i <= m - 1:
            if i <= m - 2:
                c = sizes[i - 1] - sizes[i] - sizes[i - 2]
            else:
                c = sizes[m - 2] - sizes[m - 3] - len([z for z in sets[m - 1] if z != n])
            seq = [x - c for x in seq]
        if seq and min(seq) < 0:
            return NotPartition(i, tuple(seq))
        out.append(tuple(seq))
    return tuple(out)


def _s_index(subset, n: int) -> int:
    """Smallest k in 0..|I| with n - k not in I."""
    members = set(subset)
    k = 0
    while k < len(subset) and (n - k) in members:
        k += 1
    return k


def prune_feasible(I: HornTuple) -> bool:
    """Necessary conditions for membership in S(n, m), cheap to test."""
    n, m, sets = I.n, I.m, I.I
    sz = I.sizes()
    if m > 3:
        for i in range(3, m - 1, 2):
            lo = max(sz[i - 2], sz[i])
            hi = sz[i - 2] + sz[i] + _s_index(sets[i - 1], n)
            if not lo <= sz[i - 1] <= hi:
                return False
    if (m - 1) % 2 == 1 and m > 3:
        if sz[m - 3] > sz[m - 2]:
            return False
        if n in sets[m - 1] and n not in sets[m - 2] and not sets[m - 3]:
            return False
    return True


def underline_value(I: HornTuple) -> int:
    lam = underline_lambda(I)
    if not lam:
        return 0
    padded = tuple(tuple(x) + (0,) * (I.n - len(x)) for x in lam)
    return f_dp(SpectraTuple(I.n, padded))


def dim_si_value(I: HornTuple) -> int:
    """beta_I o (beta - beta_I), computed on the quiver."""
    s = build_setting(I.n, I.m)
    b1 = beta_of_jump_sets(s, I.I)
    b2 = {v: s.beta[v] - b1[v] for v in s.vertices}
    return dim_si(s, b2, euler_weight(s, b1))


def crosscheck_descset(I: HornTuple) -> bool:
    """The closed-form underline value agrees with the quiver computation."""
    return underline_value(I) == dim_si_value(I)


@dataclass(frozen=True)
class HornInequality:
    tuple: HornTuple

    def sides(self, lam):
        """(lhs, rhs) as exact rationals; lam[i-1][j-1] is lambda_j(i)."""
        lhs = Fraction(0)
        rhs = Fraction(0)
        for i, subset in enumerate(self.tuple.I, start=1):
            part = sum((Fraction(lam[i - 1][j - 1]) for j in subset), Fraction(0))
            if i % 2 == 0:
                lhs += part
            else:
                rhs += part
        return lhs, rhs

    def holds(self, lam, slack=0) -> bool:
        lhs, rhs = self.sides(lam)
        return lhs <= rhs + slack

    def coefficients(self) -> list:
        """Row of a <= 0 form over the flattened (i, j) coordinates."""
        n, m = self.tuple.n, self.tuple.m
        row = [0] * (n * m)
        for i, subset in enumerate(self.tuple.I, start=1):
            for j in subset:
                row[(i - 1) * n + j - 1] = 1 if i % 2 == 0 else -1
        return row

    def render(self) -> str:
        n = self.tuple.n
        left, right = [], []
        for i, subset in enumerate(self.tuple.I, start=1):
            if not subset:
                continue
            if len(subset) == n and n > 1:
                terms = [f"|lambda({i})|"]
            else:
                terms = [f"lambda_{j}({i})" for j in subset]
            (left if i % 2 == 0 else right).extend(terms)
        return f"{' + '.join(left) or '0'} <= {' + '.join(right) or '0'}"


@dataclass
class InequalitySystem:
    n: int
    m: int
    mode: str
    inequalities: list

    @property
    def tuples(self) -> list:
        return [q.tuple for q in self.inequalities]

    def trace_gap(self, lam) -> Fraction:
        """sum_even |lambda(i)| - sum_odd |lambda(i)|."""
        gap = Fraction(0)
        for i, seq in enumerate(lam, start=1):
            w = sum((Fraction(x) for x in seq), Fraction(0))
            gap += w if i % 2 == 0 else -w
        return gap

    def render(self) -> list:
        lines = [" + ".join(f"|lambda({i})|" for i in range(2, self.m + 1, 2)) + " = "
                 + " + ".join(f"|lambda({i})|" for i in range(1, self.m + 1, 2))]
        lines += [q.render() for q in self.inequalities]
        return lines

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "mode": self.mode,
            "tuples": [q.tuple.to_json() for q in self.inequalities],
        }

    @classmethod
    def from_json(cls, data: dict) -> "InequalitySystem":
        n, m, mode = int(data["n"]), int(data["m"]), data["mode"]
        ineqs = [HornInequality(HornTuple(n, tuple(tuple(x) for x in t))) for t in data["tuples"]]
        for q in ineqs:
            if q.tuple.m != m:
                raise InvalidParameters(f"tuple {q.tuple.to_json()} does not have {m} subsets")
        return cls(n, m, mode, ineqs)


def candidate_tuples(n: int, m: int):
    """All m-tuples meeting the cardinality conditions, in canonical order.

    The all-empty tuple (beta_I = 0, inequality 0 <= 0) is skipped along
    with the all-full one.
    """
    subs = subsets(n)
    for combo in itertools.product(subs, repeat=m):
        if len(combo[0]) != len(combo[1]) or len(combo[-2]) != len(combo[-1]):
            continue
        if all(len(x) == n for x in combo) or not any(combo):
            continue
        yield HornTuple(n, combo)


def _accepts(value: int, mode: str) -> bool:
    return value == 1 if mode == "minimal" else value != 0


def _compute(n: int, m: int, mode: str, prune: bool) -> list:
    out = []
    for t in candidate_tuples(n, m):
        if prune and not prune_feasible(t):
            continue
        if _accepts(underline_value(t), mode):
            out.append(t)
    return out


@lru_cache(maxsize=64)
def _cached(n: int, m: int, mode: str, prune: bool) -> tuple:
    return tuple(_compute(n, m, mode, prune))


def code_fingerprint() -> str:
    h = hashlib.sha256(__version__.encode())
    here = Path(__file__).parent
    for name in ("horn.py", "genlr.py", "lr.py", "seqcore.py", "_lrkernel_py.py"):
        h.update((here / name).read_bytes())
    return h.hexdigest()[:16]


def cache_dir() -> Path:
    env = os.environ.get("HORNCONE_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "horncone"


def _cache_path(n, m, mode) -> Path:
    return cache_dir() / f"S_n{n}_m{m}_{mode}.json"


def _read_disk(n, m, mode):
    path = _cache_path(n, m, mode)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("format") != FORMAT_VERSION or data.get("code") != code_fingerprint():
        return None
    try:
        return InequalitySystem.from_json(data["system"]).tuples
    except (KeyError, ValueError):
        return None


def _write_disk(n, m, mode, tuples) -> None:
    path = _cache_path(n, m, mode)
    sys_ = InequalitySystem(n, m, mode, [HornInequality(t) for t in tuples])
    payload = {"format": FORMAT_VERSION, "code": code_fingerprint(), "system": sys_.to_json()}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        pass  # the cache is advisory


def enumerate_S(n: int, m: int, mode: str = "minimal", *, prune: bool = True,
                disk_cache: bool = False) -> InequalitySystem:
    """The inequality system indexed by S(n, m) (minimal) or its nonzero superset."""
    if mode not in MODES:
        raise InvalidParameters(f"mode must be one of {MODES}, got {mode!r}")
    if not isinstance(n, int) or not isinstance(m, int) or n < 1 or m < 3:
        raise InvalidParameters(f"need n >= 1 and m >= 3, got n={n!r}, m={m!r}")
    tuples = None
    if disk_cache:
        tuples = _read_disk(n, m, mode)
    if tuples is None:
        tuples = list(_cached(n, m, mode, prune))
        if disk_cache:
            _write_disk(n, m, mode, tuples)
    return InequalitySystem(n, m, mode, [HornInequality(t) for t in tuples])
