"""The generalized flag quiver, its weights and semi-invariant dimensions.

Vertices are addressed as ``(j, i)`` for the flag vertices (1 <= j <= n-1,
1 <= i <= m) and as plain integers 2..m-1 for the central vertices.  The
pairs ``(n, i)`` are accepted as aliases for the central vertex that flag i
is attached to: flags 1, 2 meet vertex 2, flags m-1, m meet vertex m-1 and
every other flag meets vertex i.

Orientation: even flags point toward their central vertex, odd flags point
away from it, and each main arrow runs from its even central vertex to its
odd one (so 2 is a source, 3 a sink, and so on).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CentralMismatch, DimensionMismatch, InvalidParameters
from .genlr import SpectraTuple, f_dp
from .seqcore import conjugate, is_weakly_decreasing


@dataclass(frozen=True)
class FlagQuiverSetting:
    n: int
    m: int
    vertices: tuple
    arrows: tuple  # (tail, head) pairs of canonical ids
    beta: dict = field(compare=False)

    def central(self, i: int) -> int:
        """Central vertex that flag i is attached to."""
        if i <= 2:
            return 2
        if i >= self.m - 1:
            return self.m - 1
        return i

    def canon(self, v):
        """Canonical id of a vertex, resolving ``(n, i)`` aliases."""
        if isinstance(v, tuple):
            j, i = v
            if not 1 <= i <= self.m or not 1 <= j <= self.n:
                raise InvalidParameters(f"no vertex {v!r}")
            return self.central(i) if j == self.n else (j, i)
        if not 2 <= v <= self.m - 1:
            raise InvalidParameters(f"no central vertex {v!r}")
        return v

    def value(self, vec: dict, j: int, i: int):
        """Entry of a vertex-indexed map at ``(j, i)``, aliases included."""
        return vec[self.canon((j, i))]

    def flag_vertices(self):
        return [v for v in self.vertices if isinstance(v, tuple)]

    def central_vertices(self):
        return list(range(2, self.m))

    def zero(self) -> dict:
        return {v: 0 for v in self.vertices}

    def unit(self, v) -> dict:
        e = self.zero()
        e[self.canon(v)] = 1
        return e


def build_setting(n: int, m: int) -> FlagQuiverSetting:
    if not isinstance(n, int) or not isinstance(m, int) or n < 1 or m < 3:
        raise InvalidParameters(f"need n >= 1 and m >= 3, got n={n!r}, m={m!r}")
    vertices = [(j, i) for i in range(1, m + 1) for j in range(1, n)]
    vertices += list(range(2, m))
    proto = FlagQuiverSetting(n, m, tuple(vertices), (), {})
    arrows = []
    for i in range(1, m + 1):
        for j in range(1, n):
            lo, hi = (j, i), proto.canon((j + 1, i))
            arrows.append((lo, hi) if i % 2 == 0 else (hi, lo))
    for k in range(2, m - 1):
        arrows.append((k, k + 1) if k % 2 == 0 else (k + 1, k))
    beta = {v: (v[0] if isinstance(v, tuple) else n) for v in vertices}
    return FlagQuiverSetting(n, m, tuple(vertices), tuple(arrows), beta)


def _check_vector(s: FlagQuiverSetting, vec: dict) -> dict:
    if set(vec) != set(s.vertices):
        raise DimensionMismatch("vector is not defined on exactly the vertices of the setting")
    return vec


def euler_form(s: FlagQuiverSetting, alpha: dict, beta: dict) -> int:
    """<alpha, beta> = sum_x alpha(x) beta(x) - sum_a alpha(ta) beta(ha)."""
    _check_vector(s, alpha)
    _check_vector(s, beta)
    total = sum(alpha[x] * beta[x] for x in s.vertices)
    total -= sum(alpha[t] * beta[h] for t, h in s.arrows)
    return total


def pairing(sigma: dict, alpha: dict):
    """sigma(alpha) = sum_x sigma(x) alpha(x)."""
    return sum(sigma[x] * alpha[x] for x in alpha)


def euler_weight(s: FlagQuiverSetting, beta1: dict) -> dict:
    """The weight <beta1, .> as a vertex map."""
    _check_vector(s, beta1)
    sigma = dict(beta1)
    for t, h in s.arrows:
        sigma[h] -= beta1[t]
    return sigma


def sigma_lambda(s: FlagQuiverSetting, t: SpectraTuple) -> dict:
    """The weight sigma_lambda attached to a tuple of m length-n sequences."""
    if t.n != s.n or t.m != s.m:
        raise DimensionMismatch(f"tuple has (n, m) = ({t.n}, {t.m}), setting has ({s.n}, {s.m})")
    n, m = s.n, s.m
    lam = t.seqs  # lam[i-1][j-1] = lambda_j(i)
    sigma = {}
    for i in range(1, m + 1):
        sign = -1 if i % 2 else 1
        for j in range(1, n):
            sigma[(j, i)] = sign * (lam[i - 1][j - 1] - lam[i - 1][j])
    last = [seq[-1] for seq in lam]
    for i in range(2, m):
        sigma[i] = (-1) ** i * last[i - 1]
    if m == 3:
        sigma[2] = last[1] - last[0] - last[2]
    else:
        sigma[2] = last[1] - last[0]
        sigma[m - 1] = (-1) ** (m - 1) * (last[m - 2] - last[m - 1])
    return sigma


def beta_of_jump_sets(s: FlagQuiverSetting, I) -> dict:
    """Dimension vector beta_I with jump sets I = (I_1, ..., I_m)."""
    n, m = s.n, s.m
    if len(I) != m:
        raise DimensionMismatch(f"need {m} subsets, got {len(I)}")
    I = [tuple(sorted(x)) for x in I]
    for x in I:
        if any(not 1 <= z <= n for z in x) or len(set(x)) != len(x):
            raise InvalidParameters(f"{x!r} is not a subset of 1..{n}")
    sizes = [len(x) for x in I]
    if sizes[0] != sizes[1] or sizes[m - 2] != sizes[m - 1]:
        raise CentralMismatch(f"subset sizes {sizes} break |I_1|=|I_2| or |I_(m-1)|=|I_m|")
    vec = {}
    for i in range(1, m + 1):
        for j in range(1, n):
            vec[(j, i)] = sum(1 for z in I[i - 1] if z <= j)
    for i in range(1, m + 1):
        vec[s.central(i)] = sizes[i - 1]
    return vec


def jump_sets(s: FlagQuiverSetting, beta1: dict) -> tuple:
    """Inverse of beta_of_jump_sets; rejects vectors that are not 0/1-step."""
    _check_vector(s, beta1)
    out = []
    for i in range(1, s.m + 1):
        prev, jumps = 0, []
        for l in range(1, s.n + 1):
            cur = s.value(beta1, l, i)
            if cur - prev not in (0, 1):
                raise InvalidParameters(f"flag {i} of {beta1!r} has a step outside {{0, 1}}")
            if cur > prev:
                jumps.append(l)
            prev = cur
        out.append(tuple(jumps))
    return tuple(out)


def gamma_sequences(s: FlagQuiverSetting, beta2: dict, sigma: dict):
    """The m sequences whose generalized LR coefficient is dim SI(Q, beta2)_sigma.

    Returns None when a flag sign condition fails.  Sequences are padded to
    length n and may fail to be partitions.
    """
    n, m = s.n, s.m
    gammas = []
    for i in range(1, m + 1):
        sign = 1 if i % 2 == 0 else -1
        parts = []
        for j in range(n - 1, 0, -1):
            e = sign * sigma[(j, i)]
            if e < 0:
                return None
            parts.extend([beta2[(j, i)]] * e)
        g = list(conjugate([p for p in parts if p > 0]))
        if 2 <= i <= m - 1:
            d = beta2[i]
            c = sign * sigma[i]
            if len(g) > d:
                return None
            g += [0] * (d - len(g))
            g = [x + c for x in g]
        g += [0] * (n - len(g))
        gammas.append(tuple(g))
    return gammas


def dim_si(s: FlagQuiverSetting, beta2: dict, sigma: dict) -> int:
    """dim SI(Q, beta2)_sigma through the LR chain of the gamma sequences.

    beta2 must be weakly increasing with steps of at most one along flags.
    Only flag vertices carry a sign condition; the value at a central vertex
    shifts the corresponding gamma, and a negative entry gives 0.
    """
    _check_vector(s, beta2)
    _check_vector(s, sigma)
    gammas = gamma_sequences(s, beta2, sigma)
    if gammas is None:
        return 0
    for g in gammas:
        if not is_weakly_decreasing(g) or (g and g[-1] < 0):
            return 0
    return f_dp(SpectraTuple(n=s.n, seqs=tuple(gammas)))


def scaled_weight(sigma: dict, r: int) -> dict:
    return {k: r * v for k, v in sigma.items()}
