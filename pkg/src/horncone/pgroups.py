"""Long exact sequences of finite abelian p-groups.

A group of type lambda is Z/p^lambda_1 x ... x Z/p^lambda_r.  A sequence

    0 -> M_1 -> M_2 -> ... -> M_m -> 0

of groups of prescribed types exists exactly when the generalized LR
coefficient of the types is nonzero; ``decide_les`` uses that criterion and
``brute_force_les`` searches embeddings directly for small groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form

from .errors import InstanceTooLarge, InvalidParameters, InvalidTuple, SingularInput
from .genlr import SpectraTuple, f_dp
from .seqcore import as_partition


def _is_prime(p: int) -> bool:
    return isinstance(p, int) and p >= 2 and factorint(p) == {p: 1}


@dataclass(frozen=True)
class PGroupType:
    p: int
    lam: tuple

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidParameters(f"{self.p!r} is not a prime")
        object.__setattr__(self, "lam", as_partition(self.lam))

    @property
    def order(self) -> int:
        return self.p ** sum(self.lam)

    @property
    def moduli(self) -> tuple:
        return tuple(self.p**k for k in self.lam)


@dataclass(frozen=True)
class ExactSequenceQuery:
    p: int
    types: tuple

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidParameters(f"{self.p!r} is not a prime")
        types = tuple(as_partition(t) for t in self.types)
        object.__setattr__(self, "types", types)
        if len(types) < 3:
            raise InvalidTuple("need at least three groups")

    @property
    def m(self) -> int:
        return len(self.types)


def decide_les(q: ExactSequenceQuery) -> bool:
    """Existence through the nonvanishing of f; does not depend on p."""
    n = max([len(t) for t in q.types] + [1])
    return f_dp(SpectraTuple.from_lists(q.types, n)) != 0


def _valuation(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def quotient_type(sup: PGroupType, relations) -> tuple:
    """Type of sup modulo the subgroup generated by the columns of ``relations``.

    The quotient is Z^r modulo the columns of diag(p^lambda) and the
    relations; its invariant factors come from the Smith normal form.
    """
    mods = sup.moduli
    r = len(mods)
    rel = [list(map(int, col)) for col in _columns(relations, r)]
    if r == 0:
        return ()
    cols = [[mods[i] if i == j else 0 for i in range(r)] for j in range(r)]
    cols += [[c % mods[i] for i, c in enumerate(col)] for col in rel]
    M = Matrix(r, len(cols), lambda i, j: cols[j][i])
    D = smith_normal_form(M, domain=ZZ)
    diag = [abs(int(D[i, i])) for i in range(r)]
    if any(d == 0 for d in diag):
        raise SingularInput("relation matrix has a zero invariant factor")
    return as_partition(sorted((_valuation(d, sup.p) for d in diag if d != 1), reverse=True))


def _columns(relations, r: int) -> list:
    if relations is None:
        return []
    rows = [list(row) for row in relations]
    if not rows:
        return []
    if len(rows) != r:
        raise SingularInput(f"relation matrix has {len(rows)} rows, group has {r} generators")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise SingularInput("ragged relation matrix")
    return [[rows[i][j] for i in range(r)] for j in range(width)]


def _elements(mods: tuple):
    return itertools.product(*[range(k) for k in mods])


def _torsion(mods: tuple, e: int) -> list:
    """Elements of the group killed by e."""
    return [x for x in _elements(mods) if all((e * xi) % k == 0 for xi, k in zip(x, mods))]


@lru_cache(maxsize=None)
def cokernel_types(p: int, sub: tuple, sup: tuple) -> frozenset:
    """Types of sup / image over all embeddings of a group of type sub into one of type sup."""
    A, G = PGroupType(p, sub), PGroupType(p, sup)
    if A.order > G.order:
        return frozenset()
    if not A.lam:
        return frozenset([G.lam])
    gmods = G.moduli
    choices = [_torsion(gmods, k) for k in A.moduli]
    seen_images = set()
    types = set()
    coeffs = list(_elements(A.moduli))
    for images in itertools.product(*choices):
        image = frozenset(
            tuple(sum(c * g[i] for c, g in zip(cs, images)) % gmods[i] for i in range(len(gmods)))
            for cs in coeffs
        )
        if len(image) != A.order or image in seen_images:
            continue
        seen_images.add(image)
        rel = [[g[i] for g in images] for i in range(len(gmods))]
        types.add(quotient_type(G, rel))
    return frozenset(types)


def brute_force_les(q: ExactSequenceQuery, order_bound: int = 64) -> bool:
    """Depth-first search over embeddings, splitting off one short exact sequence at a time."""
    for t in q.types:
        if q.p ** sum(t) > order_bound:
            raise InstanceTooLarge(f"group of type {t} has order {q.p ** sum(t)} > {order_bound}")
    # orders must alternate to 1; cheap necessary condition
    if sum((-1) ** i * sum(t) for i, t in enumerate(q.types)) != 0:
        return False
    return _search(q.p, q.types)


def _search(p: int, types: tuple) -> bool:
    if len(types) == 3:
        return types[2] in cokernel_types(p, types[0], types[1])
    first, second, rest = types[0], types[1], types[2:]
    for n1 in sorted(cokernel_types(p, first, second)):
        if _search(p, (n1,) + rest):
            return True
    return False
