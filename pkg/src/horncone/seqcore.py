"""Partitions, signatures and subset-derived partitions.

Partitions are canonical tuples of positive integers in weakly decreasing
order (trailing zeros stripped, ``()`` is the empty partition).  Signatures
are tuples of a fixed length ``n`` that are weakly decreasing but may contain
zero or negative entries.  Conversions between the two are explicit.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CommonLengthMismatch, LengthMismatch, NotAPartition

Partition = tuple  # tuple[int, ...], canonical
Signature = tuple  # tuple[int, ...], fixed length


def is_weakly_decreasing(seq: Sequence) -> bool:
    return all(seq[k] >= seq[k + 1] for k in range(len(seq) - 1))


def is_partition(seq: Sequence[int]) -> bool:
    """True if `seq` is weakly decreasing with nonnegative entries."""
    return is_weakly_decreasing(seq) and (len(seq) == 0 or seq[-1] >= 0)


def as_partition(seq: Iterable[int]) -> Partition:
    """Validate `seq` and return its canonical (zero-stripped) form."""
    parts = tuple(int(x) for x in seq)
    if not is_partition(parts):
        raise NotAPartition(f"{parts!r} is not a partition")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def as_signature(seq: Iterable[int], n: int) -> Signature:
    """Validate `seq` as a weakly decreasing sequence and zero-pad it to length n."""
    parts = tuple(int(x) for x in seq)
    if len(parts) > n:
        if any(parts[n:]):
            raise LengthMismatch(f"{parts!r} does not fit in length {n}")
        parts = parts[:n]
    parts = parts + (0,) * (n - len(parts))
    if not is_weakly_decreasing(parts):
        raise NotAPartition(f"{parts!r} is not weakly decreasing")
    return parts


def pad(p: Sequence[int], n: int) -> tuple:
    """Zero-pad to length n; raises if p has more than n nonzero entries."""
    p = tuple(p)
    if len(p) > n:
        if any(p[n:]):
            raise LengthMismatch(f"{p!r} has more than {n} parts")
        return p[:n]
    return p + (0,) * (n - len(p))


def weight(p: Sequence) -> int:
    return sum(p)


def length(p: Partition) -> int:
    """Number of nonzero parts."""
    return sum(1 for x in p if x != 0)


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    p = as_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True if the diagram of `inner` sits inside the diagram of `outer`."""
    if len(inner) > len(outer):
        if any(inner[len(outer):]):
            return False
    return all(a >= b for a, b in zip(outer, inner))


def lambda_of_subset(subset: Sequence[int]) -> Partition:
    """The partition (z_r - r, ..., z_1 - 1) of a subset {z_1 < ... < z_r}."""
    z = sorted(subset)
    if len(set(z)) != len(z) or (z and z[0] < 1):
        raise ValueError(f"{subset!r} is not a subset of positive integers")
    r = len(z)
    return as_partition(z[j] - (j + 1) for j in range(r - 1, -1, -1))


def shift_and_combine(a: Sequence[int], b: Sequence[int], scalars=(1, 1)) -> tuple:
    """Componentwise ``s*a + t*b`` for equal-length sequences.

    Weak decrease of the result is not checked.
    """
    if len(a) != len(b):
        raise CommonLengthMismatch(f"lengths {len(a)} and {len(b)} differ; pad first")
    s, t = scalars
    return tuple(s * x + t * y for x, y in zip(a, b))


def scale(p: Sequence[int], r: int) -> tuple:
    return tuple(r * x for x in p)


def sort_key(p: Sequence[int]):
    """Length-then-lexicographic order used for map keys and output."""
    return (len(p), tuple(p))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting in a rows x cols box, canonical form."""

    def rec(prefix, remaining_rows, bound):
        yield as_partition(prefix)
        if remaining_rows == 0:
            return
        for x in range(1, bound + 1):
            yield from rec(prefix + (x,), remaining_rows - 1, x)

    # rec yields prefixes in a tree walk; each partition appears exactly once
    yield from rec((), rows, cols)


def partitions_of(total: int, max_rows: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of `total` with at most `max_rows` parts, each <= max_part."""
    if max_part is None:
        max_part = total

    def rec(remaining, rows, bound):
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        for x in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - x, rows - 1, x):
                yield (x,) + rest

    yield from rec(total, max_rows, max_part)


def subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets of {1..n} as ascending tuples, in increasing bitmask order."""
    out = []
    for mask in range(1 << n):
        out.append(tuple(j + 1 for j in range(n) if mask >> j & 1))
    return out


def subsets_of_size(n: int, r: int) -> list[tuple[int, ...]]:
    return [tuple(c) for c in combinations(range(1, n + 1), r)]
