import itertools

import pytest
from hypothesis import given

from horncone.errors import CommonLengthMismatch, LengthMismatch, NotAPartition
from horncone.seqcore import (
    as_partition,
    as_signature,
    conjugate,
    contains,
    lambda_of_subset,
    pad,
    partitions_in_box,
    partitions_of,
    shift_and_combine,
    sort_key,
    subsets,
    subsets_of_size,
    weight,
)

from strategies import partitions


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate(conjugate((4, 2, 2, 1))) == (4, 2, 2, 1)


def test_conjugate_involution_exhaustive():
    for p in partitions_in_box(8, 8):
        c = conjugate(p)
        assert conjugate(c) == p
        assert weight(c) == weight(p)


def test_lambda_of_subset_examples():
    assert lambda_of_subset((1, 3)) == (1,)
    assert lambda_of_subset((1, 2, 3)) == ()
    assert lambda_of_subset((2,)) == (1,)


@pytest.mark.parametrize("n", range(1, 9))
def test_lambda_of_subset_weight_and_box(n):
    for I in subsets(n):
        lam = lambda_of_subset(I)
        r = len(I)
        assert weight(lam) == sum(I) - r * (r + 1) // 2
        assert len(lam) <= r
        assert all(x <= n - r for x in lam)


def test_shift_and_combine():
    assert shift_and_combine((3, 1), (0, 0), (2, 0)) == (6, 2)
    assert shift_and_combine((2, 1), (1, 1)) == (3, 2)
    assert shift_and_combine((1,), (1,), (1, -1)) == (0,)
    with pytest.raises(CommonLengthMismatch):
        shift_and_combine((1, 2), (1,))


def test_canonical_forms():
    assert as_partition((3, 1, 0, 0)) == (3, 1)
    assert as_signature((2,), 3) == (2, 0, 0)
    assert pad((2, 1), 4) == (2, 1, 0, 0)
    with pytest.raises(NotAPartition):
        as_partition((1, 2))
    with pytest.raises(NotAPartition):
        as_partition((1, -1))
    with pytest.raises(LengthMismatch):
        pad((1, 1, 1), 2)


def test_enumerators():
    box = list(partitions_in_box(2, 2))
    assert sorted(box, key=sort_key) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert len(set(partitions_in_box(4, 4))) == 70
    assert list(partitions_of(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert subsets(2) == [(), (1,), (2,), (1, 2)]
    assert subsets_of_size(3, 2) == [(1, 2), (1, 3), (2, 3)]


@given(partitions(6, 6), partitions(6, 6))
def test_contains_matches_componentwise(a, b):
    n = max(len(a), len(b))
    pa, pb = pad(a, n), pad(b, n)
    assert contains(a, b) == all(x >= y for x, y in zip(pa, pb))


@given(partitions(6, 6))
def test_conjugate_contains_reversal(p):
    for q in itertools.islice(partitions_in_box(3, 3), 20):
        assert contains(p, q) == contains(conjugate(p), conjugate(q))
