import pytest
from hypothesis import given, strategies as st

from horncone.errors import InstanceTooLarge, InvalidParameters, InvalidTuple, SingularInput
from horncone.pgroups import (
    ExactSequenceQuery,
    PGroupType,
    brute_force_les,
    cokernel_types,
    decide_les,
    quotient_type,
)

from strategies import partitions


def test_types_and_orders():
    g = PGroupType(3, (2, 1, 0))
    assert g.lam == (2, 1) and g.order == 27 and g.moduli == (9, 3)
    with pytest.raises(InvalidParameters):
        PGroupType(4, (1,))
    with pytest.raises(InvalidTuple):
        ExactSequenceQuery(2, ((1,), (1,)))


def test_quotient_examples():
    Z4 = PGroupType(2, (2,))
    assert quotient_type(Z4, [[2]]) == (1,)
    assert quotient_type(Z4, [[1]]) == ()
    assert quotient_type(Z4, None) == (2,)
    G = PGroupType(2, (1, 1))
    assert quotient_type(G, [[1], [1]]) == (1,)
    G = PGroupType(3, (2, 1))
    assert quotient_type(G, [[3], [1]]) == (2,)
    assert quotient_type(G, [[3], [0]]) == (1, 1)
    with pytest.raises(SingularInput):
        quotient_type(G, [[1, 2]])
    with pytest.raises(SingularInput):
        quotient_type(G, [[1, 2], [1]])


def test_cokernels():
    assert cokernel_types(2, (1,), (2,)) == frozenset([(1,)])
    assert cokernel_types(2, (1,), (1, 1)) == frozenset([(1,)])
    assert cokernel_types(2, (1,), (2, 1)) == frozenset([(2,), (1, 1)])
    assert cokernel_types(2, (2,), (1, 1)) == frozenset()
    assert cokernel_types(2, (), (2, 1)) == frozenset([(2, 1)])


def test_known_sequences():
    # 0 -> Z/2 -> Z/4 -> Z/2 -> 0 exists, Z/2 x Z/2 cannot be replaced by Z/8
    for q, want in [
        (ExactSequenceQuery(2, ((1,), (2,), (1,))), True),
        (ExactSequenceQuery(2, ((1,), (1, 1), (1,))), True),
        (ExactSequenceQuery(2, ((1,), (3,), (1, 1))), False),
        (ExactSequenceQuery(3, ((1,), (2,), (2,), (1,))), True),
        (ExactSequenceQuery(2, ((2,), (1,), (1,), ())), False),
    ]:
        assert decide_les(q) == want
        assert brute_force_les(q) == want


def test_order_bound():
    with pytest.raises(InstanceTooLarge):
        brute_force_les(ExactSequenceQuery(2, ((4, 3), (4, 3), ())), order_bound=64)


@given(st.lists(partitions(2, 2), min_size=3, max_size=4), st.sampled_from([2, 3]))
def test_criterion_matches_search(types, p):
    q = ExactSequenceQuery(p, tuple(types))
    assert decide_les(q) == brute_force_les(q, order_bound=p**4)
