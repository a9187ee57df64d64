import itertools
import json
import random

import pytest

from horncone import horn
from horncone.errors import InvalidParameters, InvalidTuple
from horncone.horn import (
    HornInequality,
    HornTuple,
    InequalitySystem,
    NotPartition,
    candidate_tuples,
    crosscheck_descset,
    enumerate_S,
    prune_feasible,
    underline_lambda,
    underline_value,
)
from horncone.lr import lr_coeff
from horncone.seqcore import lambda_of_subset
from horncone.suites import EXAMPLE_EX_INEQUALITIES, EXAMPLE_EX_REDUNDANT


def test_s24_lines():
    sys_ = enumerate_S(2, 4)
    lines = [q.render() for q in sys_.inequalities]
    assert len(lines) == 9
    assert set(lines) == set(EXAMPLE_EX_INEQUALITIES) | {EXAMPLE_EX_REDUNDANT}
    assert sys_.render()[0] == "|lambda(2)| + |lambda(4)| = |lambda(1)| + |lambda(3)|"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_m3_matches_classical_horn(n):
    got = set(t.I for t in enumerate_S(n, 3).tuples)
    want = set()
    for r in range(1, n):
        for I in itertools.product(itertools.combinations(range(1, n + 1), r), repeat=3):
            if lr_coeff(lambda_of_subset(I[0]), lambda_of_subset(I[2]), lambda_of_subset(I[1]), r) == 1:
                want.add(I)
    assert got == want


def test_tuple_validation():
    with pytest.raises(InvalidTuple):
        HornTuple(2, ((1,), (), (), ()))
    with pytest.raises(InvalidTuple):
        HornTuple(2, ((1, 2),) * 4)
    with pytest.raises(InvalidTuple):
        HornTuple(2, ((3,), (1,), (), ()))
    assert HornTuple(2, ((2, 1), (1, 2), (), ())).I[0] == (1, 2)


def test_underline_examples():
    assert underline_lambda(HornTuple(2, ((), (), (2,), (2,)))) == ((0, 0), (0, 0), (0,), (0,))
    bad = underline_lambda(HornTuple(2, ((), (), (1,), (2,))))
    assert isinstance(bad, NotPartition) and not bad
    assert bad.index == 3 and bad.seq == (-1,)
    assert underline_value(HornTuple(2, ((), (), (1,), (2,)))) == 0


def test_prune_examples():
    assert prune_feasible(HornTuple(2, ((), (), (2,), (2,))))
    # |I_3| must lie between max(|I_2|, |I_4|) and their sum plus s
    assert not prune_feasible(HornTuple(3, ((1,), (1,), (), (), ())))
    # for m even, |I_(m-2)| <= |I_(m-1)|
    assert not prune_feasible(HornTuple(2, ((1,), (1,), (), ())))


def test_prune_sound():
    for n in (1, 2, 3):
        for m in (3, 4, 5):
            for t in candidate_tuples(n, m):
                if not prune_feasible(t):
                    assert underline_value(t) == 0, t


def test_crosscheck_small():
    for n in (1, 2):
        for m in (3, 4, 5):
            for t in candidate_tuples(n, m):
                assert crosscheck_descset(t), t


def test_crosscheck_random_n3():
    rng = random.Random(7)
    cands = list(candidate_tuples(3, 5))
    for t in rng.sample(cands, 300):
        assert crosscheck_descset(t), t


@pytest.mark.parametrize("n,m", [(1, 4), (2, 3), (2, 4), (2, 5), (3, 4)])
def test_minimal_subset_of_nonzero(n, m):
    a = set(enumerate_S(n, m, "minimal").tuples)
    b = set(enumerate_S(n, m, "nonzero").tuples)
    assert a <= b


@pytest.mark.parametrize("n,m", [(2, 4), (2, 5), (3, 3)])
def test_prune_does_not_change_result(n, m):
    assert enumerate_S(n, m, prune=True).tuples == enumerate_S(n, m, prune=False).tuples


def test_enumeration_is_canonical_order():
    sys_ = enumerate_S(2, 5)
    keys = [[[int(z) for z in x] for x in t.I] for t in sys_.tuples]
    order = [t.I for t in candidate_tuples(2, 5)]
    assert [t.I for t in sys_.tuples] == [I for I in order if I in {t.I for t in sys_.tuples}]
    assert len(keys) == len(set(map(str, keys)))


def test_invalid_arguments():
    with pytest.raises(InvalidParameters):
        enumerate_S(2, 4, "bogus")
    with pytest.raises(InvalidParameters):
        enumerate_S(0, 4)


def test_inequality_sides_and_render():
    q = HornInequality(HornTuple(2, ((), (), (2,), (2,))))
    assert q.sides(((2, 1), (3, 1), (4, 1), (2, 2))) == (2, 1)
    assert q.render() == "lambda_2(4) <= lambda_2(3)"
    assert not q.holds(((2, 1), (3, 1), (4, 1), (2, 2)))
    assert q.holds(((2, 1), (3, 1), (4, 1), (2, 2)), slack=1)


def test_json_round_trip():
    sys_ = enumerate_S(2, 4)
    data = json.loads(json.dumps(sys_.to_json()))
    back = InequalitySystem.from_json(data)
    assert back.tuples == sys_.tuples and back.mode == "minimal"
    data["tuples"][0] = [[1], [1], [1]]
    with pytest.raises((InvalidParameters, InvalidTuple)):
        InequalitySystem.from_json(data)


def test_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HORNCONE_CACHE", str(tmp_path))
    plain = enumerate_S(2, 5).tuples
    first = enumerate_S(2, 5, disk_cache=True).tuples
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    second = enumerate_S(2, 5, disk_cache=True).tuples
    assert plain == first == second
    # a stale fingerprint is ignored and rewritten
    payload = json.loads(files[0].read_text())
    payload["code"] = "stale"
    payload["system"]["tuples"] = []
    files[0].write_text(json.dumps(payload))
    assert enumerate_S(2, 5, disk_cache=True).tuples == plain
    # corrupt files are ignored too
    files[0].write_text("{not json")
    assert enumerate_S(2, 5, disk_cache=True).tuples == plain
    assert horn.cache_dir() == tmp_path
