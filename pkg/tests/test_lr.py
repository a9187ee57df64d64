import pytest
from hypothesis import given

from horncone import _backend, _lrkernel_py
from horncone.errors import LengthMismatch
from horncone.lr import SkewShape, lr_coeff, lr_coeff_signature, lr_oracle, schur_polynomial, skew_expand
from horncone.seqcore import conjugate, contains, partitions_in_box

from strategies import partitions

BOX = list(partitions_in_box(4, 4))


def test_lr_examples():
    assert lr_coeff((1,), (1, 1), (2, 1), 3) == 1
    assert lr_coeff((2, 1), (2, 1), (3, 2, 1), 3) == 2
    assert lr_coeff((3, 1), (), (3, 1), 1) == 0  # too many rows for n = 1
    assert lr_coeff((3, 1), (), (3, 1), 2) == 1
    assert lr_coeff((2,), (1,), (1, 1, 1), 3) == 0


def test_signature_examples():
    assert lr_coeff_signature((0, -1), (1, 1), (1, 0)) == 1
    assert lr_coeff_signature((2, -3), (), (2, -3)) == 1
    assert lr_coeff_signature((1, 1), (1,), (1, 0)) == 0
    with pytest.raises(LengthMismatch):
        lr_coeff_signature((1, 0), (1,), (2, 0, 0))


@given(partitions(3, 3), partitions(3, 3), partitions(3, 3))
def test_signature_shift_invariance(mu, nu, lam):
    n = 3
    pm = mu + (0,) * (n - len(mu))
    pl = lam + (0,) * (n - len(lam))
    base = lr_coeff_signature(pm, nu, pl)
    for k in (-2, 1, 3):
        assert lr_coeff_signature(tuple(x + k for x in pm), nu, tuple(x + k for x in pl)) == base
    assert base == lr_coeff(mu, nu, lam, n)


def test_skew_expand_examples():
    assert skew_expand(SkewShape((2, 1), (1,)), 3) == {(2,): 1, (1, 1): 1}
    assert skew_expand(SkewShape((3, 2), (3, 2)), 2) == {(): 1}
    assert skew_expand(SkewShape((3, 2, 1), (2, 1)), 3) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    # row bound drops three-row contents
    assert skew_expand(SkewShape((3, 2, 1), (2, 1)), 2) == {(3,): 1, (2, 1): 2}


def test_skew_expand_weights():
    for outer in BOX:
        for inner in BOX:
            if contains(outer, inner):
                for nu in skew_expand(SkewShape(outer, inner), 4):
                    assert sum(nu) == sum(outer) - sum(inner)


def test_symmetry_exhaustive():
    for lam in BOX:
        for mu in BOX:
            if not contains(lam, mu):
                continue
            for nu, c in skew_expand(SkewShape(lam, mu), 4).items():
                assert lr_coeff(nu, mu, lam, 4) == c


def test_conjugation_exhaustive():
    for lam in BOX:
        for mu in BOX:
            if not contains(lam, mu):
                continue
            for nu, c in skew_expand(SkewShape(lam, mu), 4).items():
                assert lr_coeff(conjugate(mu), conjugate(nu), conjugate(lam), 4) == c


def test_vanishing():
    assert lr_coeff((1,), (1,), (3,), 3) == 0  # weights
    assert lr_coeff((3,), (1,), (2, 2), 3) == 0  # containment


def test_oracle_examples():
    assert lr_oracle((1,), (1, 1), (2, 1), 3) == 1
    assert lr_oracle((2, 1), (2, 1), (3, 2, 1), 3) == 2
    assert lr_oracle((2, 2), (), (2, 2), 2) == 1


@given(partitions(3, 3), partitions(3, 3), partitions(3, 4))
def test_oracle_agrees(mu, nu, lam):
    assert lr_oracle(mu, nu, lam, 3) == lr_coeff(mu, nu, lam, 3)


def test_schur_polynomial_small():
    s = schur_polynomial((1,), 2)  # x1 + x2
    assert s[1, 0] == 1 and s[0, 1] == 1 and s.sum() == 2
    s = schur_polynomial((2, 1), 3)
    assert s.sum() == 8  # number of SSYT of shape (2,1) with entries <= 3


def test_backends_agree():
    for outer in BOX:
        for inner in BOX:
            if contains(outer, inner):
                assert _backend.lr_fillings(outer, inner, 4) == _lrkernel_py.lr_fillings(outer, inner, 4)


def test_backend_name():
    assert _backend.BACKEND in ("cython", "python")


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, HORNCONE_PURE_PYTHON="1")
    code = "import horncone; from horncone.lr import lr_coeff; print(horncone.BACKEND, lr_coeff((2, 1), (2, 1), (3, 2, 1), 3))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "2"]
