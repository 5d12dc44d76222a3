"""Signed Jacobian minors and the bordered determinant."""

import random

import pytest

import elimkit.ring as rg
from elimkit.errors import NonHomogeneous, SignatureMismatch
from elimkit.jacobian import hess_det, hessian, jac_full, jac_minor, jacobian_degree
from elimkit.mpoly import (
    DegreeSignature,
    MultiPoly,
    is_homogeneous,
    monomials_of_degree,
    partial_derivative,
)


def rand_form(rnd, n, d):
    terms = {e: rnd.randint(-6, 6) for e in monomials_of_degree(n, d)}
    terms = {e: c for e, c in terms.items() if c}
    return MultiPoly(rg.ZZ, n, terms or {(d,) + (0,) * (n - 1): 1})


def test_binary_minors_are_signed_partials():
    # for one binary form: J_1 = -df/dX2 and J_2 = df/dX1
    f = MultiPoly(rg.ZZ, 2, {(2, 0): 3, (1, 1): 5, (0, 2): 7})
    sig = DegreeSignature(2, (2,))
    assert jac_minor([f], sig, 1).eq(partial_derivative(f, 2).neg())
    assert jac_minor([f], sig, 2).eq(partial_derivative(f, 1))


def test_minor_degrees():
    sig = DegreeSignature(3, (2, 3))
    assert jacobian_degree(sig) == 3
    rnd = random.Random(1)
    fs = [rand_form(rnd, 3, 2), rand_form(rnd, 3, 3)]
    for i in (1, 2, 3):
        j = jac_minor(fs, sig, i)
        if not j.is_zero():
            assert is_homogeneous(j) == 3


def test_bordered_expansion():
    rnd = random.Random(4)
    sig = DegreeSignature(3, (2, 2))
    fs = [rand_form(rnd, 3, 2) for _ in range(2)]
    F = rand_form(rnd, 3, 3)
    total = MultiPoly.zero(rg.ZZ, 3)
    for i in (1, 2, 3):
        total = total.add(partial_derivative(F, i).mul(jac_minor(fs, sig, i)))
    assert jac_full(fs, sig, F).eq(total)


def test_border_with_own_row_vanishes():
    # bordering with one of the generators repeats a matrix row
    rnd = random.Random(6)
    sig = DegreeSignature(3, (2, 2))
    fs = [rand_form(rnd, 3, 2) for _ in range(2)]
    assert jac_full(fs, sig, fs[0]).is_zero()
    assert jac_full(fs, sig, fs[1]).is_zero()


def test_validation():
    f = MultiPoly(rg.ZZ, 2, {(2, 0): 1})
    with pytest.raises(SignatureMismatch):
        jac_minor([f], DegreeSignature(2, (2,)), 3)
    with pytest.raises(SignatureMismatch):
        jac_minor([f, f], DegreeSignature(2, (2,)), 1)
    g = MultiPoly(rg.ZZ, 2, {(2, 0): 1, (1, 0): 1})
    with pytest.raises(NonHomogeneous):
        jac_minor([g], DegreeSignature(2, (2,)), 1)


def test_hessian_symmetry():
    rnd = random.Random(8)
    f = rand_form(rnd, 3, 3)
    H = hessian(f)
    for i in range(3):
        for j in range(3):
            assert H[i][j].eq(H[j][i])


def test_hess_det_quadric():
    # X^2 + Y^2 + Z^2 has constant Hessian diag(2,2,2)
    f = MultiPoly(rg.ZZ, 3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    d = hess_det(f)
    assert d.is_constant() and d.constant_value() == 8
