import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinmcg import symplectic as sp


def vectors(g, lo=-6, hi=6):
    return st.lists(st.integers(lo, hi), min_size=2 * g, max_size=2 * g).map(tuple)


def test_intersection_examples():
    x1, y1, x2 = sp.x(2, 1), sp.y(2, 1), sp.x(2, 2)
    assert sp.intersection_int(x1, y1) == 1
    assert sp.intersection_int(y1, x1) == -1
    assert sp.intersection_mod2(x1, y1) == 1
    assert sp.intersection_mod2(x1, x2) == 0
    assert sp.intersection_mod2(sp.add(x1, y1), x1) == 1


def test_genus_mismatch_raises():
    with pytest.raises(ValueError):
        sp.intersection_int((1, 0), (1, 0, 0, 0))
    with pytest.raises(ValueError):
        sp.genus_of((1, 0, 0))


@given(vectors(3))
def test_alternating(v):
    assert sp.intersection_int(v, v) == 0


@given(vectors(2), vectors(2))
def test_gram_agrees_with_pairing(u, v):
    J = sp.gram(2)
    assert int(np.array(u) @ J @ np.array(v)) == sp.intersection_int(u, v)


def test_quad_eval_examples():
    q0 = sp.zero_form(2)
    assert sp.quad_eval(q0, sp.x(2, 1)) == 0
    assert sp.quad_eval(q0, (1, 1, 0, 0)) == 1
    assert sp.quad_eval(q0, (0, 0, 0, 0)) == 0


@given(st.lists(st.integers(0, 1), min_size=6, max_size=6),
       vectors(3, 0, 1), vectors(3, 0, 1))
def test_quad_form_polarization(q, u, v):
    lhs = sp.quad_eval(q, sp.add(u, v))
    rhs = (sp.quad_eval(q, u) + sp.quad_eval(q, v) + sp.intersection_mod2(u, v)) % 2
    assert lhs == rhs


def test_arf_examples():
    assert sp.arf(sp.zero_form(2)) == 0
    assert sp.arf((1, 1, 0, 0)) == 1


@pytest.mark.parametrize("g,count", [(1, 3), (2, 10), (3, 36), (4, 136)])
def test_arf_zero_counts(g, count):
    forms = sp.enumerate_forms(g, 0)
    assert len(forms) == count
    assert len(sp.enumerate_forms(g, 1)) == 4 ** g - count
    assert sp.zero_form(g) in forms


def test_enumerate_forms_is_lexicographic():
    forms = sp.enumerate_forms(2)
    assert forms == sorted(forms) and len(forms) == 16


def test_transvection_mod2_examples():
    T = sp.transvection_mod2(sp.x(2, 1))
    assert tuple(T @ np.array(sp.y(2, 1)) % 2) == (1, 1, 0, 0)
    assert tuple(T @ np.array(sp.x(2, 2)) % 2) == sp.x(2, 2)
    assert np.array_equal(sp.mul_mod2(T, T), sp.identity_mod2(2))
    with pytest.raises(ValueError):
        sp.transvection_mod2((2, 0, 0, 0))


def test_square_transvection_examples():
    a = sp.x(2, 1)
    M = sp.square_transvection(a)
    assert tuple(M @ np.array(sp.y(2, 1), dtype=object)) == (2, 1, 0, 0)
    assert np.array_equal(M, sp.square_transvection(sp.scale(-1, a)))
    assert np.array_equal(sp.as_mod2_matrix(M), sp.identity_mod2(2))
    with pytest.raises(ValueError):
        sp.square_transvection((2, 0, 0, 2))


@given(vectors(2).filter(sp.is_primitive))
def test_transvections_are_symplectic(a):
    assert sp.is_symplectic_int(sp.transvection_int(a))
    assert sp.is_symplectic_int(sp.square_transvection(a))
    assert sp.is_symplectic_mod2(sp.transvection_mod2(a))


def test_transvection_powers_add():
    a = (1, 2, -1, 3)
    assert np.array_equal(sp.transvection_int(a, 2) @ sp.transvection_int(a, -5), sp.transvection_int(a, -3))


def test_preserves_form_examples():
    q0 = sp.zero_form(2)
    assert sp.preserves_form(sp.identity_mod2(2), (1, 0, 1, 1))
    assert sp.preserves_form(sp.transvection_mod2((1, 1, 0, 0)), q0)
    assert not sp.preserves_form(sp.transvection_mod2(sp.x(2, 1)), q0)
    with pytest.raises(ValueError):
        sp.preserves_form(np.zeros((4, 4), dtype=np.uint8), q0)


def test_pullback_matches_preserves():
    q0 = sp.zero_form(2)
    T = sp.transvection_mod2(sp.x(2, 1))
    assert sp.pullback_form(q0, T) == (0, 1, 0, 0)
