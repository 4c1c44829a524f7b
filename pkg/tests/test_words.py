import numpy as np
import pytest
from hypothesis import given, strategies as st

from spinmcg import symplectic as sp
from spinmcg import words as wd


def c_words(g, max_len=8):
    letter = st.tuples(st.integers(1, 2 * g + 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(lambda ls: tuple(wd.C(i, s) for i, s in ls))


def test_parse_and_format_round_trip():
    w = wd.parse_word("C3^-1 C1 C2", 2)
    assert w == (wd.C(3, -1), wd.C(1), wd.C(2))
    assert wd.format_word(w) == "C3^-1 C1 C2"
    assert wd.parse_word("1", 2) == ()
    assert wd.format_word(()) == "1"


@pytest.mark.parametrize("text,bad", [("C1 C9", "C9"), ("C1 Q2", "Q2"), ("C2^3", "C2^3"), ("B4", "B4")])
def test_parse_errors_name_the_token(text, bad):
    with pytest.raises(wd.WordSyntaxError) as info:
        wd.parse_word(text, 2)
    assert info.value.token == bad


def test_expand_named_examples():
    assert wd.expand_named("X1", 2) == wd.cword(2, 1, -2)
    assert wd.expand_named("Xs1", 2) == wd.cword(-2, 1, 2)
    assert wd.expand_named("T", 2) == wd.cword(1, 3, 5)
    assert wd.expand_named("D3", 2) == wd.cword(3, 3)
    with pytest.raises(wd.WordSyntaxError):
        wd.expand_named("T", 3)
    with pytest.raises(wd.WordSyntaxError):
        wd.expand_named("Y4", 2)


def test_generator_names():
    assert wd.generator_names(2)[-1] == "T"
    names3 = wd.generator_names(3)
    assert "Y4" in names3 and "DB4" in names3 and names3[-2:] == ["T1", "T2"]


def test_default_classes_form_a_chain():
    for g in (1, 2, 3, 4):
        assert wd.default_curve_classes(g).chain_violations() == []
    assert wd.default_curve_classes(2).c_int[3] == (-1, 0, -1, 0)


def test_curve_class_json_round_trip():
    t = wd.default_curve_classes(2)
    assert wd.CurveClassTable.from_json(t.to_json(), 2) == t
    with pytest.raises(ValueError):
        wd.CurveClassTable.from_json('{"C1": [1, 0, 0, 0]}', 2)


def test_eval_examples():
    assert np.array_equal(wd.eval_int((), 2), sp.identity_int(2))
    c1 = wd.default_curve_classes(2).c_int[1]
    assert np.array_equal(wd.eval_int(wd.cword(1, 1), 2), sp.square_transvection(c1))


def test_eval_mod2_examples():
    for i in range(1, 6):
        assert np.array_equal(wd.eval_mod2(wd.expand_named(f"D{i}", 2), 2), sp.identity_mod2(2))
    assert np.array_equal(wd.eval_mod2(wd.expand_named("X1", 2), 2), sp.transvection_mod2((1, 1, 0, 0)))
    x2y2 = (0, 0, 1, 1, 0, 0)
    assert np.array_equal(wd.eval_mod2(wd.expand_named("Y4", 3), 3), sp.transvection_mod2(x2y2))


def test_chain_power_is_central():
    # in Sp(4, Z) the sixth power of the chain product is +I;
    # the hyperelliptic involution is -I
    w = wd.power(wd.cword(1, 2, 3, 4, 5), 6)
    assert np.array_equal(wd.eval_int(w, 2), sp.identity_int(2))
    assert np.array_equal(wd.eval_int(wd.hyperelliptic_word(2), 2), -sp.identity_int(2))


@given(c_words(2), c_words(2))
def test_eval_is_a_homomorphism(u, v):
    assert np.array_equal(wd.eval_int(u + v, 2), wd.eval_int(u, 2) @ wd.eval_int(v, 2))
    assert np.array_equal(wd.eval_mod2(u + v, 2), sp.mul_mod2(wd.eval_mod2(u, 2), wd.eval_mod2(v, 2)))


@given(c_words(3))
def test_inverse_word(w):
    assert np.array_equal(wd.eval_int(w + wd.inverse_word(w), 3), sp.identity_int(3))
    assert sp.is_symplectic_int(wd.eval_int(w, 3))


def test_eval_switches_to_exact_arithmetic():
    w = wd.power(wd.cword(1, -2), 60)
    M = wd.eval_int(w, 2)
    assert max(abs(int(c)) for c in M.flat) > 2 ** 63
    assert sp.is_symplectic_int(M)


def test_b_letters_need_lifts():
    w = wd.expand_named("DB4", 3)
    assert wd.spin_check(w, 3)
    with pytest.raises(ValueError):
        wd.eval_int(w, 3)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_named_generators_are_spin(g):
    for name, w in wd.generators(g).items():
        assert wd.spin_check(w, g), name


def test_spin_check_examples():
    assert not wd.spin_check(wd.cword(1), 2)
    assert wd.spin_check(wd.cword(1, 3, 5), 2)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_braid_relations(g):
    report = wd.braid_check(g)
    assert all(r["holds"] for r in report)
    assert any(r["relation"] == 1 and r["args"] == [1, 3] for r in report)


def test_genus2_central_relations():
    by = {(r["relation"], tuple(r["args"])): r for r in wd.braid_check(2)}
    assert by[3, ()]["sign"] == 1
    assert by[4, ()]["sign"] == 1
    assert by["4-half", ()]["sign"] == -1
