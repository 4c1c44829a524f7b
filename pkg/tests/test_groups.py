import numpy as np
from hypothesis import given, strategies as st

from spinmcg import groups as gr
from spinmcg import symplectic as sp
from spinmcg import transvections as tv


@given(st.lists(st.integers(0, 1), min_size=16, max_size=16))
def test_pack_round_trip(bits):
    M = np.array(bits, dtype=np.uint8).reshape(4, 4)
    assert np.array_equal(gr.unpack(gr.pack(M), 4), M)


def test_left_mul_matches_matrix_product():
    rng = np.random.default_rng(0)
    G = sp.transvection_mod2((1, 0, 1, 1))
    Ms = [rng.integers(0, 2, (4, 4)).astype(np.uint8) for _ in range(20)]
    codes = np.array([gr.pack(M) for M in Ms], dtype=np.uint64)
    out = gr._left_mul(gr._action_table(G), codes, 4)
    for M, c in zip(Ms, out):
        assert np.array_equal(gr.unpack(int(c), 4), sp.mul_mod2(G, M))


def test_genus1_orders():
    assert gr.group_orders([1]) == {"Sp(2,Z2)": 6, "O(2,Z2)": 2}


def test_genus2_orders(sp_closures, orthogonal_codes):
    assert sp_closures[2].size == 720
    assert orthogonal_codes[2].size == 72
    assert 720 // 72 == len(sp.enumerate_forms(2, 0))


def test_genus3_orders(sp_closures, orthogonal_codes):
    assert sp_closures[3].size == 1_451_520
    assert orthogonal_codes[3].size == 40_320


def test_closures_of_generator_images(orthogonal_codes):
    g2 = gr.closure(gr.gg_image_generators(2))
    assert np.array_equal(g2, orthogonal_codes[2])
    assert gr.closure(gr.orthogonal_transvection_generators(2)).size == 36
    assert np.array_equal(gr.closure(gr.orthogonal_transvection_generators(3)), orthogonal_codes[3])
    assert np.array_equal(gr.closure(gr.gg_image_generators(3)), orthogonal_codes[3])


def test_contains():
    codes = gr.closure(gr.orthogonal_transvection_generators(2))
    assert gr.contains(codes, tv.z2_transvection((1, 1, 0, 0)))
    assert not gr.contains(codes, sp.transvection_mod2((1, 0, 0, 0)))
