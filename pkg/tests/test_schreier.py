import numpy as np
import pytest

from spinmcg import groups as gr
from spinmcg import schreier as sc
from spinmcg import symplectic as sp
from spinmcg import words as wd


def test_action_edge_examples():
    assert sc.action_edge((0, 0, 0, 0), 1) == (0, 1, 0, 0)
    with pytest.raises(ValueError):
        sc.action_edge((0, 0, 0, 0), 6)


def test_edges_preserve_arf_and_are_involutions():
    for v in sc.arf0_vertices():
        for i in range(1, 6):
            w = sc.action_edge(v, i)
            assert sp.arf(w) == 0
            assert sc.action_edge(w, i) == v


def test_graph_shape():
    G = sc.orbit_graph()
    assert len(G.vertices) == 10 and G.is_connected()
    assert any(a == b for a, _, b in G.edges)  # fixed vertices give self-loops
    dot = G.to_dot()
    assert dot.startswith("graph orbit {") and 'label="[0000]"' in dot
    assert "v0000 -- v0000" not in dot


def test_coset_representatives():
    assert sc.coset_representative(wd.cword(2, 4, 5, 2)) == wd.cword(4)
    assert sc.vertex_of(wd.cword(2, 4, 5, 2)) == (0, 0, 1, 0)
    assert sc.coset_representative(()) == ()
    assert sc.coset_representative(wd.cword(1, 1)) == ()
    assert sc.coset_representative(wd.cword(1, -1)) == ()


def test_transversal():
    assert sc.is_transversal()
    assert len(sc.coset_words()) == len(sp.enumerate_forms(2, 0)) == 10


def test_schreier_generator_examples():
    assert sc.schreier_generator((), 1) == wd.cword(1, -1)
    raw = sc.schreier_generator(wd.cword(1), 2)
    assert raw == wd.cword(1, 2, -1)
    assert np.array_equal(wd.eval_int(raw, 2), wd.eval_int(wd.expand_named("Xs1", 2), 2))
    raw = sc.schreier_generator(wd.cword(2, 4, 3), 1)
    assert np.array_equal(wd.eval_int(raw, 2), wd.eval_int(wd.expand_named("X1", 2), 2))


def test_table_cells():
    cells = {(e.row, e.column): e for e in sc.build_table()}
    assert cells["C3", "C5"].matched == "T D1^-1"
    assert cells["C2 C4 C3", "C3"].matched == "Xs2^-1 D4 Xs2"
    assert cells["C4", "C1"].matched == "1"
    assert all(e.spin for e in cells.values())


def test_verify_table1_passes():
    r = sc.verify_table1()
    assert (r["status"], r["passed"], r["total"]) == ("PASS", 50, 50)


def test_perturbed_classes_are_reported():
    base = wd.default_curve_classes(2)
    bad = wd.CurveClassTable(2, {**base.c_int, 5: (0, 1, 1, 0)})
    r = sc.verify_table1(bad)
    assert r["status"] == "FAIL" and r["passed"] < 50
    assert "raw_matrix" in r["failures"][0]


def test_sign_flip_is_invisible():
    # T_a = T_{-a}: reversing a curve's orientation changes no matrix
    base = wd.default_curve_classes(2)
    flipped = wd.CurveClassTable(2, {**base.c_int, 3: sp.scale(-1, base.c_int[3])})
    assert sc.verify_table1(flipped)["status"] == "PASS"


def test_text_and_json_exports():
    entries = sc.build_table()
    text = sc.table_to_text(entries)
    assert "Xs2^-1 D4 Xs2" in text and len(text.splitlines()) == 12
    assert len(__import__("json").loads(sc.table_to_json(entries))) == 50


def test_schreier_images_lie_in_g2_closure():
    g2 = gr.closure(gr.gg_image_generators(2))
    for e in sc.build_table():
        assert gr.contains(g2, wd.eval_mod2(e.raw_word, 2))


def test_generated_group():
    r = sc.generated_group_check()
    assert r == {"schreier_closure": 72, "g2_closure": 72, "equal": True}
