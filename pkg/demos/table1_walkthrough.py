# Genus 2: from the action on quadratic forms to the generators of SP_2.
#
# Run with `python demos/table1_walkthrough.py`.

import numpy as np

from spinmcg import schreier as sc
from spinmcg import symplectic as sp
from spinmcg import words as wd

# The ten Arf-0 forms are the vertices.  A form is written by its values
# on x1, y1, x2, y2; q0 = [0,0,0,0] vanishes on the whole basis.
verts = sc.arf0_vertices()
print(len(verts), "vertices:", ["".join(map(str, v)) for v in verts])

# C1 acts on forms from the right: q' goes to b -> q'(C1_* b).  The twist
# about x1 sends y1 to y1 + x1, so q0 picks up the pairing on y1.
print("[0000] . C1 =", sc.action_edge((0, 0, 0, 0), 1))

# Edges that change the vertex, i.e. the graph without its self-loops
G = sc.orbit_graph()
moving = [(a, i, b) for a, i, b in G.edges if a < b]
print(len(moving), "edges; connected:", G.is_connected())
print(G.to_dot())

# The coset words S and the vertex each one reaches
for s in sc.coset_words():
    print(f"{wd.format_word(s):10s} -> {''.join(map(str, sc.vertex_of(s)))}")

# Following C2 C4 C5 C2 from q0 ends where the single word C4 ends
w = wd.cword(2, 4, 5, 2)
print("rep(C2 C4 C5 C2) =", wd.format_word(sc.coset_representative(w)))

# One Schreier generator by hand: s = C2 C4 C3, letter C1
raw = sc.schreier_generator(wd.cword(2, 4, 3), 1)
print("raw word:", wd.format_word(raw))
same = np.array_equal(wd.eval_int(raw, 2), wd.eval_int(wd.expand_named("X1", 2), 2))
print("equals X1 on H_1(;Z):", same)

# All fifty, matched against the reference names
print(sc.table_to_text(sc.build_table()))
r = sc.verify_table1()
print(r["status"], f"{r['passed']}/{r['total']}")

# Reversing a curve's orientation changes nothing, since T_a = T_{-a};
# moving c5 to another class does show up.
base = wd.default_curve_classes(2)
flipped = wd.CurveClassTable(2, {**base.c_int, 3: sp.scale(-1, base.c_int[3])})
moved = wd.CurveClassTable(2, {**base.c_int, 5: (0, 1, 1, 0)})
print("flip c3:", sc.verify_table1(flipped)["status"])
print("c5 = x2 + y1:", sc.verify_table1(moved)["status"], sc.verify_table1(moved)["passed"], "/ 50")
