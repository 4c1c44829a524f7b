# Sp(2g, Z2), O(2g, Z2) and what the Z2-transvections reach.

import time

import numpy as np

from spinmcg import groups as gr
from spinmcg import transvections as tv

t = time.perf_counter()
print(gr.group_orders((2, 3)), f"{time.perf_counter() - t:.1f}s")

# q0(z) = 1 classes: 6, 28, 120
print({g: len(tv.lambda_set(g)) for g in (2, 3, 4)})

# every such class reduces to one of the 3g-2 standard ones
z = (0, 1, 1, 1, 1, 0)
ops = tv.lambda_reduce(z)
print(z, "->", ops, "->", tv.replay_lambda(z, ops))

# At genus 3 the transvections give all of O(6, Z2) ...
o6 = gr.form_stabilizer(gr.closure(gr.sp_transvection_generators(3)), 6)
print("genus 3:", gr.closure(gr.orthogonal_transvection_generators(3)).size, "of", o6.size)
M = gr.unpack(int(o6[12345]), 6)
print("a factorization:", tv.factor_orthogonal(M).tags)

# ... but at genus 2 only half of O(4, Z2).  The image of T = C1 C3 C5
# supplies the other coset.
o4 = gr.closure(gr.gg_image_generators(2))
half = gr.closure(gr.orthogonal_transvection_generators(2))
print("genus 2:", half.size, "of", o4.size)
outside = [gr.unpack(int(c), 4) for c in o4 if not gr.contains(half, gr.unpack(int(c), 4))]
print(len(outside), "elements need T, e.g.", tv.factor_orthogonal(outside[0], allow_t=True).tags)

# orbit witnesses at genus 3
for v in [(0, 1, 0, 1, 0, 0), (1, 0, 1, 0, 1, 0)]:
    print(v, "->", tv.orbit_witness(v, 3))
