# Pushing a primitive class to a 0/1 class with the [+]/[-] moves.
#
# a [+] b = a + 2(a,b) b is what conjugating T_a^2 by T_b^2 does to a,
# so every move sequence doubles as a factorization of T_a^2.

import numpy as np

from spinmcg import symplectic as sp
from spinmcg import transvections as tv

# genus 1, a = 5 x1 + 2 y1: one Euclid step per move
cert = tv.reduce_blocks((5, 2))
a = cert.input
for m in cert.moves:
    b = m.apply(a)
    print(f"{a} {'[+]' if m.sign > 0 else '[-]'} {m.operand} = {b}")
    a = b

# genus 2: blocks (1,0),(2,0) interact through a two-block macro
print(tv.reduce_to_delta((1, 0, 2, 0)).to_json())
print(tv.reduce_to_delta((0, 1, 3, 3)).output)

# a bigger example at genus 3
a = (17, -6, 4, 9, -11, 2)
cert = tv.reduce_to_delta(a)
print(len(cert.moves), "moves ->", cert.output, "replays:", cert.verify())

f = tv.factor_square_transvection(a)
print("core", f.core, "conjugator length", len(f.conjugator), "identity holds:", f.verify())

# the identity, spelled out with matrices
U = f.conjugator_matrix()
Uinv = np.array(sp.identity_int(3))
for e, b in reversed(f.conjugator):
    Uinv = Uinv @ sp.transvection_int(b, -e)
lhs = sp.square_transvection(a)
print(np.array_equal(lhs, Uinv @ sp.square_transvection(f.core) @ U))
