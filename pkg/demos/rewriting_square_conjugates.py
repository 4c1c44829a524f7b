# W C_i C_i W^-1 written with X_j, X*_j and D_j.
#
# Inverse letters are first split as C_j^-1 = (C_j^-1 C_j^-1) C_j; squares
# are peeled off into conjugates, and what is left is handled by jumps
# and turns.

import random

from spinmcg import rewriter as rw
from spinmcg import words as wd

print(rw.normalize_negatives(wd.cword(-2, 4)))

for w, i in [((), 1), ((3,), 1), ((2,), 1), ((5, 4, 3), 3), ((2, 3, 2), 1), ((5, 2), 3)]:
    cert = rw.rewrite_square_conjugate(wd.cword(*w), i, 3)
    print(f"W = {wd.format_word(wd.cword(*w)):12s} i = {i}:  {cert.text()}")

# jumps and turns are counted from the right end of the word
print("jumps of C5 C2:", rw.detect_jumps((5, 2)), " turns of C2 C3 C2:", rw.detect_turns((2, 3, 2)))

# a longer mixed word, checked on homology
w = wd.parse_word("C3 C5^-1 C2 C4 C4 C1^-1 C6", 3)
cert = rw.rewrite_square_conjugate(w, 4, 3)
print(len(cert.tokens), "tokens; check:", rw.check_rewrite(cert))
print(cert.to_json()[:120], "...")

# random instances
rng = random.Random(1)
sizes = []
for _ in range(200):
    g = rng.choice([2, 3, 4])
    n = 2 * g + 1
    w = tuple(wd.C(rng.randint(1, n), rng.choice([1, -1])) for _ in range(rng.randint(0, 12)))
    cert = rw.rewrite_square_conjugate(w, rng.randint(1, n), g)
    assert rw.check_rewrite(cert)
    sizes.append(len(cert.tokens))
print("200 random words ok; token counts: median", sorted(sizes)[100], "max", max(sizes))
