"""Breadth-first closures of matrix groups over GF(2).

A 2g x 2g matrix over GF(2) is packed into one unsigned 64-bit integer,
column k occupying bits ``[2g*k, 2g*(k+1))`` with coordinate j of the
column at bit j.  Left multiplication by a fixed matrix G then acts
column-wise through a 2^(2g)-entry lookup table, which keeps the closure
of Sp(6, Z_2) (1,451,520 elements) to a few seconds of numpy work.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import symplectic as sp
from . import transvections as tv
from . import words as wd


def pack(M: np.ndarray) -> int:
    n = M.shape[0]
    code = 0
    for k in range(n):
        col = 0
        for j in range(n):
            if int(M[j, k]) % 2:
                col |= 1 << j
        code |= col << (n * k)
    return code


def unpack(code: int, n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=np.uint8)
    for k in range(n):
        col = (int(code) >> (n * k)) & ((1 << n) - 1)
        for j in range(n):
            M[j, k] = (col >> j) & 1
    return M


def _action_table(G: np.ndarray) -> np.ndarray:
    n = G.shape[0]
    table = np.zeros(1 << n, dtype=np.uint64)
    for v in range(1 << n):
        bits = np.array([(v >> j) & 1 for j in range(n)], dtype=np.int64)
        w = (G.astype(np.int64) @ bits) % 2
        table[v] = sum(int(b) << j for j, b in enumerate(w))
    return table


def _left_mul(table: np.ndarray, states: np.ndarray, n: int) -> np.ndarray:
    mask = np.uint64((1 << n) - 1)
    out = np.zeros_like(states)
    for k in range(n):
        shift = np.uint64(n * k)
        col = (states >> shift) & mask
        out |= table[col.astype(np.int64)] << shift
    return out


def closure(gens: Sequence[np.ndarray]) -> np.ndarray:
    """Sorted packed codes of the group generated by ``gens``.

    Finite groups need no inverses: every generator has finite order.
    """
    n = gens[0].shape[0]
    if n * n > 64:
        raise ValueError("packed closure supports 2g <= 8")
    tables = [_action_table(G) for G in gens]
    seen = np.array([pack(np.eye(n, dtype=np.uint8))], dtype=np.uint64)
    frontier = seen
    while frontier.size:
        new = np.unique(np.concatenate([_left_mul(t, frontier, n) for t in tables]))
        new = new[~np.isin(new, seen, assume_unique=True)]
        seen = np.union1d(seen, new)
        frontier = new
    return seen


def _q0_table(n: int) -> np.ndarray:
    g = n // 2
    q0 = sp.zero_form(g)
    return np.array([sp.quad_eval(q0, [(v >> j) & 1 for j in range(n)]) for v in range(1 << n)],
                    dtype=np.uint8)


def form_stabilizer(codes: np.ndarray, n: int) -> np.ndarray:
    """Members of a symplectic group (packed) that preserve q_0.

    q_0 vanishes on the basis, so a symplectic M preserves it iff
    ``q_0(M e_k) = 0`` for every column.
    """
    table = _q0_table(n)
    mask = np.uint64((1 << n) - 1)
    keep = np.ones(codes.shape, dtype=bool)
    for k in range(n):
        col = (codes >> np.uint64(n * k)) & mask
        keep &= table[col.astype(np.int64)] == 0
    return codes[keep]


def contains(codes: np.ndarray, M: np.ndarray) -> bool:
    c = np.uint64(pack(M))
    i = np.searchsorted(codes, c)
    return bool(i < codes.size and codes[i] == c)


def sp_transvection_generators(g: int) -> list[np.ndarray]:
    return [sp.transvection_mod2(a) for a in sp.all_vectors_mod2(g)]


def orthogonal_transvection_generators(g: int) -> list[np.ndarray]:
    return [tv.z2_transvection(z) for z in tv.lambda_set(g)]


def gg_image_generators(g: int) -> list[np.ndarray]:
    return [wd.eval_mod2(w, g) for w in wd.generators(g).values()]


def group_orders(genera: Sequence[int] = (2, 3)) -> dict[str, int]:
    """|Sp(2g, Z_2)| from the closure of all transvections, and |O(2g, Z_2)|
    as the q_0-stabilizer inside it."""
    out = {}
    for g in genera:
        n = 2 * g
        spg = closure(sp_transvection_generators(g))
        out[f"Sp({n},Z2)"] = int(spg.size)
        out[f"O({n},Z2)"] = int(form_stabilizer(spg, n).size)
    return out
