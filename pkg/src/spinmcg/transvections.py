"""Reduction and factorization calculi for (square) transvections.

Integral side: ``a [+] b = a + 2(a,b) b`` and ``a [-] b = a - 2(a,b) b``
conjugate square transvections, ``T^2_{a[+]b} = T_b^-2 T_a^2 T_b^2``.  A
primitive class is pushed, by such moves about 0/1-vectors, to a 0/1-vector
(or to a single ``(-1, 0)`` block), which certifies ``T_a^2`` as a conjugate
of a canonical square transvection.

Mod-2 side: for ``q_0(z) = 1`` the Z_2-transvection ``x -> x + (z,x)_2 z``
lies in O(2g, Z_2); ``z1 [] z2 = z1 + (z2, z1)_2 z2`` tracks conjugation and
every such ``z`` is reached from the 3g-2 standard vectors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import symplectic as sp
from . import words as wd
from .symplectic import Vector

# --- integral moves ---------------------------------------------------------


def box_plus(a: Sequence[int], b: Sequence[int]) -> Vector:
    k = sp.intersection_int(a, b)
    return tuple(int(ai) + 2 * k * int(bi) for ai, bi in zip(a, b))


def box_minus(a: Sequence[int], b: Sequence[int]) -> Vector:
    k = sp.intersection_int(a, b)
    return tuple(int(ai) - 2 * k * int(bi) for ai, bi in zip(a, b))


@dataclass(frozen=True)
class BoxMove:
    op: str  # "boxplus" | "boxminus"
    operand: Vector

    def __post_init__(self):
        if self.op not in ("boxplus", "boxminus"):
            raise ValueError(f"unknown move {self.op!r}")
        if any(c not in (0, 1) for c in self.operand) or not any(self.operand):
            raise ValueError(f"move operand must be a nonzero 0/1-vector, got {self.operand}")

    @property
    def sign(self) -> int:
        return 1 if self.op == "boxplus" else -1

    def apply(self, a: Sequence[int]) -> Vector:
        return box_plus(a, self.operand) if self.sign > 0 else box_minus(a, self.operand)

    def to_json(self) -> dict:
        return {"op": self.op, "operand": list(self.operand)}


@dataclass
class ReductionCert:
    input: Vector
    moves: list[BoxMove] = field(default_factory=list)
    output: Vector = ()

    def replay(self) -> Vector:
        a = tuple(self.input)
        for m in self.moves:
            a = m.apply(a)
        return a

    def verify(self) -> bool:
        return self.replay() == tuple(self.output)

    def to_json(self) -> dict:
        return {"input": list(self.input), "moves": [m.to_json() for m in self.moves],
                "output": list(self.output)}

    @classmethod
    def from_json(cls, data: dict) -> "ReductionCert":
        moves = [BoxMove(m["op"], tuple(m["operand"])) for m in data["moves"]]
        return cls(tuple(data["input"]), moves, tuple(data["output"]))


def _block_vector(g: int, entries: dict[int, tuple[int, int]]) -> Vector:
    blks = [(0, 0)] * g
    for i, b in entries.items():
        blks[i] = b
    return sp.from_blocks(blks)


def _require_primitive(a: Sequence[int]) -> None:
    if not sp.is_primitive(a):
        raise ValueError(f"expected a primitive class, got {tuple(a)}")


class _Tracker:
    def __init__(self, a: Sequence[int]):
        self.a = tuple(int(c) for c in a)
        self.g = sp.genus_of(self.a)
        self.cert = ReductionCert(self.a)

    def move(self, sign: int, operand: Vector) -> None:
        m = BoxMove("boxplus" if sign > 0 else "boxminus", operand)
        self.a = m.apply(self.a)
        self.cert.moves.append(m)

    def block(self, i: int) -> tuple[int, int]:
        return self.a[2 * i], self.a[2 * i + 1]

    def done(self) -> ReductionCert:
        self.cert.output = self.a
        return self.cert


def _nearest(num: int, den: int) -> int:
    """Integer k minimising |num - 2 k den|."""
    q, r = divmod(num, 2 * den)
    return q + 1 if 2 * abs(r) > abs(2 * den) else q


def _euclid_block(t: _Tracker, i: int) -> None:
    e = _block_vector(t.g, {i: (1, 0)})
    f = _block_vector(t.g, {i: (0, 1)})
    while True:
        m, n = t.block(i)
        if m == 0 or n == 0:
            return
        if abs(m) > abs(n):
            # [+] e_i sends (m, n) to (m - 2n, n)
            k = _nearest(m, n)
            for _ in range(abs(k)):
                t.move(1 if k > 0 else -1, e)
        elif abs(m) < abs(n):
            # [+] f_i sends (m, n) to (m, n + 2m)
            k = -_nearest(n, m)
            for _ in range(abs(k)):
                t.move(1 if k > 0 else -1, f)
        elif n == -m:
            t.move(1, f)
        else:
            return


def reduce_blocks(a: Sequence[int]) -> ReductionCert:
    """Bring every block to the shape (0,0), (p,0), (0,p) or (p,p)."""
    _require_primitive(a)
    t = _Tracker(a)
    for i in range(t.g):
        _euclid_block(t, i)
    return t.done()


def block_shape(blk: tuple[int, int]) -> tuple[str, int] | None:
    """``('x', p)`` for (p,0), ``('y', p)`` for (0,p), ``('d', p)`` for (p,p)."""
    m, n = blk
    if m == 0 and n == 0:
        return None
    if n == 0:
        return "x", m
    if m == 0:
        return "y", n
    if m == n:
        return "d", m
    raise ValueError(f"block {blk} is not reduced")


_E, _F, _H, _O = (1, 0), (0, 1), (1, 1), (0, 0)

# Two-block macros, keyed by (shape of lower block, shape of upper block).
# Each list holds four (first move, second move) pairs acting as
#   lower -= 2*upper, lower += 2*upper, upper -= 2*lower, upper += 2*lower
# in that order; a move is (sign, lower operand block, upper operand block).
# Entry 4 of ('x','x') and of ('x','y') carries boxminus as its second move.
TWO_BLOCK_MACROS: dict[tuple[str, str], list[tuple[tuple, tuple]]] = {
    ("x", "x"): [((-1, _E, _F), (1, _O, _F)), ((1, _E, _F), (-1, _O, _F)),
                 ((-1, _F, _E), (1, _F, _O)), ((1, _F, _E), (-1, _F, _O))],
    ("y", "y"): [((1, _F, _E), (-1, _O, _E)), ((-1, _F, _E), (1, _O, _E)),
                 ((1, _E, _F), (-1, _E, _O)), ((-1, _E, _F), (1, _E, _O))],
    ("x", "y"): [((1, _E, _E), (-1, _O, _E)), ((-1, _E, _E), (1, _O, _E)),
                 ((-1, _F, _F), (1, _F, _O)), ((1, _F, _F), (-1, _F, _O))],
    ("y", "x"): [((-1, _F, _F), (1, _O, _F)), ((1, _F, _F), (-1, _O, _F)),
                 ((1, _E, _E), (-1, _E, _O)), ((-1, _E, _E), (1, _E, _O))],
    ("y", "d"): [((-1, _F, _F), (1, _O, _F)), ((1, _F, _F), (-1, _O, _F)),
                 ((1, _E, _H), (-1, _E, _O)), ((-1, _E, _H), (1, _E, _O))],
    ("d", "y"): [((1, _H, _E), (-1, _O, _E)), ((-1, _H, _E), (1, _O, _E)),
                 ((-1, _F, _F), (1, _F, _O)), ((1, _F, _F), (-1, _F, _O))],
    ("x", "d"): [((-1, _E, _F), (1, _O, _F)), ((1, _E, _F), (-1, _O, _F)),
                 ((-1, _F, _H), (1, _F, _O)), ((1, _F, _H), (-1, _F, _O))],
    ("d", "x"): [((-1, _H, _F), (1, _O, _F)), ((1, _H, _F), (-1, _O, _F)),
                 ((-1, _F, _E), (1, _F, _O)), ((1, _F, _E), (-1, _F, _O))],
    ("d", "d"): [((-1, _H, _F), (1, _O, _F)), ((1, _H, _F), (-1, _O, _F)),
                 ((-1, _F, _H), (1, _F, _O)), ((1, _F, _H), (-1, _F, _O))],
}


def apply_macro(t: _Tracker, target: int, source: int, direction: int) -> None:
    """Change the magnitude of block ``target`` by ``direction * 2 * p_source``.

    Neither block may be (0,0); every other block is left alone.
    """
    lo, hi = min(target, source), max(target, source)
    s_lo, s_hi = block_shape(t.block(lo)), block_shape(t.block(hi))
    slot = (0 if direction < 0 else 1) + (0 if target == lo else 2)
    for sign, b_lo, b_hi in TWO_BLOCK_MACROS[(s_lo[0], s_hi[0])][slot]:
        t.move(sign, _block_vector(t.g, {lo: b_lo, hi: b_hi}))


def _magnitudes(t: _Tracker) -> dict[int, int]:
    out = {}
    for i in range(t.g):
        s = block_shape(t.block(i))
        if s is not None:
            out[i] = s[1]
    return out


def reduce_to_delta(a: Sequence[int]) -> ReductionCert:
    """Push a primitive class to a 0/1-vector or to ``[o, (-1,0), o]``.

    After :func:`reduce_blocks`, the block magnitudes are reduced against the
    smallest one (leftmost on ties) with the two-block macros, so the total
    magnitude strictly drops with every macro; primitivity then forces all
    magnitudes to 1.  Negative blocks are finally flipped against another
    nonzero block, or inside a lone block.
    """
    _require_primitive(a)
    t = _Tracker(a)
    for i in range(t.g):
        _euclid_block(t, i)
    while True:
        mags = _magnitudes(t)
        smallest = min(abs(p) for p in mags.values())
        src = min(i for i, p in mags.items() if abs(p) == smallest)
        big = [i for i, p in mags.items() if abs(p) > smallest]
        if not big:
            break
        k = big[0]
        while abs(_magnitudes(t).get(k, 0)) > smallest:
            p, q = _magnitudes(t)[k], _magnitudes(t)[src]
            before = sum(abs(v) for v in _magnitudes(t).values())
            apply_macro(t, k, src, -1 if (p > 0) == (q > 0) else 1)
            assert sum(abs(v) for v in _magnitudes(t).values()) < before
    mags = _magnitudes(t)
    assert all(abs(p) == 1 for p in mags.values()), mags
    for k in sorted(mags):
        p = _magnitudes(t)[k]
        if p > 0:
            continue
        others = [i for i in sorted(mags) if i != k]
        if others:
            q = _magnitudes(t)[others[0]]
            apply_macro(t, k, others[0], 1 if q > 0 else -1)
        else:
            shape = block_shape(t.block(k))[0]
            if shape == "y":
                t.move(1, _block_vector(t.g, {k: _H}))
                t.move(1, _block_vector(t.g, {k: _E}))
            elif shape == "d":
                t.move(1, _block_vector(t.g, {k: _E}))
                t.move(1, _block_vector(t.g, {k: _F}))
    return t.done()


def is_delta_shape(v: Sequence[int]) -> bool:
    if all(c in (0, 1) for c in v):
        return True
    nz = [(i, b) for i, b in enumerate(sp.blocks(v)) if b != (0, 0)]
    return len(nz) == 1 and nz[0][1] == (-1, 0)


@dataclass
class SquareTransvectionFactor:
    """``T_a^2 = U^-1 T_core^2 U`` with ``U`` the product of ``conjugator``.

    ``conjugator`` is a list of ``(exponent, operand)`` with exponent +-2; U
    multiplies the corresponding ``T_operand^exponent`` in list order.
    """

    vector: Vector
    conjugator: list[tuple[int, Vector]]
    core: Vector
    cert: ReductionCert

    def conjugator_matrix(self) -> np.ndarray:
        U = sp.identity_int(sp.genus_of(self.vector))
        for e, b in self.conjugator:
            U = U @ sp.transvection_int(b, e)
        return U

    def verify(self) -> bool:
        U = self.conjugator_matrix()
        Uinv = sp.identity_int(sp.genus_of(self.vector))
        for e, b in reversed(self.conjugator):
            Uinv = Uinv @ sp.transvection_int(b, -e)
        lhs = sp.square_transvection(self.vector)
        rhs = Uinv @ sp.square_transvection(self.core) @ U
        return bool(np.array_equal(lhs, rhs))

    def to_json(self) -> dict:
        return {"vector": list(self.vector),
                "conjugator": [{"exponent": e, "operand": list(b)} for e, b in self.conjugator],
                "core": list(self.core), "certificate": self.cert.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SquareTransvectionFactor":
        conj = [(int(d["exponent"]), tuple(d["operand"])) for d in data["conjugator"]]
        return cls(tuple(data["vector"]), conj, tuple(data["core"]),
                   ReductionCert.from_json(data["certificate"]))


def factor_square_transvection(a: Sequence[int]) -> SquareTransvectionFactor:
    """Write ``T_a^2`` as a conjugate of a canonical square transvection."""
    cert = reduce_to_delta(a)
    # T^2_{a_t} = T_b^{-2s} T^2_{a_{t-1}} T_b^{2s}, so T^2_a = U^-1 T^2_core U
    # with U = T_{b_k}^{-2 s_k} ... T_{b_1}^{-2 s_1}.
    conj = [(-2 * m.sign, m.operand) for m in reversed(cert.moves)]
    core = tuple(cert.output)
    if not all(c in (0, 1) for c in core):
        core = tuple(-c for c in core)  # T^2_{-a} = T^2_a
    f = SquareTransvectionFactor(tuple(int(c) for c in a), conj, core, cert)
    assert f.verify()
    return f


# --- mod 2 --------------------------------------------------------------------


def in_lambda(z: Sequence[int]) -> bool:
    return any(c % 2 for c in z) and sp.quad_eval(sp.zero_form(sp.genus_of(z)), z) == 1


def lambda_set(g: int) -> list[Vector]:
    """All mod-2 classes with q_0 = 1, in lexicographic order."""
    return [v for v in sp.all_vectors_mod2(g) if in_lambda(v)]


def _require_lambda(z: Sequence[int]) -> Vector:
    z = sp.mod2(z)
    if not in_lambda(z):
        raise ValueError(f"{z} has q_0 = 0, so it is not in Lambda_g")
    return z


def z2_transvection(z: Sequence[int]) -> np.ndarray:
    return sp.transvection_mod2(_require_lambda(z))


def square_op(z1: Sequence[int], z2: Sequence[int]) -> Vector:
    z1, z2 = _require_lambda(z1), _require_lambda(z2)
    k = sp.intersection_mod2(z2, z1)
    return tuple((a + k * b) % 2 for a, b in zip(z1, z2))


def lambda_generators(g: int) -> dict[str, Vector]:
    """The 3g-2 standard vectors, keyed by the G_g generator whose mod-2
    image is the transvection about them."""
    gens: dict[str, Vector] = {}
    for i in range(1, g + 1):
        v = sp.add(sp.x(g, i), sp.y(g, i))
        gens["X1" if i == 1 else f"X{2 * g}" if i == g else f"Y{2 * i}"] = v
    for i in range(1, g):
        gens[f"X{2 * i}"] = sp.add(sp.x(g, i), sp.y(g, i), sp.x(g, i + 1))
        gens[f"X{2 * i + 1}"] = sp.add(sp.x(g, i), sp.x(g, i + 1), sp.y(g, i + 1))
    return dict(sorted(gens.items(), key=lambda kv: (kv[0][0], int(kv[0][1:]))))


def _blk2(z: Vector, i: int) -> tuple[int, int]:
    return z[2 * i], z[2 * i + 1]


def _gen(g: int, kind: str, i: int) -> Vector:
    """Standard vectors with 1-based block index i."""
    if kind == "xy":
        return sp.add(sp.x(g, i), sp.y(g, i))
    if kind == "xyx":
        return sp.add(sp.x(g, i), sp.y(g, i), sp.x(g, i + 1))
    return sp.add(sp.x(g, i), sp.x(g, i + 1), sp.y(g, i + 1))  # "xxy"


def _lambda_steps(z: Vector, g: int) -> list[Vector]:
    """The next batch of operands prescribed by the reduction procedure.

    Empty when z is ``x_1 + y_1`` or ``x_1 + y_1 + x_2``, where it stops.
    """
    bl = [_blk2(z, i) for i in range(g)]
    ones = [i for i, b in enumerate(bl) if b == (1, 1)]
    j = ones[-1] + 1  # 1-based rightmost (1,1) block
    if j >= 2:
        prev = bl[j - 2]
        if prev in ((1, 1), (0, 1)):
            return [_gen(g, "xxy", j - 1)]
        if prev == (0, 0):
            return [_gen(g, "xyx", j - 1)]
        return [_gen(g, "xy", j - 1), _gen(g, "xxy", j - 1)]
    if all(b == (0, 0) for b in bl[1:]):
        return []
    for k in range(1, g):
        if bl[k] == (0, 1):
            return [_gen(g, "xy", k + 1)]
    nz = [k for k in range(1, g) if bl[k] != (0, 0)]
    if nz == list(range(1, len(nz) + 1)):
        # (1,1),(1,0),...,(1,0),(0,0),...: clear the last (1,0) block
        last = nz[-1]
        if last == 1:
            return []
        return [_gen(g, "xyx", last), _gen(g, "xy", last)]
    # a (0,0) block sits left of a (1,0) block: fill it
    k = min(k for k in range(1, g - 1) if bl[k] == (0, 0) and bl[k + 1] != (0, 0))
    return [_gen(g, "xxy", k + 1)]


def lambda_reduce(z: Sequence[int], full: bool = False) -> list[Vector]:
    """Operands o_1..o_m with ``(((z [] o_1) [] o_2) ...) [] o_m`` a standard vector.

    By default the reduction stops as soon as a standard vector is reached;
    with ``full=True`` it runs the procedure until it reaches ``x_1 + y_1``
    or ``x_1 + y_1 + x_2``.
    """
    z = _require_lambda(z)
    g = sp.genus_of(z)
    if g < 2:
        raise ValueError("lambda_reduce needs genus >= 2")
    gens = set(lambda_generators(g).values())
    moves: list[Vector] = []
    for _ in range(8 * g + 8):
        if not full and z in gens:
            return moves
        step = _lambda_steps(z, g)
        if not step:
            assert z in gens
            return moves
        for o in step:
            z = square_op(z, o)
            moves.append(o)
    raise AssertionError("lambda reduction did not terminate")


def replay_lambda(z: Sequence[int], moves: Sequence[Sequence[int]]) -> Vector:
    z = sp.mod2(z)
    for o in moves:
        z = square_op(z, o)
    return z


def _in_orthogonal(M: np.ndarray) -> bool:
    g = M.shape[0] // 2
    return sp.is_symplectic_mod2(M) and sp.preserves_form(M, sp.zero_form(g))


def _product_mod2(g: int, zs: Sequence[Vector]) -> np.ndarray:
    M = sp.identity_mod2(g)
    for z in zs:
        M = sp.mul_mod2(M, sp.transvection_mod2(z))
    return M


def _col(M: np.ndarray, k: int) -> Vector:
    return tuple(int(c) % 2 for c in M[:, k])


def _vector_path(u: Vector, b: Vector, zs: Sequence[Vector]) -> list[Vector] | None:
    """Shortest list of z in ``zs`` whose transvections carry u to b."""
    parent: dict[Vector, tuple[Vector, Vector] | None] = {u: None}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        if v == b:
            path = []
            while parent[v] is not None:
                v, z = parent[v]
                path.append(z)
            return path[::-1]
        for z in zs:
            if sp.intersection_mod2(z, v):
                w = tuple((p + r) % 2 for p, r in zip(v, z))
                if w not in parent:
                    parent[w] = (v, z)
                    queue.append(w)
    return None


def _greedy_factor(M: np.ndarray) -> list[Vector] | None:
    """Fix the basis vectors one at a time, each with transvections that
    leave the already settled basis vectors alone."""
    g = M.shape[0] // 2
    n = 2 * g
    basis = [sp.basis_vector(g, k) for k in range(n)]
    lam = lambda_set(g)
    cur = (np.array(M, dtype=np.int64) % 2).astype(np.uint8)
    applied: list[Vector] = []  # N_1, N_2, ... applied to cur from the left

    for k in range(n):
        u, b = _col(cur, k), basis[k]
        if u == b:
            continue
        # T_z fixes e_j iff (z, e_j) = 0
        allowed = [z for z in lam if not any(sp.intersection_mod2(z, f) for f in basis[:k])]
        path = _vector_path(u, b, allowed)
        if path is None:
            return None
        for z in path:
            cur = sp.mul_mod2(sp.transvection_mod2(z), cur)
            applied.append(z)
    assert np.array_equal(cur, sp.identity_mod2(g))
    # N_m ... N_1 M = I  =>  M = N_1 N_2 ... N_m (each N is an involution)
    return applied


@lru_cache(maxsize=None)
def _transvection_tree(g: int):
    """Breadth-first tree of the group generated by the Z_2-transvections.

    Returns sorted packed codes with, for each, the index of its parent
    code and of the transvection with ``element = T_z parent``.
    """
    from . import groups as gr  # groups imports this module

    n = 2 * g
    lam = lambda_set(g)
    tables = [gr._action_table(sp.transvection_mod2(z)) for z in lam]
    ident = np.uint64(gr.pack(sp.identity_mod2(g)))
    codes, parents, gens = [np.array([ident])], [np.array([ident])], [np.array([-1])]
    seen = np.array([ident])
    frontier = seen
    while frontier.size:
        new = np.concatenate([gr._left_mul(t, frontier, n) for t in tables])
        par = np.tile(frontier, len(tables))
        gen = np.repeat(np.arange(len(tables)), frontier.size)
        new, first = np.unique(new, return_index=True)
        par, gen = par[first], gen[first]
        fresh = ~np.isin(new, seen, assume_unique=True)
        new, par, gen = new[fresh], par[fresh], gen[fresh]
        codes.append(new)
        parents.append(par)
        gens.append(gen)
        seen = np.union1d(seen, new)
        frontier = new
    codes, parents, gens = np.concatenate(codes), np.concatenate(parents), np.concatenate(gens)
    order = np.argsort(codes)
    return codes[order], parents[order], gens[order], lam


def _bfs_factor(M: np.ndarray) -> list[Vector] | None:
    from . import groups as gr

    g = M.shape[0] // 2
    codes, parents, gens, lam = _transvection_tree(g)
    c = np.uint64(gr.pack(M))
    out: list[Vector] = []
    while True:
        i = int(np.searchsorted(codes, c))
        if i >= codes.size or codes[i] != c:
            return None
        if gens[i] < 0:
            return out  # M = T_{z_k} ... T_{z_1}, listed left to right
        out.append(lam[int(gens[i])])
        c = parents[i]


def factor_into_z2_transvections(M: np.ndarray) -> list[Vector]:
    """Vectors z_1..z_k in Lambda_g with ``T_{z_1} ... T_{z_k} = M``.

    Raises ValueError if M is not in O(2g, Z_2) or (possible only for g = 2)
    not in the subgroup generated by Z_2-transvections.
    """
    M = (np.array(M, dtype=np.int64) % 2).astype(np.uint8)
    g = M.shape[0] // 2
    if not _in_orthogonal(M):
        raise ValueError("matrix is not in O(2g, Z_2)")
    if g <= 3:
        zs = _bfs_factor(M)  # shortest factorization from the cached tree
    else:
        zs = _greedy_factor(M)
        if zs is None:
            # the greedy pass can strand the last blocks in the half of
            # O(4, Z_2) that transvections miss; a leading T_z moves it elsewhere
            for z in lambda_set(g):
                rest = _greedy_factor(sp.mul_mod2(sp.transvection_mod2(z), M))
                if rest is not None:
                    zs = [z] + rest
                    break
    if zs is None:
        raise ValueError("matrix is not a product of Z_2-transvections")
    assert np.array_equal(_product_mod2(g, zs), M)
    return zs


@dataclass
class OrthWord:
    """Generator tags whose Z_2-transvections multiply (in order) to ``matrix``."""

    genus: int
    tags: list[str]

    def matrix(self) -> np.ndarray:
        gens = lambda_generators(self.genus)
        M = sp.identity_mod2(self.genus)
        for t in self.tags:
            M = sp.mul_mod2(M, _tag_matrix(t, self.genus, gens))
        return M


def _tag_matrix(tag: str, g: int, gens: dict[str, Vector] | None = None) -> np.ndarray:
    if tag == "T":
        return wd.eval_mod2(wd.expand_named("T", g), g)
    gens = gens or lambda_generators(g)
    if tag not in gens:
        raise ValueError(f"unknown generator tag {tag!r} for genus {g}")
    return sp.transvection_mod2(gens[tag])


def factor_orthogonal(M: np.ndarray, allow_t: bool = False) -> OrthWord:
    """Word in the standard transvection generators equal to ``M``.

    Every factor ``T_z`` is conjugated down to a standard generator along its
    lambda reduction: ``T_z = T_{o_1} ... T_{o_m} T_gamma T_{o_m} ... T_{o_1}``.
    At genus 2 the transvections generate only half of O(4, Z_2); with
    ``allow_t`` the other coset is reached through the image of ``T = C1 C3 C5``.
    """
    M = (np.array(M, dtype=np.int64) % 2).astype(np.uint8)
    g = M.shape[0] // 2
    tail: list[str] = []
    if allow_t and g == 2:
        try:
            zs = factor_into_z2_transvections(M)
        except ValueError:
            if not _in_orthogonal(M):
                raise
            Tm = _tag_matrix("T", 2)
            zs = factor_into_z2_transvections(sp.mul_mod2(M, Tm))  # T is an involution mod 2
            tail = ["T"]
    else:
        zs = factor_into_z2_transvections(M)
    by_vec = {v: k for k, v in lambda_generators(g).items()}
    tags: list[str] = []
    for z in zs:
        ops = lambda_reduce(z)
        gamma = replay_lambda(z, ops)
        outer = [by_vec[o] for o in ops]
        tags += outer + [by_vec[gamma]] + outer[::-1]
    word = OrthWord(g, tags + tail)
    assert np.array_equal(word.matrix(), M)
    return word


# --- orbit witnesses ---------------------------------------------------------


def witness_targets(g: int) -> list[Vector]:
    """Mod-2 classes of {(0,1),0..}, {(1,1),0..} and {(0,0),(1,1),0..}."""
    return [sp.y(g, 1), sp.add(sp.x(g, 1), sp.y(g, 1)), sp.add(sp.x(g, 2), sp.y(g, 2))]


def _generator_actions(g: int) -> list[tuple[str, np.ndarray]]:
    acts = []
    for name, w in wd.generators(g).items():
        M = wd.eval_mod2(w, g)
        if np.array_equal(M, sp.identity_mod2(g)):
            continue
        acts.append((name, M))
        Minv = wd.eval_mod2(wd.inverse_word(w), g)
        if not np.array_equal(Minv, M):
            acts.append((name + "^-1", Minv))
    return acts


def orbit_witness(v: Sequence[int], g: int) -> list[str]:
    """Generator tokens ``[n_k, ..., n_1]`` (a word, rightmost applied first)
    whose mod-2 action carries ``v`` to one of :func:`witness_targets`."""
    if g < 3:
        raise ValueError("orbit_witness needs genus >= 3")
    v = sp.mod2(v)
    if not any(v):
        raise ValueError("zero class has no witness")
    targets = set(witness_targets(g))
    acts = _generator_actions(g)
    parent: dict[Vector, tuple[Vector, str] | None] = {v: None}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if u in targets:
            path = []
            while parent[u] is not None:
                u, name = parent[u]
                path.append(name)
            return path  # last-applied first, i.e. already in word order
        for name, M in acts:
            w = tuple(int(c) % 2 for c in (M.astype(np.int64) @ np.array(u)))
            if w not in parent:
                parent[w] = (u, name)
                queue.append(w)
    raise ValueError(f"no witness for {v}: the generator images never reach a target")


def replay_witness(v: Sequence[int], tokens: Sequence[str], g: int) -> Vector:
    w = wd.parse_word(" ".join(tokens), g)
    M = wd.eval_mod2(w, g)
    return tuple(int(c) % 2 for c in (M.astype(np.int64) @ np.array(sp.mod2(v))))
