"""Exact linear algebra on H_1 of a closed genus-g surface.

Homology classes are plain tuples of integers in the interleaved basis
``x_1, y_1, x_2, y_2, ..., x_g, y_g`` so that block ``i`` (0-based) occupies
coordinates ``2i, 2i+1``.  Integer matrices are numpy arrays of Python ints
(``dtype=object``) so that no entry can overflow; mod-2 matrices are
``uint8`` arrays.  Matrices act on column vectors from the left.

A quadratic form over GF(2) is stored as the tuple of its values on the
basis vectors; everything else follows from ``q(u+v) = q(u)+q(v)+(u,v)_2``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]
QuadForm = tuple[int, ...]


def genus_of(v: Sequence[int]) -> int:
    if len(v) == 0 or len(v) % 2:
        raise ValueError(f"a homology class needs an even, positive number of coordinates, got {len(v)}")
    return len(v) // 2


def _same_genus(u: Sequence[int], v: Sequence[int]) -> int:
    g = genus_of(u)
    if len(v) != len(u):
        raise ValueError(f"genus mismatch: {len(u)} vs {len(v)} coordinates")
    return g


def basis_vector(g: int, k: int) -> Vector:
    """The k-th basis vector (0-based, interleaved order)."""
    e = [0] * (2 * g)
    e[k] = 1
    return tuple(e)


def x(g: int, i: int) -> Vector:
    """x_i, 1-based as in the usual notation."""
    return basis_vector(g, 2 * (i - 1))


def y(g: int, i: int) -> Vector:
    return basis_vector(g, 2 * (i - 1) + 1)


def add(*vs: Sequence[int]) -> Vector:
    return tuple(int(sum(c)) for c in zip(*vs, strict=True))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * c for c in v)


def mod2(v: Iterable[int]) -> Vector:
    return tuple(int(c) % 2 for c in v)


def from_blocks(blocks: Sequence[Sequence[int]]) -> Vector:
    """``[(a1, b1), (a2, b2), ...]`` -> ``a1 x1 + b1 y1 + a2 x2 + ...``."""
    return tuple(int(c) for blk in blocks for c in blk)


def blocks(v: Sequence[int]) -> list[tuple[int, int]]:
    return [(int(v[2 * i]), int(v[2 * i + 1])) for i in range(genus_of(v))]


def is_primitive(v: Sequence[int]) -> bool:
    d = 0
    for c in v:
        d = gcd(d, int(c))
    return d == 1


def intersection_int(u: Sequence[int], v: Sequence[int]) -> int:
    """Algebraic intersection with ``(x_i, y_j) = delta_ij``."""
    g = _same_genus(u, v)
    return sum(int(u[2 * i]) * int(v[2 * i + 1]) - int(u[2 * i + 1]) * int(v[2 * i]) for i in range(g))


def intersection_mod2(u: Sequence[int], v: Sequence[int]) -> int:
    return intersection_int(u, v) % 2


@lru_cache(maxsize=None)
def gram(g: int) -> np.ndarray:
    """Gram matrix J of the intersection form: ``(u, v) = u^T J v``."""
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    J.setflags(write=False)
    return J


# --- quadratic forms -------------------------------------------------------


def zero_form(g: int) -> QuadForm:
    """q_0: vanishes on every x_i and y_i."""
    return (0,) * (2 * g)


def quad_eval(q: Sequence[int], v: Sequence[int]) -> int:
    """Evaluate the form with basis values ``q`` on the mod-2 class ``v``.

    Expanding ``v`` as a sum of basis vectors, polarization gives
    ``q(v) = sum_k v_k q(b_k) + sum_{k<l} v_k v_l (b_k, b_l)_2`` and the only
    basis pairs with nonzero pairing are ``(x_i, y_i)``.
    """
    g = _same_genus(q, v)
    w = mod2(v)
    s = sum(w[k] * (int(q[k]) % 2) for k in range(2 * g))
    s += sum(w[2 * i] * w[2 * i + 1] for i in range(g))
    return s % 2


def arf(q: Sequence[int]) -> int:
    g = genus_of(q)
    return sum((int(q[2 * i]) % 2) * (int(q[2 * i + 1]) % 2) for i in range(g)) % 2


def enumerate_forms(g: int, arf_value: int | None = None) -> list[QuadForm]:
    """All 2^(2g) forms in lexicographic order, optionally filtered by Arf invariant."""
    if g < 1:
        raise ValueError("genus must be positive")
    forms = [tuple(bits) for bits in itertools.product((0, 1), repeat=2 * g)]
    if arf_value is None:
        return forms
    return [q for q in forms if arf(q) == arf_value]


def pullback_form(q: Sequence[int], M: np.ndarray) -> QuadForm:
    """Basis values of ``v -> q(M v)``."""
    n = len(q)
    return tuple(quad_eval(q, M[:, k]) for k in range(n))


# --- matrices --------------------------------------------------------------


def identity_int(g: int) -> np.ndarray:
    return np.array([[int(i == j) for j in range(2 * g)] for i in range(2 * g)], dtype=object)


def identity_mod2(g: int) -> np.ndarray:
    return np.eye(2 * g, dtype=np.uint8)


def as_int_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=object)
    return np.vectorize(int, otypes=[object])(A) if A.size else A


def as_mod2_matrix(M) -> np.ndarray:
    return (np.array(M, dtype=object) % 2).astype(np.uint8)


def mul_mod2(*Ms: np.ndarray) -> np.ndarray:
    out = Ms[0].astype(np.int64)
    for M in Ms[1:]:
        out = (out @ M.astype(np.int64)) % 2
    return out.astype(np.uint8)


def transvection_int(a: Sequence[int], power: int = 1) -> np.ndarray:
    """Matrix of ``T_a^power``: ``v -> v + power (a, v) a``.

    Powers compose additively because ``(a, a) = 0``.
    """
    g = genus_of(a)
    col = np.array([int(c) for c in a], dtype=object)
    row = np.array([int(c) for c in (np.array(a, dtype=object) @ gram(g).astype(object))], dtype=object)
    return identity_int(g) + power * np.outer(col, row)


def transvection_mod2(a: Sequence[int]) -> np.ndarray:
    """``v -> v + (a, v)_2 a`` over GF(2)."""
    a2 = mod2(a)
    if not any(a2):
        raise ValueError("transvection about the zero class")
    g = genus_of(a2)
    col = np.array(a2, dtype=np.int64)
    row = (col @ gram(g)) % 2
    return ((np.eye(2 * g, dtype=np.int64) + np.outer(col, row)) % 2).astype(np.uint8)


def square_transvection(a: Sequence[int]) -> np.ndarray:
    """``T_a^2 : v -> v + 2 (a, v) a`` for primitive ``a``."""
    if not is_primitive(a):
        raise ValueError(f"square transvection needs a primitive class, got {tuple(a)}")
    return transvection_int(a, 2)


def is_symplectic_int(M: np.ndarray) -> bool:
    g = genus_of(M)
    J = gram(g).astype(object)
    M = np.array(M, dtype=object)
    return bool(np.array_equal(M.T @ J @ M, J))


def is_symplectic_mod2(M: np.ndarray) -> bool:
    g = genus_of(M)
    J = gram(g) % 2
    M = np.array(M, dtype=np.int64) % 2
    return bool(np.array_equal((M.T @ J @ M) % 2, J))


def preserves_form(M: np.ndarray, q: Sequence[int]) -> bool:
    """True iff ``q(M v) = q(v)`` for all v.

    For symplectic M it is enough to test the basis: both ``q`` and
    ``q o M`` are quadratic refinements of the same bilinear form, and such
    refinements are determined by their basis values.
    """
    if not is_symplectic_mod2(M):
        raise ValueError("preserves_form needs a symplectic matrix")
    M = np.array(M, dtype=np.int64) % 2
    return all(quad_eval(q, M[:, k]) == int(q[k]) % 2 for k in range(M.shape[0]))


def all_vectors_mod2(g: int, nonzero: bool = True) -> list[Vector]:
    vs = [tuple(bits) for bits in itertools.product((0, 1), repeat=2 * g)]
    return vs[1:] if nonzero else vs
