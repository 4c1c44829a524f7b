"""Dehn-twist words and their action on homology.

Letters are the chain twists ``C_1, ..., C_{2g+1}`` and, for g >= 3, the
twists ``B_4, B_6, ..., B_{2g-2}``.  Words compose functionally: the word
``C2 C1`` means "apply C1, then C2", so the matrix of a word is the product
of its letter matrices taken in the printed order and the rightmost letter
acts on a homology class first.

Named elements (``X2``, ``Xs2`` for X*_2, ``Y4``, ``Ys4``, ``D5``, ``DB4``,
``T``, ``T1``, ``T2``) are expanded into letters before evaluation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import symplectic as sp
from .symplectic import Vector


class WordSyntaxError(ValueError):
    """Raised for an unreadable or out-of-range token."""

    def __init__(self, token: str, reason: str):
        super().__init__(f"bad token {token!r}: {reason}")
        self.token = token


@dataclass(frozen=True, order=True)
class Letter:
    kind: str
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.sign)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name if self.sign > 0 else f"{self.name}^-1"


Word = tuple[Letter, ...]


def C(i: int, sign: int = 1) -> Letter:
    return Letter("C", i, sign)


def B(i: int, sign: int = 1) -> Letter:
    return Letter("B", i, sign)


def cword(*indices: int) -> Word:
    """Word in chain twists; negative integers denote inverse letters."""
    return tuple(C(abs(i), 1 if i > 0 else -1) for i in indices)


def inverse_word(w: Sequence[Letter]) -> Word:
    return tuple(a.inverse() for a in reversed(w))


def power(w: Sequence[Letter], n: int) -> Word:
    if n < 0:
        return tuple(inverse_word(w)) * (-n)
    return tuple(w) * n


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(str(a) for a in w) if w else "1"


def check_letter(a: Letter, g: int) -> None:
    if a.sign not in (1, -1):
        raise WordSyntaxError(str(a), "exponent must be +1 or -1")
    if a.kind == "C":
        if not 1 <= a.index <= 2 * g + 1:
            raise WordSyntaxError(str(a), f"C-index must lie in 1..{2 * g + 1} for genus {g}")
    elif a.kind == "B":
        if g < 3:
            raise WordSyntaxError(str(a), "B-letters need genus >= 3")
        if a.index % 2 or not 4 <= a.index <= 2 * g - 2:
            raise WordSyntaxError(str(a), f"B-index must be even in 4..{2 * g - 2}")
    else:
        raise WordSyntaxError(str(a), "unknown letter kind")


# --- named elements --------------------------------------------------------

_NAMED = re.compile(r"^(Xs|X|Ys|Y|DB|D|T)(\d*)$")


def expand_named(tag: str, g: int) -> Word:
    """Literal expansion of a named element into twist letters."""
    m = _NAMED.match(tag)
    if not m:
        raise WordSyntaxError(tag, "not a named element")
    kind, num = m.group(1), m.group(2)
    if kind == "T":
        if num == "":
            if g != 2:
                raise WordSyntaxError(tag, "T is only defined for genus 2")
            return cword(1, 3, 5)
        if g < 3:
            raise WordSyntaxError(tag, "T1 and T2 need genus >= 3")
        if num == "1":
            return (C(1), C(3), B(4))
        if num == "2":
            return (B(4),) + cword(*range(5, 2 * g + 2, 2))
        raise WordSyntaxError(tag, "only T, T1, T2 exist")
    if num == "":
        raise WordSyntaxError(tag, "missing index")
    i = int(num)
    if kind in ("X", "Xs"):
        if not 1 <= i <= 2 * g:
            raise WordSyntaxError(tag, f"index must lie in 1..{2 * g}")
        return cword(i + 1, i, -(i + 1)) if kind == "X" else cword(-(i + 1), i, i + 1)
    if kind == "D":
        if not 1 <= i <= 2 * g + 1:
            raise WordSyntaxError(tag, f"index must lie in 1..{2 * g + 1}")
        return cword(i, i)
    # Y, Ys, DB are indexed by 2j with 2 <= j <= g-1
    if i % 2 or not 2 <= i // 2 <= g - 1:
        raise WordSyntaxError(tag, f"index must be 2j with 2 <= j <= {g - 1}")
    if kind == "Y":
        return (C(i), B(i), C(i, -1))
    if kind == "Ys":
        return (C(i, -1), B(i), C(i))
    return (B(i), B(i))


def generator_names(g: int) -> list[str]:
    """Names of the listed generators of G_g, in a fixed order."""
    if g < 2:
        raise ValueError("G_g is defined for g >= 2")
    names = [f"X{i}" for i in range(1, 2 * g + 1)]
    names += [f"Y{2 * j}" for j in range(2, g)]
    names += [f"D{i}" for i in range(1, 2 * g + 2)]
    names += [f"DB{2 * j}" for j in range(2, g)]
    names += ["T"] if g == 2 else ["T1", "T2"]
    return names


def generators(g: int) -> dict[str, Word]:
    return {n: expand_named(n, g) for n in generator_names(g)}


_TOKEN = re.compile(r"^([A-Za-z]+\d*)(?:\^(-?1))?$")


def parse_word(text: str, g: int) -> Word:
    """Parse whitespace-separated tokens such as ``C3 C3^-1 Xs2 D5^-1``."""
    out: list[Letter] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError(tok, "expected NAME or NAME^-1")
        name, exp = m.group(1), m.group(2)
        sign = -1 if exp == "-1" else 1
        lm = re.match(r"^([CB])(\d+)$", name)
        if lm:
            a = Letter(lm.group(1), int(lm.group(2)), sign)
            check_letter(a, g)
            out.append(a)
            continue
        w = expand_named(name, g)
        out.extend(w if sign > 0 else inverse_word(w))
    return tuple(out)


# --- curve classes ---------------------------------------------------------


@dataclass(frozen=True)
class CurveClassTable:
    """Homology classes of the twist curves.

    ``c_int[i]`` is an integral class for ``c_i``; ``b_mod2[j]`` the mod-2
    class of ``b_j``; ``b_int`` optional integral lifts of the B curves.
    """

    genus: int
    c_int: dict[int, Vector]
    b_mod2: dict[int, Vector] = field(default_factory=dict)
    b_int: dict[int, Vector] = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.genus, tuple(sorted(self.c_int.items())),
                     tuple(sorted(self.b_mod2.items())), tuple(sorted(self.b_int.items()))))

    def integral(self, a: Letter) -> Vector:
        if a.kind == "C":
            return self.c_int[a.index]
        if a.index in self.b_int:
            return self.b_int[a.index]
        raise ValueError(f"no integral class configured for {a.name}; only its mod-2 class is known")

    def mod2(self, a: Letter) -> Vector:
        if a.kind == "C":
            return sp.mod2(self.c_int[a.index])
        if a.index in self.b_int:
            return sp.mod2(self.b_int[a.index])
        return self.b_mod2[a.index]

    def chain_violations(self) -> list[str]:
        """Empty iff consecutive chain classes meet once and the rest are disjoint."""
        bad = []
        n = 2 * self.genus + 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = sp.intersection_int(self.c_int[i], self.c_int[j])
                want = {1} if j == i + 1 else {0}
                if j == i + 1 and abs(v) == 1:
                    continue
                if v not in want:
                    bad.append(f"(c{i}, c{j}) = {v}")
        q0 = sp.zero_form(self.genus)
        for i in range(1, n + 1):
            if sp.quad_eval(q0, self.c_int[i]):
                bad.append(f"q0(c{i}) = 1")
        return bad

    def to_json(self) -> str:
        data = {f"C{i}": list(v) for i, v in sorted(self.c_int.items())}
        data.update({f"B{j}": list(v) for j, v in sorted(self.b_int.items())})
        return json.dumps(data, indent=2)

    @classmethod
    def from_json(cls, text: str, g: int) -> "CurveClassTable":
        data = json.loads(text)
        base = default_curve_classes(g)
        c_int, b_int = {}, {}
        for name, coords in data.items():
            m = re.match(r"^([CB])(\d+)$", name)
            if not m or len(coords) != 2 * g:
                raise ValueError(f"bad curve-class entry {name!r}")
            (c_int if m.group(1) == "C" else b_int)[int(m.group(2))] = tuple(int(c) for c in coords)
        missing = set(base.c_int) - set(c_int)
        if missing:
            raise ValueError(f"curve-class table lacks C{min(missing)}")
        return cls(g, c_int, dict(base.b_mod2), b_int)


@lru_cache(maxsize=None)
def default_curve_classes(g: int) -> CurveClassTable:
    """Chain classes ``c_{2k} = +-y_k``, ``c_{2k+1} = +-(x_k + x_{k+1})``.

    ``c_1 = x_1`` and ``c_{2g+1} = +-x_g``; signs are fixed so that
    ``(c_i, c_{i+1}) = +1`` all along the chain.  The mod-2 class of
    ``b_{2j}`` is ``x_j``.
    """
    if g < 1:
        raise ValueError("genus must be positive")
    raw: dict[int, Vector] = {1: sp.x(g, 1)}
    for k in range(1, g + 1):
        raw[2 * k] = sp.y(g, k)
        nxt = sp.x(g, k + 1) if k < g else (0,) * (2 * g)
        raw[2 * k + 1] = sp.add(sp.x(g, k), nxt)
    c_int = {1: raw[1]}
    for i in range(2, 2 * g + 2):
        s = sp.intersection_int(c_int[i - 1], raw[i])
        c_int[i] = raw[i] if s == 1 else sp.scale(-1, raw[i])
    b_mod2 = {2 * j: sp.x(g, j) for j in range(2, g)}
    return CurveClassTable(g, c_int, b_mod2)


# --- evaluation ------------------------------------------------------------

_OVERFLOW_GUARD = 1 << 40


def _letter_factors(w: Sequence[Letter], table: CurveClassTable, integral: bool):
    g = table.genus
    J = sp.gram(g)
    out = []
    for a in w:
        check_letter(a, g)
        v = np.array(table.integral(a) if integral else table.mod2(a), dtype=np.int64)
        out.append((v, v @ J, a.sign))
    return out


def eval_int(w: Sequence[Letter], g: int, table: CurveClassTable | None = None) -> np.ndarray:
    """Integral symplectic matrix of a word (exact, arbitrary precision)."""
    table = table or default_curve_classes(g)
    if table.genus != g:
        raise ValueError("curve-class table has the wrong genus")
    factors = _letter_factors(w, table, integral=True)
    M = np.eye(2 * g, dtype=np.int64)
    exact = False
    for a, aJ, s in factors:
        # M T_a^s = M + s (M a)(a^T J)
        if not exact and np.abs(M).max() > _OVERFLOW_GUARD:
            M = M.astype(object)
            exact = True
        if exact:
            M = M + s * np.outer(M @ a.astype(object), aJ.astype(object))
        else:
            M = M + s * np.outer(M @ a, aJ)
    return sp.as_int_matrix(M)


def eval_mod2(w: Sequence[Letter], g: int, table: CurveClassTable | None = None) -> np.ndarray:
    table = table or default_curve_classes(g)
    if table.genus != g:
        raise ValueError("curve-class table has the wrong genus")
    M = np.eye(2 * g, dtype=np.int64)
    for a, aJ, _ in _letter_factors(w, table, integral=False):
        M = (M + np.outer(M @ a, aJ)) % 2
    return M.astype(np.uint8)


def spin_check(w: Sequence[Letter], g: int, table: CurveClassTable | None = None) -> bool:
    """Does the word preserve q_0 on H_1(;Z_2)?"""
    return sp.preserves_form(eval_mod2(w, g, table), sp.zero_form(g))


def hyperelliptic_word(g: int) -> Word:
    """``C_1 ... C_{2g+1} C_{2g+1} ... C_1``."""
    up = cword(*range(1, 2 * g + 2))
    return up + tuple(reversed(up))


def _central_sign(M: np.ndarray) -> int | None:
    n = M.shape[0]
    I = sp.identity_int(n // 2)
    if np.array_equal(M, I):
        return 1
    if np.array_equal(M, -I):
        return -1
    return None


def braid_check(g: int, table: CurveClassTable | None = None) -> list[dict]:
    """Check the braid relations and, for g = 2, the remaining relations of M_2.

    Each entry has ``relation``, ``args``, ``holds`` and, for the central
    relations, ``sign`` (+1 or -1 when the word evaluates to +-I).
    """
    table = table or default_curve_classes(g)
    n = 2 * g + 1
    report = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            lhs, rhs = eval_int(cword(i, j), g, table), eval_int(cword(j, i), g, table)
            report.append({"relation": 1, "args": [i, j], "holds": bool(np.array_equal(lhs, rhs))})
    for i in range(1, n):
        lhs = eval_int(cword(i, i + 1, i), g, table)
        rhs = eval_int(cword(i + 1, i, i + 1), g, table)
        report.append({"relation": 2, "args": [i], "holds": bool(np.array_equal(lhs, rhs))})
    if g == 2:
        iota = hyperelliptic_word(2)
        for rel, w in ((3, power(cword(1, 2, 3, 4, 5), 6)), (4, power(iota, 2))):
            s = _central_sign(eval_int(w, g, table))
            report.append({"relation": rel, "args": [], "holds": s is not None, "sign": s})
        s = _central_sign(eval_int(iota, g, table))
        report.append({"relation": "4-half", "args": [], "holds": s is not None, "sign": s})
        H = eval_int(iota, g, table)
        for i in range(1, 6):
            Ci = eval_int(cword(i), g, table)
            report.append({"relation": 5, "args": [i], "holds": bool(np.array_equal(H @ Ci, Ci @ H))})
    return report
