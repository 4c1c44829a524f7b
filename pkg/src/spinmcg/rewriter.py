"""Rewrite ``W C_i C_i W^-1`` as a product of G_g generator tokens.

Words in the chain twists are processed as tuples of :class:`Letter`.
Positions inside a positive word are counted from the right, so in
``W = x_l ... x_2 x_1`` the letter ``x_1`` is ``W[-1]``.

The recursion mirrors the induction on word length, number of jumps and
position of the rightmost turn.  Every step is a group identity built
from commutation of non-adjacent twists and the braid relation, so the
emitted token product equals the input in the mapping class group; the
certificate check replays it on integral homology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import words as wd
from .words import Letter, Word

_MAX_DEPTH = 10_000


@dataclass(frozen=True)
class GToken:
    kind: str  # "X", "Xs" or "D"
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("X", "Xs", "D") or self.sign not in (1, -1):
            raise ValueError(f"bad token {self.kind}{self.index}^{self.sign}")

    def inverse(self) -> "GToken":
        return GToken(self.kind, self.index, -self.sign)

    @property
    def text(self) -> str:
        base = f"{self.kind}{self.index}"
        return base if self.sign == 1 else base + "^-1"

    def expand(self, g: int) -> Word:
        w = wd.expand_named(f"{self.kind}{self.index}", g)
        return w if self.sign == 1 else wd.inverse_word(w)

    @classmethod
    def parse(cls, text: str) -> "GToken":
        base, _, exp = text.partition("^")
        for kind in ("Xs", "X", "D"):
            if base.startswith(kind) and base[len(kind):].isdigit():
                if exp not in ("", "1", "-1"):
                    break
                return cls(kind, int(base[len(kind):]), -1 if exp == "-1" else 1)
        raise wd.WordSyntaxError(text, "expected X<j>, Xs<j> or D<j> with optional ^-1")


def _inv(tokens: Sequence[GToken]) -> tuple[GToken, ...]:
    return tuple(t.inverse() for t in reversed(tokens))


def _adjacent(p: int, q: int) -> bool:
    return abs(p - q) == 1


def conjugate_token(p: int, q: int) -> GToken:
    """The token equal to ``C_p C_q C_p^-1`` for adjacent p, q.

    ``C_{k+1} C_k C_{k+1}^-1`` is X_k, and by the braid relation
    ``C_k C_{k+1} C_k^-1 = C_{k+1}^-1 C_k C_{k+1}`` is X*_k.
    """
    if p == q + 1:
        return GToken("X", q)
    if p == q - 1:
        return GToken("Xs", p)
    raise ValueError(f"C{p} and C{q} are not adjacent")


# --- negative letters ------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """A positive letter C_j, or the marked inverse square C_j^-1 C_j^-1."""

    index: int
    inverse_square: bool = False

    def letters(self) -> Word:
        if self.inverse_square:
            return (wd.C(self.index, -1), wd.C(self.index, -1))
        return (wd.C(self.index),)

    def __str__(self) -> str:
        return f"(C{self.index}^-1 C{self.index}^-1)" if self.inverse_square else f"C{self.index}"


def normalize_negatives(w: Sequence[Letter]) -> tuple[Piece, ...]:
    """Replace each ``C_j^-1`` by ``(C_j^-1 C_j^-1) C_j``."""
    out: list[Piece] = []
    for a in w:
        if a.kind != "C":
            raise ValueError(f"the rewriter takes chain letters only, got {a}")
        if a.sign == 1:
            out.append(Piece(a.index))
        else:
            out += [Piece(a.index, True), Piece(a.index)]
    return tuple(out)


def pieces_to_word(ps: Sequence[Piece]) -> Word:
    return tuple(a for p in ps for a in p.letters())


# --- jumps and turns -------------------------------------------------------


def _rl(w: Sequence[int]) -> list[int]:
    """Indices read right to left, padded so that ``x[k]`` is x_k."""
    return [0] + list(reversed(w))


def detect_jumps(w: Sequence[int]) -> list[int]:
    """Positions k >= 2 (counted from the right) where x_k, x_{k-1} are not adjacent."""
    x = _rl(w)
    return [k for k in range(2, len(w) + 1) if not _adjacent(x[k], x[k - 1])]


def detect_turns(w: Sequence[int]) -> list[int]:
    """Positions k >= 3 with x_k, x_{k-1} not jumps and x_k = x_{k-2}."""
    x = _rl(w)
    jumps = set(detect_jumps(w))
    return [k for k in range(3, len(w) + 1)
            if k not in jumps and k - 1 not in jumps and x[k] == x[k - 2]]


def _indices(w) -> tuple[int, ...]:
    return tuple(a.index if isinstance(a, (Letter, Piece)) else int(a) for a in w)


def measure(w: Sequence[int]) -> tuple[int, int, int]:
    """(length, number of jumps, position of rightmost turn or 0)."""
    turns = detect_turns(w)
    return (len(w), len(detect_jumps(w)), min(turns) if turns else 0)


# --- the recursion ---------------------------------------------------------


class _Rewriter:
    def __init__(self, check_measure: bool = __debug__):
        self.check_measure = check_measure
        self.depth = 0

    @lru_cache(maxsize=None)
    def rewrite(self, ps: tuple[Piece, ...], i: int) -> tuple[GToken, ...]:
        """Tokens for ``P C_i C_i P^-1``, P a sequence of pieces."""
        # trailing pieces that commute with C_i drop out before anything else
        while ps and not _adjacent(ps[-1].index, i):
            ps = ps[:-1]
        for k, p in enumerate(ps):
            pair = p.inverse_square or (k + 1 < len(ps) and not ps[k + 1].inverse_square
                                        and ps[k + 1].index == p.index)
            if not pair:
                continue
            w1 = ps[:k]
            w2 = ps[k + 1:] if p.inverse_square else ps[k + 2:]
            conj = self.rewrite(w1, p.index)
            middle = self.rewrite(w1 + w2, i)
            if p.inverse_square:
                return _inv(conj) + middle + conj
            return conj + middle + _inv(conj)
        return self.claim(_indices(ps), i)

    def _recurse(self, w: tuple[int, ...], i: int, parent: tuple[int, int, int]):
        if self.check_measure:
            assert measure(w) < parent or len(w) < parent[0], (w, parent)
        return self.rewrite(tuple(Piece(k) for k in w), i)

    def claim(self, w: tuple[int, ...], i: int) -> tuple[GToken, ...]:
        """Positive ``w`` without repeated neighbours."""
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise RecursionError("rewriter recursion guard tripped")
        try:
            return self._claim(w, i)
        finally:
            self.depth -= 1

    def _migrate(self, w: tuple[int, ...], i: int) -> tuple[GToken, ...]:
        # same element, same length: deleting x_j may have created a C_k C_k
        # factor, so the word goes back through the pair peeling
        return self.rewrite(tuple(Piece(k) for k in w), i)

    def _claim(self, w: tuple[int, ...], i: int) -> tuple[GToken, ...]:
        # a rightmost letter not adjacent to C_i commutes through C_i C_i
        while w and not _adjacent(w[-1], i):
            w = w[:-1]
        if not w:
            return (GToken("D", i),)
        if len(w) == 1:
            t = conjugate_token(w[0], i)
            return (t, t)
        x = _rl(w)
        l = len(w)
        m = measure(w)
        jumps, turns = detect_jumps(w), detect_turns(w)
        j = min(jumps) if jumps else None
        t = min(turns) if turns else None

        if j is None and t is None:
            # Case 1: extract x_l x_{l-1} x_l^-1, recurse on W without x_{l-1}
            a = conjugate_token(x[l], x[l - 1])
            rest = w[:1] + w[2:]
            return (a,) + self._recurse(rest, i, m) + (a.inverse(),)

        if t is None or (j is not None and j < t):
            # Case 2 on the rightmost jump x_j
            if j == 2:
                head = w[:-2]
                x2, x1 = x[2], x[1]
                if not _adjacent(x2, i):
                    return self._recurse(head + (x1,), i, m)
                first = self._recurse(head + (x2,), i, m)
                second = self._recurse(head + (x2, i), x1, m)
                return _inv(first) + second + first
            below = [k for k in range(j - 1, 0, -1) if _adjacent(x[k], x[j])]
            pos_j = l - j  # index of x_j in w
            if not below:
                return self._migrate(w[:pos_j] + w[pos_j + 1:] + (x[j],), i)
            ip = max(below)  # leftmost adjacent letter among x_{j-1} .. x_1
            assert j > ip + 1
            if ip >= 2:
                assert x[j] == x[ip - 1], (w, j, ip)
                return self._migrate(w[:pos_j] + w[pos_j + 1:] + (x[ip],), i)
            # ip = 1: x_j commutes with x_{j-1} .. x_2 and meets x_1
            if x[2] == i:
                return self._recurse(w[:-2], x[1], m)
            assert x[j] == i, (w, j, i)
            return self._recurse(w[:pos_j] + w[pos_j + 1:-1], x[1], m)

        # Case 3 on the rightmost turn x_t; x_{t-1} .. x_1 is a clean chain
        if x[2] == i:
            return self._recurse(w[:-2], x[1], m)
        assert all(not _adjacent(x[k], i) and x[k] != i for k in range(2, t)), (w, t, i)
        assert all(not _adjacent(x[t - 1], x[k]) for k in range(1, t - 2)), (w, t)
        pos_t = l - t
        return self._recurse(w[:pos_t] + w[pos_t + 1:], i, m)


# --- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class RewriteCert:
    input_word: Word
    index: int
    tokens: tuple[GToken, ...]
    genus: int

    def token_word(self) -> Word:
        return tuple(a for t in self.tokens for a in t.expand(self.genus))

    def text(self) -> str:
        return " ".join(t.text for t in self.tokens) or "1"

    def to_json(self) -> str:
        return json.dumps({"input_word": wd.format_word(self.input_word),
                           "index": self.index,
                           "tokens": [t.text for t in self.tokens]})

    @classmethod
    def from_json(cls, text: str, g: int) -> "RewriteCert":
        d = json.loads(text)
        return cls(wd.parse_word(d["input_word"], g), int(d["index"]),
                   tuple(GToken.parse(s) for s in d["tokens"]), g)


def _check_input(w: Sequence[Letter], i: int, g: int) -> None:
    if not 1 <= i <= 2 * g + 1:
        raise ValueError(f"index {i} outside 1..{2 * g + 1}")
    for a in w:
        if a.kind != "C":
            raise ValueError(f"the rewriter takes chain letters only, got {a}")
        wd.check_letter(a, g)


def rewrite_square_conjugate(w: Sequence[Letter], i: int, g: int,
                             check_measure: bool = __debug__) -> RewriteCert:
    """Certificate expressing ``W C_i C_i W^-1`` through X, X* and D tokens."""
    w = tuple(w)
    _check_input(w, i, g)
    tokens = _Rewriter(check_measure).rewrite(normalize_negatives(w), i)
    return RewriteCert(w, i, tokens, g)


def check_rewrite(cert: RewriteCert, g: int | None = None) -> bool:
    g = cert.genus if g is None else g
    target = cert.input_word + (wd.C(cert.index), wd.C(cert.index)) + wd.inverse_word(cert.input_word)
    try:
        got = wd.eval_int(tuple(a for t in cert.tokens for a in t.expand(g)), g)
    except (ValueError, wd.WordSyntaxError):
        return False
    return bool(np.array_equal(got, wd.eval_int(target, g)))
