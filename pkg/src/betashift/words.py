"""Finite and eventually periodic binary words.

An eventually periodic word is stored as a preperiod and a nonempty period,
in canonical form: the period is primitive and the preperiod is as short as
possible.  The text form is ``"100(10)"`` (preperiod, then the period in
parentheses); purely periodic words print as ``"(0110)"``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

Bits = tuple[int, ...]

_WORD_RE = re.compile(r"^\s*([01]*)\(([01]+)\)\s*$")


def _bits(seq: Iterable) -> Bits:
    out = tuple(int(b) for b in seq)
    for b in out:
        if b not in (0, 1):
            raise ValueError(f"not a binary symbol: {b!r}")
    return out


def bits_from_str(text: str) -> Bits:
    """``"0110"`` -> (0, 1, 1, 0)."""
    text = text.strip()
    if any(c not in "01" for c in text):
        raise ValueError(f"not a bit string: {text!r}")
    return tuple(int(c) for c in text)


def bits_to_str(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def primitive_root(period: Bits) -> Bits:
    """Shortest word u with period == u repeated."""
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


@total_ordering
@dataclass(frozen=True, init=False)
class EPWord:
    """Eventually periodic infinite binary word ``pre`` followed by ``per`` forever."""

    pre: Bits
    per: Bits

    def __init__(self, pre: Iterable = (), per: Iterable = (0,)):
        pre, per = _bits(pre), _bits(per)
        if not per:
            raise ValueError("period must be nonempty")
        per = primitive_root(per)
        pre = list(pre)
        # absorb trailing preperiod symbols into the period by rotation
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = (per[-1],) + per[:-1]
        object.__setattr__(self, "pre", tuple(pre))
        object.__setattr__(self, "per", per)

    @classmethod
    def periodic(cls, per: Iterable) -> "EPWord":
        return cls((), per)

    @classmethod
    def parse(cls, text: str) -> "EPWord":
        m = _WORD_RE.match(text)
        if not m:
            raise ValueError(f"malformed eventually periodic word: {text!r}")
        return cls(bits_from_str(m.group(1)), bits_from_str(m.group(2)))

    def __str__(self) -> str:
        return f"{bits_to_str(self.pre)}({bits_to_str(self.per)})"

    def __repr__(self) -> str:
        return f"EPWord({str(self)!r})"

    def __getitem__(self, i: int) -> int:
        """Symbol at 0-based index i."""
        if i < 0:
            raise IndexError("infinite words have no negative indices")
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> Bits:
        """The first n symbols."""
        if n <= len(self.pre):
            return self.pre[:n]
        k = n - len(self.pre)
        reps = -(-k // len(self.per))
        return self.pre + (self.per * reps)[:k]

    def __lt__(self, other: "EPWord") -> bool:
        if not isinstance(other, EPWord):
            return NotImplemented
        return lex_compare(self, other) < 0

    @property
    def is_periodic(self) -> bool:
        return not self.pre


def shift(w: EPWord, m: int = 1) -> EPWord:
    """sigma^m(w)."""
    if m < 0:
        raise ValueError("shift count must be nonnegative")
    if m <= len(w.pre):
        return EPWord(w.pre[m:], w.per)
    r = (m - len(w.pre)) % len(w.per)
    return EPWord((), w.per[r:] + w.per[:r])


def distinct_shifts(w: EPWord) -> list[EPWord]:
    """sigma^m(w) for m = 0 .. |pre|+|per|-1, which covers every shift."""
    return [shift(w, m) for m in range(len(w.pre) + len(w.per))]


def lex_compare(u: EPWord, v: EPWord) -> int:
    """-1, 0 or 1 according to the lexicographic order on infinite words."""
    if u == v:
        return 0
    bound = len(u.pre) + len(v.pre) + math.lcm(len(u.per), len(v.per)) + 1
    for i in range(bound):
        a, b = u[i], v[i]
        if a != b:
            return -1 if a < b else 1
    # unreachable for canonical words that differ
    raise AssertionError(f"no difference found between {u} and {v}")


def compare_prefix(u: Sequence[int], v: EPWord) -> int:
    """Compare a finite word with the same-length prefix of v."""
    for i, a in enumerate(u):
        b = v[i]
        if a != b:
            return -1 if a < b else 1
    return 0


def star(w):
    """Flip every bit; works on EPWords and on finite bit sequences."""
    if isinstance(w, EPWord):
        return EPWord(tuple(1 - b for b in w.pre), tuple(1 - b for b in w.per))
    return tuple(1 - b for b in w)


def kappa_subst(w: Sequence[int]) -> Bits:
    """Substitute 0 -> 01 and 1 -> 10."""
    out: list[int] = []
    for b in w:
        out.extend((0, 1) if b == 0 else (1, 0))
    return tuple(out)


def is_periodic(w: EPWord) -> bool:
    return w.is_periodic


ZERO = EPWord((), (0,))
ONE = EPWord((), (1,))
