"""Reduced words in a free group of rank n.

Letters are stored as nonzero signed integers: ``g`` stands for the
generator ``x_g`` and ``-g`` for its inverse.  In rank 2 the generators are
printed as ``x`` and ``y``; in any other rank as ``a``, ``b``, ``c``, ...
Upper case marks an inverse, and the empty word prints as ``1``.

>>> w = parse_word("xyX")
>>> w
Word('xyX')
>>> cyclic_reduce(w)
(Word('x'), Word('y'))
>>> str(invert(parse_word("x^-1 y^3")))
'YYYx'
"""
from __future__ import annotations

import re
from itertools import chain
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import (
    CancellationAtSeam,
    NotCyclicallyReduced,
    NotReduced,
    ParseError,
    RankError,
)

MAX_RANK = 26


class Letter(NamedTuple):
    generator: int  # 1-based
    sign: int  # +1 or -1

    @property
    def code(self) -> int:
        return self.generator * self.sign

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), 1 if code > 0 else -1)


class ExponentPair(NamedTuple):
    x_sum: int
    y_sum: int

    def coprime(self) -> bool:
        return _gcd(self.x_sum, self.y_sum) == 1

    def parity(self) -> int:
        """Parity of ``x_sum + y_sum`` (0 even, 1 odd)."""
        return (self.x_sum + self.y_sum) % 2


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


LetterLike = Union[int, Letter]


def _code(letter: LetterLike) -> int:
    if isinstance(letter, Letter):
        return letter.code
    return int(letter)


def _check_rank(rank: int) -> None:
    if not 1 <= rank <= MAX_RANK:
        raise RankError(f"rank must lie in 1..{MAX_RANK}, got {rank}")


class Word:
    """An immutable freely reduced word.

    Construct from letters that are already reduced; use :func:`reduce` for
    arbitrary sequences.  Equality is letterwise, which for reduced words
    coincides with equality in the group.
    """

    __slots__ = ("letters", "rank")

    def __init__(self, letters: Iterable[LetterLike] = (), rank: int = 2):
        _check_rank(rank)
        codes = tuple(_code(l) for l in letters)
        for c in codes:
            if c == 0 or abs(c) > rank:
                raise RankError(f"letter {c} outside rank {rank}")
        for a, b in zip(codes, codes[1:]):
            if a == -b:
                raise NotReduced(f"adjacent inverse pair in {codes}")
        object.__setattr__(self, "letters", codes)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def _make(cls, letters: tuple, rank: int) -> "Word":
        # Trusted constructor: letters must already be reduced and in range.
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "rank", rank)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            # subwords of reduced words are reduced
            return Word._make(self.letters[item], self.rank)
        return self.letters[item]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.rank, self.letters))

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat_group(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        out = Word._make((), self.rank)
        for _ in range(abs(n)):
            out = concat_group(out, base)
        return out

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        if self.rank == 2:
            return f"Word({format_word(self)!r})"
        return f"Word({format_word(self)!r}, rank={self.rank})"

    def letter(self, i: int) -> Letter:
        return Letter.from_code(self.letters[i])

    def length(self) -> int:
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters


def empty(rank: int = 2) -> Word:
    _check_rank(rank)
    return Word._make((), rank)


def generator(g: int, rank: int = 2, sign: int = 1) -> Word:
    return Word((g * sign,), rank)


def reduce(raw: Iterable[LetterLike], rank: int = 2) -> Word:
    """Freely reduce ``raw`` with a single stack scan.

    >>> reduce([1, 2, -2, 1])
    Word('xx')
    """
    _check_rank(rank)
    stack: list[int] = []
    for l in raw:
        c = _code(l)
        if c == 0 or abs(c) > rank:
            raise RankError(f"letter {c} outside rank {rank}")
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return Word._make(tuple(stack), rank)


def _same_rank(u: Word, v: Word) -> int:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")
    return u.rank


def concat_group(u: Word, v: Word) -> Word:
    """Group product ``uv``: cancellation only happens at the seam."""
    rank = _same_rank(u, v)
    a, b = u.letters, v.letters
    i, n, m = 0, len(a), len(b)
    while i < n and i < m and a[n - 1 - i] == -b[i]:
        i += 1
    return Word._make(a[: n - i] + b[i:], rank)


def seam_cancels(u: Word, v: Word) -> bool:
    return bool(u.letters and v.letters and u.letters[-1] == -v.letters[0])


def concat_wc(*words: Word) -> Word:
    """Juxtapose words that must not cancel (the ``(w.c.)`` concatenation).

    Raises :class:`CancellationAtSeam` if any seam cancels.  Empty words are
    skipped when locating seams.
    """
    if not words:
        raise TypeError("concat_wc needs at least one word")
    rank = words[0].rank
    prev: Word | None = None
    for w in words:
        _same_rank(words[0], w)
        if not w.letters:
            continue
        if prev is not None and seam_cancels(prev, w):
            raise CancellationAtSeam(f"{prev} and {w} cancel at the seam")
        prev = w
    return Word._make(tuple(chain.from_iterable(w.letters for w in words)), rank)


def invert(w: Word) -> Word:
    return Word._make(tuple(-c for c in reversed(w.letters)), w.rank)


def reverse(w: Word) -> Word:
    """The reversal map: same letters, opposite order, signs unchanged."""
    return Word._make(w.letters[::-1], w.rank)


def is_palindrome(w: Word) -> bool:
    return w.letters == w.letters[::-1]


def exponent_sums(w: Word) -> tuple:
    """Signed letter counts per generator; an :class:`ExponentPair` in rank 2."""
    sums = [0] * w.rank
    for c in w.letters:
        sums[abs(c) - 1] += 1 if c > 0 else -1
    if w.rank == 2:
        return ExponentPair(*sums)
    return tuple(sums)


def is_cyclically_reduced(w: Word) -> bool:
    return len(w.letters) < 2 or w.letters[0] != -w.letters[-1]


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``conjugator · core · conjugator⁻¹`` without cancellation.

    The conjugator is maximal, so the core is cyclically reduced.
    """
    a = w.letters
    n = len(a)
    i = 0
    while 2 * i + 1 < n and a[i] == -a[n - 1 - i]:
        i += 1
    return Word._make(a[:i], w.rank), Word._make(a[i : n - i], w.rank)


def cyclic_length(w: Word) -> int:
    return len(cyclic_reduce(w)[1])


def rotations(w: Word) -> list[Word]:
    """All ``|w|`` cyclic permutations starting from ``w`` itself.

    Duplicates of periodic words are kept.
    """
    if not is_cyclically_reduced(w):
        raise NotCyclicallyReduced(str(w))
    a = w.letters
    return [Word._make(a[i:] + a[:i], w.rank) for i in range(len(a))] or [w]


def is_rotation_of(u: Word, v: Word) -> bool:
    if u.rank != v.rank or len(u) != len(v):
        return False
    if not u.letters:
        return True
    doubled = v.letters + v.letters
    n = len(u.letters)
    return any(doubled[i : i + n] == u.letters for i in range(n))


# --- text format -----------------------------------------------------------

def alphabet(rank: int) -> str:
    _check_rank(rank)
    if rank == 2:
        return "xy"
    return "abcdefghijklmnopqrstuvwxyz"[:rank]


def format_letter(code: int, rank: int = 2) -> str:
    ch = alphabet(rank)[abs(code) - 1]
    return ch if code > 0 else ch.upper()


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    alpha = alphabet(w.rank)
    return "".join(alpha[c - 1] if c > 0 else alpha[-c - 1].upper() for c in w.letters)


_TOKEN = re.compile(r"\s*([A-Za-z])(?:\^(-?\d+))?\s*")


def parse_word(text: str, rank: int = 2) -> Word:
    """Parse compact (``xyX``) or exponent (``x^-1 y^3``) notation.

    The result is freely reduced.  ``1`` denotes the empty word.
    """
    alpha = alphabet(rank)
    s = text.strip()
    if s in ("", "1"):
        return empty(rank)
    codes: list[int] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        ch, exp = m.group(1), m.group(2)
        idx = alpha.find(ch.lower())
        if idx < 0:
            raise ParseError(f"letter {ch!r} not in rank-{rank} alphabet {alpha!r}")
        code = idx + 1 if ch.islower() else -(idx + 1)
        power = int(exp) if exp is not None else 1
        codes.extend([code if power > 0 else -code] * abs(power))
        pos = m.end()
    return reduce(codes, rank)
