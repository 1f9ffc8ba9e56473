"""Products of palindromes in a free group of any rank.

The central fact: a cyclically reduced word that is not a palindrome is a
product of two palindromes exactly when it splits, letter for letter, as a
palindrome followed by a palindrome.  Since being a product of at most two
palindromes is invariant under conjugation, this gives an exact test for
palindromic width at most two (:func:`palindromic_width_leq2`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .construction import is_primitive
from .errors import NotPrimitive, PreconditionViolated, RankError
from .words import (
    Word,
    concat_group,
    concat_wc,
    cyclic_reduce,
    empty,
    invert,
    is_palindrome,
    reverse,
    seam_cancels,
)


class Side(enum.Enum):
    PREFIX = "prefix"  # p is followed by w: p w
    SUFFIX = "suffix"  # p is preceded by w: w p


class PingPongCase(enum.Enum):
    CASE1 = 1  # p = r (q r)^m
    CASE2 = 2  # p = w^m, w a palindrome


class WidthTag(enum.Enum):
    IDENTITY = "identity"
    PALINDROME = "palindrome"
    TWO_PALINDROMES = "two-palindromes"
    CONJ_PALINDROME = "conj-palindrome"
    CONJ_TWO_PALINDROMES = "conj-two-palindromes"
    MORE_THAN_TWO = "more-than-two"


_WIDTH = {
    WidthTag.IDENTITY: 0,
    WidthTag.PALINDROME: 1,
    WidthTag.TWO_PALINDROMES: 2,
    WidthTag.CONJ_PALINDROME: 2,
    WidthTag.CONJ_TWO_PALINDROMES: 2,
    WidthTag.MORE_THAN_TWO: None,
}


# --- splitting into two palindromes -----------------------------------------

def _radii(seq: tuple) -> list[int]:
    # Manacher on the sequence interleaved with separators; entry a + b is at
    # least b - a exactly when seq[a:b] is a palindrome.
    t: list = [None]
    for c in seq:
        t.append(c)
        t.append(None)
    n = len(t)
    p = [0] * n
    centre = right = 0
    for i in range(n):
        if i < right:
            p[i] = min(right - i, p[2 * centre - i])
        while i - p[i] - 1 >= 0 and i + p[i] + 1 < n and t[i - p[i] - 1] == t[i + p[i] + 1]:
            p[i] += 1
        if i + p[i] > right:
            centre, right = i, i + p[i]
    return p


def all_splits(w: Word) -> list[tuple[Word, Word]]:
    """Every ``(p, q)`` with ``w ≡ p q``, both nonempty palindromes, by ``|p|``."""
    a = w.letters
    n = len(a)
    rad = _radii(a)
    return [
        (w[:i], w[i:])
        for i in range(1, n)
        if rad[i] >= i and rad[i + n] >= n - i
    ]


def _naive_splits(w: Word) -> list[tuple[Word, Word]]:
    return [
        (w[:i], w[i:])
        for i in range(1, len(w))
        if is_palindrome(w[:i]) and is_palindrome(w[i:])
    ]


def split_concat_two_palindromes(w: Word) -> Optional[tuple[Word, Word]]:
    """The split ``w ≡ p q`` into nonempty palindromes with shortest ``p``.

    >>> from palprim.words import parse_word
    >>> split_concat_two_palindromes(parse_word("xxyy"))
    (Word('xx'), Word('yy'))
    >>> split_concat_two_palindromes(parse_word("xxyxyy")) is None
    True
    """
    splits = all_splits(w)
    return splits[0] if splits else None


# --- easy case and ping-pong --------------------------------------------------

def _joined(p: Word, w: Word, side: Side) -> Word:
    if not isinstance(side, Side):
        raise TypeError(f"side must be a Side, got {side!r}")
    first, second = (p, w) if side is Side.PREFIX else (w, p)
    if p.rank != w.rank:
        raise RankError("rank mismatch")
    if seam_cancels(first, second):
        raise PreconditionViolated(f"{first} and {second} cancel at the seam")
    joined = concat_wc(first, second)
    if not is_palindrome(joined):
        raise PreconditionViolated(f"{joined} is not a palindrome")
    return joined


def easy_case_extract(p: Word, w: Word, side: Side) -> Word:
    """For ``|p| <= |w|`` with ``p`` and the concatenation both palindromes,
    return ``q`` with ``w ≡ q p`` (prefix side) or ``w ≡ p q`` (suffix side).

    ``q`` is a palindrome, and empty exactly when ``w ≡ p``.
    """
    if not is_palindrome(p):
        raise PreconditionViolated(f"{p} is not a palindrome")
    _joined(p, w, side)
    if len(p) > len(w):
        raise PreconditionViolated("easy case needs |p| <= |w|")
    if side is Side.PREFIX:
        q, rest = w[: len(w) - len(p)], w[len(w) - len(p) :]
    else:
        rest, q = w[: len(p)], w[len(p) :]
    # both hold for any palindromic p w; failure means a bug, not bad input
    assert rest == p and is_palindrome(q)
    return q


@dataclass(frozen=True)
class PingPongResult:
    tag: PingPongCase
    m: int
    side: Side
    q: Optional[Word] = None  # CASE1
    r: Optional[Word] = None  # CASE1
    w: Optional[Word] = None  # CASE2

    def reassemble(self) -> tuple[Word, Word]:
        """Rebuild ``(p, w)`` from the witnesses without cancellation."""
        if self.tag is PingPongCase.CASE2:
            return concat_wc(empty(self.w.rank), *([self.w] * self.m)), self.w
        q, r = self.q, self.r
        p = concat_wc(r, *([q, r] * self.m))
        w = concat_wc(q, r) if self.side is Side.PREFIX else concat_wc(r, q)
        return p, w


def pingpong_decompose(p: Word, w: Word, side: Side) -> PingPongResult:
    """Structure of a palindrome ``p`` that stays palindromic after ``w`` is
    attached on the given side.

    Prefix side (``p w`` a palindrome): either ``p ≡ r (q r)^m`` and
    ``w ≡ q r`` for palindromes ``q``, ``r``, or ``w`` is a palindrome and
    ``p ≡ w^m``.  The suffix side is the mirror image, with ``w ≡ r q``.

    Each step peels the reversal of ``w`` off the front of ``p``; the
    remainder is again a palindrome followed palindromically by ``w``.

    >>> from palprim.words import parse_word
    >>> res = pingpong_decompose(parse_word("xyxyx"), parse_word("yx"), Side.PREFIX)
    >>> res.tag, res.q, res.r, res.m
    (<PingPongCase.CASE1: 1>, Word('y'), Word('x'), 2)
    """
    if not p.letters:
        raise PreconditionViolated("p must be nonempty")
    if not w.letters:
        raise PreconditionViolated("w must be nonempty")
    if not is_palindrome(p):
        raise PreconditionViolated(f"{p} is not a palindrome")
    _joined(p, w, side)
    # the suffix case is the prefix case for reverse(w)
    ww = w if side is Side.PREFIX else reverse(w)
    head = reverse(ww).letters
    k = len(ww)
    cur = p.letters
    m = 0
    while len(cur) > k:
        assert cur[:k] == head
        cur = cur[k:]
        m += 1
    if len(cur) == k:
        assert cur == ww.letters
        return PingPongResult(PingPongCase.CASE2, m=m + 1, side=side, w=w)
    r = Word._make(cur, p.rank)
    q = ww[: k - len(cur)]
    assert ww[k - len(cur) :] == r
    return PingPongResult(PingPongCase.CASE1, m=m, side=side, q=q, r=r)


# --- width at most two ----------------------------------------------------------

@dataclass(frozen=True)
class WidthDecomposition:
    """Outcome of the width test with its witnesses.

    ``word`` equals ``a p q a⁻¹`` letter for letter, where absent parts are
    empty.  ``factors`` is a pair of palindromes ``(u, v)`` with ``u v = word``
    in the group, filled in for every width-2 result.
    """

    tag: WidthTag
    word: Word
    a: Optional[Word] = None
    p: Optional[Word] = None
    q: Optional[Word] = None
    factors: Optional[tuple[Word, Word]] = None

    @property
    def width(self) -> Optional[int]:
        return _WIDTH[self.tag]

    def reassemble(self) -> Word:
        """Rebuild the word from ``a``, ``p``, ``q`` with (w.c.) checks."""
        if self.tag is WidthTag.MORE_THAN_TWO:
            raise ValueError("no witnesses for width above two")
        e = empty(self.word.rank)
        a = self.a or e
        parts = [a, self.p or e, self.q or e, invert(a)]
        return concat_wc(*parts)


def _group_factors(a: Word, p: Word, q: Word) -> tuple[Word, Word]:
    # a p q a⁻¹ = (a p Ψ(a)) · (Ψ(a)⁻¹ q a⁻¹), both palindromes
    ra = reverse(a)
    u = concat_group(concat_group(a, p), ra)
    v = concat_group(concat_group(invert(ra), q), invert(a))
    return u, v


def palindromic_width_leq2(w: Word) -> WidthDecomposition:
    """Decide whether ``w`` is a product of at most two palindromes.

    Any rank.  ``MORE_THAN_TWO`` means the width exceeds two; it is not a
    width computation.

    >>> from palprim.words import parse_word
    >>> d = palindromic_width_leq2(parse_word("xyX"))
    >>> d.tag.value, str(d.a), str(d.p), [str(f) for f in d.factors]
    ('conj-palindrome', 'x', 'y', ['xyx', 'XX'])
    """
    if not w.letters:
        return WidthDecomposition(WidthTag.IDENTITY, w)
    if is_palindrome(w):
        return WidthDecomposition(WidthTag.PALINDROME, w, p=w)
    a, core = cyclic_reduce(w)
    e = empty(w.rank)
    if is_palindrome(core):
        return WidthDecomposition(
            WidthTag.CONJ_PALINDROME, w, a=a, p=core, factors=_group_factors(a, core, e)
        )
    split = split_concat_two_palindromes(core)
    if split is None:
        return WidthDecomposition(WidthTag.MORE_THAN_TWO, w)
    p, q = split
    if not a.letters:
        return WidthDecomposition(WidthTag.TWO_PALINDROMES, w, p=p, q=q, factors=(p, q))
    return WidthDecomposition(
        WidthTag.CONJ_TWO_PALINDROMES, w, a=a, p=p, q=q, factors=_group_factors(a, p, q)
    )


def classify_primitive_form(w: Word) -> WidthDecomposition:
    """Width decomposition of a rank-2 primitive, which is never above two."""
    if w.rank != 2:
        raise RankError("classify_primitive_form is rank 2 only")
    if not is_primitive(w):
        raise NotPrimitive(str(w))
    d = palindromic_width_leq2(w)
    if d.tag is WidthTag.MORE_THAN_TWO:
        raise AssertionError(f"primitive {w} reported with width above two")
    return d
