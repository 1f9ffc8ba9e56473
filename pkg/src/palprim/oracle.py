"""Brute-force ground truth, independent of the circle construction.

* :func:`whitehead_primitive` decides primitivity in rank 2 by greedy
  Whitehead descent on cyclic length.  It relies on Whitehead's classical
  result that a cyclic word that is not of minimal length in its
  automorphic orbit admits a length-reducing Whitehead automorphism, so
  greedy descent never stalls above the minimum.  Primitives are exactly the
  words whose minimum is 1.
* :func:`product_two_palindromes_oracle` searches exhaustively for
  palindromes ``u, v`` of bounded length with ``u v = w``.
* :func:`enumerate_words` and :func:`enumerate_palindromes` list reduced
  words of bounded length.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .words import Word, parse_word

# Whitehead automorphisms of F(x, y), as images of x and y.  The first block
# permutes and inverts letters and never changes length; the second block
# multiplies one generator by the other (right, left, or both sides).
WHITEHEAD_TABLE: tuple[tuple[str, str, str], ...] = (
    ("perm:x,Y", "x", "Y"),
    ("perm:X,y", "X", "y"),
    ("perm:X,Y", "X", "Y"),
    ("perm:y,x", "y", "x"),
    ("perm:y,X", "y", "X"),
    ("perm:Y,x", "Y", "x"),
    ("perm:Y,X", "Y", "X"),
    ("y->yx", "x", "yx"),
    ("y->yX", "x", "yX"),
    ("y->xy", "x", "xy"),
    ("y->Xy", "x", "Xy"),
    ("y->Xyx", "x", "Xyx"),
    ("y->xyX", "x", "xyX"),
    ("x->xy", "xy", "y"),
    ("x->xY", "xY", "y"),
    ("x->yx", "yx", "y"),
    ("x->Yx", "Yx", "y"),
    ("x->Yxy", "Yxy", "y"),
    ("x->yxY", "yxY", "y"),
)


@dataclass(frozen=True)
class WhiteheadMove:
    name: str
    x_image: tuple
    y_image: tuple

    @property
    def permutation(self) -> bool:
        return len(self.x_image) == 1 and len(self.y_image) == 1

    def images(self) -> tuple[Word, Word]:
        return Word._make(self.x_image, 2), Word._make(self.y_image, 2)

    def apply_letters(self, letters: tuple) -> tuple:
        img = {
            1: self.x_image,
            2: self.y_image,
            -1: tuple(-c for c in reversed(self.x_image)),
            -2: tuple(-c for c in reversed(self.y_image)),
        }
        stack: list[int] = []
        for c in letters:
            for d in img[c]:
                if stack and stack[-1] == -d:
                    stack.pop()
                else:
                    stack.append(d)
        return tuple(stack)

    def apply(self, w: Word) -> Word:
        if w.rank != 2:
            raise ValueError("Whitehead moves act on rank 2 words")
        return Word._make(self.apply_letters(w.letters), 2)


WHITEHEAD_MOVES: tuple[WhiteheadMove, ...] = tuple(
    WhiteheadMove(name, parse_word(xi).letters, parse_word(yi).letters)
    for name, xi, yi in WHITEHEAD_TABLE
)
_REDUCING_MOVES = tuple(m for m in WHITEHEAD_MOVES if not m.permutation)


def _cyclic_core(letters: tuple) -> tuple:
    n = len(letters)
    i = 0
    while 2 * i + 1 < n and letters[i] == -letters[n - 1 - i]:
        i += 1
    return letters[i : n - i]


def whitehead_minimize(w: Word) -> Word:
    """Greedy descent to a cyclic word of minimal length in the orbit of ``w``."""
    core = _cyclic_core(w.letters)
    while True:
        for move in _REDUCING_MOVES:
            img = _cyclic_core(move.apply_letters(core))
            if len(img) < len(core):
                core = img
                break
        else:
            return Word._make(core, 2)


def whitehead_primitive(w: Word) -> bool:
    if w.rank != 2:
        raise ValueError("whitehead_primitive is rank 2 only")
    return len(whitehead_minimize(w)) == 1


# --- enumeration -------------------------------------------------------------

def _letter_order(rank: int) -> tuple:
    return tuple(c for g in range(1, rank + 1) for c in (g, -g))


def _reduced_of_length(length: int, rank: int) -> Iterator[tuple]:
    order = _letter_order(rank)

    def grow(prefix: tuple) -> Iterator[tuple]:
        if len(prefix) == length:
            yield prefix
            return
        for c in order:
            if prefix and prefix[-1] == -c:
                continue
            yield from grow(prefix + (c,))

    yield from grow(())


def enumerate_words(max_len: int, rank: int = 2) -> Iterator[Word]:
    """All reduced words of length at most ``max_len``, shortest first, then
    lexicographic in the letter order ``x, X, y, Y`` (``a, A, b, ...``)."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    for length in range(max_len + 1):
        for letters in _reduced_of_length(length, rank):
            yield Word._make(letters, rank)


def enumerate_cyclically_reduced(max_len: int, rank: int = 2) -> Iterator[Word]:
    for w in enumerate_words(max_len, rank):
        if len(w) < 2 or w.letters[0] != -w.letters[-1]:
            yield w


def enumerate_palindromes(max_len: int, rank: int = 2) -> Iterator[Word]:
    """All reduced palindromes of length at most ``max_len`` (empty first)."""
    for length in range(max_len + 1):
        half = (length + 1) // 2
        for h in _reduced_of_length(half, rank):
            tail = h[::-1] if length % 2 == 0 else h[-2::-1]
            yield Word._make(h + tail, rank)


@lru_cache(maxsize=8)
def _palindrome_index(bound: int, rank: int) -> dict:
    # prefix -> [(enumeration position, palindrome letters)]
    index: dict = {}
    for pos, p in enumerate(enumerate_palindromes(bound, rank)):
        letters = p.letters
        for c in range(len(letters) + 1):
            index.setdefault(letters[:c], []).append((pos, letters))
    return index


def product_two_palindromes_oracle(w: Word, bound: int) -> Optional[tuple[Word, Word]]:
    """Palindromes ``(u, v)`` with ``|u|, |v| <= bound`` and ``u v = w``.

    Returns the pair whose ``u`` comes first in :func:`enumerate_palindromes`
    order, or ``None``.  Every palindrome ``u`` is considered; the partner is
    forced to be ``v = u⁻¹ w``, which cancels exactly the longest common
    prefix of ``u`` and ``w``, so candidates are looked up by that prefix.
    """
    if bound < len(w):
        raise ValueError("bound must be at least |w|")
    index = _palindrome_index(bound, w.rank)
    a = w.letters
    n = len(a)
    best = None
    for c in range(min(n, bound) + 1):
        for pos, u in index.get(a[:c], ()):
            if best is not None and pos >= best[0]:
                break
            # common prefix must be exactly c
            if c < n and len(u) > c and u[c] == a[c]:
                continue
            if len(u) + n - 2 * c > bound:
                continue
            v = tuple(-d for d in reversed(u[c:])) + a[c:]
            if v == v[::-1]:
                best = (pos, u, v)
                break
    if best is None:
        return None
    return Word._make(best[1], w.rank), Word._make(best[2], w.rank)
