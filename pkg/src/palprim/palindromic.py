"""Palindromic primitives and palindromic bases of F(x, y).

For a coprime exponent pair (X, Y) with X + Y odd, the conjugacy class of
primitives holds exactly one palindrome; :func:`palindromic_primitive`
writes it down directly by choosing the right first point in the circle
construction.  When X + Y is even there is no palindrome, but exactly one
rotation of each shape ``x^ε · (palindrome)`` and ``y^δ · (palindrome)``
(:func:`near_palindromic_pair`).

Two palindromic primitives whose exponent pairs form a unimodular matrix
are a basis (:func:`palindromic_basis`); :func:`is_basis` checks that
independently with the commutator criterion.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .construction import build_diagram, oz_word, X_GEN
from .errors import BadDeterminant, EvenSum, NotCoprime, OddSum, RankError, ZeroPair
from .words import (
    Word,
    concat_group,
    cyclic_reduce,
    invert,
    is_palindrome,
    is_rotation_of,
    parse_word,
    rotations,
)

_COMMUTATOR = parse_word("xyXY")
_COMMUTATOR_INV = parse_word("yxYX")


@dataclass(frozen=True)
class FirstPointSolution:
    k: int  # first point, 1..n
    symmetry_point: int  # the point read at the middle of the palindrome


@dataclass(frozen=True)
class NearPalindromicPair:
    x_form: Word
    y_form: Word
    epsilon: int
    delta: int

    @property
    def w(self) -> Word:
        return self.x_form[1:]

    @property
    def v(self) -> Word:
        return self.y_form[1:]


def _check_coprime(X: int, Y: int) -> None:
    if X == 0 and Y == 0:
        raise ZeroPair("exponent pair (0, 0)")
    if gcd(X, Y) != 1:
        raise NotCoprime(f"gcd({X}, {Y}) = {gcd(X, Y)}")


def symmetry_points(X: int, Y: int) -> list[int]:
    """Points of the diagram lying on its symmetry line.

    These are the solutions ``k`` in ``1..n`` of ``2k ≡ 1 + |X| (mod n)``:
    one point when ``n`` is odd, two antipodal points when ``n`` is even.
    """
    _check_coprime(X, Y)
    n = abs(X) + abs(Y)
    return [k for k in range(1, n + 1) if (2 * k - 1 - abs(X)) % n == 0]


def _centre(ax: int, ay: int) -> int:
    return (ax + 1) // 2 if ax % 2 else ax + (ay + 1) // 2


def palindrome_first_point(X: int, Y: int) -> FirstPointSolution:
    """First point whose reading is the palindrome in the class of (X, Y).

    The middle letter of the word, letter ``(n + 1) / 2``, must be read at the
    centre point of the symmetry line; stepping back ``(n - 1) / 2`` steps of
    ``|X|`` from there gives ``k``.  Requires ``|X| + |Y|`` odd.
    """
    _check_coprime(X, Y)
    ax, ay = abs(X), abs(Y)
    n = ax + ay
    if n % 2 == 0:
        raise EvenSum(f"X + Y = {X + Y} is even")
    centre = _centre(ax, ay)
    k = (centre - 1 - (n - 1) // 2 * ax) % n + 1
    return FirstPointSolution(k=k, symmetry_point=centre)


def min_step_first_point(X: int, Y: int) -> int:
    """First point from the closed formula written with ``min(|X|, |Y|)``.

    This agrees with :func:`palindrome_first_point` when ``|X| <= |Y|``.  For
    ``|X| > |Y|`` it is the first point of the palindrome when the circle is
    read with step ``min(|X|, |Y|) = |Y|`` rather than ``|X|``.
    """
    _check_coprime(X, Y)
    ax, ay = abs(X), abs(Y)
    n = ax + ay
    if n % 2 == 0:
        raise EvenSum(f"X + Y = {X + Y} is even")
    k = _centre(ax, ay) - (n - 1) * min(ax, ay) // 2
    return (k - 1) % n + 1


def palindromic_primitive(X: int, Y: int) -> Word:
    """The unique palindrome among the primitives with exponent sums (X, Y).

    >>> str(palindromic_primitive(2, 3)), str(palindromic_primitive(1, 2))
    ('yxyxy', 'yxy')
    """
    sol = palindrome_first_point(X, Y)
    return oz_word(build_diagram(X, Y), sol.k)


def near_palindromic_first_points(X: int, Y: int) -> list[int]:
    """First points that put a symmetry point at letter ``(n + 2) / 2``.

    The readings from these points are the two near-palindromic rotations.
    """
    _check_coprime(X, Y)
    ax = abs(X)
    n = ax + abs(Y)
    if n % 2:
        raise OddSum(f"X + Y = {X + Y} is odd")
    return sorted((s - 1 - (n // 2) * ax) % n + 1 for s in symmetry_points(X, Y))


def near_palindromic_pair(X: int, Y: int) -> NearPalindromicPair:
    """Rotations ``x^ε w`` and ``y^δ v`` with ``w``, ``v`` palindromes.

    Found by scanning every rotation, which also confirms uniqueness and the
    absence of a palindrome in the class.
    """
    _check_coprime(X, Y)
    if (X + Y) % 2:
        raise OddSum(f"X + Y = {X + Y} is odd")
    d = build_diagram(X, Y)
    x_forms, y_forms = [], []
    for w in rotations(oz_word(d, 1)):
        if is_palindrome(w):
            raise AssertionError(f"palindrome {w} in an even-sum class")
        if is_palindrome(w[1:]):
            (x_forms if abs(w[0]) == X_GEN else y_forms).append(w)
    if len(x_forms) != 1 or len(y_forms) != 1:
        raise AssertionError(f"expected one rotation of each form, got {x_forms}, {y_forms}")
    xf, yf = x_forms[0], y_forms[0]
    return NearPalindromicPair(
        x_form=xf,
        y_form=yf,
        epsilon=1 if xf[0] > 0 else -1,
        delta=1 if yf[0] > 0 else -1,
    )


def commutator(u: Word, v: Word) -> Word:
    return concat_group(concat_group(concat_group(u, v), invert(u)), invert(v))


def is_basis(u: Word, v: Word) -> bool:
    """Nielsen's criterion: ``{u, v}`` is a basis of F(x, y) iff ``[u, v]`` is
    conjugate to ``[x, y]`` or its inverse."""
    if u.rank != 2 or v.rank != 2:
        raise RankError("is_basis is rank 2 only")
    core = cyclic_reduce(commutator(u, v))[1]
    return is_rotation_of(core, _COMMUTATOR) or is_rotation_of(core, _COMMUTATOR_INV)


def palindromic_basis(A: int, B: int, X: int, Y: int) -> tuple[Word, Word]:
    """Palindromic primitives for (A, B) and (X, Y) forming a basis.

    >>> [str(w) for w in palindromic_basis(2, 3, 1, 2)]
    ['yxyxy', 'yxy']
    """
    if A * Y - B * X not in (1, -1):
        raise BadDeterminant(f"AY - BX = {A * Y - B * X}")
    if (A + B) % 2 == 0:
        raise EvenSum(f"A + B = {A + B} is even")
    if (X + Y) % 2 == 0:
        raise EvenSum(f"X + Y = {X + Y} is even")
    p = palindromic_primitive(A, B)
    q = palindromic_primitive(X, Y)
    if not is_basis(p, q):
        raise AssertionError(f"{p}, {q} failed the basis check")
    return p, q
