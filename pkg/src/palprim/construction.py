"""Circle construction of rank-2 primitive elements with given exponent sums.

Place ``n = |X| + |Y|`` points clockwise on a circle, label the first
``|X|`` of them with ``x^±1`` and the rest with ``y^±1``, then read labels
starting at a chosen first point and stepping ``|X|`` points each time.
Every choice of first point gives one cyclically reduced primitive in the
conjugacy class with exponent sums ``(X, Y)``.

Point indices are 1-based at this module's boundary (matching the usual
``p_1 .. p_n`` labelling); internally position ``i`` is stored at ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EmptyWord, NotCoprime, NotCyclicallyReduced, RankError, ZeroPair
from .words import Word, cyclic_reduce, exponent_sums, is_cyclically_reduced

X_GEN, Y_GEN = 1, 2


@dataclass(frozen=True)
class CircleDiagram:
    n: int
    labels: tuple  # signed letter codes at positions 1..n (stored 0-based)
    step: int
    x_sign: int
    y_sign: int

    @property
    def exponent_pair(self) -> tuple[int, int]:
        nx = self.step
        return self.x_sign * nx, self.y_sign * (self.n - nx)

    def label(self, i: int) -> int:
        """Label on point ``p_i`` (1-based)."""
        return self.labels[i - 1]

    def visit_order(self, first: int) -> list[int]:
        """1-based indices of the points visited from ``p_first``."""
        _check_first(self, first)
        return [(first - 1 + j * self.step) % self.n + 1 for j in range(self.n)]


def _check_pair(X: int, Y: int) -> None:
    if X == 0 and Y == 0:
        raise ZeroPair("exponent pair (0, 0) has no primitive")
    if gcd(X, Y) != 1:
        raise NotCoprime(f"gcd({X}, {Y}) = {gcd(X, Y)}")


def _check_first(d: CircleDiagram, first: int) -> None:
    if not 1 <= first <= d.n:
        raise ValueError(f"first point must lie in 1..{d.n}, got {first}")


def build_diagram(X: int, Y: int) -> CircleDiagram:
    _check_pair(X, Y)
    ax, ay = abs(X), abs(Y)
    xs = 1 if X >= 0 else -1
    ys = 1 if Y >= 0 else -1
    labels = (xs * X_GEN,) * ax + (ys * Y_GEN,) * ay
    return CircleDiagram(n=ax + ay, labels=labels, step=ax, x_sign=xs, y_sign=ys)


def oz_word(d: CircleDiagram, first: int = 1) -> Word:
    """Read the diagram from ``p_first``, stepping ``d.step`` points each time.

    >>> str(oz_word(build_diagram(2, 3), 1)), str(oz_word(build_diagram(2, 3), 5))
    ('xyyxy', 'yxyxy')
    """
    _check_first(d, first)
    n, step, labels = d.n, d.step, d.labels
    start = first - 1
    return Word._make(tuple(labels[(start + j * step) % n] for j in range(n)), 2)


def construct(X: int, Y: int, first: int = 1) -> Word:
    return oz_word(build_diagram(X, Y), first)


def conjugacy_class(X: int, Y: int) -> list[Word]:
    """The ``|X| + |Y|`` cyclically reduced primitives with exponent sums (X, Y),
    ordered by first point."""
    d = build_diagram(X, Y)
    return [oz_word(d, i) for i in range(1, d.n + 1)]


def circle_positions(w: Word) -> list[int]:
    """Circle slot of each letter of ``w`` for the fast primitivity test.

    Letter ``j`` (1-based) goes to slot ``j * min(|X|, |Y|) mod |w|``.
    """
    X, Y = exponent_sums(w)
    n = len(w)
    m = min(abs(X), abs(Y))
    return [(j * m) % n for j in range(1, n + 1)]


def is_primitive_fast(w: Word) -> bool:
    """Decide primitivity of a nonempty cyclically reduced rank-2 word.

    Runs in linear time: checks ``|X| + |Y| = |w|``, places the letters on a
    circle and asks whether the x-letters occupy a contiguous arc.
    """
    if w.rank != 2:
        raise RankError("fast primitivity test is rank 2 only")
    if not w.letters:
        raise EmptyWord("empty word")
    if not is_cyclically_reduced(w):
        raise NotCyclicallyReduced(str(w))
    X, Y = exponent_sums(w)
    n = len(w)
    if abs(X) + abs(Y) != n:
        return False
    slots = circle_positions(w)
    if len(set(slots)) != n:
        return False
    occupied = [False] * n
    for c, s in zip(w.letters, slots):
        if abs(c) == X_GEN:
            occupied[s] = True
    count = sum(occupied)
    if count in (0, n):
        return True
    # contiguous on the circle iff exactly one run start
    starts = sum(1 for s in range(n) if occupied[s] and not occupied[s - 1])
    return starts == 1


def is_primitive(w: Word) -> bool:
    """Primitivity of any rank-2 word, via its cyclically reduced core."""
    if w.rank != 2:
        raise RankError("is_primitive is rank 2 only")
    core = cyclic_reduce(w)[1]
    if not core.letters:
        return False
    return is_primitive_fast(core)
