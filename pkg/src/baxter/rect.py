"""Diagonal rectangulations of the n x n square.

A rectangle is ``(x1, y1, x2, y2)`` with integer corners.  Diagonal cell i
(1-based, from the top left) is the unit square whose anti-diagonal runs from
(i-1, n-i+1) to (i, n-i); rectangles are listed by the cell they cover.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import tree as trees
from .errors import Malformed, NotInImage, NotTwin

Rect = tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class Rectangulation:
    n: int
    rects: tuple[Rect, ...]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rects]


def from_json(obj) -> Rectangulation:
    try:
        rects = tuple(tuple(int(v) for v in r) for r in obj)
    except (TypeError, ValueError):
        raise Malformed("a rectangulation is an array of [x1, y1, x2, y2] arrays") from None
    if any(len(r) != 4 for r in rects):
        raise Malformed("each rectangle needs four coordinates")
    r = Rectangulation(len(rects), rects)
    if not is_diagonal_rectangulation(r):
        raise Malformed("rectangles do not form a diagonal rectangulation")
    return r


def is_diagonal_rectangulation(r: Rectangulation) -> bool:
    n = r.n
    if len(r.rects) != n or n < 1:
        return False
    area = 0
    for i, (x1, y1, x2, y2) in enumerate(r.rects, start=1):
        if not (0 <= x1 < x2 <= n and 0 <= y1 < y2 <= n):
            return False
        # rectangle i must contain diagonal cell i
        if not (x1 <= i - 1 and x2 >= i and y1 <= n - i and y2 >= n - i + 1):
            return False
        area += (x2 - x1) * (y2 - y1)
    if area != n * n:
        return False
    for i, a in enumerate(r.rects):
        for b in r.rects[i + 1:]:
            if a[0] < b[2] and b[0] < a[2] and a[1] < b[3] and b[1] < a[3]:
                return False
    return True


def rect_from_twin(pair) -> Rectangulation:
    """Glue the two truncated trees along the diagonal.

    Node i of the left tree fixes the left and bottom sides of rectangle i via
    its leftmost and rightmost descendants; the right tree fixes the right and
    top sides in the same way.
    """
    left, right = pair
    if not trees.is_twin(left, right):
        raise NotTwin("pair of trees is not twin")
    lo = trees.infix_intervals(trees.trunc(left))
    hi = trees.infix_intervals(trees.trunc(right))
    n = len(lo)
    rects = tuple(
        (lo[i][0] - 1, n - lo[i][1], hi[i][1], n + 1 - hi[i][0])
        for i in range(n)
    )
    return Rectangulation(n, rects)


@functools.lru_cache(maxsize=None)
def _twin_by_rect(n: int) -> dict:
    return {rect_from_twin(p): p for p in trees.twin_pairs(n)}


def twin_from_rect(r: Rectangulation):
    try:
        return _twin_by_rect(r.n)[r]
    except KeyError:
        raise NotInImage("rectangulation is not the image of a twin pair") from None


def diag_stats(r: Rectangulation) -> tuple[int, int]:
    """(vertical, horizontal) wall crossings at the inner diagonal points (a, n-a)."""
    n = r.n
    horizontal = sum(1 for a in range(1, n) if r.rects[a - 1][2] > a)
    vertical = sum(1 for a in range(1, n) if r.rects[a][3] > n - a)
    return (vertical, horizontal)


def rotate_rect(r: Rectangulation) -> Rectangulation:
    n = r.n
    return Rectangulation(n, tuple((n - x2, n - y2, n - x1, n - y1) for x1, y1, x2, y2 in reversed(r.rects)))


def diagonal_rectangulations(n: int) -> list[Rectangulation]:
    """All diagonal rectangulations of size n, sorted."""
    return sorted(_twin_by_rect(n))


def search_rectangulations(n: int) -> list[Rectangulation]:
    """Diagonal rectangulations by direct search over rectangles, independent of trees.

    Rectangles are chosen for cells 1..n in turn.  A unit square below the
    diagonal in row y can only be covered by rectangles 1..n-y, and one above
    it in column x only by rectangles 1..x+1, so after placing rectangle i the
    rest of row n-i and column i-1 must already be covered.
    """
    covered = [[False] * n for _ in range(n)]
    chosen: list[Rect] = []
    out: list[Rectangulation] = []

    def free(x1, y1, x2, y2):
        return all(not covered[x][y] for x in range(x1, x2) for y in range(y1, y2))

    def mark(x1, y1, x2, y2, v):
        for x in range(x1, x2):
            for y in range(y1, y2):
                covered[x][y] = v

    def settled(i):
        row, col = n - i, i - 1
        return all(covered[x][row] for x in range(col)) and all(covered[col][y] for y in range(row + 1, n))

    def walk(i):
        if i > n:
            out.append(Rectangulation(n, tuple(chosen)))
            return
        for x1 in range(i - 1, -1, -1):
            for x2 in range(i, n + 1):
                for y2 in range(n - i + 1, n + 1):
                    for y1 in range(n - i, -1, -1):
                        if not free(x1, y1, x2, y2):
                            break
                        mark(x1, y1, x2, y2, True)
                        if settled(i):
                            chosen.append((x1, y1, x2, y2))
                            walk(i + 1)
                            chosen.pop()
                        mark(x1, y1, x2, y2, False)

    walk(1)
    return sorted(out)
