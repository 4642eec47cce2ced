"""Non-intersecting path triples and plane partitions in a box of height 3.

A path triple of order (k, l) holds three words over ``"EN"``, each with k
east and l north steps.  Path i starts at A_i with A_1 = (0, 2), A_2 = (1, 1)
and A_3 = (2, 0).

A plane partition of order (k, l) is stored as l rows of k entries (row 0 at
the top).  Its box is ``(rows, cols, height)``.  Layer i, the cells holding a
value of at least i, is the region above the path that starts at A_{4-i}.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import tree as trees
from .errors import BoxMismatch, Intersecting, Malformed, NotInImage, NotTwin

ANCHORS = ((0, 2), (1, 1), (2, 0))

PlanePartition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class PathTriple:
    k: int
    l: int
    paths: tuple[str, str, str]

    def __post_init__(self):
        if len(self.paths) != 3:
            raise Malformed("a path triple has exactly three paths")
        for p in self.paths:
            if set(p) - {"E", "N"} or p.count("E") != self.k or p.count("N") != self.l:
                raise Malformed(f"path {p!r} is not a ({self.k},{self.l}) lattice path")

    def to_json(self) -> list[str]:
        return list(self.paths)


def triple_from_json(obj) -> PathTriple:
    if not isinstance(obj, (list, tuple)) or len(obj) != 3 or not all(isinstance(p, str) for p in obj):
        raise Malformed("a path triple is a three-element array of E/N strings")
    return PathTriple(obj[0].count("E"), obj[0].count("N"), tuple(obj))


def _vertices(start: tuple[int, int], path: str) -> set[tuple[int, int]]:
    x, y = start
    seen = {(x, y)}
    for step in path:
        if step == "E":
            x += 1
        else:
            y += 1
        seen.add((x, y))
    return seen


def is_non_intersecting(t: PathTriple) -> bool:
    v = [_vertices(a, p) for a, p in zip(ANCHORS, t.paths)]
    return not (v[0] & v[1] or v[1] & v[2] or v[0] & v[2])


def _require_disjoint(t: PathTriple) -> None:
    if not is_non_intersecting(t):
        raise Intersecting(f"paths {t.paths} share a vertex")


@functools.lru_cache(maxsize=None)
def lattice_paths(k: int, l: int) -> tuple[str, ...]:
    out = []
    for east in itertools.combinations(range(k + l), k):
        chosen = set(east)
        out.append("".join("E" if i in chosen else "N" for i in range(k + l)))
    return tuple(sorted(out))


def path_triples(k: int, l: int) -> list[PathTriple]:
    """All non-intersecting triples of order (k, l), by direct search."""
    paths = lattice_paths(k, l)
    verts = [{p: _vertices(a, p) for p in paths} for a in ANCHORS]
    out = []
    for p1 in paths:
        v1 = verts[0][p1]
        for p2 in paths:
            if v1 & verts[1][p2]:
                continue
            for p3 in paths:
                # the middle path separates the outer two
                if not verts[1][p2] & verts[2][p3]:
                    out.append(PathTriple(k, l, (p1, p2, p3)))
    return out


# --- paths <-> plane partitions ---------------------------------------------

def _heights(path: str) -> list[int]:
    """North steps taken before each east step."""
    out, ups = [], 0
    for step in path:
        if step == "N":
            ups += 1
        else:
            out.append(ups)
    return out


def pp_from_paths(t: PathTriple) -> PlanePartition:
    _require_disjoint(t)
    columns = [[t.l - h for h in _heights(p)] for p in t.paths]
    return tuple(
        tuple(sum(1 for col in columns if row < col[x]) for x in range(t.k))
        for row in range(t.l)
    )


def paths_from_pp(pp: Sequence[Sequence[int]], box: tuple[int, int, int] | None = None) -> PathTriple:
    pp = as_pp(pp, box)
    rows, cols = len(pp), len(pp[0]) if pp else 0
    if box is None:
        box = (rows, cols, 3)
    if box[2] != 3:
        raise BoxMismatch("path triples correspond to plane partitions of height 3")
    l, k = box[0], box[1]
    paths = []
    for layer in (3, 2, 1):  # layer 3 sits above the path from A_1
        word, h = [], 0
        for x in range(k):
            depth = sum(1 for r in range(l) if pp[r][x] >= layer)
            target = l - depth
            word.append("N" * (target - h) + "E")
            h = target
        word.append("N" * (l - h))
        paths.append("".join(word))
    return PathTriple(k, l, tuple(paths))


def as_pp(pp: Sequence[Sequence[int]], box: tuple[int, int, int] | None = None) -> PlanePartition:
    """Validate a plane partition (optionally against a box) and return it as nested tuples."""
    arr = tuple(tuple(int(v) for v in row) for row in pp)
    if len({len(row) for row in arr}) > 1:
        raise Malformed("plane partition rows differ in length")
    for r, row in enumerate(arr):
        for c, v in enumerate(row):
            if v < 0:
                raise Malformed("negative plane partition entry")
            if c + 1 < len(row) and row[c + 1] > v:
                raise Malformed("plane partition rows must weakly decrease")
            if r + 1 < len(arr) and arr[r + 1][c] > v:
                raise Malformed("plane partition columns must weakly decrease")
    if box is not None:
        a, b, c = box
        if len(arr) != a or any(len(row) != b for row in arr) or any(v > c for row in arr for v in row):
            raise BoxMismatch(f"plane partition does not fit the {a}x{b}x{c} box")
    return arr


def pp_size(pp: Sequence[Sequence[int]]) -> int:
    return sum(sum(row) for row in pp)


def complement_pp(pp: Sequence[Sequence[int]], box: tuple[int, int, int]) -> PlanePartition:
    arr = as_pp(pp, box)
    a, b, c = box
    return tuple(tuple(c - arr[a - 1 - i][b - 1 - j] for j in range(b)) for i in range(a))


def plane_partitions(a: int, b: int, c: int) -> Iterator[PlanePartition]:
    """Every plane partition with a rows and b columns and entries at most c."""

    def rows_under(bound: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        row: list[int] = []

        def walk(j, cap):
            if j == b:
                yield tuple(row)
                return
            for v in range(min(cap, bound[j]), -1, -1):
                row.append(v)
                yield from walk(j + 1, v)
                row.pop()

        yield from walk(0, c)

    def stack(i: int, bound: tuple[int, ...], acc: list) -> Iterator[PlanePartition]:
        if i == a:
            yield tuple(acc)
            return
        for row in rows_under(bound):
            acc.append(row)
            yield from stack(i + 1, row, acc)
            acc.pop()

    yield from stack(0, (c,) * b, [])


def rotate_paths(t: PathTriple) -> PathTriple:
    """Rotation by 180 degrees: the path from A_i becomes the reversed path from A_{4-i}."""
    return PathTriple(t.k, t.l, tuple(p[::-1] for p in reversed(t.paths)))


# --- twin pairs <-> path triples ---------------------------------------------

def _side_word(t, root_side: str) -> str:
    """Internal nodes of a complete tree in infix order, each as 'L' or 'R' by the side it hangs from.

    The root has no parent; it is given ``root_side``.
    """
    out: list[str] = []

    def walk(node, side):
        if node == trees.LEAF:
            return
        walk(node[0], "L")
        out.append(side)
        walk(node[1], "R")

    walk(t, root_side)
    return "".join(out)


def paths_from_twin(pair) -> PathTriple:
    left, right = pair
    if not trees.is_twin(left, right):
        raise NotTwin("pair of trees is not twin")
    # the root of the left tree reads as a right child and the last node is dropped;
    # the right tree is the mirror image of that rule
    p1 = _side_word(left, "R")[:-1].translate(str.maketrans("LR", "NE"))
    p2 = trees.code(left).translate(str.maketrans("10", "EN"))
    p3 = _side_word(right, "L")[1:].translate(str.maketrans("LR", "EN"))
    t = PathTriple(p2.count("E"), p2.count("N"), (p1, p2, p3))
    _require_disjoint(t)
    return t


@functools.lru_cache(maxsize=None)
def _twin_by_paths(n: int) -> dict:
    return {paths_from_twin(p): p for p in trees.twin_pairs(n)}


def twin_from_paths(t: PathTriple):
    _require_disjoint(t)
    try:
        return _twin_by_paths(t.k + t.l + 1)[t]
    except KeyError:
        raise NotInImage(f"no twin pair maps to {t.paths}") from None
