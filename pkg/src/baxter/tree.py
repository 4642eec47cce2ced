"""Unlabelled binary trees, complete binary trees and twin pairs.

Trees are nested tuples: ``None`` is the empty tree and ``(left, right)`` is
a node.  In a complete binary tree a leaf is therefore ``(None, None)``.  The
canonical text form writes the empty tree as ``-`` and a node as ``(L R)``,
so a single node is ``(- -)``.
"""

from __future__ import annotations

import functools
import json
import threading
from typing import Iterator, Optional, Sequence

from . import config
from .errors import Malformed, NotBaxter, NotComplete, NotInImage, NotTwin, SizeMismatch
from .perm import Family, Pattern, Permutation, is_baxter, iter_family, pattern_intervals

BinaryTree = Optional[tuple]
TwinPair = tuple[tuple, tuple]

LEAF = (None, None)


# --- text form ------------------------------------------------------------

def to_str(t: BinaryTree) -> str:
    if t is None:
        return "-"
    return f"({to_str(t[0])} {to_str(t[1])})"


def from_str(text: str) -> BinaryTree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if pos >= len(tokens):
            raise Malformed(f"truncated tree: {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "-":
            return None
        if tok != "(":
            raise Malformed(f"unexpected token {tok!r} in {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise Malformed(f"unbalanced tree: {text!r}")
        pos += 1
        return (left, right)

    tree = parse()
    if pos != len(tokens):
        raise Malformed(f"trailing input in tree: {text!r}")
    return tree


# --- basic structure ------------------------------------------------------

def size(t: BinaryTree) -> int:
    return 0 if t is None else 1 + size(t[0]) + size(t[1])


def is_complete(t: BinaryTree) -> bool:
    if t is None:
        return False
    left, right = t
    if left is None and right is None:
        return True
    return left is not None and right is not None and is_complete(left) and is_complete(right)


def _require_complete(t: BinaryTree) -> None:
    if not is_complete(t):
        raise NotComplete(f"not a complete binary tree: {to_str(t)}")


def trunc(t: BinaryTree) -> BinaryTree:
    """Remove every leaf of a complete binary tree (2n+1 nodes -> n nodes)."""
    _require_complete(t)
    return _trunc(t)


def _trunc(t):
    if t == LEAF:
        return None
    return (_trunc(t[0]), _trunc(t[1]))


def extend(t: BinaryTree) -> tuple:
    """Give every missing child slot a leaf (n nodes -> 2n+1 nodes)."""
    if t is None:
        return LEAF
    return (extend(t[0]), extend(t[1]))


def mirror(t: BinaryTree) -> BinaryTree:
    if t is None:
        return None
    return (mirror(t[1]), mirror(t[0]))


def _leaf_sides(t: tuple) -> list[int]:
    """Leaves of a complete tree in infix order: 1 for a left child, 0 for a right child.

    The root, when it is itself a leaf, is reported as a left leaf.
    """
    out: list[int] = []

    def walk(node, side):
        if node == LEAF:
            out.append(side)
            return
        walk(node[0], 1)
        walk(node[1], 0)

    walk(t, 1)
    return out


def code(t: tuple) -> str:
    """Leaf code: the inner leaves read left to right, left leaf -> '1', right leaf -> '0'."""
    _require_complete(t)
    sides = _leaf_sides(t)
    return "".join(str(s) for s in sides[1:-1])


def leaf_counts(t: tuple) -> tuple[int, int]:
    """(number of left leaves, number of right leaves) of a complete tree."""
    _require_complete(t)
    if t == LEAF:
        return (0, 0)
    sides = _leaf_sides(t)
    left = sum(sides)
    return (left, len(sides) - left)


def is_twin(left: tuple, right: tuple) -> bool:
    _require_complete(left)
    _require_complete(right)
    if size(left) != size(right):
        raise SizeMismatch("twin candidates have different sizes")
    flipped = code(right).translate(str.maketrans("01", "10"))
    return code(left) == flipped


def involute_pair(pair: TwinPair) -> TwinPair:
    left, right = pair
    return (mirror(right), mirror(left))


def infix_intervals(t: BinaryTree) -> list[tuple[int, int]]:
    """For each node in infix order, the infix positions (1-based) of its leftmost and rightmost descendants."""
    out: list[tuple[int, int]] = []

    def walk(node, offset):
        # returns number of nodes in subtree
        if node is None:
            return 0
        nl = walk(node[0], offset)
        me = len(out)
        out.append(None)
        nr = walk(node[1], offset + nl + 1)
        out[me] = (offset + 1, offset + nl + nr + 1)
        return nl + nr + 1

    walk(t, 0)
    return out


def ancestors_by_position(t: BinaryTree) -> list[list[int]]:
    """For each infix position (0-based), the 0-based infix positions of its proper ancestors."""
    spans = infix_intervals(t)
    return [[a for a, (lo, hi) in enumerate(spans) if a != p and lo <= p + 1 <= hi]
            for p in range(len(spans))]


# --- increasing / decreasing trees and Psi --------------------------------

def incr(w: Sequence[int]) -> BinaryTree:
    """Shape of the increasing binary tree of a word with distinct letters."""
    return _heap_shape(tuple(w), min)


def decr(w: Sequence[int]) -> BinaryTree:
    return _heap_shape(tuple(w), max)


def _heap_shape(w: tuple, pick) -> BinaryTree:
    if not w:
        return None
    i = w.index(pick(w))
    return (_heap_shape(w[:i], pick), _heap_shape(w[i + 1:], pick))


def psi(w: Sequence[int]) -> tuple[BinaryTree, BinaryTree]:
    return (incr(w), decr(w))


def psi_twin(w: Sequence[int]) -> TwinPair:
    if not is_baxter(w):
        raise NotBaxter(f"{w!r} is not a Baxter permutation")
    return (extend(incr(w)), extend(decr(w)))


def add_leftmost_left_leaf(t: BinaryTree) -> tuple:
    if t is None:
        return LEAF
    return (add_leftmost_left_leaf(t[0]), t[1]) if t[0] is not None else (LEAF, t[1])


def add_rightmost_right_leaf(t: BinaryTree) -> tuple:
    if t is None:
        return LEAF
    return (t[0], add_rightmost_right_leaf(t[1])) if t[1] is not None else (t[0], LEAF)


def remove_leftmost_leaf(t: tuple) -> BinaryTree:
    if t[0] is None:
        raise NotComplete("tree has no left-most left leaf to remove")
    if t[0] == LEAF:
        return (None, t[1])
    return (remove_leftmost_leaf(t[0]), t[1])


def remove_rightmost_leaf(t: tuple) -> BinaryTree:
    if t[1] is None:
        raise NotComplete("tree has no right-most right leaf to remove")
    if t[1] == LEAF:
        return (t[0], None)
    return (t[0], remove_rightmost_leaf(t[1]))


def complete_psi(w: Sequence[int]) -> TwinPair:
    """Psi of an alternating permutation, completed to a pair of complete trees."""
    return (add_leftmost_left_leaf(incr(w)), add_rightmost_right_leaf(decr(w)))


def baxter_from_trees(left: BinaryTree, right: BinaryTree) -> Permutation:
    """The unique Baxter permutation w with incr(w) = left and decr(w) = right.

    Positions are filled left to right; each value must respect the heap order
    of both trees against the values already placed, and the Baxter pattern
    intervals prune the rest.
    """
    n = size(left)
    if size(right) != n:
        raise SizeMismatch("trees of different sizes")
    if n == 0:
        raise NotInImage("empty trees")
    up = ancestors_by_position(left)      # ancestors in the increasing tree hold smaller values
    down = ancestors_by_position(right)   # ancestors in the decreasing tree hold larger values
    inc_desc = [[] for _ in range(n)]
    dec_desc = [[] for _ in range(n)]
    for p in range(n):
        for a in up[p]:
            inc_desc[a].append(p)
        for a in down[p]:
            dec_desc[a].append(p)
    patterns = (Pattern.P3142, Pattern.P2413)
    w: list[int] = []
    used = [False] * (n + 1)
    solutions: list[Permutation] = []

    def feasible(p: int, v: int) -> bool:
        for a in up[p]:
            if a < p and not w[a] < v:
                return False
        for d in inc_desc[p]:
            if d < p and not v < w[d]:
                return False
        for a in down[p]:
            if a < p and not w[a] > v:
                return False
        for d in dec_desc[p]:
            if d < p and not v > w[d]:
                return False
        # room for the unplaced descendants on the correct side of v
        later_inc = sum(1 for d in inc_desc[p] if d > p)
        later_dec = sum(1 for d in dec_desc[p] if d > p)
        if sum(1 for x in range(v + 1, n + 1) if not used[x]) < later_inc:
            return False
        if sum(1 for x in range(1, v) if not used[x]) < later_dec:
            return False
        return True

    def dfs(forbidden):
        p = len(w)
        if p == n:
            solutions.append(tuple(w))
            return
        for v in range(1, n + 1):
            if used[v] or any(lo < v < hi for lo, hi in forbidden):
                continue
            if not feasible(p, v):
                continue
            w.append(v)
            used[v] = True
            added = pattern_intervals(w, p - 1, patterns) if p else []
            dfs(forbidden + added if added else forbidden)
            w.pop()
            used[v] = False
            if len(solutions) > 1:
                return

    dfs([])
    if len(solutions) != 1:
        raise NotInImage(f"{len(solutions)} Baxter permutations map to the tree pair")
    return solutions[0]


def twin_to_baxter(pair: TwinPair) -> Permutation:
    left, right = pair
    if not is_twin(left, right):
        raise NotTwin("pair of trees is not twin")
    return baxter_from_trees(trunc(left), trunc(right))


# --- complete trees and the alternating-permutation table -----------------

@functools.lru_cache(maxsize=None)
def complete_trees(n: int) -> tuple[tuple, ...]:
    """All complete binary trees with 2n+1 nodes, in canonical string order."""
    config.check("tree_n", n)
    return tuple(sorted((extend(t) for t in binary_trees(n)), key=to_str))


@functools.lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for a in range(n):
        for left in binary_trees(a):
            for right in binary_trees(n - 1 - a):
                out.append((left, right))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def twin_pairs(n: int) -> tuple[TwinPair, ...]:
    """Twin_n, enumerated by grouping complete trees by leaf code (no permutations involved)."""
    by_code: dict[str, list] = {}
    for t in complete_trees(n):
        by_code.setdefault(code(t), []).append(t)
    flip = str.maketrans("01", "10")
    out = []
    for c, lefts in sorted(by_code.items()):
        for left in lefts:
            for right in by_code.get(c.translate(flip), ()):
                out.append((left, right))
    return tuple(out)


def complete_pairs(n: int) -> Iterator[TwinPair]:
    trees = complete_trees(n)
    for left in trees:
        for right in trees:
            yield (left, right)


_alt_tables: dict[int, dict] = {}
_alt_lock = threading.Lock()


def _alt_table(n: int) -> dict:
    table = _alt_tables.get(n)
    if table is None:
        with _alt_lock:
            table = _alt_tables.get(n)
            if table is None:
                config.check("alt_length", 2 * n)
                table = {complete_psi(w): w for w in iter_family(Family.ALT_BAXTER, 2 * n)}
                _alt_tables[n] = table
    return table


def psi_inverse_complete(pair: TwinPair) -> Permutation:
    """The alternating Baxter permutation of length 2n whose completed Psi is ``pair``."""
    left, right = pair
    _require_complete(left)
    _require_complete(right)
    if size(left) != size(right):
        raise SizeMismatch("complete trees of different sizes")
    n = (size(left) - 1) // 2
    try:
        return _alt_table(n)[(left, right)]
    except KeyError:
        raise NotInImage("no alternating Baxter permutation maps to the pair") from None


def psi_inverse_complete_direct(pair: TwinPair) -> Permutation:
    """Same as :func:`psi_inverse_complete`, by constrained search instead of the table."""
    left, right = pair
    return baxter_from_trees(remove_leftmost_leaf(left), remove_rightmost_leaf(right))


def pair_stats(pair: TwinPair) -> tuple[int, int]:
    """(k, l) order of a twin pair: left tree has k+1 left leaves and l+1 right leaves."""
    left_leaves, right_leaves = leaf_counts(pair[0])
    return (left_leaves - 1, right_leaves - 1)


def pair_to_json(pair: TwinPair) -> list[str]:
    return [to_str(pair[0]), to_str(pair[1])]


def pair_from_json(obj) -> TwinPair:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise Malformed("a tree pair is a two-element array of tree strings")
    return (from_str(obj[0]), from_str(obj[1]))

