"""Fibers of the congruence generated by 3-14-2 <-> 3-41-2 moves.

An up move swaps the adjacent middle pair of a 3-14-2 occurrence, turning it
into 3-41-2 and adding one inversion.  A down move is the reverse.  Each fiber
is an interval of the weak order.  When its bottom is twisted Baxter its top is
Baxter; a few fibers, such as the singleton {2413}, contain no twisted Baxter
permutation at all.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import config
from .errors import Inconsistent, NotBaxter, NotTwisted
from .perm import (Pattern, Permutation, conjugate_w0, inversions, is_baxter,
                   is_twisted_baxter, vincular_instances)


@dataclass(frozen=True)
class Fiber:
    members: tuple[Permutation, ...]
    bottom: Permutation
    top: Permutation

    def to_json(self) -> dict:
        return {"members": [list(w) for w in self.members], "bottom": list(self.bottom), "top": list(self.top)}


def _moves(w: Sequence[int], pattern: Pattern) -> list[Permutation]:
    w = tuple(w)
    out = set()
    for _, j, _, _ in vincular_instances(w, pattern):
        v = list(w)
        v[j - 1], v[j] = v[j], v[j - 1]
        out.add(tuple(v))
    return sorted(out)


def up_moves(w: Sequence[int]) -> list[Permutation]:
    return _moves(w, Pattern.P3142)


def down_moves(w: Sequence[int]) -> list[Permutation]:
    return _moves(w, Pattern.P3412)


def _closure(w: Permutation) -> set[Permutation]:
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for u in itertools.chain(up_moves(v), down_moves(v)):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def fiber(w: Sequence[int]) -> Fiber:
    w = tuple(w)
    config.check("fiber_n", len(w))
    members = sorted(_closure(w))
    bottoms = [v for v in members if not down_moves(v)]
    tops = [v for v in members if not up_moves(v)]
    if len(bottoms) != 1 or len(tops) != 1:
        raise Inconsistent(f"fiber of {w} has {len(bottoms)} minimal and {len(tops)} maximal elements")
    return Fiber(tuple(members), bottoms[0], tops[0])


def fibers(n: int) -> list[Fiber]:
    """The partition of S_n into fibers, ordered by least member."""
    config.check("fiber_n", n)
    seen: set[Permutation] = set()
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        if w not in seen:
            f = fiber(w)
            seen.update(f.members)
            out.append(f)
    return out


def baxter_fibers(n: int) -> list[Fiber]:
    """The fibers whose bottom is twisted Baxter; there is one per twisted Baxter permutation."""
    return [f for f in fibers(n) if is_twisted_baxter(f.bottom)]


def _greedy(w: Permutation, step) -> Permutation:
    while True:
        nxt = step(w)
        if not nxt:
            return w
        w = nxt[0]


def twisted_to_baxter(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if not is_twisted_baxter(w):
        raise NotTwisted(f"{w!r} is not a twisted Baxter permutation")
    return _greedy(w, up_moves)


def baxter_to_twisted(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if not is_baxter(w):
        raise NotBaxter(f"{w!r} is not a Baxter permutation")
    return _greedy(w, down_moves)


def weak_le(u: Sequence[int], v: Sequence[int]) -> bool:
    return inversions(u) <= inversions(v)


def fiber_involution_check(n: int) -> bool:
    """Conjugation by w0 maps fibers to fibers, bottoms to bottoms and tops to tops."""
    parts = fibers(n)
    index = {f.members: f for f in parts}
    for f in parts:
        image = tuple(sorted(conjugate_w0(w) for w in f.members))
        g = index.get(image)
        if g is None or g.bottom != conjugate_w0(f.bottom) or g.top != conjugate_w0(f.top):
            return False
    return True
