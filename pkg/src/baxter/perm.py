"""Permutations, vincular patterns and the three Baxter permutation families.

A permutation is a tuple of the integers 1..n in one-line notation.  Most
functions accept any sequence and return tuples.

>>> is_baxter((2, 4, 1, 3))
False
>>> conjugate_w0((4, 3, 5, 1, 2))
(3, 5, 1, 4, 2)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from . import config
from .errors import Malformed, NotDecomposable

Permutation = tuple[int, ...]


class Pattern(enum.Enum):
    P3142 = "3-14-2"
    P2413 = "2-41-3"
    P3412 = "3-41-2"


class Family(enum.Enum):
    BAXTER = "baxter"
    TWISTED = "twisted"
    ALT_BAXTER = "alt-baxter"


class Side(enum.Enum):
    P_FIRST = "p_first"      # ... p ... p+1 ...
    P1_FIRST = "p1_first"    # ... p+1 ... p ...


class Stats(NamedTuple):
    ascents: int
    descents: int
    inv_ascents: int
    inv_descents: int


@dataclass(frozen=True)
class Decomposition:
    p: int
    prefix: Permutation
    side: Side
    lower: Permutation
    upper: Permutation
    suffix: Permutation

    def reconstruct(self) -> Permutation:
        if self.side is Side.P_FIRST:
            middle = (self.p,) + self.lower + self.upper + (self.p + 1,)
        else:
            middle = (self.p + 1,) + self.upper + self.lower + (self.p,)
        return self.prefix + middle + self.suffix


def as_perm(obj) -> Permutation:
    """Coerce a sequence of ints, or a digit string such as ``"3124"``, to a permutation."""
    if isinstance(obj, str):
        text = obj.strip()
        if "," in text or " " in text:
            entries = tuple(int(x) for x in text.replace(",", " ").split())
        else:
            entries = tuple(int(c) for c in text)
    else:
        entries = tuple(int(x) for x in obj)
    if not is_permutation(entries):
        raise Malformed(f"not a permutation of 1..n: {obj!r}")
    return entries


def is_permutation(w: Sequence[int]) -> bool:
    return len(w) >= 1 and sorted(w) == list(range(1, len(w) + 1))


def to_str(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


# --- patterns -------------------------------------------------------------

def _matches(pattern: Pattern, wi: int, wj: int, wj1: int, wk: int) -> bool:
    if pattern is Pattern.P3142:
        return wj < wk < wi < wj1
    if pattern is Pattern.P2413:
        return wj1 < wi < wk < wj
    return wj1 < wk < wi < wj


def vincular_instances(w: Sequence[int], pattern: Pattern) -> list[tuple[int, int, int, int]]:
    """All 1-based index quadruples (i, j, j+1, k) realising ``pattern`` in ``w``."""
    n = len(w)
    found = []
    for j in range(1, n - 2):
        wj, wj1 = w[j], w[j + 1]
        for i in range(j):
            for k in range(j + 2, n):
                if _matches(pattern, w[i], wj, wj1, w[k]):
                    found.append((i + 1, j + 1, j + 2, k + 1))
    return found


def is_baxter(w: Sequence[int]) -> bool:
    return not _has_instance(w, (Pattern.P3142, Pattern.P2413))


def is_twisted_baxter(w: Sequence[int]) -> bool:
    return not _has_instance(w, (Pattern.P3412, Pattern.P2413))


def _has_instance(w: Sequence[int], patterns) -> bool:
    forbidden: list[tuple[int, int]] = []
    for k in range(len(w)):
        v = w[k]
        for lo, hi in forbidden:
            if lo < v < hi:
                return True
        if k >= 1:
            forbidden.extend(pattern_intervals(w, k - 1, patterns))
    return False


def pattern_intervals(w: Sequence[int], j: int, patterns) -> list[tuple[int, int]]:
    """Open value intervals forbidden for every entry placed after the adjacent pair (j, j+1).

    A later value ``v`` completes a pattern instance with the pair at (j, j+1)
    exactly when it falls in one of the returned intervals; the earlier values
    w[0:j] determine the interval ends.
    """
    a, b = w[j], w[j + 1]
    out = []
    if a < b:
        if Pattern.P3142 in patterns:
            between = [x for x in w[:j] if a < x < b]
            if between:
                out.append((a, max(between)))
    else:
        between = [x for x in w[:j] if b < x < a]
        if between:
            if Pattern.P2413 in patterns:
                out.append((min(between), a))
            if Pattern.P3412 in patterns:
                out.append((b, max(between)))
    return out


# --- statistics and involutions -------------------------------------------

def ascents(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def descents(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def stats(w: Sequence[int]) -> Stats:
    inv = inverse(w)
    return Stats(ascents(w), descents(w), ascents(inv), descents(inv))


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def reverse(w: Sequence[int]) -> Permutation:
    return tuple(reversed(w))


def complement(w: Sequence[int]) -> Permutation:
    n = len(w)
    return tuple(n + 1 - v for v in w)


def conjugate_w0(w: Sequence[int]) -> Permutation:
    """w0 * w * w0: reverse positions and complement values."""
    n = len(w)
    return tuple(n + 1 - v for v in reversed(w))


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def is_alternating(w: Sequence[int]) -> bool:
    """True for w1 < w2 > w3 < w4 ...  (length-1 permutations count as alternating)."""
    return all((w[i] < w[i + 1]) == (i % 2 == 0) for i in range(len(w) - 1))


def inversions(w: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Inversions as value pairs (larger, smaller) with the larger value to the left."""
    n = len(w)
    return frozenset((w[i], w[j]) for i in range(n) for j in range(i + 1, n) if w[j] < w[i])


# --- enumeration ----------------------------------------------------------

_FAMILY_PATTERNS = {
    Family.BAXTER: (Pattern.P3142, Pattern.P2413),
    Family.TWISTED: (Pattern.P3412, Pattern.P2413),
    Family.ALT_BAXTER: (Pattern.P3142, Pattern.P2413),
}


def iter_family(family: Family, n: int) -> Iterator[Permutation]:
    """Depth-first generation in lexicographic order, pruning prefixes that already contain a pattern."""
    patterns = _FAMILY_PATTERNS[family]
    alternating = family is Family.ALT_BAXTER
    prefix: list[int] = []
    used = [False] * (n + 2)

    def extend(forbidden: list[tuple[int, int]]) -> Iterator[Permutation]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if alternating and k and (prefix[-1] < v) != (k % 2 == 1):
                continue
            if any(lo < v < hi for lo, hi in forbidden):
                continue
            prefix.append(v)
            used[v] = True
            if k:
                added = pattern_intervals(prefix, k - 1, patterns)
                yield from extend(forbidden + added if added else forbidden)
            else:
                yield from extend(forbidden)
            prefix.pop()
            used[v] = False

    if n >= 1:
        yield from extend([])


def enumerate_family(family: Family | str, n: int, k: int | None = None) -> list[Permutation]:
    """Sorted members of a permutation family.

    For ``ALT_BAXTER`` the argument ``n`` is the permutation length (which must
    be even).  When ``k`` is given the result is filtered to ``k`` ascents for
    Baxter and ``k`` inverse ascents for twisted Baxter permutations.
    """
    family = Family(family)
    if family is Family.ALT_BAXTER:
        config.check("alt_length", n)
        if n % 2:
            raise Malformed("alternating Baxter permutations are enumerated at even length")
    else:
        config.check("perm_n", n)
    out = list(iter_family(family, n))
    if k is not None:
        if family is Family.TWISTED:
            out = [w for w in out if ascents(inverse(w)) == k]
        else:
            out = [w for w in out if ascents(w) == k]
    return out


# --- decomposition at p ---------------------------------------------------

def decompose_at(w: Sequence[int], p: int) -> Decomposition:
    """Split ``w`` around the values p and p+1.

    Between p and p+1 the entries must form a run of values below p next to
    p followed by (or preceded by) a run of values above p+1 next to p+1.
    """
    w = tuple(w)
    n = len(w)
    if not 1 <= p <= n - 1:
        raise NotDecomposable(f"p={p} outside 1..{n - 1}")
    pos = {v: i for i, v in enumerate(w)}
    i, j = pos[p], pos[p + 1]
    lo, hi = min(i, j), max(i, j)
    between = w[lo + 1:hi]
    lower = tuple(x for x in between if x < p)
    upper = tuple(x for x in between if x > p + 1)
    if i < j:
        side = Side.P_FIRST
        ok = between == lower + upper
    else:
        side = Side.P1_FIRST
        ok = between == upper + lower
    if not ok:
        raise NotDecomposable(f"{to_str(w)} has no decomposition at p={p}")
    return Decomposition(p, w[:lo], side, lower, upper, w[hi + 1:])
