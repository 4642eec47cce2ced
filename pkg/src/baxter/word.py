"""Yamanouchi words, 3-row tableaux, shuffle words and the type encoding.

Yamanouchi words are strings over ``"123"``.  Shuffle words are strings over
``"aAbB"`` where ``A`` stands for a-bar and ``B`` for b-bar.  Type words are
tuples of integers 1..8, one entry per p in 1..2n-1.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from . import config
from .errors import Inconsistent, Malformed, NotAltBaxter, NotParsable
from .perm import Family, Permutation, Side, decompose_at, is_alternating, is_baxter, iter_family

Tableau = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

SHUFFLE_LETTERS = "aAbB"
_PHI = {"a": "1", "b": "21", "A": "23", "B": "3"}


# --- Yamanouchi words and tableaux ----------------------------------------

def is_yamanouchi(x: str, rows: int = 3) -> bool:
    counts = [0] * (rows + 1)
    for ch in x:
        if not ch.isdigit() or not 1 <= int(ch) <= rows:
            return False
        i = int(ch)
        counts[i] += 1
        if i > 1 and counts[i] > counts[i - 1]:
            return False
    return len(set(counts[1:])) == 1


def _require_yamanouchi(x: str) -> None:
    if not is_yamanouchi(x):
        raise Malformed(f"not a 3-row Yamanouchi word: {x!r}")


def yamanouchi_words(n: int, avoid: Iterable[str] = ()) -> list[str]:
    """All words of Y_n^(3) with no factor in ``avoid`` (e.g. ``{"22"}``), sorted."""
    config.check("word_n", n)
    banned = {p[0] for p in avoid}
    out: list[str] = []
    counts = [0, 0, 0, 0]
    buf: list[str] = []

    def walk():
        if len(buf) == 3 * n:
            out.append("".join(buf))
            return
        for i in (1, 2, 3):
            if counts[i] == n or (i > 1 and counts[i] == counts[i - 1]):
                continue
            ch = str(i)
            if buf and buf[-1] == ch and ch in banned:
                continue
            buf.append(ch)
            counts[i] += 1
            walk()
            counts[i] -= 1
            buf.pop()

    walk()
    return out


def avoids(x: str, patterns: Iterable[str]) -> bool:
    """True if ``x`` has none of the given two-letter factors such as ``"22"``."""
    return not any(p in x for p in patterns)


def baxter_stat(x: str) -> tuple[int, int]:
    """(k, l) of a Baxter tableau word: k counts factors ``13``, l counts factors ``31``."""
    return (x.count("13"), x.count("31"))


def baxter_stat_k(x: str) -> int:
    return baxter_stat(x)[0]


def is_tableau(t: Sequence[Sequence[int]]) -> bool:
    if len(t) != 3 or len({len(r) for r in t}) != 1:
        return False
    n = len(t[0])
    entries = sorted(v for r in t for v in r)
    if entries != list(range(1, 3 * n + 1)):
        return False
    rows_ok = all(r[i] < r[i + 1] for r in t for i in range(n - 1))
    cols_ok = all(t[j][i] < t[j + 1][i] for j in range(2) for i in range(n))
    return rows_ok and cols_ok


def word_from_tableau(t: Sequence[Sequence[int]]) -> str:
    if not is_tableau(t):
        raise Malformed("not a standard Young tableau of shape 3 x n")
    row_of = {}
    for r, row in enumerate(t, start=1):
        for v in row:
            row_of[v] = r
    return "".join(str(row_of[v]) for v in range(1, len(row_of) + 1))


def tableau_from_word(x: str) -> Tableau:
    _require_yamanouchi(x)
    rows: list[list[int]] = [[], [], []]
    for i, ch in enumerate(x, start=1):
        rows[int(ch) - 1].append(i)
    return tuple(tuple(r) for r in rows)


def evac_word(x: str) -> str:
    """Evacuation of a rectangular Yamanouchi word: reverse and swap 1 and 3."""
    _require_yamanouchi(x)
    return "".join(str(4 - int(ch)) for ch in reversed(x))


def evac_tableau(t: Sequence[Sequence[int]]) -> Tableau:
    """Rotate by 180 degrees and relabel i -> N+1-i."""
    if not is_tableau(t):
        raise Malformed("not a standard Young tableau of shape 3 x n")
    big = 3 * len(t[0]) + 1
    return tuple(tuple(big - v for v in reversed(row)) for row in reversed(t))


# --- shuffle words and the substitution f ----------------------------------

def is_shuffle(alpha: str) -> bool:
    na = nA = nb = nB = 0
    for ch in alpha:
        if ch == "a":
            na += 1
        elif ch == "A":
            nA += 1
        elif ch == "b":
            nb += 1
            if na <= nA:
                return False
        elif ch == "B":
            nB += 1
        else:
            return False
        if nA > na or nB > nb:
            return False
    return na == nA and nb == nB and len(alpha) > 0


def shuffle_words(length: int) -> list[str]:
    """All shuffle words of the given even length, sorted by the letter order a < A < b < B."""
    config.check("alt_length", length)
    out: list[str] = []
    buf: list[str] = []

    def walk(na, nA, nb, nB):
        rest = length - len(buf)
        if rest == 0:
            if na == nA and nb == nB:
                out.append("".join(buf))
            return
        if (na - nA) + (nb - nB) > rest:
            return
        for ch in SHUFFLE_LETTERS:
            if ch == "a":
                state = (na + 1, nA, nb, nB)
            elif ch == "A":
                if nA == na:
                    continue
                state = (na, nA + 1, nb, nB)
            elif ch == "b":
                if na <= nA:
                    continue
                state = (na, nA, nb + 1, nB)
            else:
                if nB == nb:
                    continue
                state = (na, nA, nb, nB + 1)
            buf.append(ch)
            walk(*state)
            buf.pop()

    if length % 2 == 0 and length > 0:
        walk(0, 0, 0, 0)
    return out


def _require_shuffle(alpha: str) -> None:
    if not is_shuffle(alpha):
        raise Malformed(f"not a shuffle word: {alpha!r}")


def f(alpha: str) -> str:
    _require_shuffle(alpha)
    return "".join(_PHI[ch] for ch in alpha)


def f_inverse(x: str) -> str:
    """Parse a word avoiding ``22`` back into a shuffle word: 21 -> b, 23 -> A, 1 -> a, 3 -> B."""
    out = []
    i = 0
    while i < len(x):
        ch = x[i]
        if ch == "2":
            nxt = x[i + 1] if i + 1 < len(x) else ""
            if nxt == "1":
                out.append("b")
            elif nxt == "3":
                out.append("A")
            else:
                raise NotParsable(f"2 at position {i + 1} is not followed by 1 or 3 in {x!r}")
            i += 2
        elif ch == "1":
            out.append("a")
            i += 1
        elif ch == "3":
            out.append("B")
            i += 1
        else:
            raise NotParsable(f"unexpected letter {ch!r} in {x!r}")
    return "".join(out)


# --- types and beta --------------------------------------------------------

# second letter of alpha_p alpha_{p+1} for each type
_SECOND = {1: "A", 2: "b", 3: "A", 4: "b", 5: "B", 6: "B", 7: "a", 8: "a"}
# types whose first letter is a or b (the others need A or B)
_FIRST_UNBARRED = {1, 2, 5, 7}
_TYPE_OF = {
    ("A", True): 1, ("A", False): 3,
    ("b", True): 2, ("b", False): 4,
    ("B", True): 5, ("B", False): 6,
    ("a", True): 7, ("a", False): 8,
}
_INVOLUTE_TYPE = {1: 1, 2: 3, 3: 2, 4: 4, 5: 5, 6: 7, 7: 6, 8: 8}


def _require_alt_baxter(pi: Sequence[int]) -> None:
    if len(pi) % 2 or not is_alternating(pi) or not is_baxter(pi):
        raise NotAltBaxter(f"{tuple(pi)!r} is not an alternating Baxter permutation of even length")


def type_of(pi: Sequence[int], p: int) -> int:
    _require_alt_baxter(pi)
    return _type_of(pi, p)


def _type_of(pi, p):
    d = decompose_at(pi, p)
    if d.side is Side.P_FIRST:
        return 1 + (2 if d.lower else 0) + (1 if d.upper else 0)
    if not d.lower and not d.upper:
        return 5
    if not d.upper:
        return 6
    return 7 if not d.lower else 8


def type_word(pi: Sequence[int]) -> tuple[int, ...]:
    _require_alt_baxter(pi)
    return tuple(_type_of(pi, p) for p in range(1, len(pi)))


def shuffle_from_types(types: Sequence[int]) -> str:
    """Build alpha from alpha_1 = a, checking each first letter against the type."""
    alpha = ["a"]
    for p, t in enumerate(types):
        if t not in _SECOND:
            raise Malformed(f"type {t!r} outside 1..8")
        if (alpha[p] in "ab") != (t in _FIRST_UNBARRED):
            raise Inconsistent(f"type {t} at p={p + 1} does not fit alpha_p = {alpha[p]}")
        alpha.append(_SECOND[t])
    return "".join(alpha)


def shuffle_type_word(alpha: str) -> tuple[int, ...]:
    _require_shuffle(alpha)
    return tuple(_TYPE_OF[(alpha[p + 1], alpha[p] in "ab")] for p in range(len(alpha) - 1))


def beta(pi: Sequence[int]) -> str:
    return shuffle_from_types(type_word(pi))


_type_tables: dict[int, dict] = {}
_type_lock = threading.Lock()


def _type_table(length: int) -> dict:
    table = _type_tables.get(length)
    if table is None:
        with _type_lock:
            table = _type_tables.get(length)
            if table is None:
                config.check("alt_length", length)
                table = {type_word(w): w for w in iter_family(Family.ALT_BAXTER, length)}
                _type_tables[length] = table
    return table


def beta_inverse(alpha: str) -> Permutation:
    types = shuffle_type_word(alpha)
    try:
        return _type_table(len(alpha))[types]
    except KeyError:
        raise Inconsistent(f"no alternating Baxter permutation has type word {types}") from None


def involute_types(types: Sequence[int]) -> tuple[int, ...]:
    return tuple(_INVOLUTE_TYPE[t] for t in reversed(types))


def involute_shuffle(alpha: str) -> str:
    return shuffle_from_types(involute_types(shuffle_type_word(alpha)))

