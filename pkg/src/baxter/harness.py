"""Registered families and bijections, commuting-square checks and censuses.

Every family is enumerated at a size ``n`` by its own independent generator
(pattern-avoidance search, direct path or rectangle search, Yamanouchi word
search, ...) and carries an involution and, for the families graded by order,
a ``(k, l)`` statistic with ``k + l = n - 1``.  For alternating Baxter
permutations and shuffle words ``n`` is half the length; for Yamanouchi words
it is the number of columns.

A square check runs a bijection over every source object and records
witnesses of any failure: image outside the target family, wrong order,
broken round trip, or ``forward(inv_src(x)) != inv_tgt(forward(x))``.
"""

from __future__ import annotations

import dataclasses
import functools
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import config, congruence, geom, perm, rect, word
from . import tree as trees
from .errors import BaxterError, Malformed, NoPath, NotMember
from .perm import Family
from .qpoly import theta, theta_q

# --- plane partitions with their box ----------------------------------------


@dataclass(frozen=True, order=True)
class BoxedPP:
    """A plane partition together with its ``(rows, cols, height)`` box; rows = l, cols = k."""

    box: tuple[int, int, int]
    entries: geom.PlanePartition

    def to_json(self) -> dict:
        return {"box": list(self.box), "entries": [list(r) for r in self.entries]}


def _pp_from_json(obj) -> BoxedPP:
    if not isinstance(obj, dict) or "box" not in obj or "entries" not in obj:
        raise Malformed('a plane partition is {"box": [rows, cols, 3], "entries": [[...], ...]}')
    box = tuple(int(v) for v in obj["box"])
    if len(box) != 3:
        raise Malformed("box needs three dimensions")
    entries = obj["entries"]
    if box[0] and box[1] == 0:
        entries = [[] for _ in range(box[0])]
    return BoxedPP(box, geom.as_pp(entries, box))


def _pp_member(x: BoxedPP) -> bool:
    rows, cols, height = x.box
    try:
        geom.as_pp(x.entries, x.box)
    except BaxterError:
        return False
    return height == 3 and len(x.entries) == rows


def _pps(n: int) -> list[BoxedPP]:
    config.check("perm_n", n)
    out = []
    for k in range(n):
        l = n - 1 - k
        out.extend(BoxedPP((l, k, 3), pp) for pp in geom.plane_partitions(l, k, 3))
    return sorted(out)


def _complement(x: BoxedPP) -> BoxedPP:
    return BoxedPP(x.box, geom.complement_pp(x.entries, x.box))


def _paths_to_pp(t: geom.PathTriple) -> BoxedPP:
    return BoxedPP((t.l, t.k, 3), geom.pp_from_paths(t))


def _pp_to_paths(x: BoxedPP) -> geom.PathTriple:
    return geom.paths_from_pp(x.entries, x.box)


# --- families ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    aliases: tuple[str, ...]
    objects: Callable[[int], list]
    involution: Callable[[Any], Any]
    member: Callable[[Any], bool]
    stat: Callable[[Any], tuple[int, int]] | None
    to_json: Callable[[Any], Any]
    from_json: Callable[[Any], Any]


def _perm_json(w) -> list[int]:
    return list(w)


def _perm_from_json(obj):
    try:
        return perm.as_perm(obj)
    except (TypeError, ValueError) as e:
        raise Malformed(str(e)) from None


def _stat(w) -> tuple[int, int]:
    return (perm.ascents(w), perm.descents(w))


def _inverse_stat(w) -> tuple[int, int]:
    v = perm.inverse(w)
    return (perm.ascents(v), perm.descents(v))


def _perm_family(name, aliases, family, member, stat) -> FamilySpec:
    def objects(n):
        return perm.enumerate_family(family, n)

    return FamilySpec(name, aliases, objects, perm.conjugate_w0, member, stat, _perm_json, _perm_from_json)


def _is_alt_baxter(w) -> bool:
    return len(w) % 2 == 0 and perm.is_permutation(w) and perm.is_alternating(w) and perm.is_baxter(w)


def _twin_member(pair) -> bool:
    left, right = pair
    return trees.is_complete(left) and trees.is_complete(right) and trees.size(left) == trees.size(right) \
        and trees.is_twin(left, right)


def _paths(n: int) -> list[geom.PathTriple]:
    config.check("perm_n", n)
    return sorted(t for k in range(n) for t in geom.path_triples(k, n - 1 - k))


def _rects(n: int) -> list[rect.Rectangulation]:
    config.check("perm_n", n)
    return rect.search_rectangulations(n)


_NO_REPEAT = ("11", "22", "33")


def _is_baxter_word(x) -> bool:
    return isinstance(x, str) and word.is_yamanouchi(x) and word.avoids(x, _NO_REPEAT)


def _is_yam22(x) -> bool:
    return isinstance(x, str) and word.is_yamanouchi(x) and word.avoids(x, ("22",))


def _word_from_json(obj) -> str:
    if not isinstance(obj, str):
        raise Malformed("a word is a JSON string")
    return obj


def _tableau_json(x: str) -> list[list[int]]:
    return [list(r) for r in word.tableau_from_word(x)]


def _tableau_from_json(obj) -> str:
    """A tableau as three rows, or its Yamanouchi word."""
    if isinstance(obj, str):
        return obj
    try:
        return word.word_from_tableau([[int(v) for v in row] for row in obj])
    except (TypeError, ValueError) as e:
        raise Malformed(f"not a 3-row tableau: {e}") from None


FAMILIES: dict[str, FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    FAMILIES[spec.name] = spec


_register(_perm_family("baxter", ("baxter-permutation",), Family.BAXTER, perm.is_baxter, _stat))
_register(_perm_family("baxter-inverse", ("inverse-baxter",), Family.BAXTER, perm.is_baxter, _inverse_stat))
_register(_perm_family("twisted", ("twisted-baxter",), Family.TWISTED, perm.is_twisted_baxter, _inverse_stat))
_register(FamilySpec(
    "twin", ("twin-trees",), trees.twin_pairs, trees.involute_pair, _twin_member, trees.pair_stats,
    trees.pair_to_json, trees.pair_from_json))
_register(FamilySpec(
    "paths", ("path-triples",), _paths, geom.rotate_paths, geom.is_non_intersecting,
    lambda t: (t.k, t.l), lambda t: t.to_json(), geom.triple_from_json))
_register(FamilySpec(
    "pp", ("plane-partition", "plane-partitions"), _pps, _complement, _pp_member,
    lambda x: (x.box[1], x.box[0]), lambda x: x.to_json(), _pp_from_json))
_register(FamilySpec(
    "rect", ("rectangulation", "rectangulations"), _rects, rect.rotate_rect, rect.is_diagonal_rectangulation,
    rect.diag_stats, lambda r: r.to_json(), rect.from_json))
_register(FamilySpec(
    "tableaux", ("baxter-tableaux",), lambda n: word.yamanouchi_words(n, avoid=_NO_REPEAT), word.evac_word,
    _is_baxter_word, word.baxter_stat, _tableau_json, _tableau_from_json))
_register(FamilySpec(
    "alt-baxter", ("alternating-baxter",), lambda n: perm.enumerate_family(Family.ALT_BAXTER, 2 * n),
    perm.conjugate_w0, _is_alt_baxter, None, _perm_json, _perm_from_json))
_register(FamilySpec(
    "shuffle", ("shuffle-words",), lambda n: word.shuffle_words(2 * n), word.involute_shuffle,
    word.is_shuffle, None, str, _word_from_json))
_register(FamilySpec(
    "yam22", ("yamanouchi-22",), lambda n: word.yamanouchi_words(n, avoid=("22",)), word.evac_word,
    _is_yam22, None, str, _word_from_json))

# the six columns of the golden order-(k, l) tables
CENSUS_FAMILIES = ("baxter", "twisted", "paths", "tableaux", "rect", "pp")

_ALIASES = {a: spec.name for spec in FAMILIES.values() for a in (spec.name,) + spec.aliases}


def family(name: str) -> FamilySpec:
    try:
        return FAMILIES[_ALIASES[name]]
    except KeyError:
        raise Malformed(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


# --- edges ------------------------------------------------------------------


@dataclass(frozen=True)
class BijectionEdge:
    name: str
    source: str
    target: str
    forward: Callable[[Any], Any]
    inverse: Callable[[Any], Any]

    @property
    def source_involution(self):
        return FAMILIES[self.source].involution

    @property
    def target_involution(self):
        return FAMILIES[self.target].involution


_EDGES: list[BijectionEdge] = []


def _edge(name, source, target, forward, inverse) -> BijectionEdge:
    e = BijectionEdge(name, source, target, forward, inverse)
    _EDGES.append(e)
    return e


_psi = _edge("baxter-twin", "baxter", "twin", trees.psi_twin, trees.twin_to_baxter)
_edge("twin-paths", "twin", "paths", geom.paths_from_twin, geom.twin_from_paths)
_edge("paths-pp", "paths", "pp", _paths_to_pp, _pp_to_paths)
_edge("twin-rect", "twin", "rect", rect.rect_from_twin, rect.twin_from_rect)
_edge("inverse", "baxter", "baxter-inverse", perm.inverse, perm.inverse)
_edge("twisted-baxter", "twisted", "baxter-inverse", congruence.twisted_to_baxter, congruence.baxter_to_twisted)
_beta = _edge("alt-shuffle", "alt-baxter", "shuffle", word.beta, word.beta_inverse)
_phi = _edge("shuffle-yam22", "shuffle", "yam22", word.f, word.f_inverse)


def _to_tableau(w):
    return _phi.forward(_beta.forward(trees.psi_inverse_complete(_psi.forward(w))))


def _from_tableau(x):
    return _psi.inverse(trees.complete_psi(_beta.inverse(_phi.inverse(x))))


_edge("baxter-tableaux", "baxter", "tableaux", _to_tableau, _from_tableau)


def registered_edges() -> list[BijectionEdge]:
    return list(_EDGES)


def edge(name: str) -> BijectionEdge:
    for e in _EDGES:
        if e.name == name:
            return e
    raise Malformed(f"unknown edge {name!r}; choose from {[e.name for e in _EDGES]}")


# --- square checks ----------------------------------------------------------


@dataclass
class SquareReport:
    edge: str
    size: int | list[int]
    checked: int
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"edge": self.edge, "size": self.size, "checked": self.checked, "failures": self.failures}


def _objects(spec: FamilySpec, n: int, order: tuple[int, int] | None) -> list:
    objs = spec.objects(n)
    if order is not None and spec.stat is not None:
        objs = [x for x in objs if spec.stat(x) == order]
    return objs


def _failure(src, tgt, x, lhs, rhs, kind) -> dict:
    def show(spec, v):
        if isinstance(v, (str, int, list)) or v is None:
            return v
        return spec.to_json(v)

    return {"input": show(src, x), "lhs": show(tgt, lhs), "rhs": show(tgt, rhs), "kind": kind}


def _check_range(name: str, n: int, order, start: int, stop: int, limits: dict | None = None):
    if limits is not None:
        config.configure(**limits)
    e = edge(name)
    src, tgt = FAMILIES[e.source], FAMILIES[e.target]
    xs = _objects(src, n, order)[start:stop]
    targets = set(_objects(tgt, n, order))
    images = []
    failures = []
    for x in xs:
        try:
            y = e.forward(x)
            images.append(y)
            if y not in targets:
                failures.append(_failure(src, tgt, x, y, None, "member"))
                continue
            if src.stat is not None and tgt.stat is not None and src.stat(x) != tgt.stat(y):
                failures.append(_failure(src, tgt, x, list(tgt.stat(y)), list(src.stat(x)), "stat"))
            back = e.inverse(y)
            if back != x:
                failures.append(_failure(src, src, x, back, x, "roundtrip"))
            lhs = e.forward(src.involution(x))
            rhs = tgt.involution(y)
            if lhs != rhs:
                failures.append(_failure(src, tgt, x, lhs, rhs, "commute"))
        except BaxterError as err:
            failures.append(_failure(src, tgt, x, type(err).__name__, str(err), "error"))
    return images, failures


def check_square(name: str, n: int, order: tuple[int, int] | None = None, threads: int = 1) -> SquareReport:
    """Exhaustively check one edge at size ``n`` (optionally only objects of order ``(k, l)``).

    With ``threads > 1`` the source objects are split into contiguous chunks
    checked in worker processes; chunks are merged in source order so the
    report does not depend on the number of workers.
    """
    e = edge(name)
    if order is not None:
        order = tuple(order)
        if sum(order) != n - 1:
            raise Malformed(f"order {order} does not have k + l = n - 1 = {n - 1}")
    src, tgt = FAMILIES[e.source], FAMILIES[e.target]
    total = len(_objects(src, n, order))
    if threads > 1 and total > 1:
        step = -(-total // threads)
        bounds = [(i, min(i + step, total)) for i in range(0, total, step)]
        limits = dataclasses.asdict(config.limits())
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_check_range, *zip(*[(name, n, order, a, b, limits) for a, b in bounds])))
    else:
        parts = [_check_range(name, n, order, 0, total)]
    images = [y for part in parts for y in part[0]]
    failures = [f for part in parts for f in part[1]]
    targets = _objects(tgt, n, order)
    if len(set(images)) != len(images) or set(images) != set(targets):
        failures.append({"input": None, "lhs": len(set(images)), "rhs": len(targets), "kind": "surjective"})
    size = n if order is None else list(order)
    return SquareReport(e.name, size, total, failures)


# --- census -----------------------------------------------------------------


def census(n: int, families: Sequence[str] = CENSUS_FAMILIES) -> list[dict]:
    """Per order (k, l) with k + l = n - 1: object and fixed-point counts per family, against theta."""
    specs = [family(f) for f in families]
    rows = {(k, n - 1 - k): {"counts": {}, "fixed": {}} for k in range(n)}
    for spec in specs:
        if spec.stat is None:
            raise Malformed(f"family {spec.name!r} is not graded by (k, l)")
        for row in rows.values():
            row["counts"][spec.name] = 0
            row["fixed"][spec.name] = 0
        for x in spec.objects(n):
            row = rows[spec.stat(x)]
            row["counts"][spec.name] += 1
            if spec.involution(x) == x:
                row["fixed"][spec.name] += 1
    out = []
    for (k, l), row in sorted(rows.items(), key=lambda kv: -kv[0][0]):
        th, th_minus = theta(k, l), theta_q(k, l)(-1)
        consistent = all(c == th for c in row["counts"].values()) and all(
            c == th_minus for c in row["fixed"].values())
        out.append({"k": k, "l": l, "theta": th, "theta_at_minus_one": th_minus,
                    "counts": row["counts"], "fixed": row["fixed"], "consistent": consistent})
    return out


# --- mapping between families -----------------------------------------------


def edge_path(source: str, target: str) -> list[tuple[BijectionEdge, bool]]:
    """Shortest chain of edges from source to target; each step says whether it runs forward.

    Breadth-first search visits edges in registration order, so ties go to
    the earliest registered edge.
    """
    source, target = family(source).name, family(target).name
    prev: dict[str, tuple[str, BijectionEdge, bool] | None] = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            break
        for e in _EDGES:
            for a, b, fwd in ((e.source, e.target, True), (e.target, e.source, False)):
                if a == node and b not in prev:
                    prev[b] = (node, e, fwd)
                    queue.append(b)
    if target not in prev:
        raise NoPath(f"no chain of bijections from {source} to {target}")
    steps = []
    node = target
    while prev[node] is not None:
        node, e, fwd = prev[node]
        steps.append((e, fwd))
    return steps[::-1]


def map_object(source: str, target: str, obj):
    """Parse a JSON object of the source family and carry it to the target family."""
    src = family(source)
    x = src.from_json(obj)
    if not src.member(x):
        raise NotMember(f"object is not a member of {src.name}")
    for e, fwd in edge_path(source, target):
        x = e.forward(x) if fwd else e.inverse(x)
    return family(target).to_json(x)


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
