import itertools

import pytest

from baxter import geom as G
from baxter import tree as T
from baxter.errors import BoxMismatch, Intersecting, Malformed
from baxter.perm import Family, ascents, descents, enumerate_family
from baxter.qpoly import macmahon_q, theta, theta_q

STACKED_TRIPLE = G.PathTriple(4, 4, ("ENNEENNE", "EENNENEN", "EEENNENN"))
STACKED_PP = ((3, 3, 3, 2), (3, 3, 3, 1), (3, 2, 1, 0), (3, 2, 1, 0))


def brute_pps(a, b, c):
    """Plane partitions by filtering every array in {0..c}^(a x b)."""
    out = []
    for flat in itertools.product(range(c + 1), repeat=a * b):
        rows = [flat[i * b:(i + 1) * b] for i in range(a)]
        if all(r[j] >= r[j + 1] for r in rows for j in range(b - 1)) and all(
                rows[i][j] >= rows[i + 1][j] for i in range(a - 1) for j in range(b)):
            out.append(tuple(tuple(r) for r in rows))
    return sorted(out)


def test_stacked_triple():
    assert G.is_non_intersecting(STACKED_TRIPLE)
    assert G.pp_from_paths(STACKED_TRIPLE) == STACKED_PP
    assert G.paths_from_pp(STACKED_PP) == STACKED_TRIPLE
    # rotating the paths complements the partition
    assert G.pp_from_paths(G.rotate_paths(STACKED_TRIPLE)) == G.complement_pp(STACKED_PP, (4, 4, 3))


def test_lowest_triple_is_empty():
    t = G.PathTriple(2, 2, ("NNEE",) * 3)
    assert G.pp_from_paths(t) == ((0, 0), (0, 0))


@pytest.mark.parametrize("k,l", [(k, l) for k in range(5) for l in range(5) if k + l <= 6])
def test_path_counts_match_theta(k, l):
    triples = G.path_triples(k, l)
    assert len(triples) == theta(k, l)
    fixed = [t for t in triples if G.rotate_paths(t) == t]
    assert len(fixed) == theta_q(k, l)(-1)
    for t in triples:
        pp = G.pp_from_paths(t)
        assert len(pp) == l and all(len(r) == k for r in pp)
        assert G.paths_from_pp(pp, (l, k, 3)) == t


def test_table_counts():
    assert len(G.path_triples(2, 1)) == 10
    assert sum(1 for t in G.path_triples(2, 1) if G.rotate_paths(t) == t) == 2
    assert sum(1 for t in G.path_triples(1, 1) if G.rotate_paths(t) == t) == 0
    assert sum(1 for t in G.path_triples(3, 1) if G.rotate_paths(t) == t) == 0


@pytest.mark.parametrize("a,b,c", [(1, 1, 2), (2, 1, 3), (2, 2, 3), (2, 3, 2), (3, 2, 3), (1, 4, 3)])
def test_plane_partitions_against_brute_force(a, b, c):
    pps = sorted(G.plane_partitions(a, b, c))
    assert pps == brute_pps(a, b, c)
    poly = [0] * (a * b * c + 1)
    for pp in pps:
        poly[G.pp_size(pp)] += 1
    assert macmahon_q(a, b, c).coeffs == tuple(poly)


def test_complement():
    assert G.complement_pp(((0,), (0,)), (2, 1, 3)) == ((3,), (3,))
    assert G.complement_pp(((3, 3),), (1, 2, 3)) == ((0, 0),)
    sc = [pp for pp in G.plane_partitions(2, 2, 3) if G.complement_pp(pp, (2, 2, 3)) == pp]
    assert len(sc) == 6
    assert sum(1 for _ in G.plane_partitions(2, 2, 3)) == 50


def test_as_pp_validation():
    with pytest.raises(Malformed):
        G.as_pp([[1, 2]])
    with pytest.raises(Malformed):
        G.as_pp([[1], [2]])
    with pytest.raises(BoxMismatch):
        G.as_pp([[4]], (1, 1, 3))


def test_path_validation():
    with pytest.raises(Malformed):
        G.PathTriple(1, 1, ("EN", "EN"))
    with pytest.raises(Malformed):
        G.PathTriple(1, 1, ("EE", "EN", "EN"))
    with pytest.raises(Intersecting):
        G.pp_from_paths(G.PathTriple(1, 1, ("EN", "NE", "NE")))


def test_small_twin_paths():
    assert G.paths_from_twin(T.psi_twin((1, 2))).paths == ("E", "E", "E")
    assert G.paths_from_twin(T.psi_twin((2, 1))).paths == ("N", "N", "N")


@pytest.mark.parametrize("n", range(1, 8))
def test_twin_paths_bijection(n):
    pairs = T.twin_pairs(n)
    images = [G.paths_from_twin(p) for p in pairs]
    assert len(set(images)) == len(pairs)
    assert set(images) == {t for k in range(n) for t in G.path_triples(k, n - 1 - k)}
    for p, t in zip(pairs, images):
        assert (t.k, t.l) == T.pair_stats(p)
        assert G.twin_from_paths(t) == p
        assert G.rotate_paths(t) == G.paths_from_twin(T.involute_pair(p))


def test_paths_follow_permutation_order():
    for w in enumerate_family(Family.BAXTER, 5):
        t = G.paths_from_twin(T.psi_twin(w))
        assert (t.k, t.l) == (ascents(w), descents(w))


def test_twin_from_paths_rejects_intersecting():
    with pytest.raises(Intersecting):
        G.twin_from_paths(G.PathTriple(1, 1, ("EN", "NE", "NE")))


def test_json():
    assert G.triple_from_json(STACKED_TRIPLE.to_json()) == STACKED_TRIPLE
    with pytest.raises(Malformed):
        G.triple_from_json(["E", "E"])
