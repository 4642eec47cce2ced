import pytest

from baxter import harness as H
from baxter.errors import Malformed
from baxter.congruence import baxter_to_twisted
from baxter.perm import Family, as_perm, enumerate_family, to_str
from baxter.qpoly import theta, theta_q

import golden

CROSS_RECT = [[0, 2, 1, 4], [1, 2, 3, 4], [0, 0, 3, 2], [3, 0, 4, 4]]

EDGES = ["baxter-twin", "twin-paths", "paths-pp", "twin-rect", "inverse", "twisted-baxter",
         "alt-shuffle", "shuffle-yam22", "baxter-tableaux"]


def _norm(family, obj):
    if family == "rect":
        return tuple(sorted(tuple(r) for r in obj))
    if family == "pp":
        return tuple(tuple(r) for r in obj["entries"])
    if family == "tableaux":
        return tuple(tuple(r) for r in obj)
    if family == "twisted":
        return to_str(obj)
    return tuple(obj)


def _golden(order, key):
    return [x for row in golden.ROWS if row["order"] == order for x in row[key]]


def test_registered_edges():
    assert [e.name for e in H.registered_edges()] == EDGES
    with pytest.raises(Malformed):
        H.edge("nope")
    with pytest.raises(Malformed):
        H.family("nope")
    assert H.family("baxter-permutation").name == "baxter"


@pytest.mark.parametrize("name", EDGES)
@pytest.mark.parametrize("n", range(1, 6))
def test_squares_small(name, n):
    r = H.check_square(name, n)
    assert r.ok, r.failures[:3]
    assert r.checked == len(H.family(H.edge(name).source).objects(n))


def test_square_by_order():
    r = H.check_square("baxter-twin", 4, (2, 1))
    assert r.ok and r.checked == 10 and r.to_json()["size"] == [2, 1]
    with pytest.raises(Malformed):
        H.check_square("baxter-twin", 4, (2, 2))


def test_threads_do_not_change_reports():
    one = H.check_square("twin-rect", 5, threads=1)
    two = H.check_square("twin-rect", 5, threads=2)
    assert one.to_json() == two.to_json()


def test_census_n4():
    rows = H.census(4)
    assert [(r["k"], r["l"]) for r in rows] == [(3, 0), (2, 1), (1, 2), (0, 3)]
    for r, want, fixed in zip(rows, (1, 10, 10, 1), (1, 2, 2, 1)):
        assert r["theta"] == want and r["theta_at_minus_one"] == fixed
        assert set(r["counts"].values()) == {want} and set(r["fixed"].values()) == {fixed}
        assert r["consistent"]
    assert theta_q(2, 1).coeffs == (1, 1, 2, 2, 2, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_census_consistent(n):
    rows = H.census(n)
    assert all(r["consistent"] for r in rows)
    assert [r["theta"] for r in rows] == [theta(k, n - 1 - k) for k in range(n - 1, -1, -1)]


def test_golden_sets_per_order():
    for order in [(3, 0), (2, 1), (1, 2), (0, 3)]:
        bax = _golden(order, "baxter")
        for fam, key in [("twisted", "twisted"), ("paths", "paths"), ("pp", "pp"),
                         ("tableaux", "tableaux"), ("rect", "rects")]:
            got = sorted(_norm(fam, H.map_object("baxter", fam, w)) for w in bax)
            assert got == sorted(_golden(order, key)), (order, fam)


def test_golden_rows():
    for row in golden.ROWS:
        for i, t in enumerate(row["twisted"]):
            # rectangulations are drawn from the twisted column
            assert _norm("rect", H.map_object("twisted", "rect", t)) == row["rects"][i]
            assert to_str(baxter_to_twisted(as_perm(row["baxter"][i]))) == t
        # every row is a single object or an involution pair, in every family
        tabs = {_norm("tableaux", H.map_object("baxter", "tableaux", w)) for w in row["baxter"]}
        assert tabs == set(row["tableaux"])
        if row["order"] != (1, 2):
            for w, p, pp in zip(row["baxter"], row["paths"], row["pp"]):
                assert _norm("paths", H.map_object("baxter", "paths", w)) == p
                assert _norm("pp", H.map_object("baxter", "pp", w)) == pp


def test_golden_pairs_are_involution_pairs():
    for row in golden.ROWS:
        for fam, key in [("paths", "paths"), ("tableaux", "tableaux")]:
            spec = H.family(fam)
            objs = [spec.from_json(list(x)) for x in row[key]]
            assert {spec.involution(x) for x in objs} == set(objs)


def test_map_examples():
    assert H.map_object("twisted", "rect", [3, 1, 2, 4]) == CROSS_RECT
    assert H.map_object("baxter", "rect", [1]) == [[0, 0, 1, 1]]
    assert H.map_object("baxter", "tableaux", "1234") == [[1, 3, 6, 9], [2, 5, 8, 11], [4, 7, 10, 12]]
    assert H.map_object("twisted", "baxter-inverse", [4, 1, 2, 5, 6, 7, 3]) == [4, 5, 6, 7, 1, 2, 3]
    with pytest.raises(H.NotMember):
        H.map_object("baxter", "twin", [2, 4, 1, 3])
    with pytest.raises(H.NoPath):
        H.map_object("baxter", "shuffle", [1, 2])


def test_round_trips_over_bax5():
    targets = ["twin", "paths", "pp", "rect", "tableaux", "twisted", "baxter-inverse"]
    for w in enumerate_family(Family.BAXTER, 5):
        for t in targets:
            assert H.map_object(t, "baxter", H.map_object("baxter", t, list(w))) == list(w)


def test_pp_json():
    x = H.map_object("baxter", "pp", [2, 1, 3])
    assert set(x) == {"box", "entries"}
    assert x["box"][2] == 3
