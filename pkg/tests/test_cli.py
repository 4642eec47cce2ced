import io
import json
import subprocess
import sys

import pytest

from baxter.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(x) for x in text.splitlines()]


def test_enumerate():
    code, text = run("enumerate", "--family", "baxter", "--n", "4")
    assert code == 0
    got = lines(text)
    assert len(got) == 22 and got[0] == [1, 2, 3, 4]
    code, text = run("enumerate", "--family", "twisted", "--k", "2", "--l", "1")
    assert code == 0 and len(lines(text)) == 10


def test_poly():
    code, text = run("poly", "theta-q", "--k", "2", "--l", "1")
    assert code == 0 and lines(text) == [["1", "1", "2", "2", "2", "1", "1"]]
    assert lines(run("poly", "gamma", "--n", "4")[1]) == [["1", "7"]]
    assert lines(run("poly", "qbinomial", "--n", "4", "--k", "2")[1]) == [["1", "1", "2", "1", "1"]]
    assert lines(run("poly", "ffon-fixed", "--k", "2", "--l", "2")[1]) == ["6"]


def test_map_and_involute():
    code, text = run("map", "--from", "twisted", "--to", "rect", "3124")
    assert code == 0 and lines(text) == [[[0, 2, 1, 4], [1, 2, 3, 4], [0, 0, 3, 2], [3, 0, 4, 4]]]
    assert lines(run("involute", "--family", "baxter", "[4,3,5,1,2]")[1]) == [[4, 5, 1, 3, 2]]


def test_fixed():
    code, text = run("fixed", "--family", "paths", "--n", "4")
    assert code == 0
    assert [(r["k"], r["count"], r["fixed"]) for r in lines(text)] == [(3, 1, 1), (2, 10, 2), (1, 10, 2), (0, 1, 1)]
    _, text = run("fixed", "--family", "alt-baxter", "--n", "3")
    assert lines(text) == [{"family": "alt-baxter", "n": 3, "count": 25, "fixed": 5}]


def test_verify_and_census():
    code, text = run("verify", "--max-n", "4")
    assert code == 0 and all(not r["failures"] for r in lines(text))
    code, text = run("census", "--n", "4")
    assert code == 0 and [r["theta"] for r in lines(text)] == [1, 10, 10, 1]


def test_errors():
    code, text = run("map", "--from", "baxter", "--to", "twin", "2413")
    assert code == 1 and lines(text)[0]["error"] == "NotMember"
    code, text = run("poly", "theta-q", "--k", "2")
    assert code == 1 and lines(text)[0]["error"] == "Malformed"
    assert run("enumerate", "--family", "nope", "--n", "2")[0] == 1
    assert run("bogus")[0] == 2
    assert run("enumerate", "--n", "3")[0] == 2


def test_table_format():
    code, text = run("census", "--n", "3", "--format", "table")
    assert code == 0
    assert text.splitlines()[0].split()[:3] == ["n", "k", "l"]


def test_deterministic_output():
    assert run("enumerate", "--family", "rect", "--n", "5") == run("enumerate", "--family", "rect", "--n", "5")


@pytest.mark.parametrize("args", [["enumerate", "--family", "baxter", "--n", "3"]])
def test_module_entry_point(args):
    proc = subprocess.run([sys.executable, "-m", "baxter", *args], capture_output=True, text=True, check=True)
    assert proc.stdout == run(*args)[1]
