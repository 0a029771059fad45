import io
import json

import pytest

from cubicpm.cli import run
from cubicpm.graph_core import format_graph, generate, k4_chain, necklace, parse_graph


def _run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def gfile(tmp_path):
    def make(G, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_graph(G))
        return str(p)
    return make


def test_generate_then_count_stdin(monkeypatch):
    code, text, _ = _run(["generate", "petersen"])
    assert code == 0
    code, out, _ = _run(["--no-timing", "count", "-"], stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "cubicpm.report/1"
    assert rep["results"]["m"] == 6 and rep["results"]["m_star"] == 2


def test_output_is_deterministic(gfile):
    f = gfile(generate("prism"))
    a = _run(["--no-timing", "decompose", f])[1]
    b = _run(["--no-timing", "decompose", f])[1]
    assert a == b
    assert "timing" in json.loads(_run(["count", f])[1])


def test_constants_command():
    code, out, _ = _run(["--no-timing", "constants"])
    rep = json.loads(out)["results"]
    assert code == 0 and rep["c"] == 3656 and rep["tight_set"] == [4, 6, 9, 10]
    code, out, _ = _run(["--no-timing", "constants", "--c", "3655"])
    assert code == 1 and json.loads(out)["results"]["all_hold"] is False


def test_graph_commands(gfile):
    f = gfile(generate("petersen"))
    for argv in (["cuts", f], ["core", f], ["prune", f], ["verdict", f], ["split", f, "--path", "0,1,2,3"],
                 ["balanced", f, "--target", "1/3"], ["burl", f, "--set", "0,1,2,3,4"]):
        code, out, err = _run(["--no-timing"] + argv)
        assert code == 0, (argv, err)
        json.loads(out)
    assert json.loads(_run(["core", f])[1])["results"]["has_core"] is True


def test_rationals_print_as_fractions(gfile):
    f = gfile(necklace(3))
    out = json.loads(_run(["--no-timing", "--decimal", "burl", f, "--set", "0,1,2,3"])[1])["results"]
    assert out["min_expected"] == "2/3" and out["twig"] == "twig2"
    assert out["min_expected_decimal"].startswith("0.6666")


def test_klee_command(gfile):
    G = necklace(5)
    f = gfile(G)
    code, out, _ = _run(["--no-timing", "klee", f, "--set", ",".join(map(str, range(4, 20)))])
    rep = json.loads(out)["results"]
    assert code == 0 and rep["bound_holds"] and len(rep["foliage"]["burls"]) == 3


def test_kregular_command(gfile):
    f = gfile(generate("K33"))
    code, _, err = _run(["kregular", f, "--k", "4"])
    assert code == 2 and "PreconditionFailed" in err
    from cubicpm.graph_core import complete_bipartite
    g = complete_bipartite(4, 4)
    f2 = gfile(g, "k44.txt")
    code, out, _ = _run(["--no-timing", "kregular", f2, "--k", "4"])
    assert code == 0 and json.loads(out)["results"]["chain_ok"]


def test_usage_errors(gfile):
    f = gfile(generate("petersen"))
    assert _run(["nonsense"])[0] == 2
    assert _run(["split", f, "--path", "0,1"])[0] == 2
    assert _run(["burl", f, "--set", "a,b"])[0] == 2
    assert _run(["count", f + ".missing"])[0] == 2
    bad = gfile(generate("petersen"), "bad.txt")
    with open(bad, "a") as fh:
        fh.write("0 1\n")
    assert _run(["count", bad])[0] == 2


def test_size_limit_exit(gfile):
    f = gfile(k4_chain(length=16))
    code, _, err = _run(["verdict", f])
    assert code == 1 and "cap=" in err


def test_verify_lemmas_suite():
    code, out, _ = _run(["--no-timing", "verify-lemmas", "--suite", "smallcount"])
    assert code == 0 and json.loads(out)["results"]["passed"]


def test_file_round_trip():
    for G in (generate("petersen"), necklace(3), generate("B3")):
        text = format_graph(G)
        assert format_graph(parse_graph(text)) == text


def test_decompose_skips_whole_graph_twig(gfile):
    f = gfile(generate("k4_chain", "12,13,23"))
    code, out, err = _run(["--no-timing", "decompose", f])
    assert code == 0, err
    assert json.loads(out)["results"]["Y"] == []
