import io
import json
import random

import pytest

from tests.generators import check, gen_module, gen_range
from weylmod.cli import EXIT_FALSE, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, dispatch


def run(settings, *argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), settings=settings, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def golden(golden_dir, name):
    return (golden_dir / name).read_text(encoding="utf-8")


def test_rho_golden(settings, golden_dir, data_dir):
    code, out, _ = run(settings, "rho", str(data_dir / "exweyl.q"), "--word", "2 3 1 3 4 1")
    assert code == EXIT_OK
    assert out == golden(golden_dir, "rho_exweyl.txt")


def test_embed_golden(settings, golden_dir):
    code, out, _ = run(settings, "embed", "exweyl", "--m", "1:3", "--u", "0:2,0:3,0:4")
    assert code == EXIT_FALSE
    assert out == golden(golden_dir, "embed_exweyl.txt")


def test_embed_trace_golden(settings, golden_dir):
    code, out, _ = run(settings, "embed", "exweyl", "--m", "1:3", "--u", "0:2,0:3,0:4", "--trace")
    assert code == EXIT_FALSE
    assert out == golden(golden_dir, "embed_trace_exweyl.txt")


def test_leftmost_golden(settings, golden_dir):
    code, out, _ = run(settings, "leftmost", "exweyl", "--word", "2 3 1 2 1", "--method", "both")
    assert code == EXIT_OK
    assert out == golden(golden_dir, "leftmost_exweyl.txt")


def test_enumerate_golden(settings, golden_dir):
    code, out, _ = run(settings, "enumerate", "a2")
    assert code == EXIT_OK
    assert out == golden(golden_dir, "enumerate_a2.txt")


def test_coxmat(settings):
    assert run(settings, "coxmat", "exweyl")[1] == "1 2 3 3\n2 1 3 3\n3 3 1 2\n3 3 2 1\n"
    assert run(settings, "coxmat", "kronecker")[1] == "1 inf\ninf 1\n"


def test_coxmat_json(settings):
    code, out, _ = run(settings, "coxmat", "kronecker", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["matrix"] == [["1", "inf"], ["inf", "1"]]
    assert data["finite_type"] is False


@pytest.mark.parametrize(("w1", "w2", "expected"), [("3", "2 3", "less"), ("3 2 3", "2 3 2", "greater"), ("1 2", "1 2", "equal")])
def test_cmp(settings, w1, w2, expected):
    assert run(settings, "cmp", "exweyl", "--w1", w1, "--w2", w2) == (EXIT_OK, expected + "\n", "")


def test_reduced(settings):
    assert run(settings, "reduced", "exweyl", "--word", "2 3 2")[:2] == (EXIT_OK, "reduced\n")
    assert run(settings, "reduced", "exweyl", "--word", "2 3 1 2 1")[:2] == (EXIT_FALSE, "not reduced (length 3)\n")


def test_leftmost_check(settings):
    assert run(settings, "leftmost", "exweyl", "--word", "3 2 3", "--check")[:2] == (EXIT_FALSE, "2 3 2\n")
    assert run(settings, "leftmost", "exweyl", "--word", "2 3 2", "--check")[0] == EXIT_OK


def test_embed_json(settings):
    code, out, _ = run(settings, "embed", "exweyl", "--m", "1:3", "--u", "0:2,0:3,0:4", "--json")
    data = json.loads(out)
    assert code == EXIT_FALSE
    assert data["verdict"] == "no_embed"
    assert data["witness"] == {"r": 0, "i": 4}
    assert (data["required"], data["available"]) == (2, 1)
    assert data["trace"] is None


def test_embed_yes(settings):
    code, out, _ = run(settings, "embed", "exweyl", "--m", "1:3", "--u", "1:1,1:2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["certificate"] == [
        {"vertex": {"r": 1, "i": 1}, "multiplicity": 1},
        {"vertex": {"r": 1, "i": 2}, "multiplicity": 1},
    ]


def test_closed(settings):
    code, out, _ = run(settings, "closed", "exweyl", "--word", "3 1 3")
    assert (code, out) == (EXIT_FALSE, "not closed: (1,3) embeds into {(0,4), (1,2)}\n")
    code, out, _ = run(settings, "closed", "a2", "--excluded", "0:2,1:1")
    assert (code, out) == (EXIT_OK, "closed: C excludes {(0,2), (1,1)}\n")


def test_closed_json_lists_witnesses(settings):
    data = json.loads(run(settings, "closed", "exweyl", "--word", "3 1 3", "--json")[1])
    assert data["closed"] is False
    assert data["word"] == [3, 1, 3]
    assert list(data["witnesses"]) == ["1:3"]


def test_closed_reports_dropped_pairs(settings):
    out = run(settings, "closed", "a3", "--word", "1 3 1 3")[1]
    assert out.splitlines()[0] == "dropped zero pairs: (1,3)"


def test_closed_needs_one_source(settings):
    assert run(settings, "closed", "a2")[0] == EXIT_INPUT


def test_enumerate_verify(settings):
    code, out, _ = run(settings, "enumerate", "a3", "--verify")
    assert code == EXIT_OK
    assert out.rstrip("\n").endswith("bijective")
    data = json.loads(run(settings, "enumerate", "kronecker", "--verify", "--max-len", "4", "--json")[1])
    assert data["violations"] == []
    assert data["finite_type"] is False


def test_enumerate_needs_a_length_in_infinite_type(settings):
    code, out, err = run(settings, "enumerate", "kronecker")
    assert code == EXIT_INPUT
    assert out == ""
    assert err == "weylmod: error: --max-len is required for infinite type\n"


def test_dims_and_dot(settings):
    assert run(settings, "dims", "a2")[1] == "0:1 [1 0]\n0:2 [1 1]\n1:1 [0 1]\n"
    data = json.loads(run(settings, "dims", "b2", "--slices", "1", "--json")[1])
    assert data["vertices"] == [{"vertex": {"r": 0, "i": 1}, "dims": []}, {"vertex": {"r": 0, "i": 2}, "dims": []}]
    assert run(settings, "ar-dot", "exweyl", "--slices", "2")[1].startswith("digraph preinjective {")


def test_oracle_check(settings):
    code, out, _ = run(settings, "oracle-check", "a2")
    assert code == EXIT_OK
    assert "disagreements: 0" in out
    assert run(settings, "oracle-check", "exweyl")[0] == EXIT_INPUT


def test_prefix(settings):
    assert run(settings, "prefix", "exweyl", "--word", "2 3 2")[:2] == (EXIT_OK, "true\n")
    assert run(settings, "prefix", "exweyl", "--word", "3 2 3")[:2] == (EXIT_FALSE, "false\n")


def test_restrict(settings):
    code, out, _ = run(settings, "restrict", "exweyl", "--excluded", "0:3,1:1", "--subset", "1,3")
    assert code == EXIT_OK
    assert out == "restricted to exweyl|1,3 (n=2, quiver): C excludes {(0,2), (1,1)}\nclosed: true -> true\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("rho", "d4", "--word", "1"),
        ("rho", "exweyl", "--word", "5"),
        ("embed", "exweyl", "--m", "1-3", "--u", "0:1"),
        ("embed", "a3", "--m", "1:3", "--u", "0:1"),
        ("restrict", "exweyl", "--excluded", "0:2", "--subset", "1,3"),
    ],
)
def test_input_errors(settings, argv):
    code, out, err = run(settings, *argv)
    assert code == EXIT_INPUT
    assert out == ""
    assert err.startswith("weylmod: error: ")


def test_input_error_json(settings):
    code, out, _ = run(settings, "rho", "exweyl", "--word", "5", "--json")
    assert code == EXIT_INPUT
    assert json.loads(out)["kind"] == "WordError"


def test_resource_limit(settings):
    settings.bfs_node_cap = 1
    code, _, err = run(settings, "leftmost", "exweyl", "--word", "3 2 3")
    assert code == EXIT_RESOURCE
    assert "exceeded the configured limit of 1" in err


def test_usage_errors():
    assert dispatch([]) == 2
    assert dispatch(["frobnicate", "a2"]) == 2


def _tokens(module):
    return ",".join(vertex.token() for vertex in module.elements())


def test_embed_json_agrees_with_the_text_output(settings, exweyl):
    rng = random.Random(31)
    vertices = exweyl.quiver.existing_vertices(2)
    modules = gen_module(rng, vertices, gen_range(rng, 1, 2))
    targets = gen_module(rng, vertices, gen_range(rng, 1, 5))

    def agrees(instance):
        argv = ["embed", "exweyl", "--m", _tokens(instance[0]), "--u", _tokens(instance[1])]
        code, out, _ = run(settings, *argv)
        json_code, json_out, _ = run(settings, *argv, "--json")
        data = json.loads(json_out)
        verdict = "embeds" if code == EXIT_OK else "no_embed"
        return code == json_code and data["verdict"] == verdict and out.rstrip("\n") == data["summary"]

    assert check(agrees, lambda: (modules(), targets()), 100) == []
