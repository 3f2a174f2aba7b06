import json
import subprocess
import sys

import pytest

from latkit.cli import main, structure, verify
from latkit.errors import ParseError
from latkit.inputs import corpus_names, load_corpus, load_input, parse_input


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_corpus_contents():
    assert corpus_names() == sorted(["a1", "a2", "a3", "d4", "e8", "hyperbolic", "two_a1", "isotropic_line",
                                     "odd", "non_coisotropic"])


def test_info_a1(capsys):
    rc, out, _ = run(capsys, "info", "corpus:a1")
    rep = json.loads(out)
    assert rc == 0
    assert rep["admissible"] is True
    assert rep["lattice"]["discriminant"]["order"] == 2
    assert rep["grading_group"]["finite"] is True
    assert rep["lattice"]["simples"]["representatives"] == [["0"], ["1/2"]]


def test_info_odd(capsys):
    rc, out, _ = run(capsys, "info", "corpus:odd")
    rep = json.loads(out)
    assert rc == 0 and rep["admissible"] is False and rep["reason"] == "odd diagonal"


def test_info_isotropic_line(capsys):
    rep = json.loads(run(capsys, "info", "corpus:isotropic_line")[1])
    assert rep["coisotropic"] is True
    assert rep["grading_group"] == {"invariant_factors": [], "free_rank": 1, "finite": False}
    assert rep["residual_metric"]["dim"] == 0


def test_info_non_coisotropic(capsys):
    rep = json.loads(run(capsys, "info", "corpus:non_coisotropic")[1])
    assert rep["coisotropic"] is False and rep["admissible"] is False


def test_verify_a2_passes(capsys, tmp_path):
    out_file = tmp_path / "a2.json"
    rc, out, _ = run(capsys, "verify", "corpus:a2", "--out", str(out_file))
    assert rc == 0 and out == ""
    rep = json.loads(out_file.read_text())
    assert rep["passed"] is True
    assert set(rep["suites"]) == {"algebra", "locmod", "discat"}
    assert [r["q"] for r in rep["q_table"]["rows"]] == ["0", "2/3", "2/3"]
    assert rep["reduced"]["associator"] == "theta_xy"


def test_verify_mutation_exits_1_with_witness(capsys):
    rc, out, _ = run(capsys, "verify", "corpus:a2", "--mutate-alpha", "1")
    rep = json.loads(out)
    assert rc == 1 and rep["passed"] is False
    assert rep["mutation"]["seed"] == 1
    failed = [r for s in rep["suites"].values() if isinstance(s, list) for r in s if not r["passed"]]
    assert failed and all(r["witnesses"] for r in failed if r.get("n_failures"))


def test_verify_e8_note(capsys):
    rc, out, _ = run(capsys, "verify", "corpus:e8")
    rep = json.loads(out)
    assert rc == 0 and rep["passed"]
    assert rep["lattice"]["note"] == "1 simple local module"
    assert rep["q_table"]["rows"] == [{"element": [], "lift": ["0"] * 8, "ambient": ["0"] * 8, "q": "0"}]


def test_verify_isotropic_line_runs_algebra_only(capsys):
    rc, out, _ = run(capsys, "verify", "corpus:isotropic_line", "--window", "2")
    rep = json.loads(out)
    assert rc == 0 and "skipped" in rep["suites"]
    assert rep["suites"]["algebra"][0]["window"]["size"] == 5


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "verify", "corpus:odd")[0] == 2
    assert run(capsys, "verify", "corpus:missing")[0] == 2
    assert run(capsys, "qtable", "corpus:isotropic_line")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "info", str(bad))
    assert rc == 2 and "ParseError" in err
    assert run(capsys, "info", str(tmp_path / "absent.json"))[0] == 2


def test_qtable_formats(capsys):
    rc, out, _ = run(capsys, "qtable", "corpus:a1")
    t = json.loads(out)
    assert rc == 0
    assert [(r["element"], r["q"]) for r in t["rows"]] == [([0], "0"), ([1], "1/2")]
    assert t["b"] == [["0", "0"], ["0", "1"]]
    rc, out, _ = run(capsys, "qtable", "corpus:a2", "--format", "md")
    assert rc == 0 and out.startswith("| element")
    assert [line.split("|")[3].strip() for line in out.splitlines()[2:]] == ["0", "2/3", "2/3"]
    rows = json.loads(run(capsys, "qtable", "corpus:e8")[1])["rows"]
    assert len(rows) == 1 and rows[0]["q"] == "0"


def test_assoc(capsys):
    rc, out, _ = run(capsys, "assoc", "corpus:a3")
    t = json.loads(out)
    assert rc == 0 and t["invariant_factors"] == [4]
    assert [row[i] for i, row in enumerate(t["c"])] == ["0", "3/4", "1", "3/4"]
    assert all(len(e["args"]) == 3 for e in t["a_nontrivial"])


def test_assoc_respects_cap(capsys, monkeypatch):
    monkeypatch.setenv("LATKIT_CAP", "2")
    assert run(capsys, "assoc", "corpus:a2")[0] == 2
    rc, out, _ = run(capsys, "verify", "corpus:a2")
    assert rc == 0 and "discat_skipped" in json.loads(out)["suites"]


def test_markdown_verify(capsys):
    rc, out, _ = run(capsys, "verify", "corpus:a1", "--format", "md")
    assert rc == 0 and out.startswith("# latkit verify: A1")
    assert "| algebra | commutativity | pass |" in out
    rc, out, _ = run(capsys, "verify", "corpus:a1", "--format", "md", "--mutate-alpha", "0")
    assert rc == 1 and "## witnesses" in out


def test_toml_and_json_inputs(tmp_path, capsys):
    toml = tmp_path / "a2.toml"
    toml.write_text('name = "A2 toml"\ngram = [[2, -1], [-1, 2]]\nseed = 4\n')
    spec = load_input(toml)
    assert spec.name == "A2 toml" and spec.seed == 4
    amb = tmp_path / "line.toml"
    amb.write_text('[ambient]\ngram = [[0, 1], [1, 0]]\ngenerators = [[1, 0]]\n')
    assert load_input(amb).ambient and load_input(amb).name == "line"
    frac = tmp_path / "frac.json"
    frac.write_text(json.dumps({"ambient": {"gram": [["1/2", 0], [0, 2]], "generators": [[2, 0]]}}))
    rep = json.loads(run(capsys, "info", str(frac))[1])
    assert rep["admissible"] is True and rep["grading_group"]["invariant_factors"] == [2]
    assert "lattice" not in rep


@pytest.mark.parametrize("data", [
    {"gram": [[1.5]]},
    {"gram": [[2, 0]]},
    {"gram": [[2]], "ambient": {"gram": [[2]], "generators": [[1]]}},
    {},
    {"gram": [[2]], "extra": 1},
    {"gram": [[2]], "window": -1},
    {"gram": [[2]], "seed": True},
    {"ambient": {"gram": [[2]]}},
    {"ambient": {"gram": [[2, 0], [0, 2]], "generators": [[1]]}},
    {"gram": [[2, 1], [1], [0]]},
    {"gram": [[True]]},
    "not a table",
])
def test_parse_errors(data):
    with pytest.raises(ParseError):
        parse_input(data)


def test_input_echo_round_trips():
    for name in corpus_names():
        spec = load_corpus(name)
        again = parse_input(spec.to_dict())
        assert again == spec


def test_structure_reports_input_echo():
    spec = load_corpus("two_a1")
    assert structure(spec)["input"] == {"name": "2A1", "gram": [["4"]]}


def test_seeded_runs_are_identical(capsys):
    first = run(capsys, "verify", "corpus:d4", "--seed", "7")[1]
    second = run(capsys, "verify", "corpus:d4", "--seed", "7")[1]
    assert first == second
    assert json.loads(first)["seed"] == 7


def test_verify_function_seed_from_input(tmp_path):
    f = tmp_path / "seeded.json"
    f.write_text(json.dumps({"gram": [[2]], "seed": 9, "window": 1}))
    rep = verify(load_input(f))
    assert rep["seed"] == 9
    assert rep["suites"]["algebra"][0]["window"]["radius"] == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "latkit.cli", "qtable", "corpus:a1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["rows"][1]["q"] == "1/2"
    proc = subprocess.run([sys.executable, "-m", "latkit.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "latkit" in proc.stdout
