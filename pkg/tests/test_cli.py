import io
import json

from qpoincare.suite.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_list():
    code, text = run("list")
    assert code == 0
    assert "qybe" in text and "completeness-scan" in text


def test_run_passes(tmp_path):
    path = tmp_path / "report.json"
    code, text = run("run", "qybe", "classical-ybe", "--json", str(path))
    assert code == 0
    assert "2/2 checks passed" in text
    doc = json.loads(path.read_text())
    assert doc["summary"]["allPassed"]
    assert [c["name"] for c in doc["checks"]] == ["qybe", "classical-ybe"]


def test_sampled_run():
    code, text = run("run", "gamma-inverse", "--mode", "sampled", "--samples", "4", "--seed", "3")
    assert code == 0
    assert "sampled" in text


def test_failing_check_exits_one():
    code, text = run("limits", "omega-limit")
    assert code == 1
    assert "witness" in text


def test_unknown_names_exit_two(capsys):
    assert run("run", "nope")[0] == 2
    assert run("limits", "nope")[0] == 2
    assert "unknown" in capsys.readouterr().err


def test_nf():
    code, text = run("nf", "G11*G22 - q^2*G21*G12 - 1")
    assert (code, text.strip()) == (0, "0")
    code, text = run("nf", "G11*G22 - q^2*G21*G12", "--no-unimodularity")
    assert code == 0 and text.strip() != "1"
    assert run("nf", "(P12)†")[1].strip() == "P21"


def test_nf_parse_error_exits_two(capsys):
    assert run("nf", "P11 +* P12")[0] == 2
    assert "position 5" in capsys.readouterr().err


def test_nf_cap_exits_three():
    assert run("nf", "P11*P12*P21*P22", "--step-cap", "2")[0] == 3


def test_dump_relations(tmp_path):
    code, text = run("dump-relations")
    assert code == 0
    assert len(json.loads(text)["relations"]) == 81
    path = tmp_path / "rels.json"
    run("dump-relations", "--with-T", "--json", str(path))
    assert len(json.loads(path.read_text())["relations"]) == 225
