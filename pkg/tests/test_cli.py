import io
import json
import subprocess
import sys

import pytest

from hilbaut.cli import SUBCOMMANDS, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_lefschetz_text():
    assert call("lefschetz", "--preset", "k3-symplectic-3", "--n", "2")[:2] == (0, "27\n")


def test_aut_dim_text():
    assert call("aut-dim", "--preset", "torus-identity", "--n", "5")[:2] == (0, "2\n")


def test_fixed_points_json():
    code, out, _ = call("fixed-points", "--preset", "torus-involution", "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"request", "results", "provenance", "warnings"}
    isolated = [c for c in doc["results"]["components"] if c["dimension"] == 0 and c["degenerate"] is False]
    assert len(isolated) == 120
    assert doc["results"]["crosscheck"]["status"] == "agree"


def test_discrepancy_flagged_not_failed():
    code, out, err = call("fixed-points", "--preset", "k3-symplectic-5", "--n", "3")
    assert code == 0
    assert "36" in out and "DISCREPANCY" in out
    assert "36" in err


def _preset_args(name):
    return {"lefschetz": [], "trace-series": ["--max-weight", "2"], "poincare": ["--n", "2"],
            "hodge": ["--n", "2"], "aut-dim": [], "conjecture": ["--n", "2"],
            "fixed-points": ["--n", "2"], "spectrum": ["--n", "1"], "entropy": ["--n", "2"]}[name]


@pytest.mark.parametrize("command", SUBCOMMANDS)
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_deterministic(command, fmt):
    args = [command, "--preset", "k3-symplectic-3", "--format", fmt] + _preset_args(command)
    a, b = call(*args), call(*args)
    assert a[0] == 0 and a == b


@pytest.mark.parametrize("command", SUBCOMMANDS)
def test_json_round_trip(command, tmp_path):
    args = [command, "--format", "json"] + _preset_args(command)
    code, out, _ = call(*args[:1], "--preset", "torus-involution", *args[1:])
    assert code == 0
    path = tmp_path / "out.json"
    path.write_text(out)
    code2, out2, _ = call(*args[:1], "--input", str(path), *args[1:])
    assert code2 == 0
    assert json.loads(out)["results"] == json.loads(out2)["results"]
    assert json.loads(out)["request"]["input"] == json.loads(out2)["request"]["input"]


def test_json_embeds_options():
    _, out, _ = call("trace-series", "--preset", "k3-identity", "--max-weight", "2",
                     "--degree-mode", "paper-literal", "--format", "json")
    doc = json.loads(out)
    assert doc["request"]["options"]["degree_mode"] == "paper-literal"
    assert any("degree modes" in w for w in doc["warnings"])


def test_cyclotomic_rendering():
    _, out, _ = call("spectrum", "--preset", "k3-symplectic-3", "--n", "1", "--format", "json")
    entries = json.loads(out)["results"]["eigenvalues"]
    nonreal = [e["eigenvalue"] for e in entries if isinstance(e["eigenvalue"], dict)]
    assert nonreal and all("exact" in v and "approx" in v for v in nonreal)


def test_evaluate_t():
    _, out, _ = call("trace-series", "--preset", "k3-symplectic-5", "--max-weight", "3", "--evaluate-t", "-1")
    assert out.splitlines() == ["q^0: 1", "q^1: 4", "q^2: 14", "q^3: 40"]


def test_exit_codes(tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{")
    code, _, err = call("lefschetz", "--input", str(bad_json))
    assert code == 2 and "input" in err
    missing = call("lefschetz", "--input", str(tmp_path / "missing.json"))
    assert missing[0] == 2
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"surface": {"betti": [1, 0, 22, 0, 1]},
                                   "automorphism": {"order": 2, "spectrum": {"0": [[0, 1]], "2": [[1, 3]] * 23, "4": [[0, 1]]}}}))
    code, _, err = call("lefschetz", "--input", str(invalid))
    assert code == 3 and "H^2" in err
    assert call("fixed-points", "--preset", "k3-symplectic-3", "--n", "9")[0] == 4
    assert call("lefschetz", "--preset", "no-such-preset")[0] == 2
    assert call("lefschetz", "--preset", "k3-identity", "--n", "-1")[0] == 2


def test_bad_field_named(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({"surface": {"betti": [1, 0, 1, 0, 1]},
                               "automorphism": {"order": 3, "spectrum": {"2": ["x"]}}}))
    code, _, err = call("lefschetz", "--input", str(doc))
    assert code == 2 and "automorphism.spectrum.2[0]" in err


def test_csv_fixed_points():
    _, out, _ = call("fixed-points", "--preset", "k3-symplectic-3", "--n", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("kind,description,length,dimension")
    assert len(lines) == 1 + 27


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hilbaut.cli", "lefschetz", "--preset", "k3-symplectic-7"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "9\n"
