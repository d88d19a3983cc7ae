import json
from pathlib import Path

import jsonschema
import pytest

from algebra.modules import Functor
from analysis.classify import real_basic_class
from main import main
from utils.settings import SEED_VARIABLE

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def validate(doc, name):
    schema = json.loads((SCHEMAS / f"{name}.json").read_text(encoding="utf-8"))
    jsonschema.validate(doc, schema)


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_classify_with_null_generators(capsys):
    code, doc = run_json(capsys, "classify", "--field", "real", "-p", "3", "-q", "5", "-r", "2")
    assert code == 0
    assert doc["class"] == "D-^2 ⊗ Λ(2)"
    assert doc["grothendieck"].startswith("out of scope")
    validate(doc, "classify")


def test_classify_periodicity(capsys):
    code, doc = run_json(capsys, "classify", "-p", "8")
    assert code == 0
    assert doc["class"] == "R"
    assert doc["v"] == 2
    assert doc["group"] == "ℤ⊕ℤ"
    assert doc["realized_dim"] == 1
    validate(doc, "classify")


def test_classify_complex(capsys):
    code, doc = run_json(capsys, "classify", "--field", "complex", "-p", "3")
    assert code == 0
    assert doc["class"] == "D"
    assert doc["v"] == 1
    assert doc["irr"] == ["M"]
    validate(doc, "classify")


def test_classify_pi_negates_the_residue(capsys):
    _, sigma = run_json(capsys, "classify", "-p", "1")
    _, pi = run_json(capsys, "classify", "-p", "1", "--functor", "pi")
    assert sigma["class"] == "D+"
    assert pi["class"] == "D-"
    assert pi["v"] == sigma["v"] == 1


@pytest.mark.parametrize("p", range(8))
def test_classify_reports_the_functor_class(capsys, p):
    code, doc = run_json(capsys, "classify", "-p", str(p), "--functor", "pi")
    assert code == 0
    assert doc["class"] == real_basic_class(p, 0, 0, Functor.PI).name
    assert doc["k_rank"] == doc["v"]
    validate(doc, "classify")


def test_classify_oracle_agrees(capsys):
    code, doc = run_json(capsys, "classify", "-p", "1", "-q", "1", "--oracle", "--trials", "60")
    assert code == 0
    assert doc["oracle_agrees"] is True
    assert doc["oracle_class"] == doc["class"] == "R"
    validate(doc, "classify")


def test_classify_text_output(capsys):
    assert main(["classify", "-p", "4"]) == 0
    out = capsys.readouterr().out
    assert any(line.split() == ["class", "H"] for line in out.splitlines())


def test_complex_rejects_r(capsys):
    assert main(["classify", "--field", "complex", "-p", "1", "-r", "1"]) == 2
    assert "Error:" in capsys.readouterr().err


def test_calc(capsys):
    assert main(["calc", "--field", "real", "-p", "2", "e1*e2*e1*e2"]) == 0
    assert capsys.readouterr().out.strip() == "-1"


def test_calc_document(capsys):
    code, doc = run_json(capsys, "calc", "-p", "2", "(e1*e2+1)*(e1*e2-1)")
    assert code == 0
    assert doc["value"] == "-2"
    assert doc["parity"] == 0
    assert doc["signature"] == "R(2,0,0)"
    validate(doc, "calc")


def test_calc_inhomogeneous_parity_is_null(capsys):
    _, doc = run_json(capsys, "calc", "-p", "1", "1 + e1")
    assert doc["parity"] is None
    validate(doc, "calc")


def test_calc_parse_error_points_at_position(capsys):
    assert main(["calc", "-p", "2", "e1 $ e2"]) == 1
    err = capsys.readouterr().err
    assert "  e1 $ e2\n     ^" in err
    assert "position 3" in err


def test_calc_generator_out_of_range(capsys):
    assert main(["calc", "-p", "2", "e3"]) == 1
    assert "e3" in capsys.readouterr().err


@pytest.mark.parametrize("kind", ["real-basic", "real-k", "complex-basic", "complex-k"])
def test_table_documents(capsys, kind):
    code, doc = run_json(capsys, "table", kind)
    assert code == 0
    assert doc["table"] == kind
    validate(doc, "table")


def test_table_text(capsys):
    assert main(["table", "real-k"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["residue", "irr", "v", "k_rank", "group"]
    assert len(lines) == 10


def test_unknown_table(capsys):
    assert main(["table", "octonions"]) == 2
    assert "unknown table" in capsys.readouterr().err


def test_unknown_check(capsys):
    assert main(["verify", "--check", "bogus"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_unknown_command():
    with pytest.raises(SystemExit) as exit_info:
        main(["frobnicate"])
    assert exit_info.value.code == 2


def test_bad_seed_variable(monkeypatch, capsys):
    monkeypatch.setenv(SEED_VARIABLE, "seven")
    assert main(["table", "real-k"]) == 2
    assert SEED_VARIABLE in capsys.readouterr().err


def test_verify_text(capsys):
    assert main(["verify", "--check", "tables"]) == 0
    captured = capsys.readouterr()
    assert "✅ tables: pass" in captured.out
    assert "Verification complete:" in captured.err
    assert "Passed: 1/1" in captured.err


def test_verify_document(capsys):
    code, doc = run_json(capsys, "verify", "--check", "tables", "--check", "dd", "--seed", "3")
    assert code == 0
    assert [r["name"] for r in doc["reports"]] == ["dd", "tables"]
    assert doc["seed"] == 3
    validate(doc, "verify")


def test_verify_csv(capsys):
    assert main(["verify", "--check", "tables", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "name,status,seconds"
    assert lines[1].startswith("tables,pass,")


def test_output_folder(tmp_path, capsys):
    assert main(["classify", "-p", "8", "-o", str(tmp_path)]) == 0
    path = tmp_path / "classify-real-8-0-0-sigma.json"
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["class"] == "R"
    validate(doc, "classify")

    assert main(["table", "complex-k", "-o", str(tmp_path)]) == 0
    assert (tmp_path / "table-complex-k.json").exists()


def test_output_folder_keeps_existing_report(tmp_path, capsys):
    path = tmp_path / "calc-R(1,0,0).json"
    path.write_text("{}", encoding="utf-8")
    assert main(["calc", "-p", "1", "e1", "-o", str(tmp_path)]) == 0
    assert path.read_text(encoding="utf-8") == "{}"
    assert main(["calc", "-p", "1", "e1", "-o", str(tmp_path), "--overwrite"]) == 0
    assert json.loads(path.read_text(encoding="utf-8"))["value"] == "e1"
