import json
from importlib import resources

import jsonschema

from ghostkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(payload, schema_name):
    schema = json.loads(
        resources.files("ghostkit.schemas").joinpath(schema_name).read_text())
    jsonschema.validate(payload, schema)


def test_fuse_text(capsys):
    code, out, _ = run(capsys, "fuse", "W[1/3,0]", "W[2/3,0]")
    assert code == 0
    assert out.strip() == "P[-1]"


def test_fuse_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "fuse", "B[3,0]", "B[3,0]")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "fuse.schema.json")
    assert payload["guard_extended"] is False
    assert {"module": "B[5,0]", "mult": 1} in payload["summands"]


def test_fuse_guard_flag_and_strict(capsys):
    code, out, _ = run(capsys, "--format", "json", "fuse", "B[3,0]", "B[4,0]")
    assert code == 0
    assert json.loads(out)["guard_extended"] is True
    code, out, err = run(capsys, "fuse", "B[3,0]", "B[4,0]", "--strict-guards")
    assert code == 1
    assert "guard" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "fuse", "W[0/1,2]", "V[0]")
    assert code == 1
    assert "error" in err


def test_global_flags_accepted_after_subcommand(capsys):
    code, out, _ = run(capsys, "hom", "V[0]", "V[0]", "--format", "json")
    assert code == 0
    assert json.loads(out)["dim"] == 1
    code, out, _ = run(capsys, "char", "V[0]", "--hmax", "0",
                       "--jwindow", "0:0", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == ["j,h,dim", "0,0,1"]


def test_hom_and_ext(capsys):
    code, out, _ = run(capsys, "hom", "P[0]", "P[0]")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "--format", "json", "ext", "V[0]", "V[1]")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "dim.schema.json")
    assert payload["dim"] == 1


def test_char_json_and_csv(capsys):
    code, out, _ = run(capsys, "--format", "json", "char", "V[0]",
                       "--hmax", "2", "--jwindow=-2:2")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "char.schema.json")
    entries = {(e["j"], e["h"]): e["dim"] for e in payload["entries"]}
    assert entries[("0", "0")] == 1
    assert entries[("1", "1")] == 1

    code, out, _ = run(capsys, "--format", "csv", "char", "V[0]",
                       "--hmax", "1", "--jwindow", "0:1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "j,h,dim"
    assert "0,0,1" in lines


def test_loewy_text_and_json(capsys):
    code, out, _ = run(capsys, "loewy", "T[5,0]")
    assert code == 0
    top_line = out.splitlines()[0]
    for label in ("V[0]", "V[2]", "V[4]"):
        assert label in top_line
    assert "V[1]" not in top_line

    code, out, _ = run(capsys, "--format", "json", "loewy", "P[0]")
    payload = json.loads(out)
    validate(payload, "loewy.schema.json")
    assert payload["diamond"] is True

    code, out, _ = run(capsys, "loewy", "P[0]")
    assert code == 0
    assert out.splitlines()[0].strip() == "V[0]"


def test_dual_variants(capsys):
    code, out, _ = run(capsys, "dual", "B[4,1]")
    assert code == 0 and out.strip() == "T[4,1]"
    code, out, _ = run(capsys, "dual", "B[4,1]", "--functor", "restricted")
    assert out.strip() == "B[4,-5]"
    code, out, _ = run(capsys, "dual", "V[0]", "--functor", "conjugate")
    assert out.strip() == "V[-1]"
    code, out, _ = run(capsys, "--format", "json", "dual", "V[2]",
                       "--functor", "flow", "--ell", "-2")
    payload = json.loads(out)
    validate(payload, "functor.schema.json")
    assert payload["result"] == "V[0]"


def test_cover_and_hull(capsys):
    code, out, _ = run(capsys, "cover", "B[3,0]")
    assert code == 0 and out.strip() == "P[1]"
    code, out, _ = run(capsys, "--format", "json", "hull", "B[3,0]")
    payload = json.loads(out)
    validate(payload, "presentation.schema.json")
    assert payload["result"] == "P[0] + P[2]"


def test_rigidity_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "rigidity",
                       "--j", "0.3", "--w1", "1.0")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "rigidity.schema.json")
    assert payload["identities_pass"] is True
    assert payload["I_abs"] > 1e-8


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "catalog", "--bound", "2")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "catalog.schema.json")
    names = {s["name"] for s in payload["sequences"]}
    assert "staggered sub" in names


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify",
                       "--suite", "numerics")
    assert code == 0
    payload = json.loads(out)
    validate(payload, "verify.schema.json")
    assert payload["passed"] is True


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "numerics")
    assert code == 0
    assert "suite numerics: PASS" in out


def test_config_file_changes_defaults(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "ghostkit.cfg"
    cfg.write_text("hmax = 1\njwindow = 0:1\n# comment\nstrict_guards = on\n")
    code, out, _ = run(capsys, "--config", str(cfg), "--format", "json",
                       "char", "V[0]")
    assert code == 0
    payload = json.loads(out)
    assert payload["hmax"] == "1"
    assert payload["jwindow"] == ["0", "1"]
    # strict_guards from the file makes guard-extended fusion fail
    code, _, err = run(capsys, "--config", str(cfg), "fuse", "B[3,0]", "B[4,0]")
    assert code == 1

    monkeypatch.setenv("GHOSTKIT_CONFIG", str(cfg))
    code, out, _ = run(capsys, "--format", "json", "char", "V[0]")
    assert json.loads(out)["hmax"] == "1"


def test_bad_config_exit_code(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense\n")
    code, _, err = run(capsys, "--config", str(cfg), "hom", "V[0]", "V[0]")
    assert code == 1
    assert "config error" in err
