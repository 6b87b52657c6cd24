import importlib.util
import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from pydantic import ValidationError

from src.main import run
from src.schemas.job import Command, JobSpec
from src.utils.labels import format_profile, parse_int_rows, parse_profile

SCRIPT = Path(__file__).resolve().parent.parent / "scripts" / "ccseq.py"


@pytest.fixture(scope="module")
def cli():
    spec = importlib.util.spec_from_file_location("ccseq_script", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module.cli


# ---------- run() ---------- #

def test_gen_igc_mixed_profile(tmp_path):
    out = tmp_path / "igc.json"
    assert run({"command": "gen-igc", "profile": [(2, 2), (3, 2)], "out": out}) == 0

    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["lambda"] == 6
    assert len(doc["phases"]) == 36
    report = json.loads((tmp_path / "igc_report.json").read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["peak"] == pytest.approx(216)
    assert report["violation_count"] == 0


def test_gen_zcacs_single_pair_profile(tmp_path):
    out = tmp_path / "zcacs.json"
    assert run({"command": "gen-zcacs", "profile": [(2, 2)], "m": 2, "out": out}) == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["lambda"] == 2
    assert len(doc["phases"]) == 1
    assert len(doc["phases"][0]) == 2
    assert len(doc["phases"][0][0]) == 4 and len(doc["phases"][0][0][0]) == 8


def test_gen_gcp_and_zcac(tmp_path):
    assert run({"command": "gen-gcp", "m": 3, "lambda": 4, "seed": 2, "out": tmp_path / "gcp.json"}) == 0
    assert run({"command": "gen-zcac", "profile": [(3, 2)], "m": 1, "out": tmp_path / "zcac.json"}) == 0
    report = json.loads((tmp_path / "zcac_report.json").read_text(encoding="utf-8"))
    assert report["params"] == {"M": 3, "L1": 2, "L2": 18, "Z1": 2, "Z2": 3}


def test_verify_tampered_file(tmp_path):
    out = tmp_path / "igc.json"
    assert run({"command": "gen-igc", "profile": [(2, 2)], "out": out, "verify": False}) == 0
    assert not (tmp_path / "igc_report.json").exists()

    doc = json.loads(out.read_text(encoding="utf-8"))
    doc["phases"][0][0][0] = 1 - doc["phases"][0][0][0]
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(doc), encoding="utf-8")

    assert run({"command": "verify", "input": tampered}) == 1
    report = json.loads((tmp_path / "tampered_report.json").read_text(encoding="utf-8"))
    assert report["violations"]
    assert run({"command": "verify", "input": out}) == 0


def test_invalid_parameters_write_nothing(tmp_path):
    assert run({"command": "gen-igc", "profile": [(4, 2)], "out": tmp_path / "x.json"}) == 2
    assert run({"command": "gen-zcac", "profile": [(2, 2)], "m": 2, "lambda": 3, "out": tmp_path / "x.json"}) == 2
    assert run({"command": "gen-igc", "profile": [(3, 2)], "lambda": 4, "out": tmp_path / "x.json"}) == 2
    assert run({"command": "gen-igc", "out": tmp_path / "x.json"}) == 2
    assert list(tmp_path.iterdir()) == []


def test_io_errors(tmp_path):
    assert run({"command": "verify", "input": tmp_path / "missing.json"}) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert run({"command": "verify", "input": bad}) == 3


@pytest.mark.parametrize("command, extra", [("gen-igc", {}), ("gen-zcacs", {"m": 2})])
def test_inconsistent_document_is_a_format_error(tmp_path, command, extra):
    data = tmp_path / "set.json"
    assert run({"command": command, "profile": [(2, 2)], "out": data, "verify": False, **extra}) == 0
    doc = json.loads(data.read_text(encoding="utf-8"))
    if command == "gen-igc":
        doc["phases"][1] = doc["phases"][1][:1]
    else:
        doc["phases"][0][1] = doc["phases"][0][1][:2]
    data.write_text(json.dumps(doc), encoding="utf-8")

    assert run({"command": "verify", "input": data}) == 3
    assert not (tmp_path / "set_report.json").exists()
    job = {"command": "export-grid", "input": data, "format": "csv", "set_a": 0, "set_b": 1, "out": tmp_path / "g.csv"}
    if command == "gen-igc":
        assert run(job) == 3
        assert not (tmp_path / "g.csv").exists()


def test_zone_override_beyond_length_is_invalid(tmp_path):
    out = tmp_path / "igc.json"
    run({"command": "gen-igc", "profile": [(2, 2)], "out": out, "verify": False})
    assert run({"command": "verify", "input": out, "z": 9}) == 2
    assert run({"command": "verify", "input": out, "z": 3}) == 1


def test_generation_is_deterministic(tmp_path):
    for name in ("a", "b"):
        job = {"command": "gen-zcacs", "profile": [(2, 2)], "m": 2, "seed": 4, "out": tmp_path / f"{name}.json"}
        assert run(job) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert (tmp_path / "a_report.json").read_bytes() == (tmp_path / "b_report.json").read_bytes()


def test_export_grid(tmp_path):
    data = tmp_path / "zcac.json"
    run({"command": "gen-zcac", "profile": [(2, 2)], "m": 2, "out": data, "verify": False})
    grid = tmp_path / "grid.csv"
    assert run({"command": "export-grid", "input": data, "format": "csv", "out": grid}) == 0
    assert grid.read_text(encoding="utf-8").splitlines()[0] == "tau1,tau2,re,im,abs"
    assert run({"command": "export-grid", "input": data, "format": "csv", "set_a": 3, "out": grid}) == 2


# ---------- JobSpec ---------- #

def test_jobspec_requirements():
    with pytest.raises(ValidationError):
        JobSpec(command=Command.GEN_ZCAC, profile=[(2, 2)])
    with pytest.raises(ValidationError):
        JobSpec(command="verify")
    with pytest.raises(ValidationError):
        JobSpec(command="gen-igc", profile=[(2, 2)], lambda_strategy="greedy")
    job = JobSpec.model_validate({"command": "gen-igc", "profile": [[2, 2]], "lambda": 4})
    assert job.lam == 4 and job.profile == [(2, 2)]


def test_profile_syntax():
    assert parse_profile("2^2, 3^2") == [(2, 2), (3, 2)]
    assert format_profile([(2, 2), (3, 2)]) == "2^2,3^2"
    assert parse_int_rows("1,2;1") == [[1, 2], [1]]
    with pytest.raises(ValueError):
        parse_profile("2-2")


# ---------- click ---------- #

def test_cli_gen_igc(cli, tmp_path):
    out = tmp_path / "igc.json"
    result = CliRunner().invoke(cli, ["gen-igc", "--profile", "2^2", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert out.exists() and (tmp_path / "igc_report.json").exists()


def test_cli_gen_zcacs_then_verify(cli, tmp_path):
    out = tmp_path / "zcacs.json"
    runner = CliRunner()
    result = runner.invoke(cli, ["gen-zcacs", "--profile", "2^2", "--m", "2", "--out", str(out), "--no-verify"])
    assert result.exit_code == 0, result.output
    result = runner.invoke(cli, ["verify", "--in", str(out)])
    assert result.exit_code == 0, result.output


def test_cli_rejects_bad_profile(cli, tmp_path):
    result = CliRunner().invoke(cli, ["gen-igc", "--profile", "2-2", "--out", str(tmp_path / "x.json")])
    assert result.exit_code == 2
    assert not (tmp_path / "x.json").exists()


def test_cli_overrides(cli, tmp_path):
    out = tmp_path / "igc.json"
    args = ["gen-igc", "--profile", "3^3", "--perms", "2,1", "--lin", "1,2", "--consts", "1", "--out", str(out)]
    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 0, result.output
