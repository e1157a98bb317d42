import json
from importlib import resources

import pytest

from harmspec.cli import main
from harmspec.graphs import decode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(payload: dict, schema_name: str):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        resources.files("harmspec").joinpath("schemas", f"{schema_name}.schema.json").read_text()
    )
    jsonschema.validate(payload, schema)


class TestGen:
    def test_friendship(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "friendship", "--n", "3")
        assert code == 0
        g = decode_graph6(out.strip())
        assert g.n == 7

    def test_json(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "petersen", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "gen")
        assert decode_graph6(payload["graph6"]).n == 10


class TestMatrix:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "matrix", "--family", "path", "--n", "3")
        assert code == 0
        assert "2/3" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "matrix", "--family", "complete", "--n", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "matrix")
        assert payload["entries"][0][1] == {"num": 1, "den": 3}


class TestIndex:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "index", "--family", "path", "--n", "3")
        assert code == 0
        assert out.strip() == "4/3"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "index", "--family", "complete", "--n", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "index")
        assert payload["harmonic_index"] == {"num": 5, "den": 2}


class TestCharpoly:
    def test_text_includes_factored(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--family", "complete", "--n", "3")
        assert code == 0
        assert "(λ - 1)(λ + 1/2)^2" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "charpoly", "--family", "petersen", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "charpoly")
        assert payload["degree"] == 10


class TestEnergy:
    def test_petersen_text(self, capsys):
        code, out, _ = run(capsys, "energy", "--family", "petersen")
        assert code == 0
        assert "HE = 5.3333333" in out

    def test_decimals(self, capsys):
        code, out, _ = run(capsys, "energy", "--family", "petersen", "--decimals", "3")
        assert code == 0
        assert "HE = 5.333" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "energy", "--family", "star", "--n", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "energy")
        assert payload["method"] == "jacobi"

    def test_from_file_multiple(self, capsys, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("D?{\nC~\n")
        code, out, _ = run(capsys, "energy", "--from-file", str(path), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "energy")
        assert len(payload["results"]) == 2


class TestCensus:
    def test_csv(self, capsys):
        code, out, _ = run(
            capsys, "census", "--n", "6", "--degree", "3", "--format", "csv", "--quiet"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "index,graph6,connected,he,spectrum"
        assert len(lines) == 3

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "census", "--n", "6", "--degree", "3", "--format", "json", "--quiet"
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, "census")
        assert len(payload["records"]) == 2

    def test_quiet_suppresses_progress(self, capsys):
        _, _, err = run(capsys, "census", "--n", "4", "--degree", "3", "--quiet")
        assert err == ""
        _, _, err = run(capsys, "census", "--n", "4", "--degree", "3")
        assert "enumerating" in err

    def test_from_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "census", "--n", "6", "--degree", "3", "--format", "csv", "--quiet")
        lines = out.strip().splitlines()[1:]
        path = tmp_path / "c.g6"
        path.write_text("".join(line.split(",")[1] + "\n" for line in lines))
        code, out, _ = run(capsys, "census", "--from-file", str(path), "--format", "json", "--quiet")
        assert code == 0
        payload = json.loads(out)
        validate(payload, "census")
        assert payload["n"] is None
        assert len(payload["records"]) == 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "census.csv"
        code, out, _ = run(
            capsys, "census", "--n", "4", "--degree", "3", "--format", "csv",
            "--quiet", "--out", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("index,")

    def test_infeasible_is_error(self, capsys):
        code, _, err = run(capsys, "census", "--n", "5", "--degree", "3", "--quiet")
        assert code == 1
        assert "even" in err

    def test_full_cubic10_csv_rows(self, capsys):
        code, out, _ = run(
            capsys, "census", "--n", "10", "--degree", "3", "--format", "csv", "--quiet"
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 22  # header plus 21 rows


class TestAudit:
    def test_restricted_run_json(self, capsys, tmp_path):
        baseline = tmp_path / "b.json"
        code, _, _ = run(
            capsys, "audit", "--claim", "thm-complete-energy",
            "--write-baseline", str(baseline), "--quiet",
        )
        assert code == 0
        code, out, _ = run(
            capsys, "audit", "--claim", "thm-complete-energy",
            "--baseline", str(baseline), "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, "audit")
        assert payload["drift"] == []

    def test_drift_exit_code(self, capsys, tmp_path):
        baseline = tmp_path / "b.json"
        code, _, _ = run(
            capsys, "audit", "--claim", "thm-complete-energy",
            "--write-baseline", str(baseline), "--quiet",
        )
        data = json.loads(baseline.read_text())
        first = sorted(data["verdicts"])[0]
        data["verdicts"][first] = "MISMATCH"
        baseline.write_text(json.dumps(data))
        code, out, _ = run(
            capsys, "audit", "--claim", "thm-complete-energy", "--baseline", str(baseline)
        )
        assert code == 2
        assert "DRIFT" in out

    def test_csv(self, capsys, tmp_path):
        baseline = tmp_path / "b.json"
        run(capsys, "audit", "--claim", "thm-cycle-charpoly",
            "--write-baseline", str(baseline), "--quiet")
        code, out, _ = run(
            capsys, "audit", "--claim", "thm-cycle-charpoly",
            "--baseline", str(baseline), "--format", "csv",
        )
        assert code == 0
        assert out.splitlines()[0] == "claim,params,verdict,evidence"


class TestErrors:
    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "moebius")
        assert code == 1

    def test_out_of_range_parameter(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "2")
        assert code == 1
        assert "cycle" in err

    def test_missing_family(self, capsys):
        code, _, err = run(capsys, "matrix")
        assert code == 1
        assert "--family" in err

    def test_unreadable_file(self, capsys):
        code, _, err = run(capsys, "energy", "--from-file", "/does/not/exist.g6")
        assert code == 1
        assert "cannot read" in err

    def test_no_subcommand(self, capsys):
        code, _, _ = run(capsys)
        assert code == 1

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "gen", "--family", "petersen", "--bogus")
        assert code == 1
