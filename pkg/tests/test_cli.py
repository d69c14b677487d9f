"""Command-line interface: parsing, report stability, exit codes."""

import hashlib
import json
import subprocess
import sys

import pytest

import lindeg.cli as cli
from lindeg import SuiteResult, __version__


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_problem(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


RANK5_PROBLEM = {
    "m": 6,
    "d": [1, 4],
    "maps": [{"kind": "projection", "zero_indices": [1]}],
}


class TestClassify:
    def test_rank5_projection_json(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", RANK5_PROBLEM)
        code, out, err = run_cli(capsys, "classify", "--input", str(path), "--format", "json")
        assert code == 0 and err == ""
        payload = json.loads(out)
        assert payload["tool"] == "lindeg"
        assert payload["version"] == __version__
        assert payload["input_sha256"] == hashlib.sha256(path.read_bytes()).hexdigest()
        assert payload["edge_ranks"] == [5]
        assert payload["irreducible"] is True
        assert payload["smooth"] is False
        assert payload["flat_irreducible"] is True
        assert payload["dimension"] == 11
        assert payload["singular"]["kind"] == "exact"
        assert payload["singular"]["singular_dim"] == 4
        assert payload["singular"]["codim_lower"] == 7
        assert payload["singular"]["codim_upper"] == 7
        assert payload["singular"]["model"]["h"] == 1
        assert payload["normal"]["value"] is True

    def test_identity_inline(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--m", "3", "--d", "1,2", "--zero-sets", "-",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["edge_ranks"] == [3]
        assert payload["smooth"] and payload["irreducible"]
        assert payload["flat"] and payload["flat_irreducible"]
        assert payload["well_behaved"] is False
        assert payload["dimension"] == 3
        assert payload["singular"]["kind"] == "empty"

    def test_rank_table_input(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--m", "6", "--d", "1,4", "--ranks", "6,2;6",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["irreducible"] is False
        assert payload["dimension"] == 11
        assert payload["normal"] is None
        assert payload["regular_in_codim_2"] is None
        assert payload["singular"] is None

    def test_matrix_entries_exact(self, tmp_path, capsys):
        problem = {
            "m": 3,
            "d": [1, 2],
            "n": 2,
            "maps": [
                {
                    "kind": "matrix",
                    "entries": [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0", "-2/3"]],
                }
            ],
        }
        path = write_problem(tmp_path, "m.json", problem)
        code, out, _ = run_cli(capsys, "classify", "--input", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["edge_ranks"] == [3]

    def test_matrix_entries_bad_denominator_mod_p(self, tmp_path, capsys):
        problem = {
            "m": 3,
            "d": [1, 2],
            "n": 2,
            "maps": [
                {
                    "kind": "matrix",
                    "entries": [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
                }
            ],
        }
        path = write_problem(tmp_path, "m.json", problem)
        code, out, err = run_cli(
            capsys, "classify", "--input", str(path), "--prime", "2", "--format", "json"
        )
        assert code == 2
        assert out == ""
        assert json.loads(err)["error"]["type"] == "ValidationError"

    def test_byte_identical_runs(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", RANK5_PROBLEM)
        _, first, _ = run_cli(capsys, "classify", "--input", str(path), "--format", "json")
        _, second, _ = run_cli(capsys, "classify", "--input", str(path), "--format", "json")
        assert first == second

    def test_table_format_mentions_flags(self, tmp_path, capsys):
        path = write_problem(tmp_path, "p.json", RANK5_PROBLEM)
        code, out, _ = run_cli(capsys, "classify", "--input", str(path))
        assert code == 0
        assert "input_sha256" in out
        assert "irreducible" in out

    def test_missing_d_is_validation_error(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--m", "3", "--zero-sets", "-")
        assert code == 2
        assert "d" in json.loads(err)["error"]["message"]

    def test_invalid_d_is_validation_error(self, capsys):
        code, _, _ = run_cli(capsys, "classify", "--m", "2", "--d", "1,2", "--zero-sets", "-")
        assert code == 2


class TestOrbits:
    def test_table_lists_all_orbits(self, capsys):
        code, out, _ = run_cli(capsys, "orbits", "--m", "3", "--n", "2", "--d", "1,2")
        assert code == 0
        assert "orbits for m=3, n=2: 4" in out
        assert "[smooth,flat,flat_irreducible]" in out
        assert "r=(1,)" in out and "r=(2,)" in out

    def test_flag_annotations_match_rank(self, capsys):
        _, out, _ = run_cli(
            capsys, "orbits", "--m", "3", "--n", "2", "--d", "1,2", "--format", "json"
        )
        rows = {tuple(r["edge_ranks"]): r for r in json.loads(out)["orbits"]}
        assert rows[(3,)]["smooth"] and rows[(0,)]["smooth"]
        assert not rows[(2,)]["smooth"] and rows[(2,)]["flat_irreducible"]
        assert rows[(1,)]["flat"] and not rows[(1,)]["flat_irreducible"]

    def test_dot_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbits", "--m", "3", "--n", "2", "--d", "1,2", "--format", "dot"
        )
        assert code == 0
        assert out.startswith("digraph orbits {")
        assert '"r_3_3_3" [label="r=3\\nsmooth"];' in out
        assert '"r_3_2_3" [label="r=2\\nflat-irr"];' in out
        assert '"r_3_1_3" [label="r=1\\nflat"];' in out
        assert '"r_3_3_3" -> "r_3_2_3";' in out

    def test_dot_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "orbits", "--m", "3", "--n", "3", "--format", "dot")
        _, second, _ = run_cli(capsys, "orbits", "--m", "3", "--n", "3", "--format", "dot")
        assert first == second

    def test_length_mismatch(self, capsys):
        code, _, err = run_cli(capsys, "orbits", "--m", "2", "--n", "2", "--d", "1")
        assert code == 2
        assert json.loads(err)["error"]["type"] == "ValidationError"

    def test_no_valid_d_for_m2(self, capsys):
        code, _, _ = run_cli(capsys, "orbits", "--m", "2", "--n", "2", "--d", "1,2")
        assert code == 2

    def test_guard_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "orbits", "--m", "3", "--n", "3", "--guard", "2")
        assert code == 3
        assert json.loads(err)["error"]["type"] == "GuardExceededError"


class TestStrata:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "strata", "--n", "3")
        assert code == 0
        assert "{}" in out and "{1,2}" in out

    def test_with_targets(self, capsys):
        code, out, _ = run_cli(
            capsys, "strata", "--n", "2", "--m", "6", "--d", "1,4", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        by_stratum = {tuple(s["edges"]): s for s in payload["strata"]}
        assert by_stratum[()]["r1"] == [[6, 3], [6]]
        assert by_stratum[()]["r2"] == [[6, 2], [6]]
        assert by_stratum[(1,)]["r1"] == [[6, 0], [6]]

    def test_dot(self, capsys):
        code, out, _ = run_cli(capsys, "strata", "--n", "3", "--format", "dot")
        assert code == 0
        assert '"S" ->' in out and '"S_1" -> "S_1_2";' in out


class TestEnumerate:
    def test_identity_point_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--m", "3", "--d", "1,2", "--zero-sets", "-",
            "--prime", "2", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["points"] == 21
        assert payload["fixed_points"] == 6

    def test_single_kill_census(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--m", "3", "--d", "1,2", "--zero-sets", "1",
            "--prime", "2", "--census", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["points"] == 25
        assert payload["census"] == {"total": 25, "singular": 1, "smooth": 24}
        assert payload["fixed_points"] == 7

    def test_census_matches_sigma_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--m", "4", "--d", "1,2", "--zero-sets", "1",
            "--prime", "2", "--census", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["census"]["singular"] == 7

    def test_sample_points(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--m", "3", "--d", "1,2", "--zero-sets", "-",
            "--prime", "2", "--limit", "3", "--format", "json",
        )
        payload = json.loads(out)
        assert len(payload["sample_points"]) == 3
        assert payload["sample_points"][0].get("coordinates") is not None

    def test_needs_prime(self, capsys):
        code, _, err = run_cli(
            capsys, "enumerate", "--m", "3", "--d", "1,2", "--zero-sets", "-"
        )
        assert code == 2
        assert "prime" in json.loads(err)["error"]["message"]

    def test_guard_exit(self, capsys):
        code, _, _ = run_cli(
            capsys, "enumerate", "--m", "3", "--d", "1,2", "--zero-sets", "-",
            "--prime", "2", "--guard", "5",
        )
        assert code == 3


class TestFixedPoints:
    def test_single_kill(self, capsys):
        code, out, _ = run_cli(
            capsys, "fixed-points", "--m", "3", "--d", "1,2", "--zero-sets", "1"
        )
        assert code == 0
        assert "fixed points: 7" in out
        assert "{1} <= {2,3}" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "fixed-points", "--m", "3", "--d", "1,2", "--zero-sets", "1",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["count"] == 7
        assert [[1], [2, 3]] in payload["points"]

    def test_needs_projections(self, capsys):
        code, _, _ = run_cli(
            capsys, "fixed-points", "--m", "3", "--d", "1,2", "--ranks", "3,2;3"
        )
        assert code == 2


class TestSingular:
    def test_exact_model(self, capsys):
        code, out, _ = run_cli(
            capsys, "singular", "--m", "6", "--d", "1,4", "--ranks", "6,5;6",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["singular"]["kind"] == "exact"
        assert payload["singular"]["singular_dim"] == 4
        assert payload["singular"]["model"]["h"] == 1

    def test_witness(self, capsys):
        code, out, _ = run_cli(
            capsys, "singular", "--m", "6", "--d", "1,4", "--zero-sets", "1",
            "--witness", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        witness = payload["witness"]
        assert witness["ext"] >= 1
        assert witness["singular"] is True
        assert witness["coordinates"][0] == [1]

    def test_witness_needs_projections(self, capsys):
        code, _, _ = run_cli(
            capsys, "singular", "--m", "6", "--d", "1,4", "--ranks", "6,5;6", "--witness"
        )
        assert code == 2

    def test_reducible_is_error(self, capsys):
        code, _, err = run_cli(
            capsys, "singular", "--m", "6", "--d", "1,4", "--ranks", "6,1;6"
        )
        assert code == 2
        assert json.loads(err)["error"]["type"] == "NotIrreducibleError"


class TestVerify:
    def test_single_fast_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "sigma", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["suites"][0]["name"] == "sigma"
        assert payload["suites"][0]["checks"] > 0

    def test_table_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "sigma")
        assert code == 0
        assert "all suites passed" in out
        assert "sigma" in out

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--suite", "nope"])
        assert exc.value.code == 2

    def test_failure_exit_code(self, capsys, monkeypatch):
        fake = SuiteResult("sigma", False, 1, ("boom",), 0.0)
        monkeypatch.setattr(cli, "run_suites", lambda names, seed: [fake])
        code, out, _ = run_cli(capsys, "verify", "--suite", "sigma")
        assert code == 1
        assert "SUITE FAILURES" in out


class TestEntrypoint:
    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["--version"])
        assert exc.value.code == 0
        assert capsys.readouterr().out.strip() == f"lindeg {__version__}"

    def test_console_script(self):
        result = subprocess.run(
            [sys.executable, "-m", "lindeg.cli", "classify", "--m", "3", "--d", "1,2",
             "--zero-sets", "-", "--format", "json"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["dimension"] == 3
