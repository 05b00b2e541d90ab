"""
Tests for the sieve_lab command line.
"""
import json
import re

import pytest

from sieve_lab.constants import WORKERS_ENV_VAR
from sieve_lab.main import main

FIGURE1_ARGS = ["--primes", "3,3,5,5,7,7,11,11", "--residues", "1,2,4,0,5,6,7,10"]


def run(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out.splitlines(), captured.err


def data_lines(lines, header):
    """Lines after the CSV header."""
    return lines[lines.index(header) + 1:]


@pytest.mark.parametrize("scenario, footer", [
    ("figure1", "PASS: 5/5 checks"),
    ("guiding-example", "PASS: 8/8 checks"),
])
def test_reproduce(capsys, scenario, footer):
    status, out, _ = run(capsys, ["reproduce", scenario])
    assert status == 0
    assert out[-1] == footer
    assert not [line for line in out if line.startswith("FAIL")]


def test_unknown_scenario_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["reproduce", "figure2"])
    assert exc.value.code == 1


def test_total_sieve_rows(capsys):
    status, out, _ = run(capsys, ["total-sieve", *FIGURE1_ARGS, "--z", "7", "--n-max", "8"])
    assert status == 0
    assert out[0] == "n,size,beta_star,gamma,crossed"
    assert out[1] == "1,1,3/1,3/1,false"
    assert out[-1] == "8,32,7621/90,1232/9,false"
    assert [int(line.split(",")[1]) for line in out[1:]] == [1, 2, 5, 5, 11, 14, 17, 32]


def test_total_sieve_json_lines(capsys):
    status, out, _ = run(capsys, ["total-sieve", *FIGURE1_ARGS, "--z", "7", "--n-max", "8",
                                  "--format", "json"])
    assert status == 0
    assert len(out) == 8
    assert json.loads(out[-1]) == {"n": 8, "size": 32, "beta_star": "7621/90",
                                   "gamma": "1232/9", "crossed": False}


def test_total_sieve_zero_steps(capsys):
    status, out, _ = run(capsys, ["total-sieve", *FIGURE1_ARGS, "--z", "7", "--n-max", "0"])
    assert status == 0
    assert out == ["n,size,beta_star,gamma,crossed"]


def test_scan_cap_keeps_completed_rows(capsys):
    status, out, err = run(capsys, ["total-sieve", *FIGURE1_ARGS, "--z", "7", "--n-max", "8",
                                    "--scan-cap", "10"])
    assert status == 3
    assert len(out) == 1 + 7
    assert "n=8" in err


def test_invalid_prefix(capsys):
    status, out, err = run(capsys, ["total-sieve", "--primes", "3,4", "--residues", "1,1", "--n-max", "1"])
    assert status == 1
    assert "NonPrimeModulus" in err


def test_tuple_reduction(capsys):
    status, out, _ = run(capsys, ["tuple", "0,2,6", "--m", "17", "--g", "2"])
    assert status == 0
    classes = json.loads(next(line for line in out if line.startswith("{")))
    assert classes["alpha"] == 4 and classes["kappa"] == 3
    assert [(c["r"], c["p"]) for c in classes["classes"]] == \
        [(3, 7), (2, 7), (0, 7), (3, 11), (0, 11), (5, 11)]


def test_tuple_survivors(capsys):
    status, out, _ = run(capsys, ["tuple", "0,2,6", "--m", "17", "--survivors", "2"])
    assert status == 0
    assert data_lines(out, "z,position,all_prime") == ["1,17,true", "4,107,true"]


def test_tuple_window_growth(capsys):
    status, out, _ = run(capsys, ["tuple", "0,2,6", "--m", "17", "--window-growth", "2"])
    assert status == 0
    rows = data_lines(out, "n,window_size,gamma")
    assert [row.split(",")[:2] for row in rows] == [["1", "3"], ["2", "5"]]


@pytest.mark.parametrize("argv", [
    ["tuple", "0,2,4"],
    ["tuple", "0,2,6", "--m", "13"],
    ["tuple", "0,2,6", "--d", "3"],
    ["tuple", "2,0"],
    ["tuple", "0,2,6", "--m", "17", "--survivors", "0"],
    ["tuple", "0,2,6", "--m", "17", "--window-growth", "0"],
])
def test_tuple_errors(capsys, argv):
    status, _, _ = run(capsys, argv)
    assert status == 1


def test_pattern_window(capsys):
    status, out, _ = run(capsys, ["pattern", "--eratosthenes", "3", "--lo", "1", "--hi", "30"])
    assert status == 0
    ones = [int(line.split(",")[0]) for line in out[1:] if line.endswith(",1")]
    assert ones == [1, 7, 11, 13, 17, 19, 23, 29]


def test_pattern_period(capsys):
    status, out, err = run(capsys, ["pattern", "--eratosthenes", "2"])
    assert status == 0
    assert out[1:] == ["1,1", "2,0", "3,0", "4,0", "5,1", "6,0"]
    assert "period=6" in err


def test_pattern_period_cap(capsys):
    status, _, _ = run(capsys, ["pattern", "--eratosthenes", "4", "--period-cap", "100"])
    assert status == 3


def test_primes(capsys):
    status, out, _ = run(capsys, ["primes", "--limit", "30"])
    assert status == 0
    assert out[1:] == ["2", "3", "5", "7", "11", "13", "17", "19", "23", "29"]


def test_output_file_and_manifest(capsys, tmp_path):
    output = tmp_path / "primes.csv"
    status, out, _ = run(capsys, ["primes", "--limit", "30", "--output", str(output)])
    assert status == 0
    assert out == []
    assert len(output.read_text(encoding="utf-8").splitlines()) == 11
    manifest = json.loads((tmp_path / "primes.csv.manifest.json").read_text(encoding="utf-8"))
    assert manifest["rows"] == 10
    assert manifest["config"]["limit"] == 30
    assert manifest["summary"] == {"count": 10}
    assert len(manifest["config_sha256"]) == 64


def test_manifest_written_on_cap(capsys, tmp_path):
    output = tmp_path / "growth.csv"
    status, _, _ = run(capsys, ["total-sieve", *FIGURE1_ARGS, "--z", "7", "--n-max", "8",
                                "--scan-cap", "10", "--output", str(output)])
    assert status == 3
    manifest = json.loads((tmp_path / "growth.csv.manifest.json").read_text(encoding="utf-8"))
    assert manifest["rows"] == 7
    assert "scan cap" in manifest["summary"]["error"]


def test_config_file(capsys, tmp_path):
    path = tmp_path / "figure1.json"
    path.write_text(json.dumps({"primes": [3, 3, 5, 5, 7, 7, 11, 11],
                                "residues": [1, 2, 4, 0, 5, 6, 7, 10], "z": 7, "n_max": 8}),
                    encoding="utf-8")
    status, out, _ = run(capsys, ["total-sieve", "--config", str(path), "--n-max", "2"])
    assert status == 0
    assert out[1:] == ["1,1,3/1,3/1,false", "2,2,9/1,12/1,false"]


def test_growth_is_deterministic(capsys, monkeypatch):
    argv = ["growth", "--alpha", "2", "--kappa", "1", "--seeds", "1,2,3", "--z", "0", "--n-max", "20"]
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)
    status, first, _ = run(capsys, argv)
    assert status == 0
    assert len(first) == 1 + 3 * 20
    assert first[0] == "seed,n,size,beta_star,gamma,crossed"
    _, again, _ = run(capsys, argv)
    monkeypatch.setenv(WORKERS_ENV_VAR, "2")
    _, parallel, _ = run(capsys, argv)
    assert first == again == parallel


def test_growth_needs_seeds(capsys):
    status, _, _ = run(capsys, ["growth", "--alpha", "2", "--kappa", "1", "--n-max", "5"])
    assert status == 1


def test_pattern_depth_zero_is_unsieved(capsys):
    status, out, _ = run(capsys, ["pattern", "--eratosthenes", "3", "--depth", "0", "--lo", "1", "--hi", "6"])
    assert status == 0
    assert out[1:] == [f"{z},1" for z in range(1, 7)]


def test_seeded_regular_total_sieve_is_deterministic(capsys):
    argv = ["total-sieve", "--alpha", "2", "--kappa", "2", "--seed", "42", "--z", "0", "--n-max", "200"]
    status, first, _ = run(capsys, argv)
    assert status == 0
    assert len(first) == 201
    _, again, _ = run(capsys, argv)
    assert first == again


def test_depth_flags_must_be_positive(capsys):
    status, out, err = run(capsys, ["tuple", "0,2,6", "--m", "17", "--survivors", "0"])
    assert status == 1
    assert "survivors must be >= 1" in err
    assert out == []


def test_growth_scan_cap_keeps_completed_rows(capsys, monkeypatch):
    monkeypatch.delenv(WORKERS_ENV_VAR, raising=False)
    argv = ["growth", "--alpha", "2", "--kappa", "1", "--seeds", "1,2,3,4,5", "--z", "0", "--n-max", "60"]
    status, full, _ = run(capsys, argv)
    assert status == 0
    status, capped, err = run(capsys, [*argv, "--scan-cap", "1"])
    assert status == 3
    assert capped[0] == "seed,n,size,beta_star,gamma,crossed"
    assert capped == full[:len(capped)]
    aborted_step = int(re.search(r"step n=(\d+)", err).group(1))
    assert int(full[len(capped)].split(",")[1]) == aborted_step


def test_seeded_regular_pattern_needs_depth(capsys):
    status, out, err = run(capsys, ["pattern", "--alpha", "2", "--kappa", "1", "--seed", "3"])
    assert status == 1
    assert "--depth" in err
    assert out == []
    status, out, _ = run(capsys, ["pattern", "--alpha", "2", "--kappa", "1", "--seed", "3", "--depth", "2"])
    assert status == 0
    assert len(out) == 1 + 3 * 5
