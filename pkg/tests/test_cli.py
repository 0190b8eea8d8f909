"""End-to-end CLI contract: output schemas, determinism, exit codes."""

import csv
import io
import json
import subprocess
import sys

import pytest

SPEC_UNIFORM = '{"levels": [0.0, 1.0], "priors": [0.5, 0.5], "N": 10}'
SPEC_WEIGHTED = '{"levels": [0.0, 1.0], "priors": [0.25, 0.75], "N": 4}'
SPEC_FLAT = '{"levels": [1.0, 1.0], "priors": [0.5, 0.5], "N": 2}'


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "boltzkit", *args],
        capture_output=True,
    )


def parse_csv(data: bytes):
    rows = list(csv.reader(io.StringIO(data.decode())))
    header, body = rows[0], rows[1:]
    return header, body


@pytest.fixture
def uniform_spec(tmp_path):
    path = tmp_path / "uniform.json"
    path.write_text(SPEC_UNIFORM)
    return str(path)


class TestDistribution:
    def test_beta_zero_returns_prior(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(SPEC_WEIGHTED)
        proc = run_cli("distribution", "--spec", str(path), "--beta", "0")
        assert proc.returncode == 0
        header, body = parse_csv(proc.stdout)
        assert header == [
            "i", "energy", "prior", "probability",
            "log_partition", "mean_energy", "gibbs_entropy",
        ]
        assert [row[3] for row in body] == [row[2] for row in body]

    def test_unit_beta_values(self, uniform_spec):
        proc = run_cli("distribution", "--spec", uniform_spec, "--beta", "1")
        header, body = parse_csv(proc.stdout)
        assert float(body[0][3]) == pytest.approx(0.7310585786300049, abs=1e-11)
        assert float(body[1][3]) == pytest.approx(0.2689414213699951, abs=1e-11)
        assert float(body[0][5]) == pytest.approx(0.2689414213699951, abs=1e-11)

    def test_malformed_spec_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{broken")
        proc = run_cli("distribution", "--spec", str(path), "--beta", "1")
        assert proc.returncode == 2
        assert b"error" in proc.stderr

    def test_unknown_field_exits_2(self, tmp_path):
        path = tmp_path / "extra.json"
        path.write_text('{"levels": [0, 1], "priors": [0.5, 0.5], "N": 2, "x": 1}')
        proc = run_cli("distribution", "--spec", str(path), "--beta", "1")
        assert proc.returncode == 2

    def test_json_format(self, uniform_spec):
        proc = run_cli("distribution", "--spec", uniform_spec, "--beta", "1",
                       "--format", "json")
        records = [json.loads(line) for line in proc.stdout.splitlines()]
        assert len(records) == 2
        assert records[0]["probability"] == pytest.approx(0.73105857863)


class TestSweep:
    def test_rows_match_single_point_command(self, uniform_spec):
        sweep = run_cli("sweep", "--spec", uniform_spec, "--from", "0",
                        "--to", "1", "--points", "2")
        assert sweep.returncode == 0
        header, body = parse_csv(sweep.stdout)
        assert header == [
            "beta", "temperature", "log_partition", "mean_energy",
            "gibbs_entropy", "equilibrium_entropy", "kl_to_prior",
        ]
        assert len(body) == 2
        assert body[0][1] == ""  # no temperature at beta = 0
        dist = run_cli("distribution", "--spec", uniform_spec, "--beta", "1")
        _, dist_body = parse_csv(dist.stdout)
        assert body[1][2] == dist_body[0][4]  # log_partition agrees
        assert body[1][3] == dist_body[0][5]  # mean_energy agrees
        assert body[1][4] == dist_body[0][6]  # gibbs_entropy agrees

    def test_log_spacing_from_zero_exits_2(self, uniform_spec):
        proc = run_cli("sweep", "--spec", uniform_spec, "--from", "0",
                       "--to", "1", "--points", "3", "--spacing", "log")
        assert proc.returncode == 2

    def test_temperature_sweep(self, uniform_spec):
        proc = run_cli("sweep", "--spec", uniform_spec, "--variable",
                       "temperature", "--from", "0.5", "--to", "2",
                       "--points", "2")
        assert proc.returncode == 0
        _, body = parse_csv(proc.stdout)
        assert float(body[0][0]) == pytest.approx(2.0)  # beta = 1/(k T)
        assert float(body[1][0]) == pytest.approx(0.5)

    def test_byte_identical_reruns(self, uniform_spec):
        args = ("sweep", "--spec", uniform_spec, "--from", "-2", "--to", "2",
                "--points", "17")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_truncated_oscillator_spec_tracks_closed_form(self, tmp_path):
        """A 200-level planar-oscillator system written as a spec file must
        sweep to mean energies within 1e-6 of the closed form."""
        from boltzkit import Dimensionality, OscillatorModel, \
            mean_energy_closed, oscillator_as_system

        model = OscillatorModel(1.0, Dimensionality.PLANAR_2D, 200)
        spectrum, prior = oscillator_as_system(model)
        path = tmp_path / "osc.json"
        path.write_text(json.dumps({
            "levels": list(spectrum.levels),
            "priors": list(prior.entries),
            "N": 1,
        }))
        proc = run_cli("sweep", "--spec", str(path), "--from", "0.5",
                       "--to", "2", "--points", "4")
        assert proc.returncode == 0
        header, body = parse_csv(proc.stdout)
        col = header.index("mean_energy")
        for row in body:
            closed = mean_energy_closed(model, float(row[0]))
            assert abs(float(row[col]) - closed) <= 1e-6


class TestSolve:
    def test_symmetric_target(self, uniform_spec):
        proc = run_cli("solve", "--spec", uniform_spec,
                       "--target-energy", "0.5")
        assert proc.returncode == 0
        header, body = parse_csv(proc.stdout)
        beta = float(body[0][header.index("beta")])
        assert abs(beta) <= 1e-10

    def test_known_inverse(self, uniform_spec):
        proc = run_cli("solve", "--spec", uniform_spec,
                       "--target-energy", "0.268941")
        header, body = parse_csv(proc.stdout)
        beta = float(body[0][header.index("beta")])
        assert beta == pytest.approx(1.0, abs=1e-4)  # target given to 6 digits
        achieved = float(body[0][header.index("mean_energy")])
        assert achieved == pytest.approx(0.268941, abs=1e-9)

    def test_out_of_range_exits_4(self, uniform_spec):
        proc = run_cli("solve", "--spec", uniform_spec,
                       "--target-energy", "1.5")
        assert proc.returncode == 4

    def test_degenerate_support_exits_4(self, tmp_path):
        path = tmp_path / "flat.json"
        path.write_text(SPEC_FLAT)
        proc = run_cli("solve", "--spec", str(path), "--target-energy", "1.2")
        assert proc.returncode == 4


class TestVerify:
    def test_quick_scale_passes(self):
        proc = run_cli("verify", "--scale", "quick")
        assert proc.returncode == 0
        lines = proc.stdout.decode().splitlines()
        assert all(l.startswith("PASS") for l in lines[:-1])
        assert lines[-1].startswith("# oracle checks passed:")

    def test_json_reports(self):
        proc = run_cli("verify", "--scale", "quick", "--format", "json")
        assert proc.returncode == 0
        reports = json.loads(proc.stdout.decode())
        assert all(r["passed"] for r in reports)
        assert b"# oracle checks passed" in proc.stderr


class TestOscillator:
    def test_log_two_rows(self):
        import math

        beta = repr(math.log(2))
        for dim, expected in (("1d", 1.5), ("2d", 3.0)):
            proc = run_cli("oscillator", "--dim", dim, "--from", beta,
                           "--to", "1", "--points", "2")
            assert proc.returncode == 0
            header, body = parse_csv(proc.stdout)
            assert header == [
                "beta", "closed_form_energy", "series_energy",
                "tail_bound", "difference", "exceeds_bound",
            ]
            assert float(body[0][1]) == pytest.approx(expected, abs=1e-10)
            assert body[0][5] == "false"

    def test_zero_beta_in_range_exits_2(self):
        proc = run_cli("oscillator", "--dim", "1d", "--from", "0",
                       "--to", "1", "--points", "2")
        assert proc.returncode == 2

    def test_series_column_tracks_closed_form(self):
        proc = run_cli("oscillator", "--dim", "2d", "--levels", "400",
                       "--from", "0.5", "--to", "2", "--points", "4")
        _, body = parse_csv(proc.stdout)
        for row in body:
            assert float(row[4]) <= float(row[3]) + 1e-12
