"""Experiment runners end to end: artifacts, determinism, CLI exit codes."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from fracspec.cantor import read_level_csv, read_params
from fracspec.cli import main
from fracspec.config import ExperimentConfig
from fracspec.errors import ConfigError
from fracspec.experiments import run_experiment


def run(tmp_path, experiment, text, seed=None, out_name="out", jobs=None):
    path = tmp_path / f"{experiment}.cfg"
    path.write_text(text)
    cfg = ExperimentConfig.from_file(
        path, experiment=experiment, seed=seed, out=str(tmp_path / out_name), jobs=jobs
    )
    record = run_experiment(cfg)
    return cfg, record, tmp_path / out_name / experiment


def test_construct_artifacts(tmp_path):
    cfg, record, out = run(tmp_path, "construct", "level.depth = 3\n")
    assert (out / "params.json").exists()
    assert (out / "level.csv").exists()
    assert (out / "report.json").exists()
    assert record.metrics["intervals"] == 8
    assert record.metrics["total_length"] == pytest.approx(8 / 27)
    # narrowest gap at depth 3 separates sibling leaves: length (1/3)^3
    assert record.metrics["min_gap"] == pytest.approx(1 / 27)
    assert record.flags["count_matches_branching"]
    params = read_params(out / "params.json")
    assert params.branches == 2 and params.ratio == Fraction(1, 3)
    stored = read_level_csv(out / "level.csv")
    assert len(stored.intervals) == 8
    on_disk = json.loads((out / "report.json").read_text())
    assert on_disk["digest"] == cfg.digest()


def test_dim_artifacts(tmp_path):
    _, record, out = run(tmp_path, "dim", "dim.level_min = 3\ndim.level_max = 6\n")
    rows = (out / "counts.csv").read_text().splitlines()
    assert rows[0] == "eps,count"
    assert len(rows) == 5
    assert record.metrics["abs_error"] < 0.02
    assert not record.flags["degenerate"]


def test_minkowski_artifacts(tmp_path):
    text = "level.depth = 6\nminkowski.m_min = 2\nminkowski.m_max = 6\n"
    _, record, out = run(tmp_path, "minkowski", text)
    rows = (out / "ratios.csv").read_text().splitlines()
    assert rows[0] == "eps,value,bound_low,bound_high"
    assert len(rows) == 6
    assert record.flags["bounded"]
    assert record.metrics["exact_rows"] == 5


FOURIER_TEXT = (
    "fourier.depth = 5\n"
    "fourier.j_min = 2\n"
    "fourier.j_max = 6\n"
    "fourier.samples_per_octave = 64\n"
    "fourier.q_list = 3,6\n"
)


def test_fourier_artifacts(tmp_path):
    _, record, out = run(tmp_path, "fourier", FOURIER_TEXT)
    octaves = (out / "octaves.csv").read_text().splitlines()
    assert octaves[0] == "q,j,lo,hi,integral,ratio"
    assert len(octaves) == 1 + 2 * 5
    spectrum = (out / "spectrum.csv").read_text().splitlines()
    assert spectrum[0] == "xi,re,im,abs,error_bound"
    # the default construction does not decay: the spikes at 3^k * pi
    # keep a fixed share of every octave's mass, at either exponent
    assert record.flags == {"summable_q3": False, "summable_q6": False}
    assert record.metrics["tail_ratio_max_q3"] > 1.0
    assert record.metrics["tail_ratio_max_q6"] > 1.0


def test_mollify_artifacts(tmp_path):
    text = (
        "mollify.eps_exp_min = 2\n"
        "mollify.eps_exp_max = 4\n"
        "mollify.j_min = -8\n"
        "mollify.j_max = 4\n"
    )
    _, record, out = run(tmp_path, "mollify", text)
    sweep_rows = (out / "sweep.csv").read_text().splitlines()
    assert sweep_rows[0] == "eps,j,b,a,product"
    assert len(sweep_rows) == 1 + 13 * 3
    summary = json.loads((out / "summary.json").read_text())
    assert summary["flags"] == {
        "sums_nonincreasing": True,
        "tails_nonincreasing": True,
        "uniform_bound_ok": True,
    }
    assert record.metrics["final_over_initial"] < 1.0


def test_tauberian_span_artifacts(tmp_path):
    text = "tauberian.kind = span\ntauberian.m = 8\ntauberian.trials = 10\n"
    _, record, out = run(tmp_path, "tauberian", text, seed=3)
    rows = (out / "trials.csv").read_text().splitlines()
    assert rows[0] == "trial,span_dim,circulant_rank,dft_zeros"
    assert len(rows) == 11
    assert record.metrics["matches"] == 10
    assert record.flags["all_match"]


def test_tauberian_radial_artifacts(tmp_path):
    text = (
        "tauberian.kind = radial\n"
        "tauberian.m = 64\n"
        "tauberian.band = 1.2\n"
        "tauberian.radii = 5, 11\n"
    )
    _, record, out = run(tmp_path, "tauberian", text, seed=9)
    assert (out / "radii.csv").exists()
    doc = json.loads((out / "verdict.json").read_text())
    assert doc["zero_kind"] == "radial"
    assert record.flags["all_targets_recovered"]
    assert record.metrics["detected_radii"] >= 2


def test_radial_scan_requires_radii(tmp_path):
    with pytest.raises(ConfigError, match="radii"):
        run(tmp_path, "tauberian", "tauberian.kind = radial\n", seed=1)
    with pytest.raises(ConfigError, match="Nyquist"):
        run(
            tmp_path,
            "tauberian",
            "tauberian.kind = radial\ntauberian.m = 16\ntauberian.radii = 9\n",
            seed=1,
        )
    with pytest.raises(ConfigError, match="kind"):
        run(tmp_path, "tauberian", "tauberian.kind = sideways\n")


def test_random_offsets_require_seed(tmp_path):
    text = "cantor.branches = 3\ncantor.ratio = 1/5\nlevel.depth = 2\n"
    with pytest.raises(ConfigError, match="seed"):
        run(tmp_path, "construct", text)
    _, record, _ = run(tmp_path, "construct", text, seed=2, out_name="seeded")
    assert record.metrics["intervals"] == 9
    assert record.flags["count_matches_branching"]


def artifact_bytes(out_dir):
    out = {}
    for path in sorted(Path(out_dir).rglob("*")):
        if path.is_file() and path.name != "report.json":
            out[path.relative_to(out_dir)] = path.read_bytes()
    return out


def report_without_timing(out_dir, experiment):
    doc = json.loads((Path(out_dir) / experiment / "report.json").read_text())
    doc.pop("wall_time_s")
    return doc


@pytest.mark.parametrize(
    "experiment,text,seed",
    [
        ("dim", "dim.level_min = 3\ndim.level_max = 6\n", None),
        ("fourier", FOURIER_TEXT, None),
        ("tauberian", "tauberian.kind = span\ntauberian.m = 8\ntauberian.trials = 6\n", 5),
    ],
)
def test_reruns_are_byte_identical(tmp_path, experiment, text, seed):
    run(tmp_path, experiment, text, seed=seed, out_name="a", jobs=1)
    run(tmp_path, experiment, text, seed=seed, out_name="b", jobs=1)
    run(tmp_path, experiment, text, seed=seed, out_name="c", jobs=3)
    a, b, c = (artifact_bytes(tmp_path / name) for name in "abc")
    assert a == b == c
    ra = report_without_timing(tmp_path / "a", experiment)
    rc = report_without_timing(tmp_path / "c", experiment)
    assert ra == rc


def test_cli_runs_experiment(tmp_path, capsys):
    path = tmp_path / "run.cfg"
    path.write_text("level.depth = 2\n")
    code = main(["construct", "--config", str(path), "--out", str(tmp_path / "out")])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["experiment"] == "construct"
    assert doc["metrics"]["intervals"] == 4


def test_cli_config_errors_exit_2(tmp_path):
    dup = tmp_path / "dup.cfg"
    dup.write_text("a = 1\na = 2\n")
    assert main(["dim", "--config", str(dup)]) == 2
    assert main(["dim", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_cli_domain_errors_exit_1(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text(
        "cantor.branches = 3\ncantor.ratio = 2/5\ncantor.offsets = 0, 2/5, 3/5\n"
    )
    assert main(["construct", "--config", str(bad), "--out", str(tmp_path / "out")]) == 1


def test_cli_rejects_unknown_command():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_cli_verify_single_criterion(capsys):
    assert main(["verify", "--suite", "verdict-formulas"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("PASS verdict-formulas")
    summary = json.loads(out[-1])
    assert summary == {
        "criteria": {"verdict-formulas": True},
        "failed": 0,
        "passed": 1,
    }
