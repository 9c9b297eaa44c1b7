"""Experiment runners behind the command-line interface.

Each runner takes an ExperimentConfig, computes with the library
modules, writes its artifacts under `<out>/<experiment>/`, and returns
a ReportRecord.  Artifact bytes are deterministic for a fixed config
and seed: floats are always formatted with '.17g', rows are emitted in
a fixed order, and newlines are '\n' regardless of platform.  Wall
time is reported but is not part of the deterministic identity.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .cantor import (
    CantorParams,
    build_level,
    sample_salem_offsets,
    write_level_csv,
    write_params,
)
from .config import ExperimentConfig
from .errors import ConfigError
from .fourier import (
    BumpFunction,
    SpectralGrid,
    bessel_tail_profile,
    cantor_fourier_grid,
    lq_annulus_diagnostics,
    mollifier_sum,
)
from .geometry import (
    PointCloud,
    ScaleSweep,
    box_dimension_estimate,
    minkowski_ratio_sweep,
)
from .tauberian import (
    GridFunction,
    circulant_rank,
    dft_zero_set,
    mask_spectrum_on_radii,
    span_dimension_oracle,
    spherical_zero_radii,
    verdict,
)


def fmt(x) -> str:
    """Canonical float formatting for CSV artifacts."""
    return format(float(x), ".17g")


def write_csv(path: Path, header, rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(c) if isinstance(c, (str, int)) else fmt(c) for c in row))
    path.write_text("\n".join(lines) + "\n")


def pmap(fn, items, jobs: int):
    """Map preserving input order; `jobs` must not change the results.

    Work items are pure functions of their inputs, so the executor only
    changes scheduling.  Results are collected in submit order.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


@dataclass
class ReportRecord:
    experiment: str
    digest: str
    metrics: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "digest": self.digest,
            "metrics": self.metrics,
            "flags": self.flags,
            "wall_time_s": self.wall_time_s,
        }


def _params_from_config(cfg: ExperimentConfig) -> CantorParams:
    branches = cfg.get_int("cantor.branches", 2)
    ratio = cfg.get_rational("cantor.ratio", Fraction(1, 3))
    offsets = cfg.get_rational_list("cantor.offsets")
    rule = cfg.get("cantor.rule", "constant")
    if offsets is None:
        if branches == 2 and ratio == Fraction(1, 3):
            offsets = (Fraction(0), Fraction(2, 3))
        else:
            if cfg.seed is None:
                raise ConfigError(
                    "cantor.offsets missing and no seed given to draw them"
                )
            rng = np.random.default_rng(cfg.seed)
            offsets = sample_salem_offsets(branches, ratio, rng)
    return CantorParams.create(branches, ratio, offsets, eta_rule=rule, seed=cfg.seed)


def _out_dir(cfg: ExperimentConfig) -> Path:
    path = Path(cfg.out) / cfg.experiment
    path.mkdir(parents=True, exist_ok=True)
    return path


def run_construct(cfg: ExperimentConfig) -> ReportRecord:
    params = _params_from_config(cfg)
    depth = cfg.get_int("level.depth", 6)
    level = build_level(params, depth)
    out = _out_dir(cfg)
    write_params(params, out / "params.json")
    write_level_csv(level, out / "level.csv")
    starts = level.starts()
    gaps = []
    for (s0, l0), (s1, _) in zip(level.intervals.intervals, level.intervals.intervals[1:]):
        gaps.append(s1 - (s0 + l0))
    return ReportRecord(
        experiment=cfg.experiment,
        digest=cfg.digest(),
        metrics={
            "depth": depth,
            "intervals": level.member_count,
            "total_length": float(level.intervals.measure),
            "min_gap": float(min(gaps)) if gaps else 0.0,
            "dimension": float(params.dimension),
            "first_start": float(starts[0]),
        },
        flags={"count_matches_branching": level.member_count == params.branches**depth},
    )


def run_dim(cfg: ExperimentConfig) -> ReportRecord:
    params = _params_from_config(cfg)
    lo = cfg.get_int("dim.level_min", 3)
    hi = cfg.get_int("dim.level_max", 10)
    if hi < lo:
        raise ConfigError("dim.level_max must be >= dim.level_min")
    levels = pmap(lambda m: build_level(params, m), range(lo, hi + 1), cfg.jobs)
    fit = box_dimension_estimate(levels)
    out = _out_dir(cfg)
    write_csv(
        out / "counts.csv",
        ("eps", "count"),
        [(fmt(lv.natural_scale), lv.member_count) for lv in levels],
    )
    return ReportRecord(
        experiment=cfg.experiment,
        digest=cfg.digest(),
        metrics={
            "slope": fit.slope,
            "residual_rms": fit.residual_rms,
            "expected": float(params.dimension),
            "abs_error": abs(fit.slope - float(params.dimension)),
        },
        flags={"degenerate": fit.degenerate},
    )


def run_minkowski(cfg: ExperimentConfig) -> ReportRecord:
    params = _params_from_config(cfg)
    depth = cfg.get_int("level.depth", 12)
    m_lo = cfg.get_int("minkowski.m_min", 2)
    m_hi = cfg.get_int("minkowski.m_max", depth)
    if not 1 <= m_lo <= m_hi <= depth:
        raise ConfigError("need 1 <= minkowski.m_min <= minkowski.m_max <= level.depth")
    limit = cfg.get_float("minkowski.limit", 3.0)
    level = build_level(params, depth)
    alpha = params.dimension_log_ratio()
    if alpha is None:
        alpha = float(params.dimension)
    sweep_spec = ScaleSweep(
        eps_max=params.ratio**m_lo, ratio=params.ratio, count=m_hi - m_lo + 1
    )
    sweep = minkowski_ratio_sweep(level.intervals, alpha, sweep_spec)
    out = _out_dir(cfg)
    write_csv(
        out / "ratios.csv",
        ("eps", "value", "bound_low", "bound_high"),
        [(fmt(r.eps), fmt(r.ratio), fmt(r.ratio_low), fmt(r.ratio_high)) for r in sweep.rows],
    )
    return ReportRecord(
        experiment=cfg.experiment,
        digest=cfg.digest(),
        metrics={
            "sup_ratio": sweep.sup_ratio,
            "rows": len(sweep.rows),
            "exact_rows": sum(1 for r in sweep.rows if r.ratio_exact is not None),
            "limit": limit,
        },
        flags={"bounded": sweep.bounded_by(limit)},
    )


def _fourier_grid(params: CantorParams, depth: int, j_lo: int, j_hi: int, per_octave: int) -> SpectralGrid:
    spacing = 2.0**j_lo / per_octave
    top = 2.0 ** (j_hi + 1)
    xi = np.arange(spacing, top + spacing / 2, spacing)
    values, _ = cantor_fourier_grid(params, depth, xi)
    return SpectralGrid(xi=xi, values=np.abs(values), spacing=spacing, dim=1)


def run_fourier(cfg: ExperimentConfig) -> ReportRecord:
    params = _params_from_config(cfg)
    depth = cfg.get_int("fourier.depth", 8)
    j_lo = cfg.get_int("fourier.j_min", 2)
    j_hi = cfg.get_int("fourier.j_max", 10)
    per_octave = cfg.get_int("fourier.samples_per_octave", 512)
    qs_raw = cfg.get("fourier.q_list", "3,6")
    try:
        qs = tuple(float(Fraction(part)) for part in qs_raw.split(",") if part.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"fourier.q_list must be comma-separated numbers, got {qs_raw!r}") from exc
    if not qs:
        raise ConfigError("fourier.q_list is empty")
    grid = _fourier_grid(params, depth, j_lo, j_hi, per_octave)
    diags = pmap(lambda q: lq_annulus_diagnostics(grid, q, j_lo, j_hi), qs, cfg.jobs)
    out = _out_dir(cfg)
    rows = []
    for q, diag in zip(qs, diags):
        for row in diag.rows:
            ratio = "" if row.ratio is None else fmt(row.ratio)
            rows.append((fmt(q), row.j, fmt(row.lo), fmt(row.hi), fmt(row.integral), ratio))
    write_csv(out / "octaves.csv", ("q", "j", "lo", "hi", "integral", "ratio"), rows)
    stride = max(1, grid.xi.size // 2048)
    sample_xi = grid.xi[::stride]
    sample_vals, sample_err = cantor_fourier_grid(params, depth, sample_xi)
    write_csv(
        out / "spectrum.csv",
        ("xi", "re", "im", "abs", "error_bound"),
        [
            (fmt(x), fmt(v.real), fmt(v.imag), fmt(abs(v)), fmt(e))
            for x, v, e in zip(sample_xi, sample_vals, sample_err)
        ],
    )
    metrics = {"depth": depth, "octaves": j_hi - j_lo + 1}
    flags = {}
    for q, diag in zip(qs, diags):
        metrics[f"tail_ratio_max_q{fmt(q)}"] = max(diag.tail_ratios)
        flags[f"summable_q{fmt(q)}"] = diag.verdict == "summable-like"
    return ReportRecord(cfg.experiment, cfg.digest(), metrics, flags)


def run_mollify(cfg: ExperimentConfig) -> ReportRecord:
    dim = cfg.get_int("mollify.dim", 2)
    alpha = cfg.get_float("mollify.alpha", 1.0)
    p = cfg.get_float("mollify.p", 4.0)
    truncate_raw = cfg.get("mollify.truncate", "1")
    truncate = None if truncate_raw in ("none", "") else float(Fraction(truncate_raw))
    e_lo = cfg.get_int("mollify.eps_exp_min", 2)
    e_hi = cfg.get_int("mollify.eps_exp_max", 8)
    if e_hi < e_lo:
        raise ConfigError("mollify.eps_exp_max must be >= mollify.eps_exp_min")
    j_lo = cfg.get_int("mollify.j_min", -20)
    j_hi = cfg.get_int("mollify.j_max", 4)
    f = bessel_tail_profile(dim=dim, p=p, truncate_at=truncate)
    chi = BumpFunction.standard(dim)
    eps_schedule = [2.0**-e for e in range(e_lo, e_hi + 1)]
    sweep = mollifier_sum(f, chi, alpha, eps_schedule, j_lo=j_lo, j_hi=j_hi)
    out = _out_dir(cfg)
    rows = []
    for e_idx, eps in enumerate(sweep.eps):
        for row in sweep.rows:
            b = row.b[e_idx]
            rows.append((fmt(eps), row.j, fmt(b), fmt(row.a), fmt(row.a * b)))
    write_csv(out / "sweep.csv", ("eps", "j", "b", "a", "product"), rows)
    summary = {
        "eps": [fmt(e) for e in sweep.eps],
        "sums": [fmt(s) for s in sweep.sums],
        "final_over_initial": fmt(sweep.final_over_initial),
        "holder_constant": fmt(sweep.holder_constant),
        "flags": {
            "sums_nonincreasing": sweep.sums_nonincreasing(),
            "tails_nonincreasing": sweep.tails_nonincreasing,
            "uniform_bound_ok": sweep.uniform_bound_ok,
        },
        "notes": list(sweep.notes),
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return ReportRecord(
        cfg.experiment,
        cfg.digest(),
        metrics={
            "final_over_initial": sweep.final_over_initial,
            "holder_constant": sweep.holder_constant,
            "eps_count": len(sweep.eps),
        },
        flags=dict(summary["flags"]),
    )


def _run_span_trials(cfg: ExperimentConfig, out: Path) -> ReportRecord:
    m = cfg.get_int("tauberian.m", 16)
    trials = cfg.get_int("tauberian.trials", 100)
    seed = cfg.seed if cfg.seed is not None else 0
    children = np.random.SeedSequence(seed).spawn(trials)

    def one(args):
        idx, child = args
        rng = np.random.default_rng(child)
        values = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        f = GridFunction(values)
        oracle = span_dimension_oracle(f)
        zeros = dft_zero_set(f)
        rank = circulant_rank(f)
        return idx, oracle, rank, zeros.count

    results = pmap(one, enumerate(children), cfg.jobs)
    write_csv(
        out / "trials.csv",
        ("trial", "span_dim", "circulant_rank", "dft_zeros"),
        [(i, o, r, z) for i, o, r, z in results],
    )
    matches = sum(1 for _, o, r, z in results if o == r == m - z)
    return ReportRecord(
        cfg.experiment,
        cfg.digest(),
        metrics={"m": m, "trials": trials, "matches": matches},
        flags={"all_match": matches == trials},
    )


def _run_radial_scan(cfg: ExperimentConfig, out: Path) -> ReportRecord:
    m = cfg.get_int("tauberian.m", 128)
    band = cfg.get_float("tauberian.band", 1.2)
    radii_cfg = cfg.get_rational_list("tauberian.radii")
    if radii_cfg is None:
        raise ConfigError("tauberian.radii is required for the radial scan")
    radii = tuple(sorted(float(r) for r in radii_cfg))
    if radii and radii[-1] >= m / 2:
        raise ConfigError("tauberian.radii must sit below the grid Nyquist radius m/2")
    seed = cfg.seed if cfg.seed is not None else 0
    rng = np.random.default_rng(seed)
    base = GridFunction(rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))
    masked = mask_spectrum_on_radii(base, radii, band)
    zero_set = spherical_zero_radii(masked, shell_width=1.0)
    write_csv(out / "radii.csv", ("radius",), [(fmt(r),) for r in zero_set.radii])
    recovered = []
    for target in radii:
        hits = [r for r in zero_set.radii if abs(r - target) <= band]
        recovered.append(bool(hits))
    dim_est = 0.0
    if len(zero_set.radii) >= 2:
        cloud = PointCloud.from_points([(r,) for r in zero_set.radii])
        lo = min(np.diff(zero_set.radii)) / 2
        hi = (zero_set.radii[-1] - zero_set.radii[0]) / 4
        if hi > lo > 0:
            count = 6
            sweep = ScaleSweep(
                eps_max=Fraction(hi).limit_denominator(10**6),
                ratio=Fraction(
                    np.exp(np.log(lo / hi) / (count - 1))
                ).limit_denominator(10**6),
                count=count,
            )
            fit = box_dimension_estimate(cloud, sweep)
            dim_est = fit.slope
    report = verdict(zero_set, dim_est, 2)
    (out / "verdict.json").write_text(json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n")
    return ReportRecord(
        cfg.experiment,
        cfg.digest(),
        metrics={
            "m": m,
            "detected_radii": len(zero_set.radii),
            "target_radii": len(radii),
            "dim_estimate": dim_est,
        },
        flags={"all_targets_recovered": all(recovered)},
    )


def run_tauberian(cfg: ExperimentConfig) -> ReportRecord:
    kind = cfg.get("tauberian.kind", "span")
    out = _out_dir(cfg)
    if kind == "span":
        return _run_span_trials(cfg, out)
    if kind == "radial":
        return _run_radial_scan(cfg, out)
    raise ConfigError(f"tauberian.kind must be 'span' or 'radial', got {kind!r}")


EXPERIMENTS = {
    "construct": run_construct,
    "dim": run_dim,
    "minkowski": run_minkowski,
    "fourier": run_fourier,
    "mollify": run_mollify,
    "tauberian": run_tauberian,
}


def run_experiment(cfg: ExperimentConfig) -> ReportRecord:
    runner = EXPERIMENTS[cfg.experiment]
    started = time.perf_counter()
    record = runner(cfg)
    record.wall_time_s = time.perf_counter() - started
    out = _out_dir(cfg)
    (out / "report.json").write_text(
        json.dumps(record.to_dict(), indent=2, sort_keys=True) + "\n"
    )
    return record
