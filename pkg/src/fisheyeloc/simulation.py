"""Repeated noisy localization of a fixed target, with smoothing and summary statistics."""

from __future__ import annotations

import csv
import io
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .camera import CameraIntrinsics, PixelPoint, project
from .errors import ConfigError, GeometryError, NoSuccessfulTrialsError
from .geometry import CameraPose, GroundPoint
from .localization import localize
from .noise import (
    LowPassFilter,
    NoiseSpec,
    sample_noisy_pixel,
    sample_noisy_pose,
    trial_rng,
)

CSV_HEADER = (
    "trial",
    "noisy_tilt_deg",
    "noisy_height_m",
    "raw_x",
    "raw_y",
    "filt_x",
    "filt_y",
    "status",
)


@dataclass(frozen=True)
class SimConfig:
    intrinsics: CameraIntrinsics = field(default_factory=CameraIntrinsics)
    true_pose: CameraPose = field(default_factory=lambda: CameraPose.from_degrees(10.0, 37.0))
    target: GroundPoint = GroundPoint(4.0, 3.0)
    noise: NoiseSpec = field(default_factory=NoiseSpec)
    alpha: float = 0.125
    trials: int = 90
    seed: int = 1

    def __post_init__(self):
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha!r}")


@dataclass(frozen=True)
class TrialRecord:
    index: int
    noisy_tilt: float
    noisy_height: float
    raw: GroundPoint | None = None
    filtered: GroundPoint | None = None
    failure: str | None = None

    @property
    def failed(self) -> bool:
        return self.failure is not None

    @property
    def status(self) -> str:
        return "ok" if self.failure is None else f"failed:{self.failure}"


@dataclass(frozen=True)
class AxisStats:
    mean_raw: float
    mean_filtered: float
    var_raw: float
    var_filtered: float


@dataclass(frozen=True)
class SimStats:
    x: AxisStats
    y: AxisStats
    successes: int
    failure_count: int


def _run_trial(cfg: SimConfig, truth_pixel: PixelPoint, index: int) -> TrialRecord:
    rng = trial_rng(cfg.seed, index)
    try:
        pose = sample_noisy_pose(cfg.noise, cfg.true_pose.height, rng)
    except ValueError:
        return TrialRecord(index, math.nan, math.nan, failure="invalid pose")
    pixel = sample_noisy_pixel(cfg.noise, truth_pixel, rng)
    try:
        raw = localize(cfg.intrinsics, pose, pixel)
    except GeometryError as exc:
        return TrialRecord(index, pose.tilt, pose.height, failure=exc.message)
    return TrialRecord(index, pose.tilt, pose.height, raw=raw)


def run_simulation(cfg: SimConfig, workers: int = 1) -> tuple[list[TrialRecord], SimStats]:
    """Localize ``cfg.target`` ``cfg.trials`` times under noisy pose measurements.

    The true pixel comes from projecting the target with the true pose;
    each trial localizes it (optionally perturbed) with a noisy pose drawn
    from its own ``(seed, index)`` stream.  Trials may run on ``workers``
    threads; the X and Y low-pass filters then run over the successful
    trials in index order, so the records do not depend on ``workers``.
    Failed trials are kept, unfiltered, and left out of the statistics.
    """
    try:
        truth_pixel = project(cfg.intrinsics, cfg.true_pose, cfg.target)
    except GeometryError as exc:
        raise ConfigError(f"target cannot be imaged with the true pose ({exc})") from exc

    indices = range(cfg.trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trials = list(pool.map(lambda i: _run_trial(cfg, truth_pixel, i), indices))
    else:
        trials = [_run_trial(cfg, truth_pixel, i) for i in indices]

    fx, fy = LowPassFilter(cfg.alpha), LowPassFilter(cfg.alpha)
    records = []
    for rec in trials:
        if not rec.failed:
            filt = GroundPoint(fx.step(rec.raw.x), fy.step(rec.raw.y))
            rec = TrialRecord(rec.index, rec.noisy_tilt, rec.noisy_height, rec.raw, filt)
        records.append(rec)
    return records, summarize(records)


def summarize(records: Sequence[TrialRecord]) -> SimStats:
    """Means and population variances of the raw and filtered series."""
    ok = [r for r in records if not r.failed]
    if not ok:
        raise NoSuccessfulTrialsError(f"{len(records)} trials, all failed")

    # statistics.pvariance is exact (zero for a constant series)
    def axis(i):
        raw = [r.raw[i] for r in ok]
        filt = [r.filtered[i] for r in ok]
        return AxisStats(
            mean_raw=statistics.fmean(raw),
            mean_filtered=statistics.fmean(filt),
            var_raw=statistics.pvariance(raw),
            var_filtered=statistics.pvariance(filt),
        )

    return SimStats(axis(0), axis(1), successes=len(ok), failure_count=len(records) - len(ok))


def lowpass_mean_weights(n: int, alpha: float) -> np.ndarray:
    """Weights ``w`` with ``mean(lowpass(x)) == w @ x`` for a length-``n`` series.

    With iid inputs of variance ``s**2`` the mean of the filtered series has
    standard error ``s * norm(w)``.
    """
    out = np.zeros(n)
    # sample j enters output k >= j with weight alpha*(1-alpha)**(k-j),
    # except the first sample, which seeds the filter with weight (1-alpha)**k
    lags = np.arange(n)
    decay = (1.0 - alpha) ** lags
    for j in range(n):
        gain = 1.0 if j == 0 else alpha
        out[j] = gain * decay[: n - j].sum()
    return out / n


def filtered_mean_standard_error(var_raw: float, n: int, alpha: float) -> float:
    return math.sqrt(var_raw) * float(np.linalg.norm(lowpass_mean_weights(n, alpha)))


def _fmt(value: float | None) -> str:
    if value is None or math.isnan(value):
        return ""
    return f"{value:.9f}"


def write_csv(records: Iterable[TrialRecord], stream) -> None:
    """One row per trial, angles in degrees; empty cells for failed trials."""
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        raw = r.raw or (None, None)
        filt = r.filtered or (None, None)
        w.writerow(
            [
                r.index,
                _fmt(math.degrees(r.noisy_tilt)),
                _fmt(r.noisy_height),
                _fmt(raw[0]),
                _fmt(raw[1]),
                _fmt(filt[0]),
                _fmt(filt[1]),
                r.status,
            ]
        )


def records_to_csv(records: Iterable[TrialRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def format_table(stats: SimStats) -> str:
    cols = ("Mean (original)", "Mean (filtering)", "Var. (original)", "Var. (filtering)")
    lines = ["       " + "  ".join(f"{c:>16}" for c in cols)]
    for label, a in (("X / m", stats.x), ("Y / m", stats.y)):
        values = (a.mean_raw, a.mean_filtered, a.var_raw, a.var_filtered)
        lines.append(f"{label:<7}" + "  ".join(f"{v:>16.4f}" for v in values))
    total = stats.successes + stats.failure_count
    lines.append(f"failed trials: {stats.failure_count} of {total}")
    return "\n".join(lines)
