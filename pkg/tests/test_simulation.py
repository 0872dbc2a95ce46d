import csv
import io
import math

import pytest

from fisheyeloc import (
    CameraPose,
    ConfigError,
    GroundPoint,
    NoiseSpec,
    NoSuccessfulTrialsError,
    SimConfig,
    TrialRecord,
    run_simulation,
    summarize,
)
from fisheyeloc.simulation import CSV_HEADER, format_table, records_to_csv


def rec(i, raw, filt=None):
    return TrialRecord(i, 0.6, 10.0, GroundPoint(*raw), GroundPoint(*(filt or raw)))


def test_paper_defaults_run():
    records, stats = run_simulation(SimConfig())
    assert len(records) == 90
    assert [r.index for r in records] == list(range(90))
    assert stats.failure_count == 0 and stats.successes == 90


def test_noiseless_recovers_target():
    records, stats = run_simulation(SimConfig(noise=NoiseSpec.noiseless()))
    for r in records:
        assert r.raw == pytest.approx((4.0, 3.0), abs=1e-6)
        assert r.filtered == pytest.approx((4.0, 3.0), abs=1e-6)
    assert stats.x.var_raw == stats.x.var_filtered == 0.0
    assert stats.y.var_raw == stats.y.var_filtered == 0.0


def test_seeded_runs_identical():
    a, _ = run_simulation(SimConfig(seed=42))
    b, _ = run_simulation(SimConfig(seed=42))
    assert a == b
    c, _ = run_simulation(SimConfig(seed=43))
    assert a != c


def test_parallel_trials_identical():
    cfg = SimConfig(seed=7, trials=200, noise=NoiseSpec(pixel_std=4.0))
    serial, s_stats = run_simulation(cfg)
    threaded, t_stats = run_simulation(cfg, workers=8)
    assert serial == threaded
    assert s_stats == t_stats


def test_summarize_examples():
    s = summarize([rec(0, (4, 3))])
    assert (s.x.mean_raw, s.y.mean_raw) == (4.0, 3.0)
    assert s.x.var_raw == s.y.var_filtered == 0.0
    s = summarize([rec(0, (3, 0)), rec(1, (5, 0))])
    assert s.x.mean_raw == 4.0
    assert s.x.var_raw == 1.0


def test_summarize_no_successes():
    failed = [TrialRecord(0, 0.6, 10.0, failure="ray does not intersect ground")]
    with pytest.raises(NoSuccessfulTrialsError, match="no successful trials"):
        summarize(failed)
    with pytest.raises(NoSuccessfulTrialsError):
        summarize([])


def test_failed_trials_kept_and_excluded():
    cfg = SimConfig(
        true_pose=CameraPose.from_degrees(10.0, 60.0),
        target=GroundPoint(15.0, 0.0),
        noise=NoiseSpec(tilt_mean=60.0, tilt_std=20.0, height_std=0.5),
        trials=300,
        seed=3,
    )
    records, stats = run_simulation(cfg)
    failed = [r for r in records if r.failed]
    assert failed, "expected some trials to miss the ground"
    assert stats.failure_count == len(failed)
    assert stats.successes + stats.failure_count == cfg.trials
    for r in failed:
        assert r.raw is None and r.filtered is None
        assert r.status.startswith("failed:")


def test_filtered_within_running_bounding_box():
    cfg = SimConfig(noise=NoiseSpec(pixel_std=4.0), trials=300, seed=11)
    records, _ = run_simulation(cfg)
    xs, ys = [], []
    for r in records:
        xs.append(r.raw.x)
        ys.append(r.raw.y)
        assert min(xs) - 1e-12 <= r.filtered.x <= max(xs) + 1e-12
        assert min(ys) - 1e-12 <= r.filtered.y <= max(ys) + 1e-12


def test_target_outside_fov_is_config_error():
    with pytest.raises(ConfigError, match="field of view"):
        run_simulation(SimConfig(target=GroundPoint(0.0, 1000.0)))


@pytest.mark.parametrize("kwargs", [{"trials": 0}, {"seed": -1}, {"alpha": 0.0}])
def test_invalid_sim_config(kwargs):
    with pytest.raises(ValueError):
        SimConfig(**kwargs)


def test_variance_ratio_near_white_noise_value():
    ratios = []
    for seed in range(20):
        _, s = run_simulation(SimConfig(seed=seed))
        ratios.append(s.x.var_filtered / s.x.var_raw)
    mean_ratio = sum(ratios) / len(ratios)
    assert 0.0667 / 2 < mean_ratio < 0.0667 * 2


def test_csv_format():
    records, _ = run_simulation(SimConfig(trials=3, seed=1))
    text = records_to_csv(records)
    rows = list(csv.reader(io.StringIO(text)))
    assert text.splitlines()[0] == "trial,noisy_tilt_deg,noisy_height_m,raw_x,raw_y,filt_x,filt_y,status"
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 4
    assert rows[1][0] == "0" and rows[1][-1] == "ok"
    assert float(rows[1][1]) == pytest.approx(math.degrees(records[0].noisy_tilt), abs=1e-8)
    # first filtered sample equals its raw sample
    assert rows[1][3:5] == rows[1][5:7]


def test_csv_failed_row_has_empty_cells():
    text = records_to_csv([TrialRecord(0, math.nan, math.nan, failure="invalid pose")])
    assert text.splitlines()[1] == "0,,,,,,,failed:invalid pose"


def test_format_table_layout():
    _, stats = run_simulation(SimConfig(trials=5))
    lines = format_table(stats).splitlines()
    for col in ("Mean (original)", "Mean (filtering)", "Var. (original)", "Var. (filtering)"):
        assert col in lines[0]
    assert lines[1].startswith("X / m") and lines[2].startswith("Y / m")
    assert lines[3] == "failed trials: 0 of 5"
