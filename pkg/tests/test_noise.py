import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fisheyeloc import (
    LowPassFilter,
    NoiseSpec,
    PixelPoint,
    lowpass,
    sample_noisy_pixel,
    sample_noisy_pose,
    stationary_variance_ratio,
    trial_rng,
)
from fisheyeloc.simulation import lowpass_mean_weights


def test_noiseless_pose_is_exact():
    pose = sample_noisy_pose(NoiseSpec.noiseless(37.0), 10.0, trial_rng(5, 0))
    assert pose.height == 10.0
    assert pose.tilt == math.radians(37.0)


def test_same_seed_same_pose():
    spec = NoiseSpec()
    a = sample_noisy_pose(spec, 10.0, trial_rng(42, 3))
    b = sample_noisy_pose(spec, 10.0, trial_rng(42, 3))
    assert a == b
    assert a != sample_noisy_pose(spec, 10.0, trial_rng(42, 4))


def test_height_clamped():
    spec = NoiseSpec(height_std=1000.0)
    rng = np.random.default_rng(0)
    heights = [sample_noisy_pose(spec, 0.5, rng).height for _ in range(200)]
    assert min(heights) == 0.01


def test_pose_noise_statistics():
    spec = NoiseSpec(tilt_mean=37.0, tilt_std=0.1, height_std=0.5)
    rng = np.random.default_rng(2024)
    poses = [sample_noisy_pose(spec, 10.0, rng) for _ in range(100_000)]
    tilt = np.degrees([p.tilt for p in poses])
    height = np.array([p.height for p in poses])
    assert abs(tilt.mean() - 37.0) < 0.002
    assert abs(tilt.std() / 0.1 - 1) < 0.05
    assert abs(height.mean() - 10.0) < 0.01
    assert abs(height.std() / 0.5 - 1) < 0.05


def test_pixel_noise():
    p = PixelPoint(147.0, 423.7)
    assert sample_noisy_pixel(NoiseSpec(pixel_std=0.0), p, trial_rng(1, 1)) == p
    spec = NoiseSpec(pixel_std=4.0)
    assert sample_noisy_pixel(spec, p, trial_rng(9, 9)) == sample_noisy_pixel(spec, p, trial_rng(9, 9))
    rng = np.random.default_rng(7)
    samples = np.array([sample_noisy_pixel(spec, p, rng) for _ in range(100_000)])
    for axis in range(2):
        assert abs(samples[:, axis].std() / 4.0 - 1) < 0.05
        assert abs(samples[:, axis].mean() - p[axis]) < 0.05


def test_draw_order_is_tilt_height_u_v():
    spec = NoiseSpec(tilt_mean=30.0, tilt_std=1.0, height_std=1.0, pixel_std=1.0)
    z = trial_rng(3, 8).standard_normal(4)
    rng = trial_rng(3, 8)
    pose = sample_noisy_pose(spec, 100.0, rng)
    px = sample_noisy_pixel(spec, PixelPoint(0.0, 0.0), rng)
    assert math.degrees(pose.tilt) == pytest.approx(30.0 + z[0], abs=1e-12)
    assert pose.height == pytest.approx(100.0 + z[1], abs=1e-12)
    assert px == pytest.approx((z[2], z[3]), abs=1e-12)


@pytest.mark.parametrize("field", ["tilt_std", "height_std", "pixel_std"])
def test_negative_std_rejected(field):
    with pytest.raises(ValueError):
        NoiseSpec(**{field: -0.1})


@pytest.mark.parametrize("alpha", [0.0, -0.1, 1.5])
def test_alpha_range(alpha):
    with pytest.raises(ValueError):
        LowPassFilter(alpha)


def test_first_sample_passes_through():
    f = LowPassFilter(0.125)
    assert not f.initialized
    assert f(5.0) == 5.0
    assert f.initialized


def test_constant_stream_is_fixed_point():
    assert np.all(lowpass([2.5] * 50, 0.125) == 2.5)


def test_single_step_value():
    f = LowPassFilter(0.125)
    f.step(0.0)
    assert f.step(8.0) == 1.0


def test_step_response_closed_form():
    alpha, c = 0.125, 3.0
    f = LowPassFilter(alpha)
    f.step(0.0)
    for k in range(60):
        assert f.step(c) == pytest.approx(c * (1 - (1 - alpha) ** (k + 1)), rel=1e-13)


def test_reset():
    f = LowPassFilter(0.5)
    f.step(1.0)
    f.reset()
    assert f.step(7.0) == 7.0


@given(
    xs=st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=200),
    alpha=st.floats(0.001, 1.0),
)
def test_output_is_convex_combination(xs, alpha):
    out = lowpass(xs, alpha)
    lo, hi = np.minimum.accumulate(xs), np.maximum.accumulate(xs)
    tol = 1e-9 * (1 + np.abs(xs).max())
    assert np.all(out >= lo - tol) and np.all(out <= hi + tol)


def test_white_noise_variance_ratio():
    x = np.random.default_rng(99).standard_normal(100_000)
    ratio = lowpass(x, 0.125).var() / x.var()
    assert stationary_variance_ratio(0.125) == pytest.approx(0.0666667, abs=1e-6)
    assert abs(ratio / stationary_variance_ratio(0.125) - 1) < 0.2


@given(xs=st.lists(st.floats(-100, 100), min_size=1, max_size=120), alpha=st.floats(0.01, 1.0))
def test_mean_weights_reproduce_filtered_mean(xs, alpha):
    w = lowpass_mean_weights(len(xs), alpha)
    assert w.sum() == pytest.approx(1.0)
    assert w @ np.asarray(xs) == pytest.approx(lowpass(xs, alpha).mean(), abs=1e-9)
