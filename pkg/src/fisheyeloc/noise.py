"""Gaussian measurement noise and first-order low-pass smoothing.

Random streams are ``numpy.random.Generator`` objects.  Each simulation trial
owns its own stream, derived from ``(seed, trial_index)`` by
:func:`trial_rng`, and draws exactly four standard normals in this order:

1. tilt
2. height
3. pixel u
4. pixel v

The pixel draws are made even when ``pixel_std`` is zero so that turning
pixel noise on or off never shifts the pose noise of a given trial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .camera import PixelPoint
from .geometry import CameraPose

MIN_HEIGHT = 0.01


@dataclass(frozen=True)
class NoiseSpec:
    """Gaussian error model for one localization measurement.

    Attributes
    ----------
    tilt_mean, tilt_std : float
        Mean and standard deviation of the measured tilt, degrees.
    height_std : float
        Standard deviation of the additive (zero-mean) height error, metres.
    pixel_std : float
        Standard deviation of the detection error, pixels, applied to u
        and v independently.
    """

    tilt_mean: float = 37.0
    tilt_std: float = 0.1
    height_std: float = 0.5
    pixel_std: float = 0.0

    def __post_init__(self):
        for name in ("tilt_std", "height_std", "pixel_std"):
            value = getattr(self, name)
            if not (value >= 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a finite value >= 0, got {value!r}")

    @classmethod
    def noiseless(cls, tilt_mean: float = 37.0) -> "NoiseSpec":
        return cls(tilt_mean=tilt_mean, tilt_std=0.0, height_std=0.0, pixel_std=0.0)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for trial ``index`` of a run seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))


def sample_noisy_pose(spec: NoiseSpec, true_height: float, rng: np.random.Generator) -> CameraPose:
    z_tilt = rng.standard_normal()
    z_height = rng.standard_normal()
    tilt_deg = spec.tilt_mean + spec.tilt_std * z_tilt
    height = max(true_height + spec.height_std * z_height, MIN_HEIGHT)
    return CameraPose(height=height, tilt=math.radians(tilt_deg))


def sample_noisy_pixel(spec: NoiseSpec, p: PixelPoint, rng: np.random.Generator) -> PixelPoint:
    z_u = rng.standard_normal()
    z_v = rng.standard_normal()
    return PixelPoint(p[0] + spec.pixel_std * z_u, p[1] + spec.pixel_std * z_v)


class LowPassFilter:
    """First-order recursive low-pass filter.

    ``out = alpha * x + (1 - alpha) * prev``.  The first sample passes
    through unchanged and seeds the filter memory.
    """

    def __init__(self, alpha: float = 0.125):
        if not (0.0 < alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {alpha!r}")
        self.alpha = float(alpha)
        self.prev_output: float | None = None

    @property
    def initialized(self) -> bool:
        return self.prev_output is not None

    def step(self, x: float) -> float:
        if self.prev_output is None:
            out = float(x)
        else:
            # alpha*x + (1 - alpha)*prev, rearranged to be exact on constant input
            out = self.prev_output + self.alpha * (x - self.prev_output)
        self.prev_output = out
        return out

    __call__ = step

    def reset(self):
        self.prev_output = None


def lowpass(values, alpha: float = 0.125) -> np.ndarray:
    """Filter a whole series; returns an array of the same length."""
    f = LowPassFilter(alpha)
    return np.array([f.step(x) for x in values], dtype=float)


def stationary_variance_ratio(alpha: float) -> float:
    """Output/input variance of the filter driven by white noise, ``alpha / (2 - alpha)``."""
    return alpha / (2.0 - alpha)
