"""TOML configuration with built-in defaults for the reference camera and experiment.

Example file::

    seed = 7
    trials = 90

    [intrinsics]
    u0 = 320.0
    k2 = 0.03
    theta_max_deg = 75.0

    [pose]
    height_m = 10.0
    tilt_deg = 37.0

    [noise]
    pixel_std_px = 4.0

Any key left out keeps its default.  Angles are degrees.
"""

from __future__ import annotations

import copy
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .camera import CameraIntrinsics
from .errors import ConfigError
from .geometry import CameraPose, GroundPoint
from .noise import NoiseSpec
from .simulation import SimConfig

DEFAULTS: dict[str, Any] = {
    "seed": 1,
    "trials": 90,
    "intrinsics": {
        "u0": 320.0,
        "v0": 240.0,
        "mu": 188.0,
        "mv": 188.0,
        "k1": 3.55,
        "k2": 0.03,
        "k3": 0.0,
        "k4": 0.0,
        "k5": 0.0,
        "theta_max_deg": 75.0,
        "width": 640,
        "height": 480,
    },
    "pose": {"height_m": 10.0, "tilt_deg": 37.0},
    "target": {"x": 4.0, "y": 3.0},
    "noise": {
        "tilt_mean_deg": 37.0,
        "tilt_std_deg": 0.1,
        "height_std_m": 0.5,
        "pixel_std_px": 0.0,
    },
    "filter": {"alpha": 0.125},
}

_INT_KEYS = {"seed", "trials", "intrinsics.width", "intrinsics.height"}


@dataclass(frozen=True)
class AppConfig:
    intrinsics: CameraIntrinsics
    pose: CameraPose
    target: GroundPoint
    noise: NoiseSpec
    alpha: float
    trials: int
    seed: int

    def sim_config(self) -> SimConfig:
        return SimConfig(
            intrinsics=self.intrinsics,
            true_pose=self.pose,
            target=self.target,
            noise=self.noise,
            alpha=self.alpha,
            trials=self.trials,
            seed=self.seed,
        )


def flat_keys(tree: Mapping[str, Any] = DEFAULTS, prefix: str = "") -> list[str]:
    """Dotted names of every leaf key, e.g. ``intrinsics.u0``."""
    keys = []
    for name, value in tree.items():
        dotted = f"{prefix}{name}"
        if isinstance(value, Mapping):
            keys.extend(flat_keys(value, dotted + "."))
        else:
            keys.append(dotted)
    return keys


def _coerce(key: str, value: Any) -> float | int:
    if isinstance(value, bool):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    if key in _INT_KEYS:
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        if not isinstance(value, int):
            try:
                value = int(str(value), 10)
            except ValueError:
                raise ConfigError(f"{key}: expected an integer, got {value!r}") from None
        return value
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: expected a number, got {value!r}") from None
    if not math.isfinite(out):
        raise ConfigError(f"{key}: must be finite, got {value!r}")
    return out


def merge(base: dict[str, Any], update: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    """Overlay ``update`` on ``base`` in place, rejecting unknown keys."""
    for name, value in update.items():
        dotted = f"{prefix}{name}"
        if name not in base:
            raise ConfigError(f"unknown configuration key {dotted!r}")
        if isinstance(base[name], dict):
            if not isinstance(value, Mapping):
                raise ConfigError(f"{dotted}: expected a table of keys")
            merge(base[name], value, dotted + ".")
        else:
            if isinstance(value, Mapping):
                raise ConfigError(f"{dotted}: expected a number, got a table")
            base[name] = _coerce(dotted, value)
    return base


def set_dotted(tree: dict[str, Any], key: str, value: Any) -> None:
    *parents, leaf = key.split(".")
    node = tree
    for p in parents:
        node = node.setdefault(p, {})
    node[leaf] = value


def load_config(path: str | Path | None = None, overrides: Mapping[str, Any] | None = None) -> AppConfig:
    """Defaults, then the TOML file at ``path``, then dotted-key ``overrides``."""
    tree = copy.deepcopy(DEFAULTS)
    if path is not None:
        try:
            with open(path, "rb") as fh:
                doc = tomllib.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {str(path)!r}: {exc.strerror}") from None
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"cannot parse config {str(path)!r}: {exc}") from None
        merge(tree, doc)
    if overrides:
        nested: dict[str, Any] = {}
        for key, value in overrides.items():
            set_dotted(nested, key, value)
        merge(tree, nested)
    return build(tree)


def build(tree: Mapping[str, Any]) -> AppConfig:
    i, p, t, n = tree["intrinsics"], tree["pose"], tree["target"], tree["noise"]
    try:
        intr = CameraIntrinsics(
            u0=i["u0"], v0=i["v0"], mu=i["mu"], mv=i["mv"],
            k1=i["k1"], k2=i["k2"], k3=i["k3"], k4=i["k4"], k5=i["k5"],
            theta_max=math.radians(i["theta_max_deg"]),
            width=i["width"], height=i["height"],
        )
    except ValueError as exc:
        raise ConfigError(f"intrinsics: {exc}") from None
    try:
        pose = CameraPose.from_degrees(p["height_m"], p["tilt_deg"])
    except ValueError as exc:
        raise ConfigError(f"pose: {exc}") from None
    try:
        noise = NoiseSpec(
            tilt_mean=n["tilt_mean_deg"],
            tilt_std=n["tilt_std_deg"],
            height_std=n["height_std_m"],
            pixel_std=n["pixel_std_px"],
        )
    except ValueError as exc:
        raise ConfigError(f"noise: {exc}") from None
    alpha = tree["filter"]["alpha"]
    if not (0.0 < alpha <= 1.0):
        raise ConfigError(f"filter.alpha: must lie in (0, 1], got {alpha!r}")
    if tree["trials"] < 1:
        raise ConfigError(f"trials: must be >= 1, got {tree['trials']!r}")
    if not (0 <= tree["seed"] < 2**64):
        raise ConfigError(f"seed: must be a 64-bit unsigned integer, got {tree['seed']!r}")
    return AppConfig(
        intrinsics=intr,
        pose=pose,
        target=GroundPoint(t["x"], t["y"]),
        noise=noise,
        alpha=alpha,
        trials=tree["trials"],
        seed=tree["seed"],
    )
