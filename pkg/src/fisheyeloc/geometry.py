"""Coordinate frames shared by projection and localization.

Frames
------
ground
    Planar frame under the camera, origin at the camera's vertical
    footprint, x east and y north.
world
    Camera-centred frame with the same x/y axes as the ground frame and z
    pointing from the camera down to the ground, so the ground plane is
    ``z = height``.
camera
    Camera-centred frame with z along the optical axis.  It is the world
    frame rotated about the shared y axis by the tilt angle.

All angles are radians.  Vectors are plain ``float64`` arrays of shape (3,).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateDirectionError


class GroundPoint(NamedTuple):
    """Target position on the ground plane, metres."""

    x: float
    y: float


@dataclass(frozen=True)
class CameraPose:
    """Camera height above ground (m) and tilt between world and camera z axes (rad)."""

    height: float
    tilt: float

    def __post_init__(self):
        if not (math.isfinite(self.height) and self.height > 0):
            raise ValueError(f"camera height must be positive, got {self.height!r}")
        if not (math.isfinite(self.tilt) and 0.0 <= self.tilt < math.pi / 2):
            raise ValueError(f"tilt must lie in [0, pi/2), got {self.tilt!r}")

    @classmethod
    def from_degrees(cls, height: float, tilt_deg: float) -> "CameraPose":
        return cls(height=float(height), tilt=math.radians(tilt_deg))


def tilt_rotation(tilt: float) -> np.ndarray:
    """Rotation taking world-frame vectors into the camera frame.

    ``[[cos b, 0, -sin b], [0, 1, 0], [sin b, 0, cos b]]`` for tilt ``b``.
    """
    c, s = math.cos(tilt), math.sin(tilt)
    return np.array([[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def world_to_camera(R: np.ndarray, p) -> np.ndarray:
    return R @ np.asarray(p, dtype=float)


def camera_dir_to_world(R: np.ndarray, v) -> np.ndarray:
    # inverse of a rotation is its transpose
    return R.T @ np.asarray(v, dtype=float)


def direction_angles(v) -> tuple[float, float]:
    """Incidence angle from +z and azimuth in the x/y plane of a direction.

    Returns ``(theta, phi)`` with ``theta`` in [0, pi] and ``phi`` in
    (-pi, pi].  The azimuth uses the two-argument arctangent so the sign of
    y survives; it is 0 for a ray on the z axis.
    """
    x, y, z = (float(a) for a in v)
    norm = math.sqrt(x * x + y * y + z * z)
    if not norm > 0.0 or not math.isfinite(norm):
        raise DegenerateDirectionError(f"norm = {norm!r}")
    # same angle as acos(z / norm), without the cancellation near the axis
    theta = math.atan2(math.hypot(x, y), z)
    phi = math.atan2(y, x) if (x != 0.0 or y != 0.0) else 0.0
    if phi <= -math.pi:
        phi = math.pi
    return theta, phi


def direction_from_angles(theta: float, phi: float) -> np.ndarray:
    """Unit vector with incidence ``theta`` and azimuth ``phi``."""
    st = math.sin(theta)
    return np.array([math.cos(phi) * st, math.sin(phi) * st, math.cos(theta)])
