"""Generic radially symmetric fisheye model.

The lens maps a ray at incidence angle ``theta`` from the optical axis to a
point at radius

    r(theta) = k1*theta + k2*theta**3 + k3*theta**5 + k4*theta**7 + k5*theta**9

on the lens plane (lens units), at the same azimuth as the ray.  Lens-plane
points are converted to pixels with ``u = mu*x + u0``, ``v = mv*y + v0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    BehindCameraError,
    IncidenceAngleOutOfRange,
    OutsideFieldOfViewError,
    RadiusOutsideLensError,
)
from .geometry import (
    CameraPose,
    GroundPoint,
    direction_angles,
    direction_from_angles,
    tilt_rotation,
    world_to_camera,
)

# relative slack on the lens-radius bound, absorbs round-off from a
# project -> pixel -> lens round trip at exactly theta_max
_RADIUS_SLACK = 1e-12


class LensPoint(NamedTuple):
    x: float
    y: float


class PixelPoint(NamedTuple):
    """Pixel coordinates, origin at the top-left corner of the image."""

    u: float
    v: float


@dataclass(frozen=True)
class CameraIntrinsics:
    """Principal point, pixel scales, distortion polynomial and field of view.

    Defaults are the calibrated values of the reference camera: a 640x480
    sensor with the principal point at its centre, 188 px per lens unit,
    ``k1 = 3.55``, ``k2 = 0.03`` and a 150 degree full field of view.
    """

    u0: float = 320.0
    v0: float = 240.0
    mu: float = 188.0
    mv: float = 188.0
    k1: float = 3.55
    k2: float = 0.03
    k3: float = 0.0
    k4: float = 0.0
    k5: float = 0.0
    theta_max: float = math.radians(75.0)
    width: int = 640
    height: int = 480

    def __post_init__(self):
        if not (self.mu > 0 and self.mv > 0):
            raise ValueError("pixel scales mu and mv must be positive")
        if not (0.0 < self.theta_max <= math.pi / 2):
            raise ValueError("theta_max must lie in (0, pi/2]")
        if not (self.width > 0 and self.height > 0):
            raise ValueError("image width and height must be positive")
        grid = np.linspace(0.0, self.theta_max, 2001)
        if not np.all(_dpoly(self.coefficients, grid) > 0):
            raise ValueError(
                "r(theta) must be strictly increasing on [0, theta_max]; "
                f"coefficients {self.coefficients} are not"
            )

    @property
    def coefficients(self) -> tuple[float, float, float, float, float]:
        return (self.k1, self.k2, self.k3, self.k4, self.k5)

    @property
    def r_max(self) -> float:
        """Lens radius of the widest admissible ray."""
        return float(_poly(self.coefficients, self.theta_max))


def _poly(k, theta):
    t = theta * theta
    return theta * (k[0] + t * (k[1] + t * (k[2] + t * (k[3] + t * k[4]))))


def _dpoly(k, theta):
    t = theta * theta
    return k[0] + t * (3 * k[1] + t * (5 * k[2] + t * (7 * k[3] + t * 9 * k[4])))


def r_of_theta(c: CameraIntrinsics, theta):
    """Lens radius for incidence angle ``theta``. Accepts scalars or arrays."""
    th = np.asarray(theta, dtype=float)
    if np.any(~(th >= 0.0)) or np.any(th > c.theta_max):
        raise IncidenceAngleOutOfRange(
            f"theta must lie in [0, {c.theta_max:.6f}] rad"
        )
    r = _poly(c.coefficients, th)
    return float(r) if np.ndim(r) == 0 else r


def theta_of_r(c: CameraIntrinsics, r: float, tol: float = 1e-12, max_iter: int = 100) -> float:
    """Invert the lens polynomial: the unique ``theta`` in [0, theta_max] with r(theta) = r.

    Newton's method from ``r / k1`` inside the bracket [0, theta_max].  The
    bracket shrinks around the root every iteration and a bisection step
    replaces any Newton step that would leave it, so convergence does not
    depend on the starting point.
    """
    r = float(r)
    r_max = c.r_max
    if not (r >= 0.0) or r > r_max * (1.0 + _RADIUS_SLACK):
        raise RadiusOutsideLensError(f"r = {r!r}, lens image ends at {r_max:.6f}")
    if r == 0.0:
        return 0.0
    if r >= r_max:
        return c.theta_max

    k = c.coefficients
    lo, hi = 0.0, c.theta_max
    theta = min(max(r / c.k1, lo), hi)
    for _ in range(max_iter):
        f = _poly(k, theta) - r
        if f == 0.0:
            return theta
        if f > 0.0:
            hi = theta
        else:
            lo = theta
        new = theta - f / _dpoly(k, theta)
        if not (lo < new < hi):
            new = 0.5 * (lo + hi)
        if abs(new - theta) < tol:
            return new
        theta = new
    return theta


def lens_to_pixel(c: CameraIntrinsics, p: LensPoint) -> PixelPoint:
    return PixelPoint(c.mu * p[0] + c.u0, c.mv * p[1] + c.v0)


def pixel_to_lens(c: CameraIntrinsics, p: PixelPoint) -> LensPoint:
    return LensPoint((p[0] - c.u0) / c.mu, (p[1] - c.v0) / c.mv)


def in_frame(c: CameraIntrinsics, p: PixelPoint) -> bool:
    """True if the pixel lies on the ``width`` x ``height`` sensor."""
    return 0.0 <= p[0] < c.width and 0.0 <= p[1] < c.height


def project(c: CameraIntrinsics, pose: CameraPose, g: GroundPoint) -> PixelPoint:
    """Pixel at which a ground target is imaged by a camera at ``pose``.

    Raises
    ------
    BehindCameraError
        The target lies on or behind the lens plane.
    OutsideFieldOfViewError
        The incidence angle exceeds ``c.theta_max``.
    """
    a_w = np.array([g[0], g[1], pose.height], dtype=float)
    a_c = world_to_camera(tilt_rotation(pose.tilt), a_w)
    if a_c[2] <= 0.0:
        raise BehindCameraError(f"optical-axis depth {a_c[2]:.6g} m")
    theta, phi = direction_angles(a_c)
    if theta > c.theta_max:
        raise OutsideFieldOfViewError(
            f"incidence {math.degrees(theta):.3f} deg > {math.degrees(c.theta_max):.3f} deg"
        )
    r = r_of_theta(c, theta)
    return lens_to_pixel(c, LensPoint(r * math.cos(phi), r * math.sin(phi)))


def pixel_to_ray(c: CameraIntrinsics, p: PixelPoint) -> np.ndarray:
    """Unit direction, in the camera frame, of the ray imaged at pixel ``p``."""
    x, y = pixel_to_lens(c, p)
    r_c = math.hypot(x, y)
    phi_c = math.atan2(y, x) if r_c > 0.0 else 0.0
    theta_c = theta_of_r(c, r_c)
    return direction_from_angles(theta_c, phi_c)
