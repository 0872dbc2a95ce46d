"""Ground-plane localization of a target seen at a pixel."""

from __future__ import annotations

import math

from .camera import CameraIntrinsics, PixelPoint, pixel_to_ray
from .errors import NoGroundIntersectionError
from .geometry import (
    CameraPose,
    GroundPoint,
    camera_dir_to_world,
    direction_angles,
    tilt_rotation,
)

# rays within this many radians of the horizon are rejected
HORIZON_GUARD = 1e-9


def localize(c: CameraIntrinsics, pose: CameraPose, p: PixelPoint) -> GroundPoint:
    """Intersect the ray through pixel ``p`` with the ground plane.

    The pixel is back-projected to a camera-frame ray, rotated into the
    world frame by the transpose of the tilt rotation, and scaled so that
    it descends ``pose.height`` metres::

        X = h * tan(theta_w) * cos(phi_w)
        Y = h * tan(theta_w) * sin(phi_w)

    Raises ``NoGroundIntersectionError`` for rays at or above the horizon and
    ``RadiusOutsideLensError`` for pixels beyond the lens image.
    """
    v_c = pixel_to_ray(c, p)
    v_w = camera_dir_to_world(tilt_rotation(pose.tilt), v_c)
    theta_w, phi_w = direction_angles(v_w)
    if theta_w >= math.pi / 2 - HORIZON_GUARD:
        raise NoGroundIntersectionError(
            f"world incidence {math.degrees(theta_w):.4f} deg"
        )
    reach = pose.height * math.tan(theta_w)
    return GroundPoint(reach * math.cos(phi_w), reach * math.sin(phi_w))


def localization_error(truth: GroundPoint, estimate: GroundPoint) -> float:
    """Euclidean distance between two ground points, metres."""
    return math.hypot(estimate[0] - truth[0], estimate[1] - truth[1])
