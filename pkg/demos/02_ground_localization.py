"""
Localizing a target from its pixel
==================================

Given the pixel where a target was detected and the camera's measured height
and tilt, recover the target's position on the ground.
"""
import math

import numpy as np

from fisheyeloc import (
    CameraIntrinsics,
    CameraPose,
    GroundPoint,
    NoGroundIntersectionError,
    PixelPoint,
    localization_error,
    localize,
    project,
)

cam = CameraIntrinsics()
pose = CameraPose.from_degrees(10.0, 37.0)

pixel = project(cam, pose, GroundPoint(4.0, 3.0))
print("exact pixel      ->", localize(cam, pose, pixel))
print("rounded (147.0, 423.7) ->", localize(cam, pose, PixelPoint(147.0, 423.7)))

###############################################################################
# Sensitivity: how far does the estimate move for small errors in each input?

truth = GroundPoint(4.0, 3.0)
for label, p, ps in [
    ("tilt +0.1 deg", pixel, CameraPose.from_degrees(10.0, 37.1)),
    ("height +0.5 m", pixel, CameraPose.from_degrees(10.5, 37.0)),
    ("pixel u +4 px", PixelPoint(pixel.u + 4, pixel.v), pose),
    ("pixel v +4 px", PixelPoint(pixel.u, pixel.v + 4), pose),
]:
    est = localize(cam, ps, p)
    print(f"{label:14s} -> ({est.x:.3f}, {est.y:.3f})  error {localization_error(truth, est):.3f} m")

###############################################################################
# A steep tilt sends part of the image above the horizon.  Those pixels do
# not correspond to any ground point.

steep = CameraPose.from_degrees(10.0, 70.0)
for u in np.linspace(320, 640, 5):
    try:
        g = localize(cam, steep, PixelPoint(u, 240))
        print(f"u = {u:5.1f}: ground ({g.x:9.2f}, {g.y:6.2f})")
    except NoGroundIntersectionError as exc:
        print(f"u = {u:5.1f}: {exc}")
