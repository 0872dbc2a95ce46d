"""
Fisheye projection of ground targets
====================================

A camera 10 m above flat ground, tilted 37 degrees from vertical, images
points on the ground through a wide-angle lens.  This script walks the
forward chain for one target and then sweeps the lens curve.
"""
import math

import numpy as np

from fisheyeloc import (
    CameraIntrinsics,
    CameraPose,
    GroundPoint,
    direction_angles,
    in_frame,
    project,
    r_of_theta,
    theta_of_r,
    tilt_rotation,
    world_to_camera,
)

cam = CameraIntrinsics()
pose = CameraPose.from_degrees(height=10.0, tilt_deg=37.0)
target = GroundPoint(4.0, 3.0)

###############################################################################
# Step by step: world point, camera point, incidence/azimuth, lens radius.

a_w = np.array([target.x, target.y, pose.height])
a_c = world_to_camera(tilt_rotation(pose.tilt), a_w)
theta, phi = direction_angles(a_c)
print("camera-frame point:", np.round(a_c, 4))
print(f"incidence {math.degrees(theta):.3f} deg, azimuth {math.degrees(phi):.3f} deg")
print(f"lens radius {r_of_theta(cam, theta):.4f}")

pixel = project(cam, pose, target)
print(f"pixel ({pixel.u:.3f}, {pixel.v:.3f}), on sensor: {in_frame(cam, pixel)}")

###############################################################################
# The lens curve is nearly linear for this camera (k2 is small), so the
# radius is close to equidistant.  Inverting it recovers the angle.

for deg in (0, 15, 30, 45, 60, 75):
    th = math.radians(deg)
    r = r_of_theta(cam, th)
    print(f"{deg:3d} deg -> r = {r:.4f} ({cam.mu * r:7.1f} px)  -> {math.degrees(theta_of_r(cam, r)):.6f} deg")

###############################################################################
# Only about 27 degrees of incidence fit in the 320 px half-width, although
# the lens accepts up to 75 degrees.

print(f"r(theta_max) = {cam.r_max:.4f} lens units = {cam.mu * cam.r_max:.1f} px")
print(f"half-width limit: {math.degrees(theta_of_r(cam, 320 / cam.mu)):.2f} deg")
