"""Localize ground targets seen by a tilted fisheye camera.

A pixel detected in the image, together with the camera's height and tilt,
is back-projected through a polynomial fisheye model and intersected with the
ground plane.  The package also simulates the effect of Gaussian pose and
detection noise on that estimate and smooths it with a first-order low-pass
filter.
"""

__version__ = "0.1.0"

from .camera import (
    CameraIntrinsics,
    LensPoint,
    PixelPoint,
    in_frame,
    lens_to_pixel,
    pixel_to_lens,
    pixel_to_ray,
    project,
    r_of_theta,
    theta_of_r,
)
from .errors import (
    BehindCameraError,
    ConfigError,
    DegenerateDirectionError,
    GeometryError,
    IncidenceAngleOutOfRange,
    NoGroundIntersectionError,
    NoSuccessfulTrialsError,
    OutsideFieldOfViewError,
    PixelOutsideFrameError,
    RadiusOutsideLensError,
)
from .geometry import (
    CameraPose,
    GroundPoint,
    camera_dir_to_world,
    direction_angles,
    direction_from_angles,
    tilt_rotation,
    world_to_camera,
)
from .localization import localization_error, localize
from .noise import (
    LowPassFilter,
    NoiseSpec,
    lowpass,
    sample_noisy_pixel,
    sample_noisy_pose,
    stationary_variance_ratio,
    trial_rng,
)
from .simulation import (
    SimConfig,
    SimStats,
    TrialRecord,
    run_simulation,
    summarize,
)
