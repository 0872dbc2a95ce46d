"""Exception types raised by the geometry, localization and simulation code."""


class GeometryError(ValueError):
    """A geometric-domain failure (no finite coordinate exists)."""

    message = "geometric error"

    def __init__(self, detail: str = ""):
        text = self.message if not detail else f"{self.message}: {detail}"
        super().__init__(text)


class DegenerateDirectionError(GeometryError):
    message = "degenerate direction"


class IncidenceAngleOutOfRange(GeometryError):
    message = "incidence angle out of range"


class RadiusOutsideLensError(GeometryError):
    message = "radius outside lens image"


class OutsideFieldOfViewError(GeometryError):
    message = "target outside field of view"


class BehindCameraError(GeometryError):
    message = "target behind camera"


class NoGroundIntersectionError(GeometryError):
    message = "ray does not intersect ground"


class PixelOutsideFrameError(GeometryError):
    message = "pixel outside image frame"


class ConfigError(ValueError):
    """Malformed or inconsistent configuration."""


class NoSuccessfulTrialsError(RuntimeError):
    def __init__(self, detail: str = ""):
        super().__init__("no successful trials" + (f": {detail}" if detail else ""))
