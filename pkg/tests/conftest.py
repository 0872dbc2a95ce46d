import math

import pytest

from fisheyeloc import CameraIntrinsics, CameraPose


@pytest.fixture
def cam():
    return CameraIntrinsics()


@pytest.fixture
def paper_pose():
    return CameraPose(height=10.0, tilt=math.radians(37.0))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
