"""Shared geometry helpers, kept independent of the package's operator
machinery so covariance checks have an outside reference."""

import numpy as np


def rot3(axis: str, angle: float) -> np.ndarray:
    """Right-handed 3x3 rotation about a cardinal axis."""
    c, s = np.cos(angle), np.sin(angle)
    if axis == "x":
        return np.array([[1, 0, 0], [0, c, -s], [0, s, c]])
    if axis == "y":
        return np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]])
    if axis == "z":
        return np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]])
    raise ValueError(axis)


def to_cartesian(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def to_spherical(vec: np.ndarray) -> tuple[float, float]:
    theta = float(np.arccos(np.clip(vec[2], -1.0, 1.0)))
    phi = float(np.arctan2(vec[1], vec[0]) % (2 * np.pi))
    return theta, phi


def rotate_point(axis: str, angle: float, theta: float, phi: float):
    """Image of (theta, phi) under the active rotation by angle about axis."""
    return to_spherical(rot3(axis, angle) @ to_cartesian(theta, phi))
