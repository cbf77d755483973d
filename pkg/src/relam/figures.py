"""Matplotlib rendering of fields and spectra to image files.

Used by the CLI report path; everything draws through the Agg backend so
runs are headless and repeatable.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import hsv_to_rgb

from .spectrum import Spectrum, sample_arrays
from .synthesis import FieldGrid, densities

__all__ = ["field_rgb", "render_field_png", "render_spectrum_png"]


def field_rgb(f: FieldGrid, brightness: str = "energy") -> np.ndarray:
    """RGB image of a field: hue is the phase, brightness the energy density
    (or |psi|), normalized to the frame maximum."""
    if brightness == "energy":
        value, _ = densities(f)
    elif brightness == "amplitude":
        value = np.abs(f.psi)
    else:
        raise ValueError(f"unknown brightness mode {brightness!r}")
    peak = float(np.max(value))
    v = value / peak if peak > 0 else value
    hue = (np.angle(f.psi) / (2.0 * np.pi)) % 1.0
    return hsv_to_rgb(np.stack([hue, np.ones_like(v), v], axis=-1))


def render_field_png(
    f: FieldGrid, path, brightness: str = "energy", title: str | None = None,
    marker: tuple[float, float] | None = None,
) -> None:
    """Save a phase-hue / brightness map of the field, with an optional
    centroid marker."""
    rgb = field_rgb(f, brightness)
    fig, ax = plt.subplots(figsize=(5.0, 4.6))
    ax.imshow(
        rgb.transpose(1, 0, 2),
        origin="lower",
        extent=(f.x[0], f.x[-1], f.y[0], f.y[-1]),
        interpolation="nearest",
    )
    if marker is not None:
        ax.plot([marker[0]], [marker[1]], "o", color="yellow", markersize=6)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_spectrum_png(spec: Spectrum, path, title: str | None = None) -> None:
    """Scatter the plane-wave samples in the (kx, ky) plane, hue = phase,
    size = weighted power."""
    arr = sample_arrays(spec)
    power = arr.weight * np.abs(arr.amplitude) ** 2
    phase = (np.angle(arr.amplitude) / (2.0 * np.pi)) % 1.0
    colors = hsv_to_rgb(
        np.stack([phase, np.ones_like(phase), np.ones_like(phase)], axis=-1)
    )
    peak = float(np.max(power))
    sizes = 4.0 + 60.0 * power / peak if peak > 0 else np.full_like(power, 4.0)
    fig, ax = plt.subplots(figsize=(5.0, 4.6))
    ax.scatter(arr.k[:, 0], arr.k[:, 1], c=colors, s=sizes, linewidths=0)
    ax.set_xlabel("$k_x$")
    ax.set_ylabel("$k_y$")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
