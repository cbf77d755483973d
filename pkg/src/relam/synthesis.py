"""Real-space scalar field synthesis and density-based moments.

This is the independent cross-check on the spectral machinery: any spectrum
is summed directly onto a 2D spatial grid (no FFT, no resampling, so boosted
clouds are handled exactly), the stress-tensor densities are formed, and
their integrals are compared against spectral expectation values.

The time derivative is synthesized analytically alongside the field, never
by finite differencing in time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryLeakageError, RelamError, ZeroNormError
from .spectrum import Spectrum, sample_arrays, uniform_mass

__all__ = [
    "GridConfig",
    "FieldGrid",
    "DensityMoments",
    "synthesize",
    "densities",
    "moments_from_field",
    "emit_field",
]

# |psi| at the grid edge may not exceed this fraction of the peak when
# integrating moments.
FIELD_BOUNDARY_DECAY = 1e-4

FIELD_CSV_COLUMNS = ("x", "y", "re", "im", "T00")


@dataclass(frozen=True)
class GridConfig:
    """Rectangular spatial grid: (min, max, n) per axis."""

    x: tuple[float, float, int]
    y: tuple[float, float, int]

    @classmethod
    def square(cls, half_width: float, n: int) -> GridConfig:
        return cls((-half_width, half_width, n), (-half_width, half_width, n))

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(self.x[0], self.x[1], self.x[2]),
            np.linspace(self.y[0], self.y[1], self.y[2]),
        )


@dataclass(frozen=True)
class FieldGrid:
    """Complex field and its analytic time derivative on a spatial grid."""

    x: np.ndarray
    y: np.ndarray
    time: float
    psi: np.ndarray
    dpsi_dt: np.ndarray
    mass: float

    def __post_init__(self):
        if self.psi.shape != (self.x.size, self.y.size) or self.psi.shape != self.dpsi_dt.shape:
            raise ValueError("field arrays must be shaped (len(x), len(y))")
        if np.any(np.diff(self.x) <= 0) or np.any(np.diff(self.y) <= 0):
            raise ValueError("grid axes must be strictly increasing")

    @property
    def cell(self) -> float:
        return float((self.x[1] - self.x[0]) * (self.y[1] - self.y[0]))


@dataclass(frozen=True)
class DensityMoments:
    """Integrals of the stress-tensor densities, per unit field norm."""

    E: float
    p: np.ndarray
    J: np.ndarray
    R_E: np.ndarray
    norm: float


def synthesize(spec: Spectrum, grid: GridConfig, time: float = 0.0) -> FieldGrid:
    """Direct summation of the spectrum onto the grid.

    psi(r, t) = sum_i w_i a_i exp(i (k_i . r - omega_i t)); the phases
    factorize over x and y, so each field is two complex matrix products.
    Components with k out of the grid plane contribute their in-plane phase
    (the grid lives at z = 0).
    """
    arr = sample_arrays(spec)
    x, y = grid.axes()
    coef = arr.weight * arr.amplitude * np.exp(-1j * arr.omega * time)
    ex = np.exp(1j * np.outer(x, arr.k[:, 0]))
    ey = np.exp(1j * np.outer(y, arr.k[:, 1]))
    psi = (ex * coef) @ ey.T
    dpsi = (ex * (coef * (-1j) * arr.omega)) @ ey.T
    return FieldGrid(x=x, y=y, time=float(time), psi=psi, dpsi_dt=dpsi, mass=arr.mass)


def densities(f: FieldGrid, mass: float | None = None):
    """Energy density and momentum density of the scalar field.

    T00 = |dt psi|^2 + |grad psi|^2 + m^2 |psi|^2, with the spatial gradient
    from second-order central differences; the momentum density is
    P = -2 Re(dt psi* grad psi), so a single plane wave gives P/T00 = k/omega
    pointwise.
    """
    m = f.mass if mass is None else float(mass)
    gx, gy = np.gradient(f.psi, f.x, f.y, edge_order=2)
    t00 = (
        np.abs(f.dpsi_dt) ** 2
        + np.abs(gx) ** 2
        + np.abs(gy) ** 2
        + m * m * np.abs(f.psi) ** 2
    )
    conj_dt = np.conj(f.dpsi_dt)
    px = -2.0 * np.real(conj_dt * gx)
    py = -2.0 * np.real(conj_dt * gy)
    return t00, np.stack([px, py])


def moments_from_field(f: FieldGrid, mass: float | None = None) -> DensityMoments:
    """Integrate the densities into mean energy, momentum, AM and centroid.

    Scaled per unit field norm (the conserved quadratic norm of the wave
    equation), which makes the results directly comparable with spectral
    expectation values.  Requires the field to have decayed at the boundary.
    """
    amp = np.abs(f.psi)
    peak = float(np.max(amp))
    if peak <= 0:
        raise ZeroNormError("field is identically zero")
    edge = max(
        float(np.max(amp[0, :])),
        float(np.max(amp[-1, :])),
        float(np.max(amp[:, 0])),
        float(np.max(amp[:, -1])),
    )
    if edge > FIELD_BOUNDARY_DECAY * peak:
        raise BoundaryLeakageError(
            f"field at grid boundary is {edge / peak:.2e} of peak "
            f"(limit {FIELD_BOUNDARY_DECAY:.0e}); enlarge the domain"
        )
    t00, (px, py) = densities(f, mass)
    cell = f.cell
    norm = float(np.sum(-np.imag(np.conj(f.psi) * f.dpsi_dt))) * cell
    if norm <= 0:
        raise ZeroNormError("field norm integral is not positive")
    xg, yg = np.meshgrid(f.x, f.y, indexing="ij")
    e_tot = float(np.sum(t00)) * cell
    p_vec = np.array([float(np.sum(px)), float(np.sum(py)), 0.0]) * cell
    j_z = float(np.sum(xg * py - yg * px)) * cell
    r_e = (
        np.array([float(np.sum(xg * t00)), float(np.sum(yg * t00)), 0.0]) * cell / e_tot
    )
    half = 2.0 * norm
    return DensityMoments(
        E=e_tot / half,
        p=p_vec / half,
        J=np.array([0.0, 0.0, j_z / half]),
        R_E=r_e,
        norm=norm,
    )


def _format_of(path, fmt: str | None) -> str:
    if fmt is not None:
        if fmt not in ("csv", "ppm"):
            raise RelamError(f"unknown field format {fmt!r} (csv or ppm)")
        return fmt
    suffix = str(path).rsplit(".", 1)
    if len(suffix) == 2 and suffix[1].lower() in ("csv", "ppm"):
        return suffix[1].lower()
    raise RelamError(
        f"cannot infer field format from path {str(path)!r}; pass format='csv' or 'ppm'"
    )


def emit_field(f: FieldGrid, path, fmt: str | None = None, brightness: str = "energy") -> None:
    """Write the field to ``path`` as CSV (x,y,re,im,T00) or a binary PPM.

    The PPM encodes phase as hue and either energy density or |psi| as
    brightness, each frame normalized to its own maximum.  Rows run from
    the top of the y-axis downward, columns along x.
    """
    which = _format_of(path, fmt)
    t00, _ = densities(f)
    try:
        if which == "csv":
            with open(path, "w", newline="") as fh:
                fh.write(",".join(FIELD_CSV_COLUMNS) + "\n")
                for i, xv in enumerate(f.x):
                    for j, yv in enumerate(f.y):
                        fh.write(
                            f"{xv!r},{yv!r},{f.psi[i, j].real!r},"
                            f"{f.psi[i, j].imag!r},{t00[i, j]!r}\n"
                        )
            return
        if brightness == "energy":
            value = t00
        elif brightness == "amplitude":
            value = np.abs(f.psi)
        else:
            raise RelamError(f"unknown brightness mode {brightness!r}")
        peak = float(np.max(value))
        v = value / peak if peak > 0 else value
        hue = (np.angle(f.psi) / (2.0 * np.pi)) % 1.0
        from matplotlib.colors import hsv_to_rgb

        hsv = np.stack([hue, np.ones_like(v), v], axis=-1)
        rgb = (hsv_to_rgb(hsv) * 255.0 + 0.5).astype(np.uint8)
        # image rows top-down in y, columns along x
        img = rgb.transpose(1, 0, 2)[::-1]
        with open(path, "wb") as fh:
            fh.write(f"P6\n{f.x.size} {f.y.size}\n255\n".encode("ascii"))
            fh.write(img.tobytes())
    except OSError as exc:
        raise RelamError(f"cannot write field to {str(path)!r}: {exc}") from exc
