"""First-moment observables of a spectrum in its current frame.

Energy, momentum, spin, orbital angular momentum, boost momentum and energy
centroid, collected into an :class:`ExpectationSet`.  Phase-derivative
quantities (orbital AM, centroid) are only defined on structured spectra;
clouds must go through tensor transport instead (see :mod:`relam.epl`).

For rings the axial total AM is the defining eigenvalue winding + spin
label; the orbital part stored in the set is obtained by subtracting the
per-component spin sum, which is the decomposition that actually depends on
the cone angle.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import NonTimelikeError, UnsupportedRepresentationError, ZeroNormError
from .minkowski import AmTensor, FourVector, minkowski_norm
from .spectrum import (
    GridSpectrum,
    RingSpectrum,
    SampleCloud,
    Spectrum,
    sample_arrays,
    uniform_mass,
)

__all__ = [
    "ExpectationSet",
    "four_momentum_expect",
    "spin_expect",
    "orbital_am_expect",
    "energy_moment_expect",
    "boost_momentum_expect",
    "energy_centroid",
    "effective_mass",
    "expectation_set",
    "classical_decompose",
]


@dataclass(frozen=True)
class ExpectationSet:
    """All first moments of a state in one frame.

    ``J = L + S`` whenever the spin-orbital split is known, and
    ``K = time * p - R_E * E`` always (the boost-momentum identity ties the
    centroid to the boost generator).  Sets produced by tensor transport
    carry no split (S and L are None): there is no frame-transport rule for
    the split without the underlying spectrum.
    """

    E: float
    p: np.ndarray
    J: np.ndarray
    K: np.ndarray
    R_E: np.ndarray
    time: float = 0.0
    norm: float = 1.0
    S: np.ndarray | None = None
    L: np.ndarray | None = None

    def __post_init__(self):
        for name in ("p", "J", "K", "R_E"):
            v = np.array(getattr(self, name), dtype=float)
            if v.shape != (3,):
                raise ValueError(f"{name} must be a 3-vector")
            v.setflags(write=False)
            object.__setattr__(self, name, v)
        for name in ("S", "L"):
            v = getattr(self, name)
            if v is not None:
                v = np.array(v, dtype=float)
                v.setflags(write=False)
                object.__setattr__(self, name, v)
        object.__setattr__(self, "E", float(self.E))
        object.__setattr__(self, "time", float(self.time))
        object.__setattr__(self, "norm", float(self.norm))
        if self.E <= 0:
            raise ValueError("mean energy must be positive")
        scale = max(1.0, self.E, float(np.max(np.abs(self.J))))
        if self.S is not None and self.L is not None:
            if np.max(np.abs(self.S + self.L - self.J)) > 1e-9 * scale:
                raise ValueError("J must equal L + S")
        k_check = self.time * self.p - self.R_E * self.E
        if np.max(np.abs(k_check - self.K)) > 1e-9 * scale * max(1.0, abs(self.time)):
            raise ValueError("K must equal time * p - R_E * E")

    @classmethod
    def from_parts(cls, E, p, S, L, R_E, time=0.0, norm=1.0) -> ExpectationSet:
        """Build a set from the split AM and the centroid; J and K derived."""
        S = np.asarray(S, dtype=float)
        L = np.asarray(L, dtype=float)
        p = np.asarray(p, dtype=float)
        R_E = np.asarray(R_E, dtype=float)
        return cls(
            E=E, p=p, J=S + L, K=time * p - R_E * float(E), R_E=R_E,
            time=time, norm=norm, S=S, L=L,
        )

    @property
    def four_momentum(self) -> FourVector:
        return FourVector(self.E, self.p)

    @property
    def am_tensor(self) -> AmTensor:
        return AmTensor(self.J, self.K)

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, np.ndarray):
                out[f.name] = [float(x) for x in v]
            else:
                out[f.name] = v
        return out


def _normalized_arrays(spec: Spectrum):
    arr = sample_arrays(spec)
    dens = arr.weight * np.abs(arr.amplitude) ** 2
    total = float(np.sum(dens))
    if total <= 0:
        raise ZeroNormError("spectrum has zero total norm")
    return arr, dens, total


def four_momentum_expect(spec: Spectrum) -> FourVector:
    """Mean (E, p) with the invariant measure; exact four-vector under boosts."""
    arr, dens, total = _normalized_arrays(spec)
    return FourVector(float(dens @ arr.omega) / total, (dens @ arr.k) / total)


def spin_expect(spec: Spectrum, axis=(0.0, 0.0, 1.0)) -> np.ndarray:
    """Weighted per-component spin vector.

    Massless components contribute helicity along their own propagation
    direction; massive components carry a rest-frame spin ``sigma`` along
    ``axis`` (the ring axis, if the spectrum is a ring), transported to the
    lab by the standard momentum-dependent tilt.
    """
    arr, dens, total = _normalized_arrays(spec)
    if isinstance(spec, RingSpectrum):
        axis = spec.axis
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    if arr.mass == 0.0:
        khat = arr.k / arr.omega[:, None]
        per = arr.spin[:, None] * khat
    else:
        s0 = arr.spin[:, None] * a
        p_dot = arr.k @ a * arr.spin
        per = (arr.mass / arr.omega)[:, None] * s0 + (
            p_dot / (arr.omega * (arr.omega + arr.mass))
        )[:, None] * arr.k
    return (dens @ per) / total


def orbital_am_expect(spec: Spectrum) -> np.ndarray:
    """Orbital AM of the amplitude structure, a* (-i k x grad_k) a.

    Rings give exactly winding * axis (the azimuthal derivative is analytic
    and the transverse parts vanish by symmetry).  Grids use second-order
    central differences.  Clouds have no usable phase structure.
    """
    if isinstance(spec, RingSpectrum):
        return float(spec.winding) * spec.axis
    if isinstance(spec, GridSpectrum):
        dens_w = spec.weight_grid()
        a = spec.amplitude
        norm = float(np.sum(dens_w * np.abs(a) ** 2))
        if norm <= 0:
            raise ZeroNormError("spectrum has zero total norm")
        da_dx, da_dy = np.gradient(a, spec.kx, spec.ky, edge_order=2)
        kxg, kyg = np.meshgrid(spec.kx, spec.ky, indexing="ij")
        kz = spec.kz_offset
        # (k x grad)_i with the axial derivative absent (amplitude is
        # independent of the uniform kz offset).
        cross_x = -kz * da_dy
        cross_y = kz * da_dx
        cross_z = kxg * da_dy - kyg * da_dx
        conj_a = np.conj(a)
        comps = [
            float(np.sum(dens_w * np.real(conj_a * (-1j) * c)))
            for c in (cross_x, cross_y, cross_z)
        ]
        return np.array(comps) / norm
    raise UnsupportedRepresentationError(
        "orbital AM needs a structured spectrum (ring or grid); "
        "boost the expectation set instead of the cloud"
    )


def energy_moment_expect(spec: Spectrum) -> np.ndarray:
    """First moment of position weighted by energy, <r E>, at time zero.

    Evaluated in k-space as the Hermitian-symmetrized form
    Re[ sum w a* (i grad_k)(omega a) ].  Rings are symmetric about their
    axis, so the transverse moment vanishes; the axial moment of an
    unbounded beam is taken as zero by convention.
    """
    if isinstance(spec, RingSpectrum):
        return np.zeros(3)
    if isinstance(spec, GridSpectrum):
        dens_w = spec.weight_grid()
        a = spec.amplitude
        norm = float(np.sum(dens_w * np.abs(a) ** 2))
        if norm <= 0:
            raise ZeroNormError("spectrum has zero total norm")
        om = spec.omega_grid()
        target = om * a
        dt_dx, dt_dy = np.gradient(target, spec.kx, spec.ky, edge_order=2)
        conj_a = np.conj(a)
        rx = float(np.sum(dens_w * np.real(conj_a * 1j * dt_dx)))
        ry = float(np.sum(dens_w * np.real(conj_a * 1j * dt_dy)))
        return np.array([rx, ry, 0.0]) / norm
    raise UnsupportedRepresentationError(
        "energy centroid needs a structured spectrum (ring or grid); "
        "boost the expectation set instead of the cloud"
    )


def boost_momentum_expect(spec: Spectrum, time: float = 0.0) -> np.ndarray:
    """K = time * <p> - <r E>(time); constant in time for free packets."""
    return -energy_moment_expect(spec)


def energy_centroid(spec: Spectrum, time: float = 0.0) -> np.ndarray:
    """R_E at the given time; drifts with the mean velocity <p>/<E>."""
    p4 = four_momentum_expect(spec)
    return (energy_moment_expect(spec) + time * p4.spatial) / p4.t


def effective_mass(p4: FourVector) -> float:
    """sqrt of the invariant norm of the mean four-momentum.

    Positive for any physical multi-wave spectrum; a negative norm is an
    inconsistent state and is rejected.
    """
    n = minkowski_norm(p4)
    if n < 0:
        raise NonTimelikeError(f"mean four-momentum has negative norm {n:.3e}")
    return float(np.sqrt(n))


def expectation_set(spec: Spectrum, time: float = 0.0) -> ExpectationSet:
    """Assemble the full first-moment set of a structured spectrum.

    Rings: the axial total AM is (winding + spin_label) by construction of
    the eigenstate, transverse components vanish by symmetry, and the
    orbital part is J - S.  Grids are scalar, so J = L.
    """
    if isinstance(spec, SampleCloud):
        raise UnsupportedRepresentationError(
            "clouds carry no phase structure; compute the set in a structured "
            "frame and transport it"
        )
    p4 = four_momentum_expect(spec)
    norm = 1.0
    if isinstance(spec, RingSpectrum):
        S = spin_expect(spec)
        J = (spec.winding + spec.spin_label) * spec.axis
        L = J - S
        R_E = time * p4.spatial / p4.t
    else:
        S = np.zeros(3)
        L = orbital_am_expect(spec)
        J = L
        R_E = (energy_moment_expect(spec) + time * p4.spatial) / p4.t
    return ExpectationSet(
        E=p4.t,
        p=p4.spatial,
        J=J,
        K=time * p4.spatial - R_E * p4.t,
        R_E=R_E,
        time=time,
        norm=norm,
        S=S,
        L=L,
    )


def classical_decompose(particles):
    """Point-particle reference decomposition.

    ``particles`` is an iterable of (r, v, m) with momenta m*v.  Returns
    (J_total, J_int, J_ext, center_of_mass), splitting about the center of
    mass exactly as for any distributed system.
    """
    rs = np.array([np.asarray(r, dtype=float) for r, _, _ in particles])
    vs = np.array([np.asarray(v, dtype=float) for _, v, _ in particles])
    ms = np.array([float(m) for _, _, m in particles])
    if np.sum(ms) <= 0:
        raise ValueError("total mass must be positive")
    ps = ms[:, None] * vs
    j_total = np.sum(np.cross(rs, ps), axis=0)
    center = (ms @ rs) / np.sum(ms)
    p_total = np.sum(ps, axis=0)
    j_ext = np.cross(center, p_total)
    return j_total, j_total - j_ext, j_ext, center
