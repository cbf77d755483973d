"""Special-relativistic value algebra.

Four-vectors, pure boosts, and the antisymmetric angular-momentum tensor in
its frame representation (J, K).  Conventions used everywhere in the package:

* metric signature (+, -, -, -), natural units c = 1;
* ``boost_four_vector(v, b)`` returns the components of ``v`` as seen from a
  frame moving with velocity ``b.velocity``, so a mass at rest, (m, 0), maps
  to (gamma*m, -gamma*m*u).

All operations are pure and the value types are immutable, so everything
here may be called concurrently without locking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidBoostError

__all__ = [
    "FourVector",
    "Boost",
    "AmTensor",
    "boost_four_vector",
    "boost_am_tensor",
    "pl_from_tensor",
    "minkowski_norm",
    "minkowski_dot",
]


def _vec3(x) -> np.ndarray:
    v = np.array(x, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    v.setflags(write=False)
    return v


@dataclass(frozen=True)
class FourVector:
    """A (t, r) pair; ``t`` is the time-like component (energy, time, ...)."""

    t: float
    spatial: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "spatial", _vec3(self.spatial))

    @classmethod
    def of(cls, t, x, y, z) -> FourVector:
        return cls(t, np.array([x, y, z], dtype=float))

    def as_array(self) -> np.ndarray:
        return np.concatenate(([self.t], self.spatial))

    def __repr__(self):
        x, y, z = (float(v) for v in self.spatial)
        return f"FourVector(t={self.t!r}, spatial=({x!r}, {y!r}, {z!r}))"


@dataclass(frozen=True)
class Boost:
    """A pure Lorentz boost, parameterized by the frame velocity u, |u| < 1."""

    velocity: np.ndarray

    def __post_init__(self):
        u = _vec3(self.velocity)
        if float(u @ u) >= 1.0:
            raise InvalidBoostError(f"boost speed |u| = {np.sqrt(u @ u):.6g} >= 1")
        object.__setattr__(self, "velocity", u)

    @property
    def speed(self) -> float:
        return float(np.sqrt(self.velocity @ self.velocity))

    @property
    def gamma(self) -> float:
        return 1.0 / np.sqrt(1.0 - float(self.velocity @ self.velocity))

    @property
    def inverse(self) -> Boost:
        """Boost that undoes this one (opposite velocity)."""
        return Boost(-self.velocity)


@dataclass(frozen=True)
class AmTensor:
    """Angular-momentum tensor in a frame: rotation part ``j``, boost part ``k``."""

    j: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "j", _vec3(self.j))
        object.__setattr__(self, "k", _vec3(self.k))

    def invariants(self) -> tuple[float, float]:
        """The two boost-invariant quadratic scalars (j.k, |j|^2 - |k|^2)."""
        return float(self.j @ self.k), float(self.j @ self.j - self.k @ self.k)


def minkowski_norm(v: FourVector) -> float:
    """t^2 - |r|^2 under the (+,-,-,-) signature."""
    return float(v.t * v.t - v.spatial @ v.spatial)


def minkowski_dot(a: FourVector, b: FourVector) -> float:
    return float(a.t * b.t - a.spatial @ b.spatial)


def _split(vec: np.ndarray, u: np.ndarray, u2: float):
    par = ((vec @ u) / u2) * u
    return par, vec - par


def boost_four_vector(v: FourVector, b: Boost) -> FourVector:
    """Components of ``v`` observed from a frame moving with velocity ``b.velocity``.

    The parallel spatial part becomes gamma*(r_par - t*u), the perpendicular
    part is untouched, and t' = gamma*(t - u.r).  A zero-velocity boost is an
    exact identity (bit-for-bit).
    """
    u = b.velocity
    u2 = float(u @ u)
    if u2 == 0.0:
        return v
    g = b.gamma
    t = g * (v.t - float(u @ v.spatial))
    r_par, r_perp = _split(v.spatial, u, u2)
    return FourVector(t, g * (r_par - v.t * u) + r_perp)


def boost_am_tensor(t: AmTensor, b: Boost) -> AmTensor:
    """Transform (J, K) to a frame moving with velocity ``b.velocity``.

    Equivalent to conjugating the rank-2 tensor with the boost matrix:
    J' = J_par + gamma*(J_perp - u x K), K' = K_par + gamma*(K_perp + u x J).
    """
    u = b.velocity
    u2 = float(u @ u)
    if u2 == 0.0:
        return t
    g = b.gamma
    j_par, j_perp = _split(t.j, u, u2)
    k_par, k_perp = _split(t.k, u, u2)
    j_new = j_par + g * (j_perp - np.cross(u, t.k))
    k_new = k_par + g * (k_perp + np.cross(u, t.j))
    return AmTensor(j_new, k_new)


def pl_from_tensor(t: AmTensor, p: FourVector) -> FourVector:
    """Contract the AM tensor with a four-momentum into its spin four-vector.

    Returns (p.J, E*J - p x K).  The result is Minkowski-orthogonal to ``p``
    for any inputs, by antisymmetry of the underlying contraction.
    """
    e, pv = p.t, p.spatial
    return FourVector(float(pv @ t.j), e * t.j - np.cross(pv, t.k))
