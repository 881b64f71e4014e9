"""Minkowski four-vectors with signature (+, -, -, -).

All operations accept contravariant components; index lowering happens
inside the dot product and the slash contraction, never in user code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class FourVector:
    """Contravariant real four-vector (t, x, y, z) in natural units."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.t, self.x, self.y, self.z):
            if not math.isfinite(c):
                raise DomainError(f"non-finite four-vector component: {c}")

    @classmethod
    def from_array(cls, a) -> "FourVector":
        a = np.asarray(a, dtype=float)
        if a.shape != (4,):
            raise DomainError(f"expected 4 components, got shape {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def from_spatial(cls, t: float, xyz) -> "FourVector":
        xyz = np.asarray(xyz, dtype=float)
        return cls(float(t), float(xyz[0]), float(xyz[1]), float(xyz[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z], dtype=float)

    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def spatial_norm(self) -> float:
        return float(np.linalg.norm(self.spatial()))

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t + other.t, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.t - other.t, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "FourVector":
        return FourVector(-self.t, -self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "FourVector":
        return FourVector(self.t * s, self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def norm2(self) -> float:
        """Minkowski square p.p."""
        return minkowski_dot(self, self)


def _components(v):
    if isinstance(v, FourVector):
        return v.as_array()
    a = np.asarray(v)
    if a.shape != (4,):
        raise DomainError(f"expected 4 components, got shape {a.shape}")
    return a


def minkowski_dot(a, b):
    """a0*b0 - a.b under signature (+,-,-,-).

    Accepts FourVector or any length-4 array; complex arrays are allowed
    (polarization vectors), in which case the result is complex and no
    conjugation is applied.
    """
    av = _components(a)
    bv = _components(b)
    return av[0] * bv[0] - av[1] * bv[1] - av[2] * bv[2] - av[3] * bv[3]


def boost_z(E_over_m: float) -> np.ndarray:
    """Lorentz boost matrix along z with gamma = E/m."""
    g = float(E_over_m)
    if g < 1.0:
        raise DomainError(f"gamma must be >= 1, got {g}")
    b = math.sqrt(1.0 - 1.0 / (g * g))
    L = np.eye(4)
    L[0, 0] = L[3, 3] = g
    L[0, 3] = L[3, 0] = g * b
    return L


def on_shell(mass: float, p3, backward: bool = False) -> FourVector:
    """Four-momentum (E, p3) with E = +sqrt(|p3|^2 + m^2)."""
    p3 = np.asarray(p3, dtype=float)
    E = math.sqrt(float(p3 @ p3) + mass * mass)
    return FourVector.from_spatial(E, p3)


def check_on_shell(p: FourVector, mass: float, tol: float = 1e-10) -> None:
    dev = abs(p.norm2() - mass * mass)
    if dev > tol * max(mass * mass, 1.0):
        raise DomainError(
            f"momentum off shell: p^2 - m^2 = {p.norm2() - mass * mass:.3e}")


def check_lightlike(k: FourVector, mass_scale: float = 1.0,
                    tol: float = 1e-10) -> None:
    if abs(k.norm2()) > tol * max(mass_scale * mass_scale, 1.0):
        raise DomainError(f"momentum not lightlike: k^2 = {k.norm2():.3e}")
