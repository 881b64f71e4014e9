"""Free wave functions: electron u/v spinors and the photon internal states.

Electron spinors (Dirac-Pauli representation, chi quantized along z):

    u(p,s) = sqrt((E+m)/(2E)) [ chi_s ; (sigma.p/(E+m)) chi_s ]
    v(p,s) = sqrt((E+m)/(2E)) [ (sigma.p/(E+m)) chi_s ; chi_s ]

so u^dag u = v^dag v = 1 and (slash(p) -+ m) annihilates u / v.

Photon internal states live in C^2 (x) C^2. Along the propagation axis:

    plus          |uu>            omega = +k   (positive helicity)
    minus         |dd>            omega = -k   (stored as written; the
                                  amplitude layer reads it as the
                                  opposite-helicity forward wave)
    longitudinal  (|ud>+|du>)/sqrt2, omega = 0, k != 0
    vacuum        (|ud>+|du>)/sqrt2, omega = k = 0

Arbitrary axes are reached by the spin-1/2 (x) spin-1/2 rotation
U (x) U with U in SU(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra
from .algebra import BIG_SIGMA, GAMMA, SIGMA
from .errors import DomainError
from .fourvec import FourVector, check_on_shell

_CHI = {+1: np.array([1.0, 0.0], dtype=complex),
        -1: np.array([0.0, 1.0], dtype=complex)}

PHOTON_KINDS = ("plus", "minus", "longitudinal", "vacuum")


def _spin_key(s) -> int:
    # accepts +-1/2 or +-1
    if s in (+1, -1):
        return int(s)
    if abs(abs(float(s)) - 0.5) < 1e-12:
        return +1 if s > 0 else -1
    raise DomainError(f"spin label must be +-1/2, got {s}")


@dataclass(frozen=True)
class DiracSpinor:
    components: np.ndarray          # 4 complex
    momentum: FourVector
    spin: int                       # +1 for s=+1/2, -1 for s=-1/2
    backward: bool                  # False: u spinor, True: v spinor

    def bar(self) -> np.ndarray:
        return self.components.conj() @ GAMMA[0]


@dataclass(frozen=True)
class PhotonSpinor:
    components: np.ndarray          # 4 complex in C^2 (x) C^2
    omega: float                    # energy read off the plane-wave phase
    kvec: np.ndarray                # 3-momentum read off the phase
    kind: str
    axis: np.ndarray                # unit propagation axis

    def phase_momentum(self) -> FourVector:
        """(p0, pvec) entering the wave-equation residual."""
        return FourVector.from_spatial(self.omega, self.kvec)


def electron_spinor(p: FourVector, s, mass: float = 1.0,
                    backward: bool = False,
                    tol: float = 1e-10) -> DiracSpinor:
    """Normalized u (forward) or v (backward) spinor at on-shell p.

    p0 > 0 always; the time direction is carried by the backward flag.
    """
    check_on_shell(p, mass, tol)
    if p.t <= 0:
        raise DomainError(f"p0 must be positive, got {p.t}")
    sk = _spin_key(s)
    E = p.t
    chi = _CHI[sk]
    sp = (p.x * SIGMA[1] + p.y * SIGMA[2] + p.z * SIGMA[3]) / (E + mass)
    norm = math.sqrt((E + mass) / (2.0 * E))
    if backward:
        comp = norm * np.concatenate([sp @ chi, chi])
    else:
        comp = norm * np.concatenate([chi, sp @ chi])
    return DiracSpinor(comp, p, sk, backward)


def helicity_spinor(p: FourVector, helicity, mass: float = 1.0,
                    backward: bool = False) -> DiracSpinor:
    """Spinor with chi rotated so the spin axis is along p-hat."""
    sk = _spin_key(helicity)
    n = p.spatial()
    kn = np.linalg.norm(n)
    if kn == 0.0:
        return electron_spinor(p, sk, mass, backward)
    n = n / kn
    U = _su2_to_axis(n)
    chi = U @ _CHI[sk]
    check_on_shell(p, mass)
    E = p.t
    sp = (p.x * SIGMA[1] + p.y * SIGMA[2] + p.z * SIGMA[3]) / (E + mass)
    norm = math.sqrt((E + mass) / (2.0 * E))
    if backward:
        comp = norm * np.concatenate([sp @ chi, chi])
    else:
        comp = norm * np.concatenate([chi, sp @ chi])
    return DiracSpinor(comp, p, sk, backward)


def _su2_to_axis(axis: np.ndarray) -> np.ndarray:
    """SU(2) element rotating z-hat into the given unit axis."""
    ct = float(np.clip(axis[2], -1.0, 1.0))
    theta = math.acos(ct)
    if abs(theta) < 1e-15:
        return np.eye(2, dtype=complex)
    if abs(theta - math.pi) < 1e-15:
        # rotate about x by pi
        m = np.array([1.0, 0.0, 0.0])
    else:
        m = np.cross([0.0, 0.0, 1.0], axis)
        m = m / np.linalg.norm(m)
    sm = m[0] * SIGMA[1] + m[1] * SIGMA[2] + m[2] * SIGMA[3]
    return math.cos(theta / 2) * np.eye(2) - 1j * math.sin(theta / 2) * sm


_BASE_SPINOR = {
    "plus": np.array([1, 0, 0, 0], dtype=complex),
    "minus": np.array([0, 0, 0, 1], dtype=complex),
    "longitudinal": np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2),
    "vacuum": np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2),
}


def photon_state(kind: str, k: float, axis=(0.0, 0.0, 1.0)) -> PhotonSpinor:
    """One of the four internal photon solutions, propagating along axis."""
    if kind not in PHOTON_KINDS:
        raise DomainError(f"unknown photon kind: {kind}")
    axis = np.asarray(axis, dtype=float)
    if abs(np.linalg.norm(axis) - 1.0) > 1e-10:
        raise DomainError("axis must be a unit 3-vector")
    if kind == "vacuum":
        if k != 0.0:
            raise DomainError("vacuum state requires k = 0")
    elif k <= 0.0:
        raise DomainError(f"{kind} state requires k > 0")

    U = _su2_to_axis(axis)
    comp = np.kron(U, U) @ _BASE_SPINOR[kind]
    if kind == "plus":
        omega, kvec = k, k * axis
    elif kind == "minus":
        omega, kvec = -k, k * axis
    elif kind == "longitudinal":
        omega, kvec = 0.0, k * axis
    else:
        omega, kvec = 0.0, np.zeros(3)
    return PhotonSpinor(comp, omega, kvec, kind, axis)


def wave_equation_residual(state: PhotonSpinor) -> float:
    """|| (Sigma^0 p0 - Sigma.pvec) a || with (p0, pvec) off the phase."""
    op = algebra.big_sigma_slash(state.phase_momentum())
    return float(np.linalg.norm(op @ state.components))


def photon_current(state: PhotonSpinor) -> FourVector:
    """Real bilinear a^dag Sigma^mu a (velocity-type current)."""
    a = state.components
    vals = [float(np.real(a.conj() @ BIG_SIGMA[mu] @ a)) for mu in range(4)]
    return FourVector(*vals)


def transverse_frame(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Right-handed (e1, e2) with e1 x e2 = axis, chosen deterministically."""
    axis = np.asarray(axis, dtype=float)
    ref = np.array([0.0, 0.0, 1.0])
    if abs(abs(axis @ ref) - 1.0) < 1e-12:
        e1 = np.array([1.0, 0.0, 0.0])
    else:
        e1 = np.cross(ref, axis)
        e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    return e1, e2


def polarization_vector(state: PhotonSpinor) -> np.ndarray:
    """Circular polarization four-vector for a transverse state.

    eps_+- = (0, e1 +- i e2)/sqrt2 with (e1, e2, axis) right-handed, so
    eps.k = 0 and eps.eps* = -1. Longitudinal/vacuum states couple
    through Sigma^0 instead and are rejected here.
    """
    if state.kind not in ("plus", "minus"):
        raise DomainError(
            f"{state.kind} state has no transverse polarization vector")
    e1, e2 = transverse_frame(state.axis)
    sgn = 1.0 if state.kind == "plus" else -1.0
    eps3 = (e1 + sgn * 1j * e2) / math.sqrt(2)
    return np.concatenate([[0.0 + 0.0j], eps3])


def rotate_photon(state: PhotonSpinor, U: np.ndarray,
                  new_axis: np.ndarray) -> PhotonSpinor:
    """Apply the spin-1/2 (x) spin-1/2 rotation U (x) U to a state."""
    comp = np.kron(U, U) @ state.components
    R = _su2_vector_rotation(U)
    return PhotonSpinor(comp, state.omega, R @ state.kvec, state.kind,
                        np.asarray(new_axis, dtype=float))


def _su2_vector_rotation(U: np.ndarray) -> np.ndarray:
    """SO(3) matrix induced by U: R_ij sigma_j = U^dag sigma_i U."""
    R = np.empty((3, 3))
    for i in range(3):
        M = U.conj().T @ SIGMA[i + 1] @ U
        for j in range(3):
            R[i, j] = float(np.real(np.trace(M @ SIGMA[j + 1])) / 2.0)
    return R
