"""Dirac, Pauli and photon-space matrix algebra.

Gamma matrices are in the Dirac-Pauli representation with signature
(+,-,-,-):

    gamma^0 = diag(1, 1, -1, -1)
    gamma^i = [[0, sigma_i], [-sigma_i, 0]]

The photon internal space is C^2 (x) C^2 in the basis
(|uu>, |ud>, |du>, |dd>); the generators acting on it are the
Kronecker sums Sigma^mu = sigma^mu (x) 1 + 1 (x) sigma^mu.

Everything here is a pure function over immutable numpy arrays; module
level constants are never mutated.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .fourvec import FourVector, _components

_I2 = np.eye(2, dtype=complex)

SIGMA = np.empty((4, 2, 2), dtype=complex)
SIGMA[0] = _I2
SIGMA[1] = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA[2] = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA[3] = np.array([[1, 0], [0, -1]], dtype=complex)

GAMMA = np.empty((4, 4, 4), dtype=complex)
GAMMA[0] = np.block([[_I2, np.zeros((2, 2))], [np.zeros((2, 2)), -_I2]])
for _i in (1, 2, 3):
    GAMMA[_i] = np.block([[np.zeros((2, 2)), SIGMA[_i]],
                          [-SIGMA[_i], np.zeros((2, 2))]])
GAMMA.setflags(write=False)
SIGMA.setflags(write=False)

BIG_SIGMA = np.empty((4, 4, 4), dtype=complex)
for _m in range(4):
    BIG_SIGMA[_m] = np.kron(SIGMA[_m], _I2) + np.kron(_I2, SIGMA[_m])
BIG_SIGMA.setflags(write=False)

I4 = np.eye(4, dtype=complex)
I4.setflags(write=False)


def _check_index(mu: int) -> int:
    if mu not in (0, 1, 2, 3):
        raise DomainError(f"Lorentz index out of range: {mu}")
    return mu


def gamma(mu: int) -> np.ndarray:
    """Dirac matrix gamma^mu, Dirac-Pauli representation."""
    return GAMMA[_check_index(mu)]


def sigma(mu: int) -> np.ndarray:
    """Pauli four-tuple sigma^mu = (1, sigma_vec)."""
    return SIGMA[_check_index(mu)]


def big_sigma(mu: int) -> np.ndarray:
    """Kronecker-sum generator on the photon internal space."""
    return BIG_SIGMA[_check_index(mu)]


def slash(p) -> np.ndarray:
    """gamma^mu p_mu = gamma^0 p^0 - gamma_vec . p_vec.

    Accepts a FourVector or a length-4 (possibly complex) array of
    contravariant components.
    """
    c = _components(p)
    return (c[0] * GAMMA[0] - c[1] * GAMMA[1]
            - c[2] * GAMMA[2] - c[3] * GAMMA[3])


def sigma_slash(p) -> np.ndarray:
    """sigma^mu p_mu on the photon/Pauli C^2 space."""
    c = _components(p)
    return (c[0] * SIGMA[0] - c[1] * SIGMA[1]
            - c[2] * SIGMA[2] - c[3] * SIGMA[3])


def big_sigma_slash(p) -> np.ndarray:
    """Sigma^mu p_mu on the photon internal C^2 (x) C^2 space."""
    c = _components(p)
    return (c[0] * BIG_SIGMA[0] - c[1] * BIG_SIGMA[1]
            - c[2] * BIG_SIGMA[2] - c[3] * BIG_SIGMA[3])


def trace_product(ms) -> complex:
    """Trace of the ordered product of 4x4 matrices.

    Cyclic-invariant; used for closed-fermion-loop evaluation and for
    the independent trace-theorem oracles in the tests.
    """
    ms = list(ms)
    if not ms:
        raise DomainError("trace_product of an empty list")
    acc = np.asarray(ms[0], dtype=complex)
    for m in ms[1:]:
        acc = acc @ m
    return complex(np.trace(acc))


def dirac_adjoint(spinor: np.ndarray) -> np.ndarray:
    """bar(psi) = psi^dagger gamma^0 as a row vector."""
    return spinor.conj() @ GAMMA[0]


def bilinear_current(bar_out: np.ndarray, u_in: np.ndarray) -> np.ndarray:
    """Contravariant current c^mu = bar(u_out) gamma^mu u_in."""
    return np.array([bar_out @ GAMMA[mu] @ u_in for mu in range(4)],
                    dtype=complex)
