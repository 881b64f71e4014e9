import numpy as np
import pytest

from fqed import algebra
from fqed.errors import DomainError
from fqed.fourvec import METRIC, FourVector, minkowski_dot

rng = np.random.default_rng(42)


def test_clifford_algebra():
    for mu in range(4):
        for nu in range(4):
            anti = (algebra.GAMMA[mu] @ algebra.GAMMA[nu]
                    + algebra.GAMMA[nu] @ algebra.GAMMA[mu])
            target = 2.0 * METRIC[mu, nu] * np.eye(4)
            assert np.max(np.abs(anti - target)) <= 1e-14


def test_gamma_examples():
    assert np.allclose(algebra.gamma(0) @ algebra.gamma(0), np.eye(4))
    assert np.allclose(algebra.gamma(1) @ algebra.gamma(1), -np.eye(4))


def test_gamma_index_range():
    with pytest.raises(DomainError):
        algebra.gamma(4)
    with pytest.raises(DomainError):
        algebra.sigma(-1)


def test_slash_square_identity():
    for _ in range(20):
        p = FourVector(*rng.normal(size=4))
        sq = algebra.slash(p) @ algebra.slash(p)
        assert np.allclose(sq, p.norm2() * np.eye(4), atol=1e-12)


def test_sigma_slash_determinant():
    # det(sigma . p) = p^2 for the 2x2 Pauli contraction
    for _ in range(10):
        p = FourVector(*rng.normal(size=4))
        assert np.isclose(np.linalg.det(algebra.sigma_slash(p)),
                          p.norm2(), atol=1e-12)


def test_big_sigma_zero_component():
    assert np.allclose(algebra.big_sigma(0), 2.0 * np.eye(4))


def test_trace_cyclicity():
    ms = [rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
          for _ in range(5)]
    base = algebra.trace_product(ms)
    for k in range(1, 5):
        rot = ms[k:] + ms[:k]
        assert abs(algebra.trace_product(rot) - base) <= 1e-12 * abs(base)


def test_trace_empty_rejected():
    with pytest.raises(DomainError):
        algebra.trace_product([])


def test_trace_of_two_slashes():
    p = FourVector(*rng.normal(size=4))
    q = FourVector(*rng.normal(size=4))
    tr = algebra.trace_product([algebra.slash(p), algebra.slash(q)])
    assert abs(tr - 4.0 * minkowski_dot(p, q)) <= 1e-12


def test_odd_trace_vanishes():
    p = FourVector(*rng.normal(size=4))
    q = FourVector(*rng.normal(size=4))
    r = FourVector(*rng.normal(size=4))
    tr = algebra.trace_product([algebra.slash(p), algebra.slash(q),
                                algebra.slash(r)])
    assert abs(tr) <= 1e-12


def test_bilinear_current_is_vector():
    u = rng.normal(size=4) + 1j * rng.normal(size=4)
    bar = algebra.dirac_adjoint(u)
    c = algebra.bilinear_current(bar, u)
    # zbar gamma^mu z is real for any z
    assert np.max(np.abs(c.imag)) <= 1e-12


def test_minkowski_dot_conventions():
    a = FourVector(1.0, 2.0, 3.0, 4.0)
    assert np.isclose(minkowski_dot(a, a), 1.0 - 4.0 - 9.0 - 16.0)
    assert np.isclose(minkowski_dot(a.as_array(), a.as_array()),
                      a.norm2())
