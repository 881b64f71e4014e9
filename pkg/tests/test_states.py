import math

import numpy as np
import pytest

from fqed import algebra, states
from fqed.errors import DomainError
from fqed.fourvec import FourVector, on_shell

rng = np.random.default_rng(7)


def random_on_shell(mass=1.0, scale=1.0):
    p3 = rng.normal(scale=scale, size=3)
    return FourVector.from_spatial(math.sqrt(mass * mass + p3 @ p3), p3)


class TestElectronSpinors:

    def test_rest_frame_u(self):
        p = FourVector(1.0, 0.0, 0.0, 0.0)
        u = states.electron_spinor(p, +1).components
        assert np.allclose(u, [1, 0, 0, 0])

    def test_unit_norm(self):
        for _ in range(30):
            p = random_on_shell()
            for s in (+1, -1):
                for backward in (False, True):
                    st = states.electron_spinor(p, s, backward=backward)
                    assert abs(np.vdot(st.components, st.components)
                               - 1.0) <= 1e-12

    def test_ubar_u(self):
        p = random_on_shell()
        st = states.electron_spinor(p, +1)
        assert np.isclose(st.bar() @ st.components, 1.0 / p.t, atol=1e-12)
        sv = states.electron_spinor(p, +1, backward=True)
        assert np.isclose(sv.bar() @ sv.components, -1.0 / p.t, atol=1e-12)

    def test_dirac_equation_residual(self):
        for _ in range(200):
            p = random_on_shell(scale=2.0)
            u = states.electron_spinor(p, +1).components
            v = states.electron_spinor(p, -1, backward=True).components
            ru = (algebra.slash(p) - np.eye(4)) @ u
            rv = (algebra.slash(p) + np.eye(4)) @ v
            assert np.linalg.norm(ru) <= 1e-12
            assert np.linalg.norm(rv) <= 1e-12

    def test_uv_orthogonality(self):
        # ubar(p, s) v(p, s') = 0 at equal momentum
        p = random_on_shell()
        for s in (+1, -1):
            for sp in (+1, -1):
                u = states.electron_spinor(p, s)
                v = states.electron_spinor(p, sp, backward=True)
                assert abs(u.bar() @ v.components) <= 1e-12

    def test_off_shell_rejected(self):
        with pytest.raises(DomainError):
            states.electron_spinor(FourVector(2.0, 0.0, 0.0, 0.0), +1)

    def test_bad_spin_rejected(self):
        p = FourVector(1.0, 0.0, 0.0, 0.0)
        with pytest.raises(DomainError):
            states.electron_spinor(p, 2)

    def test_helicity_spinor_along_z(self):
        p = on_shell(1.0, [0.0, 0.0, 0.7])
        h = states.helicity_spinor(p, +1)
        e = states.electron_spinor(p, +1)
        assert np.allclose(h.components, e.components)


class TestPhotonStates:

    def test_unit_norm_and_residual(self):
        for kind in states.PHOTON_KINDS:
            k = 0.0 if kind == "vacuum" else 1.7
            st = states.photon_state(kind, k)
            assert abs(np.vdot(st.components, st.components) - 1.0) <= 1e-12
            assert states.wave_equation_residual(st) <= 1e-12

    def test_residual_under_random_axes(self):
        for _ in range(100):
            axis = rng.normal(size=3)
            axis /= np.linalg.norm(axis)
            for kind in states.PHOTON_KINDS:
                k = 0.0 if kind == "vacuum" else float(rng.uniform(0.1, 3))
                st = states.photon_state(kind, k, axis)
                assert states.wave_equation_residual(st) <= 1e-12

    def test_currents_along_z(self):
        plus = states.photon_current(states.photon_state("plus", 1.0))
        minus = states.photon_current(states.photon_state("minus", 1.0))
        assert np.allclose(plus.as_array(), [2, 0, 0, 2], atol=1e-12)
        assert np.allclose(minus.as_array(), [2, 0, 0, -2], atol=1e-12)
        lng = states.photon_current(states.photon_state("longitudinal", 1.0))
        assert np.allclose(lng.as_array(), [2, 0, 0, 0], atol=1e-12)

    def test_dispersion_bookkeeping(self):
        st = states.photon_state("plus", 1.3)
        assert st.omega == 1.3
        assert states.photon_state("minus", 1.3).omega == -1.3
        assert states.photon_state("longitudinal", 1.3).omega == 0.0

    def test_vacuum_requires_zero_k(self):
        with pytest.raises(DomainError):
            states.photon_state("vacuum", 0.5)
        with pytest.raises(DomainError):
            states.photon_state("plus", 0.0)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            states.photon_state("scalar", 1.0)

    def test_polarization_vector_z_axis(self):
        eps = states.polarization_vector(states.photon_state("plus", 1.0))
        s2 = 1.0 / math.sqrt(2)
        assert np.allclose(eps, [0, s2, 1j * s2, 0])

    def test_polarization_orthogonality(self):
        for _ in range(20):
            axis = rng.normal(size=3)
            axis /= np.linalg.norm(axis)
            st = states.photon_state("plus", 2.0, axis)
            eps = states.polarization_vector(st)
            k = np.concatenate([[2.0], st.kvec])
            from fqed.fourvec import minkowski_dot
            assert abs(minkowski_dot(eps, k)) <= 1e-12
            assert abs(minkowski_dot(eps, eps.conj()) + 1.0) <= 1e-12

    def test_longitudinal_has_no_polarization_vector(self):
        st = states.photon_state("longitudinal", 1.0)
        with pytest.raises(DomainError):
            states.polarization_vector(st)

    def test_rotation_consistency(self):
        # rotating the z-axis state must land on the direct construction
        axis = np.array([0.6, 0.0, 0.8])
        U = states._su2_to_axis(axis)
        base = states.photon_state("plus", 1.0)
        rotated = states.rotate_photon(base, U, axis)
        direct = states.photon_state("plus", 1.0, axis)
        phase = rotated.components @ direct.components.conj()
        assert abs(abs(phase) - 1.0) <= 1e-12
        assert np.allclose(rotated.components, phase * direct.components)

    def test_su2_vector_rotation_is_orthogonal(self):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        R = states._su2_vector_rotation(states._su2_to_axis(axis))
        assert np.allclose(R @ R.T, np.eye(3), atol=1e-12)
        assert np.allclose(R @ np.array([0.0, 0.0, 1.0]), axis, atol=1e-12)
