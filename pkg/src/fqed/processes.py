"""Reduced tree-level matrix elements for the six radiative processes.

Conventions
-----------
* Reported values are invariant matrix elements: the (2pi)^4 delta^4 and
  all box factors are stripped into the NormalizationLedger attached to
  each result. Spinors are relativistically normalized internally
  (u-bar u = 2m); the box-normalization energy square roots live in
  the ledger, not in the number.
* The electromagnetic coupling enters as e = sqrt(4 pi alpha); the
  Compton-class values carry e^2, the external-Coulomb processes carry
  Z e^3 together with the static 1/|q|^2 kernel.
* Photon vertices use transverse polarization four-vectors (the
  eps-slash form of the final matrix elements); the raw Sigma-bilinears
  remain available in fqed.states as diagnostics.

Crossing
--------
A SubstitutionTable maps the external legs of a base process onto a
crossed one. Sign-flipped photon momenta conjugate the polarization
vector and enter the internal lines with their sign; external fermion
spinors are always built at the physical positive-energy momentum, with
the u/v character given by the table. apply_crossing evaluates the base
topology on the substituted legs and must reproduce the direct
evaluation of the target process.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import ledger as _ledger
from .algebra import GAMMA, I4, bilinear_current, slash
from .constants import ALPHA_DEFAULT
from .errors import DomainError, PoleError
from .fourvec import FourVector, minkowski_dot
from .states import electron_spinor, photon_state, polarization_vector

FERMION_POLE_THRESHOLD = 1e-6      # |q^2 - m^2| below this raises, units m^2
PHOTON_POLE_THRESHOLD = 1e-10      # |q^2| below this raises, units m^2

PROCESS_IDS = ("compton", "annihilation", "bremsstrahlung",
               "pair_production", "moller", "bhabha")

_FERMION_LABELS = {
    "compton": ("p_i", "p_f"),
    "annihilation": ("p_minus", "p_plus"),
    "bremsstrahlung": ("p_i", "p_f"),
    "pair_production": ("p_minus", "p_plus"),
    "moller": ("p_i1", "p_i2", "p_f1", "p_f2"),
    "bhabha": ("p_i_minus", "p_f_minus", "p_i_plus", "p_f_plus"),
}
_PHOTON_LABELS = {
    "compton": ("k_i", "k_f"),
    "annihilation": ("k_i", "k_f"),
    "bremsstrahlung": ("k_f",),
    "pair_production": ("k_i",),
    "moller": (),
    "bhabha": (),
}
# legs whose wave function enters conjugated (outgoing photons)
_EMITTED_PHOTONS = {
    "compton": ("k_f",),
    "annihilation": ("k_i", "k_f"),
    "bremsstrahlung": ("k_f",),
    "pair_production": (),
    "moller": (),
    "bhabha": (),
}
# positron legs (backward / v spinors)
_BACKWARD_FERMIONS = {
    "compton": (),
    "annihilation": ("p_plus",),
    "bremsstrahlung": (),
    "pair_production": ("p_plus",),
    "moller": (),
    "bhabha": ("p_i_plus", "p_f_plus"),
}
# (incoming, outgoing) for the conservation check; the external-Coulomb
# processes conserve energy only.
_CONSERVATION = {
    "compton": (("p_i", "k_i"), ("p_f", "k_f")),
    "annihilation": (("p_minus", "p_plus"), ("k_i", "k_f")),
    "moller": (("p_i1", "p_i2"), ("p_f1", "p_f2")),
    "bhabha": (("p_i_minus", "p_i_plus"), ("p_f_minus", "p_f_plus")),
}
_ENERGY_ONLY = {
    "bremsstrahlung": (("p_i",), ("p_f", "k_f")),
    "pair_production": (("k_i",), ("p_minus", "p_plus")),
}


def _sum_momenta(momenta, labels) -> FourVector:
    acc = FourVector(0.0, 0.0, 0.0, 0.0)
    for lab in labels:
        acc = acc + momenta[lab]
    return acc


@dataclass(frozen=True)
class KinematicConfig:
    """External kinematics of one process evaluation.

    momenta/spins/pols are keyed by leg label; spins are +-1 (meaning
    s = +-1/2), pols are 'plus' or 'minus'.
    """

    process: str
    momenta: dict[str, FourVector]
    spins: dict[str, int] = field(default_factory=dict)
    pols: dict[str, str] = field(default_factory=dict)
    Z: float = 1.0
    frame: str = "lab"
    mass: float = 1.0

    def validate(self, tol: float = 1e-10) -> None:
        if self.process not in PROCESS_IDS:
            raise DomainError(f"unknown process: {self.process}")
        m = self.mass
        for lab in _FERMION_LABELS[self.process]:
            p = self.momenta[lab]
            if abs(p.norm2() - m * m) > tol * m * m:
                raise DomainError(
                    f"{lab} off shell: p^2 - m^2 = {p.norm2() - m * m:.3e}")
        for lab in _PHOTON_LABELS[self.process]:
            k = self.momenta[lab]
            if abs(k.norm2()) > tol * m * m:
                raise DomainError(
                    f"{lab} not lightlike: k^2 = {k.norm2():.3e}")
        if self.process in _CONSERVATION:
            inc, out = _CONSERVATION[self.process]
            res = _sum_momenta(self.momenta, inc) - _sum_momenta(
                self.momenta, out)
            if np.linalg.norm(res.as_array()) > tol * m:
                raise DomainError(
                    f"4-momentum not conserved, residual {res.as_array()}")
        else:
            inc, out = _ENERGY_ONLY[self.process]
            de = (_sum_momenta(self.momenta, inc).t
                  - _sum_momenta(self.momenta, out).t)
            if abs(de) > tol * m:
                raise DomainError(f"energy not conserved, residual {de:.3e}")

    def conservation_residual(self) -> FourVector:
        if self.process in _CONSERVATION:
            inc, out = _CONSERVATION[self.process]
            return _sum_momenta(self.momenta, inc) - _sum_momenta(
                self.momenta, out)
        inc, out = _ENERGY_ONLY[self.process]
        de = (_sum_momenta(self.momenta, inc).t
              - _sum_momenta(self.momenta, out).t)
        return FourVector(de, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class ReducedAmplitude:
    value: complex
    ledger: _ledger.NormalizationLedger
    conservation: FourVector


_PREFACTORS = {
    "compton": _ledger.compton_prefactor,
    "annihilation": _ledger.pair_annihilation_prefactor,
    "bremsstrahlung": _ledger.bremsstrahlung_prefactor,
    "pair_production": _ledger.pair_production_prefactor,
    "moller": _ledger.moller_prefactor,
    "bhabha": _ledger.bhabha_prefactor,
}


# -- external legs ---------------------------------------------------------

def _u(p: FourVector, spin: int, mass: float,
       backward: bool = False) -> np.ndarray:
    """Relativistically normalized spinor (u-bar u = +-2m)."""
    st = electron_spinor(p, spin, mass, backward=backward)
    return math.sqrt(2.0 * p.t) * st.components


def _ubar(p: FourVector, spin: int, mass: float,
          backward: bool = False) -> np.ndarray:
    return (_u(p, spin, mass, backward).conj()) @ GAMMA[0]


def _eps(k: FourVector, pol: str, conjugate: bool) -> np.ndarray:
    kmag = k.spatial_norm()
    if kmag <= 0:
        raise DomainError("photon leg requires |k| > 0")
    axis = k.spatial() / kmag
    e = polarization_vector(photon_state(pol, kmag, axis))
    return e.conj() if conjugate else e


def _fermion_kernel(q: FourVector, mass: float) -> np.ndarray:
    """1/(slash(q) - m) rationalized, with the near-pole guard."""
    if abs(q.norm2() - mass * mass) < FERMION_POLE_THRESHOLD * mass * mass:
        raise PoleError(
            f"intermediate fermion too close to mass shell: "
            f"q^2 - m^2 = {q.norm2() - mass * mass:.3e}")
    return (slash(q) + mass * I4) / (q.norm2() - mass * mass)


def _photon_denom(q: FourVector, mass: float) -> float:
    q2 = float(q.norm2())
    if abs(q2) < PHOTON_POLE_THRESHOLD * mass * mass:
        raise PoleError(f"photon line at q^2 = {q2:.3e}")
    return q2


# -- core topologies (shared by direct evaluation and crossing) ------------

def _compton_core(bar_out, u_in, eps_abs, eps_em,
                  p_in: FourVector, k_abs: FourVector, k_em: FourVector,
                  mass: float, e2: float) -> complex:
    """bar_out [ eps_em 1/(p+k_abs-m) eps_abs
                 + eps_abs 1/(p-k_em-m) eps_em ] u_in * (-i e^2)."""
    s1 = slash(eps_em) @ _fermion_kernel(p_in + k_abs, mass) @ slash(eps_abs)
    s2 = slash(eps_abs) @ _fermion_kernel(p_in - k_em, mass) @ slash(eps_em)
    return complex(-1j * e2 * (bar_out @ (s1 + s2) @ u_in))


def _coulomb_core(bar_out, u_in, eps,
                  p_out: FourVector, p_in: FourVector, k: FourVector,
                  mass: float, Z: float, e3: float) -> complex:
    """External-Coulomb topology with static gamma^0 vertex.

    -Z e^3/|q|^2 * bar_out [ eps 1/(p_out+k-m) g0
                             + g0 1/(p_in-k-m) eps ] u_in * (-i),
    with q = spatial part of (k + p_out - p_in).
    """
    qvec = (k + p_out - p_in).spatial()
    q2 = float(qvec @ qvec)
    if q2 < PHOTON_POLE_THRESHOLD * mass * mass:
        raise PoleError(f"Coulomb pole: |q|^2 = {q2:.3e}")
    eps_sl = slash(eps)
    s1 = eps_sl @ _fermion_kernel(p_out + k, mass) @ GAMMA[0]
    s2 = GAMMA[0] @ _fermion_kernel(p_in - k, mass) @ eps_sl
    return complex(-1j * (-Z) * e3 / q2 * (bar_out @ (s1 + s2) @ u_in))


def _four_fermion_core(bar_a, u_a, bar_b, u_b, q_direct: FourVector,
                       bar_c, u_c, bar_d, u_d, q_exchange: FourVector,
                       mass: float, e2: float) -> complex:
    """[ (bar_a G u_a).(bar_b G u_b)/q_d^2
         - (bar_c G u_c).(bar_d G u_d)/q_e^2 ] * (-i e^2),
    G = gamma^mu, Minkowski-contracted currents."""
    t = _photon_denom(q_direct, mass)
    u = _photon_denom(q_exchange, mass)
    direct = minkowski_dot(bilinear_current(bar_a, u_a),
                           bilinear_current(bar_b, u_b)) / t
    exchange = minkowski_dot(bilinear_current(bar_c, u_c),
                             bilinear_current(bar_d, u_d)) / u
    return complex(-1j * e2 * (direct - exchange))


# -- direct amplitudes -----------------------------------------------------

def compton_amplitude(cfg: KinematicConfig,
                      alpha: float = ALPHA_DEFAULT) -> ReducedAmplitude:
    cfg.validate()
    m, mom = cfg.mass, cfg.momenta
    e2 = 4.0 * math.pi * alpha
    val = _compton_core(
        _ubar(mom["p_f"], cfg.spins["p_f"], m),
        _u(mom["p_i"], cfg.spins["p_i"], m),
        _eps(mom["k_i"], cfg.pols["k_i"], conjugate=False),
        _eps(mom["k_f"], cfg.pols["k_f"], conjugate=True),
        mom["p_i"], mom["k_i"], mom["k_f"], m, e2)
    return ReducedAmplitude(val, _PREFACTORS["compton"](),
                            cfg.conservation_residual())


def pair_annihilation_amplitude(cfg: KinematicConfig,
                                alpha: float = ALPHA_DEFAULT
                                ) -> ReducedAmplitude:
    cfg.validate()
    m, mom = cfg.mass, cfg.momenta
    e2 = 4.0 * math.pi * alpha
    # vbar(p+)[ eps_f* 1/(p_- - k_i - m) eps_i*
    #           + eps_i* 1/(p_- - k_f - m) eps_f* ]u(p_-)
    val = _compton_core(
        _ubar(mom["p_plus"], cfg.spins["p_plus"], m, backward=True),
        _u(mom["p_minus"], cfg.spins["p_minus"], m),
        _eps(mom["k_i"], cfg.pols["k_i"], conjugate=True),
        _eps(mom["k_f"], cfg.pols["k_f"], conjugate=True),
        mom["p_minus"], -mom["k_i"], mom["k_f"], m, e2)
    return ReducedAmplitude(val, _PREFACTORS["annihilation"](),
                            cfg.conservation_residual())


def bremsstrahlung_amplitude(cfg: KinematicConfig,
                             alpha: float = ALPHA_DEFAULT
                             ) -> ReducedAmplitude:
    cfg.validate()
    m, mom = cfg.mass, cfg.momenta
    e2 = 4.0 * math.pi * alpha
    val = _coulomb_core(
        _ubar(mom["p_f"], cfg.spins["p_f"], m),
        _u(mom["p_i"], cfg.spins["p_i"], m),
        _eps(mom["k_f"], cfg.pols["k_f"], conjugate=True),
        mom["p_f"], mom["p_i"], mom["k_f"], m, cfg.Z, e2 * math.sqrt(e2))
    return ReducedAmplitude(val, _PREFACTORS["bremsstrahlung"](),
                            cfg.conservation_residual())


def pair_production_amplitude(cfg: KinematicConfig,
                              alpha: float = ALPHA_DEFAULT
                              ) -> ReducedAmplitude:
    cfg.validate()
    m, mom = cfg.mass, cfg.momenta
    if mom["k_i"].t < 2.0 * m:
        raise DomainError(f"photon energy {mom['k_i'].t} below pair "
                          f"threshold {2.0 * m}")
    e2 = 4.0 * math.pi * alpha
    # vbar(p+)[ eps_i 1/(p_+ - k_i - m) g0
    #           + g0 1/(-p_- + k_i - m) eps_i ]u(p_-) / |q|^2
    val = _coulomb_core(
        _ubar(mom["p_plus"], cfg.spins["p_plus"], m, backward=True),
        _u(mom["p_minus"], cfg.spins["p_minus"], m),
        _eps(mom["k_i"], cfg.pols["k_i"], conjugate=False),
        mom["p_plus"], -mom["p_minus"], -mom["k_i"], m, cfg.Z,
        e2 * math.sqrt(e2))
    return ReducedAmplitude(val, _PREFACTORS["pair_production"](),
                            cfg.conservation_residual())


def electron_electron_amplitude(cfg: KinematicConfig,
                                alpha: float = ALPHA_DEFAULT
                                ) -> ReducedAmplitude:
    cfg.validate()
    m, mom, s = cfg.mass, cfg.momenta, cfg.spins
    e2 = 4.0 * math.pi * alpha
    val = _four_fermion_core(
        _ubar(mom["p_f2"], s["p_f2"], m), _u(mom["p_i2"], s["p_i2"], m),
        _ubar(mom["p_f1"], s["p_f1"], m), _u(mom["p_i1"], s["p_i1"], m),
        mom["p_i1"] - mom["p_f1"],
        _ubar(mom["p_f1"], s["p_f1"], m), _u(mom["p_i2"], s["p_i2"], m),
        _ubar(mom["p_f2"], s["p_f2"], m), _u(mom["p_i1"], s["p_i1"], m),
        mom["p_i1"] - mom["p_f2"], m, e2)
    return ReducedAmplitude(val, _PREFACTORS["moller"](),
                            cfg.conservation_residual())


def electron_positron_amplitude(cfg: KinematicConfig,
                                alpha: float = ALPHA_DEFAULT
                                ) -> ReducedAmplitude:
    cfg.validate()
    m, mom, s = cfg.mass, cfg.momenta, cfg.spins
    e2 = 4.0 * math.pi * alpha
    # scattering term vbar(pi+)G v(pf+) . ubar(pf-)G u(pi-) / (pi- - pf-)^2
    # minus annihilation term ubar(pf-)G v(pf+) . vbar(pi+)G u(pi-)
    #                                           / (pi- + pi+)^2
    val = _four_fermion_core(
        _ubar(mom["p_i_plus"], s["p_i_plus"], m, backward=True),
        _u(mom["p_f_plus"], s["p_f_plus"], m, backward=True),
        _ubar(mom["p_f_minus"], s["p_f_minus"], m),
        _u(mom["p_i_minus"], s["p_i_minus"], m),
        mom["p_i_minus"] - mom["p_f_minus"],
        _ubar(mom["p_f_minus"], s["p_f_minus"], m),
        _u(mom["p_f_plus"], s["p_f_plus"], m, backward=True),
        _ubar(mom["p_i_plus"], s["p_i_plus"], m, backward=True),
        _u(mom["p_i_minus"], s["p_i_minus"], m),
        mom["p_i_minus"] + mom["p_i_plus"], m, e2)
    return ReducedAmplitude(val, _PREFACTORS["bhabha"](),
                            cfg.conservation_residual())


_DIRECT = {
    "compton": compton_amplitude,
    "annihilation": pair_annihilation_amplitude,
    "bremsstrahlung": bremsstrahlung_amplitude,
    "pair_production": pair_production_amplitude,
    "moller": electron_electron_amplitude,
    "bhabha": electron_positron_amplitude,
}


def amplitude(cfg: KinematicConfig,
              alpha: float = ALPHA_DEFAULT) -> ReducedAmplitude:
    try:
        f = _DIRECT[cfg.process]
    except KeyError:
        raise DomainError(f"unknown process: {cfg.process}") from None
    return f(cfg, alpha)


# -- crossing engine -------------------------------------------------------

@dataclass(frozen=True)
class CrossedLeg:
    label: str                     # leg label in the target process
    sign: int = +1                 # momentum sign on internal lines
    backward: bool | None = None   # fermions: u (False) / v (True)


@dataclass(frozen=True)
class SubstitutionTable:
    """Map from base-process leg labels to target-process legs."""

    base: str
    target: str
    legs: dict[str, CrossedLeg]

    def validate(self) -> None:
        if self.base not in PROCESS_IDS or self.target not in PROCESS_IDS:
            raise DomainError("substitution table references unknown process")
        base_labels = set(_FERMION_LABELS[self.base]) | set(
            _PHOTON_LABELS[self.base])
        target_labels = set(_FERMION_LABELS[self.target]) | set(
            _PHOTON_LABELS[self.target])
        if set(self.legs) != base_labels:
            raise DomainError(
                f"table legs {sorted(self.legs)} do not cover base labels "
                f"{sorted(base_labels)}")
        for base_lab, leg in self.legs.items():
            if leg.label not in target_labels:
                raise DomainError(f"unknown target label {leg.label}")
            if abs(leg.sign) != 1:
                raise DomainError(f"leg sign must be +-1, got {leg.sign}")
            is_photon = base_lab in _PHOTON_LABELS[self.base]
            if is_photon != (leg.label in _PHOTON_LABELS[self.target]):
                raise DomainError(
                    f"{base_lab} -> {leg.label} mixes photon/fermion legs")
            if not is_photon and leg.backward is None:
                raise DomainError(f"fermion leg {base_lab} needs u/v flag")


COMPTON_TO_ANNIHILATION = SubstitutionTable(
    base="compton", target="annihilation",
    legs={
        "k_f": CrossedLeg("k_f", +1),
        "k_i": CrossedLeg("k_i", -1),
        "p_f": CrossedLeg("p_plus", -1, backward=True),
        "p_i": CrossedLeg("p_minus", +1, backward=False),
    })

BREMSSTRAHLUNG_TO_PAIR_PRODUCTION = SubstitutionTable(
    base="bremsstrahlung", target="pair_production",
    legs={
        "k_f": CrossedLeg("k_i", -1),
        "p_f": CrossedLeg("p_plus", +1, backward=True),
        "p_i": CrossedLeg("p_minus", -1, backward=False),
    })

MOLLER_TO_BHABHA = SubstitutionTable(
    base="moller", target="bhabha",
    legs={
        "p_i1": CrossedLeg("p_i_minus", +1, backward=False),
        "p_f1": CrossedLeg("p_f_minus", +1, backward=False),
        "p_i2": CrossedLeg("p_f_plus", -1, backward=True),
        "p_f2": CrossedLeg("p_i_plus", -1, backward=True),
    })


def identity_table(process: str) -> SubstitutionTable:
    legs = {}
    for lab in _FERMION_LABELS[process]:
        legs[lab] = CrossedLeg(lab, +1,
                               backward=lab in _BACKWARD_FERMIONS[process])
    for lab in _PHOTON_LABELS[process]:
        legs[lab] = CrossedLeg(lab, +1)
    return SubstitutionTable(process, process, legs)


def apply_crossing(base: str, table: SubstitutionTable,
                   cfg: KinematicConfig,
                   alpha: float = ALPHA_DEFAULT) -> ReducedAmplitude:
    """Evaluate the base topology under the table's substitutions.

    cfg describes the *target* process; the result equals the direct
    evaluation of that process.
    """
    table.validate()
    if table.base != base:
        raise DomainError(f"table base {table.base} != requested {base}")
    if table.target != cfg.process:
        raise DomainError(
            f"table target {table.target} != config process {cfg.process}")
    cfg.validate()
    m = cfg.mass
    e2 = 4.0 * math.pi * alpha

    def fermion(base_lab):
        cl = table.legs[base_lab]
        p = cfg.momenta[cl.label]
        return (_ubar(p, cfg.spins[cl.label], m, backward=cl.backward),
                _u(p, cfg.spins[cl.label], m, backward=cl.backward),
                p if cl.sign > 0 else -p)

    def photon(base_lab):
        cl = table.legs[base_lab]
        k = cfg.momenta[cl.label]
        # crossing a leg to the other side of the reaction flips the
        # conjugation, so the target's role decides: emitted legs enter
        # conjugated
        conj = cl.label in _EMITTED_PHOTONS[cfg.process]
        return (_eps(k, cfg.pols[cl.label], conjugate=conj),
                k if cl.sign > 0 else -k)

    if base == "compton":
        bar_f, _, _ = fermion("p_f")
        _, u_i, p_in = fermion("p_i")
        eps_abs, k_abs = photon("k_i")
        eps_em, k_em = photon("k_f")
        val = _compton_core(bar_f, u_i, eps_abs, eps_em,
                            p_in, k_abs, k_em, m, e2)
    elif base == "bremsstrahlung":
        bar_f, _, p_out = fermion("p_f")
        _, u_i, p_in = fermion("p_i")
        eps, k = photon("k_f")
        val = _coulomb_core(bar_f, u_i, eps, p_out, p_in, k, m, cfg.Z,
                            e2 * math.sqrt(e2))
    elif base == "moller":
        bar_f2, _, q_f2 = fermion("p_f2")
        bar_f1, _, q_f1 = fermion("p_f1")
        _, u_i2, _ = fermion("p_i2")
        _, u_i1, q_i1 = fermion("p_i1")
        val = _four_fermion_core(
            bar_f2, u_i2, bar_f1, u_i1, q_i1 - q_f1,
            bar_f1, u_i2, bar_f2, u_i1, q_i1 - q_f2,
            m, e2)
    else:
        raise DomainError(f"{base} is not a base topology")
    return ReducedAmplitude(val, _PREFACTORS[cfg.process](),
                            cfg.conservation_residual())


# -- spin and polarization sums --------------------------------------------

def spin_summed_squared(cfg: KinematicConfig,
                        alpha: float = ALPHA_DEFAULT) -> float:
    """(1/4) sum over all spin and polarization labels of |M|^2.

    Explicit enumeration over the discrete labels; 2->2 processes only.
    """
    if cfg.process not in ("compton", "annihilation", "moller", "bhabha"):
        raise DomainError(
            f"spin_summed_squared needs a 2->2 process, got {cfg.process}")
    spin_labels = sorted(cfg.spins)
    pol_labels = sorted(cfg.pols)
    total = 0.0
    assignments = [{}]
    for lab in spin_labels:
        assignments = [{**a, lab: s} for a in assignments for s in (+1, -1)]
    pol_assign = [{}]
    for lab in pol_labels:
        pol_assign = [{**a, lab: p} for a in pol_assign
                      for p in ("plus", "minus")]
    for spins in assignments:
        for pols in pol_assign:
            c = KinematicConfig(cfg.process, cfg.momenta, spins, pols,
                                cfg.Z, cfg.frame, cfg.mass)
            total += abs(amplitude(c, alpha).value) ** 2
    return total / 4.0


# -- Ward-identity hook ----------------------------------------------------

def compton_value_with_polarization(cfg: KinematicConfig, eps_in,
                                    alpha: float = ALPHA_DEFAULT) -> complex:
    """Compton value with an explicit absorbed-photon polarization.

    Substituting eps_in = k_i must annihilate the two-diagram sum.
    """
    cfg.validate()
    m, mom = cfg.mass, cfg.momenta
    e2 = 4.0 * math.pi * alpha
    return _compton_core(
        _ubar(mom["p_f"], cfg.spins["p_f"], m),
        _u(mom["p_i"], cfg.spins["p_i"], m),
        np.asarray(eps_in, dtype=complex),
        _eps(mom["k_f"], cfg.pols["k_f"], conjugate=True),
        mom["p_i"], mom["k_i"], mom["k_f"], m, e2)


# -- kinematics builders ---------------------------------------------------

def compton_omega_out(omega_in: float, theta: float,
                      mass: float = 1.0) -> float:
    """Lab-frame Compton relation for the scattered photon energy."""
    return omega_in / (1.0 + (omega_in / mass) * (1.0 - math.cos(theta)))


def compton_lab_config(omega_in: float, theta: float, phi: float = 0.0,
                       s_i: int = +1, s_f: int = +1,
                       pol_i: str = "plus", pol_f: str = "plus",
                       mass: float = 1.0) -> KinematicConfig:
    """Electron at rest, photon along +z, scattering at (theta, phi)."""
    if omega_in <= 0:
        raise DomainError("omega_in must be positive")
    w2 = compton_omega_out(omega_in, theta, mass)
    k_i = FourVector(omega_in, 0.0, 0.0, omega_in)
    n = np.array([math.sin(theta) * math.cos(phi),
                  math.sin(theta) * math.sin(phi), math.cos(theta)])
    k_f = FourVector.from_spatial(w2, w2 * n)
    p_i = FourVector(mass, 0.0, 0.0, 0.0)
    pf3 = k_i.spatial() - k_f.spatial()
    p_f = FourVector.from_spatial(
        math.sqrt(float(pf3 @ pf3) + mass * mass), pf3)
    return KinematicConfig("compton",
                           {"p_i": p_i, "p_f": p_f, "k_i": k_i, "k_f": k_f},
                           {"p_i": s_i, "p_f": s_f},
                           {"k_i": pol_i, "k_f": pol_f}, mass=mass)


def annihilation_cm_config(pmag: float, theta: float, phi: float = 0.0,
                           s_minus: int = +1, s_plus: int = +1,
                           pol_i: str = "plus", pol_f: str = "plus",
                           mass: float = 1.0) -> KinematicConfig:
    """e- e+ back to back along z; photons back to back at (theta, phi)."""
    if pmag <= 0:
        raise DomainError("|p| must be positive")
    E = math.sqrt(pmag * pmag + mass * mass)
    n = np.array([math.sin(theta) * math.cos(phi),
                  math.sin(theta) * math.sin(phi), math.cos(theta)])
    return KinematicConfig(
        "annihilation",
        {"p_minus": FourVector(E, 0.0, 0.0, pmag),
         "p_plus": FourVector(E, 0.0, 0.0, -pmag),
         "k_i": FourVector.from_spatial(E, E * n),
         "k_f": FourVector.from_spatial(E, -E * n)},
        {"p_minus": s_minus, "p_plus": s_plus},
        {"k_i": pol_i, "k_f": pol_f}, frame="cm", mass=mass)


def moller_cm_config(E: float, theta: float, phi: float = 0.0,
                     spins: dict | None = None, mass: float = 1.0,
                     process: str = "moller") -> KinematicConfig:
    """Symmetric CM collision at beam energy E per particle."""
    if E <= mass:
        raise DomainError(f"beam energy must exceed m, got {E}")
    pmag = math.sqrt(E * E - mass * mass)
    n = np.array([math.sin(theta) * math.cos(phi),
                  math.sin(theta) * math.sin(phi), math.cos(theta)])
    labels = (_FERMION_LABELS[process][0:2] + _FERMION_LABELS[process][2:4]
              if process == "moller"
              else ("p_i_minus", "p_i_plus", "p_f_minus", "p_f_plus"))
    moms = {
        labels[0]: FourVector(E, 0.0, 0.0, pmag),
        labels[1]: FourVector(E, 0.0, 0.0, -pmag),
        labels[2]: FourVector.from_spatial(E, pmag * n),
        labels[3]: FourVector.from_spatial(E, -pmag * n),
    }
    if spins is None:
        spins = {lab: +1 for lab in labels}
    return KinematicConfig(process, moms, dict(spins), {}, frame="cm",
                           mass=mass)


def bhabha_cm_config(E: float, theta: float, phi: float = 0.0,
                     spins: dict | None = None,
                     mass: float = 1.0) -> KinematicConfig:
    return moller_cm_config(E, theta, phi, spins, mass, process="bhabha")


def bremsstrahlung_config(E_i: float, omega_f: float,
                          theta_e: float, theta_k: float,
                          phi_e: float = 0.0, phi_k: float = 0.0,
                          s_i: int = +1, s_f: int = +1,
                          pol_f: str = "plus", Z: float = 1.0,
                          mass: float = 1.0) -> KinematicConfig:
    """Electron E_i along z radiates omega_f; energy conservation only."""
    if E_i <= mass:
        raise DomainError("incident energy must exceed m")
    if omega_f <= 0:
        raise DomainError("omega_f must be positive")
    E_f = E_i - omega_f
    if E_f <= mass:
        raise DomainError("final electron energy must exceed m")
    p_i = FourVector(E_i, 0.0, 0.0, math.sqrt(E_i * E_i - mass * mass))
    pf = math.sqrt(E_f * E_f - mass * mass)
    ne = np.array([math.sin(theta_e) * math.cos(phi_e),
                   math.sin(theta_e) * math.sin(phi_e), math.cos(theta_e)])
    nk = np.array([math.sin(theta_k) * math.cos(phi_k),
                   math.sin(theta_k) * math.sin(phi_k), math.cos(theta_k)])
    return KinematicConfig(
        "bremsstrahlung",
        {"p_i": p_i,
         "p_f": FourVector.from_spatial(E_f, pf * ne),
         "k_f": FourVector.from_spatial(omega_f, omega_f * nk)},
        {"p_i": s_i, "p_f": s_f}, {"k_f": pol_f}, Z=Z, mass=mass)


def pair_production_config(omega_i: float, E_plus: float,
                           theta_p: float, theta_m: float,
                           phi_p: float = 0.0, phi_m: float = math.pi,
                           s_plus: int = +1, s_minus: int = +1,
                           pol_i: str = "plus", Z: float = 1.0,
                           mass: float = 1.0) -> KinematicConfig:
    """Photon omega_i along z converts; E_minus fixed by energy balance."""
    if omega_i < 2.0 * mass:
        raise DomainError(
            f"photon energy {omega_i} below pair threshold {2 * mass}")
    E_minus = omega_i - E_plus
    if E_plus <= mass or E_minus <= mass:
        raise DomainError("pair energies must each exceed m")
    pp = math.sqrt(E_plus * E_plus - mass * mass)
    pm = math.sqrt(E_minus * E_minus - mass * mass)
    np_ = np.array([math.sin(theta_p) * math.cos(phi_p),
                    math.sin(theta_p) * math.sin(phi_p), math.cos(theta_p)])
    nm = np.array([math.sin(theta_m) * math.cos(phi_m),
                   math.sin(theta_m) * math.sin(phi_m), math.cos(theta_m)])
    return KinematicConfig(
        "pair_production",
        {"k_i": FourVector(omega_i, 0.0, 0.0, omega_i),
         "p_plus": FourVector.from_spatial(E_plus, pp * np_),
         "p_minus": FourVector.from_spatial(E_minus, pm * nm)},
        {"p_plus": s_plus, "p_minus": s_minus}, {"k_i": pol_i},
        Z=Z, mass=mass)
