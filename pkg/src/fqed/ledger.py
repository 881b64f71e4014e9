"""Symbolic bookkeeping of box-normalization prefactors.

Amplitudes are reported "reduced": the space-time box factors V and T,
the photon-energy factors, the 2pi's of the overall delta function and
the electron-energy square roots are never given numbers. They live
here as rational exponents so that composition identities can be
checked exactly.

Symbols used throughout: "V", "T", "2pi", "2", "e" (electron charge),
"Z", "omega_i", "omega_f", "m", "E_i", "E_f" and the per-leg electron
energies of the four-fermion processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


def _norm(exponents: Mapping[str, Fraction]) -> dict[str, Fraction]:
    return {k: Fraction(v) for k, v in exponents.items() if Fraction(v) != 0}


@dataclass(frozen=True)
class NormalizationLedger:
    """Multiplicative record  prod_s s^exponents[s]  with rational exponents."""

    exponents: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "exponents", _norm(self.exponents))

    @classmethod
    def identity(cls) -> "NormalizationLedger":
        return cls({})

    @classmethod
    def of(cls, **exponents) -> "NormalizationLedger":
        return cls({k: Fraction(v) for k, v in exponents.items()})

    def __mul__(self, other: "NormalizationLedger") -> "NormalizationLedger":
        out = dict(self.exponents)
        for k, v in other.exponents.items():
            out[k] = out.get(k, Fraction(0)) + v
        return NormalizationLedger(out)

    def inverse(self) -> "NormalizationLedger":
        return NormalizationLedger({k: -v for k, v in self.exponents.items()})

    def __pow__(self, n: int) -> "NormalizationLedger":
        return NormalizationLedger(
            {k: v * n for k, v in self.exponents.items()})

    def exponent(self, symbol: str) -> Fraction:
        return self.exponents.get(symbol, Fraction(0))

    def is_identity(self) -> bool:
        return not self.exponents

    def __str__(self):
        if not self.exponents:
            return "1"
        return " * ".join(f"{k}^{v}" for k, v in sorted(self.exponents.items()))


# -- elementary ingredients ------------------------------------------------

def coupling() -> NormalizationLedger:
    """e(lambda) = -e (VT)^(3/4); the sign is not tracked here."""
    return NormalizationLedger.of(e=1, V=Fraction(3, 4), T=Fraction(3, 4))


def vertex_transverse(which: str) -> NormalizationLedger:
    """q factor sqrt(T/omega) for a real transverse photon ('i' or 'f')."""
    if which not in ("i", "f"):
        raise ValueError(which)
    return NormalizationLedger.of(
        T=Fraction(1, 2), **{f"omega_{which}": Fraction(-1, 2)})


def vertex_longitudinal() -> NormalizationLedger:
    """q factor sqrt(2 pi T / omega) for a longitudinal photon."""
    return NormalizationLedger.of(**{"2pi": Fraction(1, 2)},
                                  T=Fraction(1, 2),
                                  omega_long=Fraction(-1, 2))


def vacuum_line() -> NormalizationLedger:
    """Constant propagator between emission and absorption points: 1/(VT)."""
    return NormalizationLedger.of(V=-1, T=-1)


def fermion_line_norm() -> NormalizationLedger:
    """(VT)^(-1/4) normalization of the internal fermion kernel."""
    return NormalizationLedger.of(V=Fraction(-1, 4), T=Fraction(-1, 4))


def electron_wave_norm() -> NormalizationLedger:
    """1/sqrt(VT) of one external electron wave function."""
    return NormalizationLedger.of(V=Fraction(-1, 2), T=Fraction(-1, 2))


def photon_wave_norm() -> NormalizationLedger:
    """1/sqrt(2VT) of one external transverse photon wave function."""
    return NormalizationLedger.of(**{"2": Fraction(-1, 2)},
                                  V=Fraction(-1, 2), T=Fraction(-1, 2))


def electron_energy_factor(initial: str = "E_i",
                           final: str = "E_f") -> NormalizationLedger:
    """sqrt(m^2 / (E_final E_initial)) attached to an electron line pair."""
    return NormalizationLedger.of(m=1, **{initial: Fraction(-1, 2),
                                          final: Fraction(-1, 2)})


def delta4() -> NormalizationLedger:
    """(2 pi)^4 of the overall conservation delta function."""
    return NormalizationLedger.of(**{"2pi": 4})


# -- printed final prefactors of the implemented processes -----------------

def compton_prefactor() -> NormalizationLedger:
    """e^2/(V T^3) sqrt(m^2/(E_f E_i)) (2 omega_f 2 omega_i)^(-1/2)."""
    return NormalizationLedger.of(
        e=2, V=-1, T=-3, m=1,
        E_i=Fraction(-1, 2), E_f=Fraction(-1, 2),
        omega_i=Fraction(-1, 2), omega_f=Fraction(-1, 2),
        **{"2": -1})


def bremsstrahlung_prefactor() -> NormalizationLedger:
    """-Z e^3/(V T^(3/2)) (2 pi) sqrt(m^2/(E_f E_i)) (2 omega_f)^(-1/2)."""
    return NormalizationLedger.of(
        Z=1, e=3, V=-1, T=Fraction(-3, 2), m=1,
        E_i=Fraction(-1, 2), E_f=Fraction(-1, 2),
        omega_f=Fraction(-1, 2),
        **{"2": Fraction(-1, 2), "2pi": 1})


def pair_annihilation_prefactor() -> NormalizationLedger:
    out = compton_prefactor().exponents.copy()
    out.pop("E_i"), out.pop("E_f")
    out["E_plus"] = out["E_minus"] = Fraction(-1, 2)
    return NormalizationLedger(out)


def pair_production_prefactor() -> NormalizationLedger:
    out = bremsstrahlung_prefactor().exponents.copy()
    out.pop("E_i"), out.pop("E_f"), out.pop("omega_f")
    out["E_plus"] = out["E_minus"] = Fraction(-1, 2)
    out["omega_i"] = Fraction(-1, 2)
    return NormalizationLedger(out)


def moller_prefactor() -> NormalizationLedger:
    """e^2 m^2 (VT)^(-3/2) / sqrt(E_f2 E_i2 E_f1 E_i1)."""
    return NormalizationLedger.of(
        e=2, m=2, V=Fraction(-3, 2), T=Fraction(-3, 2),
        E_i1=Fraction(-1, 2), E_i2=Fraction(-1, 2),
        E_f1=Fraction(-1, 2), E_f2=Fraction(-1, 2))


def bhabha_prefactor() -> NormalizationLedger:
    return NormalizationLedger.of(
        e=2, m=2, V=Fraction(-3, 2), T=Fraction(-3, 2),
        E_i_plus=Fraction(-1, 2), E_f_plus=Fraction(-1, 2),
        E_i_minus=Fraction(-1, 2), E_f_minus=Fraction(-1, 2))
