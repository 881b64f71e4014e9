"""First-quantized QED engine: spinor algebra, tree amplitudes, one-loop
quantities and classical spinning-particle dynamics, in natural units."""

from .algebra import GAMMA, SIGMA, BIG_SIGMA, slash, trace_product
from .constants import ALPHA_DEFAULT, ELECTRON_MASS_MEV
from .errors import (DegenerateLevelError, DomainError, FqedError,
                     NumericError, PoleError, SingularityError)
from .fourvec import FourVector, minkowski_dot
from .ledger import NormalizationLedger
from .processes import (KinematicConfig, ReducedAmplitude, SubstitutionTable,
                        amplitude, apply_crossing, spin_summed_squared)
from .states import (DiracSpinor, PhotonSpinor, electron_spinor,
                     photon_state, polarization_vector)

__all__ = [
    "GAMMA", "SIGMA", "BIG_SIGMA", "slash", "trace_product",
    "ALPHA_DEFAULT", "ELECTRON_MASS_MEV",
    "DegenerateLevelError", "DomainError", "FqedError", "NumericError",
    "PoleError", "SingularityError",
    "FourVector", "minkowski_dot", "NormalizationLedger",
    "KinematicConfig", "ReducedAmplitude", "SubstitutionTable",
    "amplitude", "apply_crossing", "spin_summed_squared",
    "DiracSpinor", "PhotonSpinor", "electron_spinor", "photon_state",
    "polarization_vector",
]

__version__ = "0.1.0"
