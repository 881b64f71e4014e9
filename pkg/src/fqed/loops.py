"""One-loop quantities with dimensional-regularization bookkeeping.

The divergent integrals are never evaluated in d dimensions
numerically. Their pole structure at epsilon = 4 - d -> 0 is known in
closed form and is stored symbolically as a two-term Laurent series
(pole, finite); only the epsilon^0 Feynman-parameter integrals are done
by quadrature.

Vacuum polarization scalar part, with the subtraction at k^2 = 0
already performed:

    Pi_bar(k^2) = -(2 alpha/pi) int_0^1 dx x(1-x)
                                  log[1 - (k^2/m^2) x(1-x)]

The overall sign is fixed by the small-k^2 limit
Pi_bar -> +(alpha/15 pi) k^2/m^2. The log argument first turns negative
at k^2 = 4 m^2 (max of x(1-x) is 1/4); above that threshold the branch
is taken as log(-|r|) = log|r| + i pi, which makes Im Pi_bar < 0
(absorptive part of the forward amplitude).

Electron self-energy matrix Omega(p), finite part from the z-integral

    (alpha/2 pi) int_0^1 dz { (1-z) pslash [1 + log G]
                              - m [1 + 2 log G]
                              - (1/2) log z [2m - (1-z) pslash]
                              + (L/2) [2m - (1-z) pslash] }

with G(z) = 1 - p^2 (1-z)/m^2 and L = log(4 pi) - gamma_E - 2 log m,
and the pole part (alpha/4 pi)(1/eps)[4m - pslash]. Above the mass
shell G turns negative and log G = log|G| - i pi (the -i epsilon of the
originating denominators).

The complex level-shift kernel for a discrete spectrum with isotropic
transition currents J_db(k):

    Delta E_d = (e^2/pi) sum_b int k^2 dk {
        (1/k^2) J_dd . J_bb*
        + [ i pi/2k (delta(E-k) - delta(E+k))
            + P/2k (1/(E+k) - 1/(E-k)) ] J_db . J_db* }

with E = E_d - E_b, Minkowski contraction of the currents, the delta
terms collapsed analytically and P the principal value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .algebra import I4, slash
from .constants import ALPHA_DEFAULT
from .errors import (DegenerateLevelError, DomainError, NumericError,
                     SingularityError)
from .fourvec import METRIC, FourVector

_EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    limit: int = 200

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("quadrature tolerances must be positive")
        if self.limit < 10:
            raise DomainError("subdivision limit too small")


DEFAULT_QUAD = QuadratureConfig()


@dataclass(frozen=True)
class LaurentValue:
    """Two-term Laurent series a/eps + b in the parameter eps = 4 - d.

    pole and finite are either complex scalars or complex matrices.
    """

    pole: object
    finite: object
    scheme: str = "eps = 4 - d"

    def __add__(self, other: "LaurentValue") -> "LaurentValue":
        return LaurentValue(self.pole + other.pole,
                            self.finite + other.finite, self.scheme)

    def __sub__(self, other: "LaurentValue") -> "LaurentValue":
        return LaurentValue(self.pole - other.pole,
                            self.finite - other.finite, self.scheme)

    def __mul__(self, c) -> "LaurentValue":
        return LaurentValue(self.pole * c, self.finite * c, self.scheme)

    __rmul__ = __mul__


def _quad(f, a, b, quad: QuadratureConfig, points=None) -> float:
    val, err = integrate.quad(f, a, b, epsabs=quad.abs_tol,
                              epsrel=quad.rel_tol, limit=quad.limit,
                              points=points)
    if err > max(quad.abs_tol * 10.0, quad.rel_tol * 10.0 * abs(val)):
        raise NumericError(
            f"quadrature did not reach tolerance (error {err:.3e})",
            achieved=err)
    return val


# -- vacuum polarization ---------------------------------------------------

def _log_roots(r: float) -> tuple[float, float] | None:
    """Roots of 1 - r x(1-x) in (0,1), present for r > 4."""
    if r <= 4.0:
        return None
    s = math.sqrt(1.0 - 4.0 / r)
    return 0.5 * (1.0 - s), 0.5 * (1.0 + s)


def vacuum_polarization_finite(k2: float, quad: QuadratureConfig =
                               DEFAULT_QUAD, mass: float = 1.0,
                               alpha: float = ALPHA_DEFAULT) -> complex:
    """Subtracted scalar vacuum polarization Pi_bar(k^2).

    Real for k^2 < 4 m^2; above threshold picks up a negative
    imaginary part from the log branch.
    """
    if not math.isfinite(k2):
        raise DomainError(f"k2 must be finite, got {k2}")
    if k2 == 0.0:
        return 0.0 + 0.0j
    r = k2 / (mass * mass)
    roots = _log_roots(r)

    def real_part(x):
        arg = 1.0 - r * x * (1.0 - x)
        return x * (1.0 - x) * math.log(abs(arg)) if arg != 0.0 else 0.0

    re = -(2.0 * alpha / math.pi) * _quad(
        real_part, 0.0, 1.0, quad, points=list(roots) if roots else None)
    im = 0.0
    if roots is not None:
        # int x(1-x) dx over the negative-argument window, closed form
        x1, x2 = roots
        prim = lambda x: x * x / 2.0 - x ** 3 / 3.0
        im = -2.0 * alpha * (prim(x2) - prim(x1))
    return complex(re, im)


def vacuum_polarization_pole(alpha: float = ALPHA_DEFAULT,
                             mass: float = 1.0) -> LaurentValue:
    """Divergent part Pi_d(0) of the unsubtracted scalar polarization.

    The x-integral int 2x(1-x) dx = 1/3 gives the pole coefficient
    2 alpha/(3 pi); the Gamma(1+eps/2) (4 pi)^(eps/2) m^(-eps) factors
    are expanded to order eps^0 and folded into the finite slot.
    """
    pole = 2.0 * alpha / (3.0 * math.pi)
    L = math.log(4.0 * math.pi) - _EULER_GAMMA - 2.0 * math.log(mass)
    return LaurentValue(complex(pole), complex(pole * L / 2.0))


def vacuum_polarization(k2: float, quad: QuadratureConfig = DEFAULT_QUAD,
                        mass: float = 1.0,
                        alpha: float = ALPHA_DEFAULT) -> LaurentValue:
    """Full Pi_d(k^2) = Pi_d(0) + Pi_bar(k^2) as a Laurent series.

    The pole is k-independent, so differences of two values have an
    exactly zero pole component.
    """
    base = vacuum_polarization_pole(alpha, mass)
    return LaurentValue(base.pole,
                        base.finite + vacuum_polarization_finite(
                            k2, quad, mass, alpha))


def vacuum_polarization_tensor(k: FourVector,
                               quad: QuadratureConfig = DEFAULT_QUAD,
                               mass: float = 1.0,
                               alpha: float = ALPHA_DEFAULT) -> np.ndarray:
    """Transverse tensor (g^{mu nu} k^2 - k^mu k^nu) Pi_bar(k^2)."""
    karr = k.as_array()
    k2 = float(k.norm2())
    pi = vacuum_polarization_finite(k2, quad, mass, alpha)
    return (METRIC * k2 - np.outer(karr, karr)) * pi


def positronium_vacuum_check(quad: QuadratureConfig = DEFAULT_QUAD,
                             mass: float = 1.0,
                             alpha: float = ALPHA_DEFAULT) -> complex:
    """Vacuum-polarization insertion of the zero-momentum vacuum line.

    The pair-source line carries k = 0, so the transverse tensor
    vanishes identically and the whole insertion gives zero: pairs can
    form and annihilate in vacuum with no net contribution.
    """
    tensor = vacuum_polarization_tensor(FourVector(0.0, 0.0, 0.0, 0.0),
                                        quad, mass, alpha)
    # contract the two Sigma^0 vertices: the (0,0) component, plus the
    # full trace as a second zero witness
    return complex(tensor[0, 0] + np.einsum("mn,mn->", METRIC, tensor))


# -- electron self-energy --------------------------------------------------

def self_energy(p: FourVector, quad: QuadratureConfig = DEFAULT_QUAD,
                mass: float = 1.0,
                alpha: float = ALPHA_DEFAULT) -> LaurentValue:
    """Self-energy matrix Omega(p) as a Laurent series of 4x4 matrices.

    Pole part (alpha/4 pi)(1/eps)[4m - pslash]; finite part from the
    z-quadrature described in the module docstring. Exactly on shell
    the z-integral's derivative structure is logarithmically singular
    and the point is rejected.
    """
    m = mass
    p2 = float(p.norm2())
    if abs(p2 - m * m) <= 1e-12 * m * m:
        raise SingularityError(
            "self-energy has a logarithmic singularity at p^2 = m^2")
    r = p2 / (m * m)
    psl = slash(p)
    pole = (alpha / (4.0 * math.pi)) * (4.0 * m * I4 - psl)

    # G(z) = 1 - r (1-z); negative for z < z0 when r > 1
    z0 = 1.0 - 1.0 / r if r > 1.0 else None

    def log_abs_G(z):
        g = 1.0 - r * (1.0 - z)
        return math.log(abs(g)) if g != 0.0 else 0.0

    points = [z0] if z0 is not None else None
    # int (1-z) log|G| dz and int log|G| dz
    i1 = _quad(lambda z: (1.0 - z) * log_abs_G(z), 0.0, 1.0, quad, points)
    i2 = _quad(log_abs_G, 0.0, 1.0, quad, points)
    if z0 is not None:
        # imaginary parts, branch log G = log|G| - i pi below z0
        i1 = complex(i1, -math.pi * (z0 - z0 * z0 / 2.0))
        i2 = complex(i2, -math.pi * z0)

    L = math.log(4.0 * math.pi) - _EULER_GAMMA - 2.0 * math.log(m)
    # coefficient of pslash: int (1-z)[1 + log G] = 1/2 + i1, plus the
    # -(1/2) log z and L/2 pieces with int (1-z) log z = -3/4
    coeff_p = (0.5 + i1) + 3.0 / 8.0 - L / 4.0
    # coefficient of the identity (times m): -[1 + 2 i2] + 1 + L
    coeff_m = -(1.0 + 2.0 * i2) + 1.0 + L
    finite = (alpha / (2.0 * math.pi)) * (
        coeff_p * psl.astype(complex) + m * coeff_m * I4.astype(complex))
    return LaurentValue(pole.astype(complex), finite)


def self_energy_near_shell(p: FourVector, mass: float = 1.0,
                           alpha: float = ALPHA_DEFAULT) -> LaurentValue:
    """Printed near-mass-shell form of the self energy.

    (alpha/4 pi) { (1/eps)[3m - (pslash - m)]
                   - (pslash - m) log((m^2 - p^2)/m^2) }

    Note: expanding the full z-integral of self_energy around the mass
    shell gives the same pole bracket but a log coefficient of
    -alpha/pi, four times this printed -alpha/4pi; the two forms are
    reconciled nowhere and both are kept, this one as the quoted
    representation.
    """
    m = mass
    p2 = float(p.norm2())
    if abs(p2 - m * m) <= 1e-12 * m * m:
        raise SingularityError(
            "near-shell form is logarithmically singular at p^2 = m^2")
    delta = (m * m - p2) / (m * m)
    logd = cmath.log(complex(delta))
    psl = slash(p).astype(complex)
    c = alpha / (4.0 * math.pi)
    pole = c * (4.0 * m * I4 - psl)
    finite = -c * logd * (psl - m * I4)
    return LaurentValue(pole, finite)


# -- complex energy shifts -------------------------------------------------

@dataclass(frozen=True)
class SpectrumInput:
    """Discrete level spectrum with isotropic transition currents.

    levels maps label -> energy. currents maps (row, col) label pairs
    to either a callable k -> length-4 complex array or a pair of
    arrays (k_samples, J (4, n)) interpolated linearly. Missing pairs
    are zero. k_max bounds all photon-momentum integrals.
    """

    levels: dict[str, float]
    currents: dict[tuple[str, str], object] = field(default_factory=dict)
    k_max: float = 10.0

    def __post_init__(self):
        if not self.levels:
            raise DomainError("spectrum needs at least one level")
        for lab, E in self.levels.items():
            if not math.isfinite(E):
                raise DomainError(f"level {lab} has non-finite energy")
        if self.k_max <= 0:
            raise DomainError("k_max must be positive")

    def current(self, row: str, col: str):
        """Callable k -> J^mu_{row,col}(k) as a length-4 array."""
        entry = self.currents.get((row, col))
        conj = False
        if entry is None:
            entry = self.currents.get((col, row))
            conj = entry is not None
        if entry is None:
            return lambda k: np.zeros(4, dtype=complex)
        if callable(entry):
            f = entry
        else:
            ks, table = entry
            ks = np.asarray(ks, dtype=float)
            table = np.asarray(table, dtype=complex)

            def f(k, _ks=ks, _t=table):
                out = np.empty(4, dtype=complex)
                for mu in range(4):
                    out[mu] = (np.interp(k, _ks, _t[mu].real)
                               + 1j * np.interp(k, _ks, _t[mu].imag))
                return out
        if conj:
            return lambda k: np.conj(f(k))
        return f

    def has_current(self, row: str, col: str) -> bool:
        return (row, col) in self.currents or (col, row) in self.currents


def _contract(a: np.ndarray, b: np.ndarray) -> complex:
    """Minkowski contraction J . J'^* of two current four-vectors."""
    return complex(a[0] * np.conj(b[0]) - a[1:] @ np.conj(b[1:]))


def principal_value_integral(f, pole: float, a: float, b: float,
                             quad: QuadratureConfig = DEFAULT_QUAD
                             ) -> complex:
    """P int_a^b f(k)/(pole - k) dk by subtracting the pole residue.

    For pole outside (a, b) this is an ordinary integral.
    """
    if not a < b:
        raise DomainError("need a < b")
    if not a < pole < b:
        re = _quad(lambda k: np.real(f(k)) / (pole - k), a, b, quad)
        im = _quad(lambda k: np.imag(f(k)) / (pole - k), a, b, quad)
        return complex(re, im)
    fp = complex(f(pole))

    def reg(k):
        if k == pole:
            return 0.0j
        return (complex(f(k)) - fp) / (pole - k)

    re = _quad(lambda k: reg(k).real, a, b, quad, points=[pole])
    im = _quad(lambda k: reg(k).imag, a, b, quad, points=[pole])
    return complex(re, im) + fp * math.log(abs((pole - a) / (b - pole)))


def energy_shift(spec: SpectrumInput, d: str,
                 quad: QuadratureConfig = DEFAULT_QUAD,
                 alpha: float = ALPHA_DEFAULT) -> complex:
    """Complex second-order shift Delta E_d of the level d.

    Real part: static current-current term plus the principal-value
    (level-shift) term; imaginary part: the delta-shell emission and
    absorption terms, collapsed analytically. Energies and momenta in
    units of the electron mass.
    """
    if d not in spec.levels:
        raise DomainError(f"unknown level: {d}")
    e2 = 4.0 * math.pi * alpha
    E_d = spec.levels[d]
    J_dd = spec.current(d, d)
    pref = e2 / math.pi
    total = 0.0 + 0.0j
    for b, E_b in spec.levels.items():
        J_bb = spec.current(b, b)
        # static term: the 1/k^2 cancels the measure
        total += pref * _quad(
            lambda k: np.real(_contract(J_dd(k), J_bb(k))),
            0.0, spec.k_max, quad)
        if b == d:
            continue
        if not spec.has_current(d, b):
            continue
        E = E_d - E_b
        if E == 0.0:
            raise DegenerateLevelError(
                f"levels {d} and {b} are degenerate with nonzero current")
        if abs(E) >= spec.k_max:
            raise DomainError(
                f"k_max = {spec.k_max} does not cover the {d}-{b} "
                f"transition at |E| = {abs(E)}")
        J_db = spec.current(d, b)
        contr = lambda k, _J=J_db: _contract(_J(k), _J(k))
        # delta-shell terms: i pi/2k [delta(E-k) - delta(E+k)], the
        # k^2 dk measure collapses onto k = |E|; emission for E > 0,
        # absorption (opposite sign) for E < 0
        shell = 0.5j * math.pi * abs(E) * complex(contr(abs(E)))
        if E < 0.0:
            shell = -shell
        total += pref * shell
        # principal-value term P/2k (1/(E+k) - 1/(E-k)) k^2 dk;
        # 1/(E +- k) rewritten as -+ 1/((-+E) - k) for the PV helper
        half = lambda k, _c=contr: 0.5 * k * complex(_c(k))
        term = -(principal_value_integral(half, -E, 0.0, spec.k_max, quad)
                 + principal_value_integral(half, E, 0.0, spec.k_max, quad))
        total += pref * term
    return total


# -- spectrum text format --------------------------------------------------

def parse_spectrum(text: str, k_max: float = 10.0) -> SpectrumInput:
    """Parse the structured text form of a SpectrumInput.

    A `[levels]` section lists `label energy` lines; each
    `[current d b]` section lists `k J0 Jx Jy Jz` sample rows that are
    interpolated linearly.
    """
    levels: dict[str, float] = {}
    currents: dict[tuple[str, str], object] = {}
    section = None
    rows: list[list[float]] = []
    key: tuple[str, str] | None = None

    def flush():
        if key is not None:
            if not rows:
                raise DomainError(f"empty current section {key}")
            arr = np.array(rows, dtype=float)
            order = np.argsort(arr[:, 0])
            currents[key] = (arr[order, 0], arr[order, 1:].T)

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            flush()
            rows, key = [], None
            head = line.strip("[]").split()
            if head[0] == "levels":
                section = "levels"
            elif head[0] == "current" and len(head) == 3:
                section = "current"
                key = (head[1], head[2])
            else:
                raise DomainError(f"bad section header: {line}")
            continue
        if section == "levels":
            parts = line.split()
            if len(parts) != 2:
                raise DomainError(f"bad level line: {line}")
            levels[parts[0]] = float(parts[1])
        elif section == "current":
            vals = [float(v) for v in line.split()]
            if len(vals) != 5:
                raise DomainError(f"bad current row: {line}")
            rows.append(vals)
        else:
            raise DomainError(f"data before any section: {line}")
    flush()
    for (a, b) in currents:
        if a not in levels or b not in levels:
            raise DomainError(f"current ({a},{b}) references unknown level")
    return SpectrumInput(levels, currents, k_max)


def load_spectrum(path: str, k_max: float = 10.0) -> SpectrumInput:
    with open(path, encoding="utf-8") as fh:
        return parse_spectrum(fh.read(), k_max)
