"""Command-line front end: kinematics sweeps and plot-ready tables.

Every subcommand evaluates a table of rows (one per sweep point, or a
single row when no sweep is given) and writes CSV or JSON with full
round-trip precision. Exit codes: 0 success, 2 domain error (bad
kinematics), 3 numeric error (quadrature/pole), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import loops, processes
from .constants import ALPHA_DEFAULT, ELECTRON_MASS_MEV
from .dynamics import (ElectronState, PhotonClassicalState, integrate,
                       trajectory_csv)
from .errors import (DomainError, FqedError, NumericError, PoleError,
                     SingularityError)
from .fourvec import FourVector

USAGE_EXIT = 64
DOMAIN_EXIT = 2
NUMERIC_EXIT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_sweep(spec: str):
    """name:start:stop:count[:log] -> (name, values array)."""
    parts = spec.split(":")
    if len(parts) not in (4, 5):
        raise _UsageError(f"bad sweep spec: {spec}")
    name = parts[0].replace("-", "_")
    try:
        start, stop = float(parts[1]), float(parts[2])
        count = int(parts[3])
    except ValueError:
        raise _UsageError(f"bad sweep numbers in: {spec}") from None
    if count < 1:
        raise _UsageError("sweep count must be >= 1")
    scale = parts[4] if len(parts) == 5 else "linear"
    if scale not in ("linear", "log"):
        raise _UsageError(f"sweep scale must be linear|log, got {scale}")
    if count == 1:
        return name, np.array([start])
    if scale == "linear":
        return name, np.linspace(start, stop, count)
    if start == 0.0 or stop == 0.0:
        raise _UsageError("log sweep endpoints must be nonzero")
    # mixed-sign log sweeps keep the start's sign on the magnitude grid
    sign = 1.0 if start > 0 else -1.0
    return name, sign * np.geomspace(abs(start), abs(stop), count)


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _write_table(args, columns, rows):
    if args.format == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_fmt(row[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    else:
        cfg = {k: v for k, v in sorted(vars(args).items())
               if k not in ("func", "output") and v is not None}
        text = json.dumps({"config": cfg, "rows": rows}, indent=1) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _thread_count(args) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("FQED_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise _UsageError(f"bad FQED_THREADS value: {env}") from None
    return 1


def _run_sweep(args, param_names, evaluate):
    """Build rows over the sweep grid (ordered), in parallel if asked."""
    base = {n: getattr(args, n) for n in param_names}
    sweep = getattr(args, "sweep", None)
    points = [base]
    if sweep:
        name, values = _parse_sweep(sweep)
        if name not in base:
            raise _UsageError(f"unknown sweep parameter: {name}")
        points = [{**base, name: float(v)} for v in values]
        if base[name] is not None and not any(
                p[name] == base[name] for p in points):
            points.append(dict(base))       # explicit value as extra row
    nthreads = _thread_count(args)
    if nthreads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            return list(pool.map(evaluate, points))
    return [evaluate(p) for p in points]


def _escale(args) -> float:
    return ELECTRON_MASS_MEV if getattr(args, "mev", False) else 1.0


# -- subcommand evaluators -------------------------------------------------

def _cmd_compton(args):
    esc = _escale(args)

    def evaluate(p):
        theta = math.radians(p["theta"])
        cfg = processes.compton_lab_config(p["omega_in"], theta,
                                           mass=args.mass)
        m2 = processes.spin_summed_squared(cfg, args.alpha)
        w2 = processes.compton_omega_out(p["omega_in"], theta, args.mass)
        dsig = (w2 / p["omega_in"]) ** 2 * m2 / (
            64.0 * math.pi ** 2 * args.mass ** 2)
        return {"theta_deg": p["theta"], "omega_in": p["omega_in"] * esc,
                "omega_out": w2 * esc, "M2_spin_avg": m2,
                "dsigma_dOmega": dsig / esc ** 2 if args.mev else dsig}

    rows = _run_sweep(args, ("theta", "omega_in"), evaluate)
    _write_table(args, ["theta_deg", "omega_in", "omega_out",
                        "M2_spin_avg", "dsigma_dOmega"], rows)


def _cmd_annihilate(args):
    esc = _escale(args)

    def evaluate(p):
        theta = math.radians(p["theta"])
        cfg = processes.annihilation_cm_config(p["pmag"], theta,
                                               mass=args.mass)
        m2 = processes.spin_summed_squared(cfg, args.alpha)
        return {"theta_deg": p["theta"], "pmag": p["pmag"] * esc,
                "M2_spin_avg": m2}

    rows = _run_sweep(args, ("theta", "pmag"), evaluate)
    _write_table(args, ["theta_deg", "pmag", "M2_spin_avg"], rows)


def _cmd_brems(args):
    esc = _escale(args)

    def evaluate(p):
        cfg = processes.bremsstrahlung_config(
            p["e_in"], p["omega"], math.radians(p["theta_e"]),
            math.radians(p["theta_k"]), Z=args.Z, mass=args.mass)
        amp = processes.bremsstrahlung_amplitude(cfg, args.alpha)
        return {"e_in": p["e_in"] * esc, "omega": p["omega"] * esc,
                "theta_e_deg": p["theta_e"], "theta_k_deg": p["theta_k"],
                "re_M": amp.value.real, "im_M": amp.value.imag,
                "abs2_M": abs(amp.value) ** 2}

    rows = _run_sweep(args, ("e_in", "omega", "theta_e", "theta_k"),
                      evaluate)
    _write_table(args, ["e_in", "omega", "theta_e_deg", "theta_k_deg",
                        "re_M", "im_M", "abs2_M"], rows)


def _cmd_pairprod(args):
    esc = _escale(args)

    def evaluate(p):
        cfg = processes.pair_production_config(
            p["omega_in"], p["e_plus"], math.radians(p["theta_p"]),
            math.radians(p["theta_m"]), Z=args.Z, mass=args.mass)
        amp = processes.pair_production_amplitude(cfg, args.alpha)
        return {"omega_in": p["omega_in"] * esc,
                "e_plus": p["e_plus"] * esc,
                "theta_p_deg": p["theta_p"], "theta_m_deg": p["theta_m"],
                "re_M": amp.value.real, "im_M": amp.value.imag,
                "abs2_M": abs(amp.value) ** 2}

    rows = _run_sweep(args, ("omega_in", "e_plus", "theta_p", "theta_m"),
                      evaluate)
    _write_table(args, ["omega_in", "e_plus", "theta_p_deg", "theta_m_deg",
                        "re_M", "im_M", "abs2_M"], rows)


def _four_fermion_cmd(args, builder, label):
    esc = _escale(args)

    def evaluate(p):
        cfg = builder(p["energy"], math.radians(p["theta"]), mass=args.mass)
        m2 = processes.spin_summed_squared(cfg, args.alpha)
        return {"energy": p["energy"] * esc, "theta_deg": p["theta"],
                "M2_spin_avg": m2}

    rows = _run_sweep(args, ("energy", "theta"), evaluate)
    _write_table(args, ["energy", "theta_deg", "M2_spin_avg"], rows)


def _cmd_moller(args):
    _four_fermion_cmd(args, processes.moller_cm_config, "moller")


def _cmd_bhabha(args):
    _four_fermion_cmd(args, processes.bhabha_cm_config, "bhabha")


def _cmd_vacuum_pol(args):
    if args.k2 is None and not args.sweep:
        raise _UsageError("vacuum-pol needs --k2 and/or --sweep")
    quad = loops.QuadratureConfig(abs_tol=args.abs_tol, rel_tol=args.rel_tol)

    def evaluate(p):
        val = loops.vacuum_polarization_finite(p["k2"], quad, args.mass,
                                               args.alpha)
        return {"k2": p["k2"], "re_pi_bar": val.real, "im_pi_bar": val.imag}

    rows = _run_sweep(args, ("k2",), evaluate)
    _write_table(args, ["k2", "re_pi_bar", "im_pi_bar"], rows)


def _cmd_self_energy(args):
    quad = loops.QuadratureConfig(abs_tol=args.abs_tol, rel_tol=args.rel_tol)

    def evaluate(p):
        p2 = p["p2"] * args.mass ** 2
        if p2 > 0:
            pvec = FourVector(math.sqrt(p2), 0.0, 0.0, 0.0)
        else:
            pvec = FourVector(0.0, math.sqrt(-p2), 0.0, 0.0)
        om = loops.self_energy(pvec, quad, args.mass, args.alpha)
        a, b = _decompose(om.finite, pvec)
        pa, pb = _decompose(om.pole, pvec)
        return {"p2": p["p2"], "re_a": a.real, "im_a": a.imag,
                "re_b": b.real, "im_b": b.imag,
                "pole_a": pa.real, "pole_b": pb.real}

    rows = _run_sweep(args, ("p2",), evaluate)
    _write_table(args, ["p2", "re_a", "im_a", "re_b", "im_b",
                        "pole_a", "pole_b"], rows)


def _decompose(mat, p: FourVector):
    """Split a I + b slash(p) by traces; p2 = 0 leaves b = 0."""
    from .algebra import slash
    a = complex(np.trace(mat)) / 4.0
    p2 = float(p.norm2())
    if p2 == 0.0:
        return a, 0.0 + 0.0j
    b = complex(np.trace(slash(p) @ mat)) / (4.0 * p2)
    return a, b


def _cmd_energy_shift(args):
    spec = loops.load_spectrum(args.spectrum, args.k_max)
    quad = loops.QuadratureConfig(abs_tol=args.abs_tol, rel_tol=args.rel_tol)
    esc = _escale(args)
    levels = [args.level] if args.level else sorted(spec.levels)
    rows = []
    for lab in levels:
        val = loops.energy_shift(spec, lab, quad, args.alpha)
        rows.append({"level": lab, "energy": spec.levels[lab] * esc,
                     "re_shift": val.real * esc, "im_shift": val.imag * esc})
    _write_table(args, ["level", "energy", "re_shift", "im_shift"], rows)


def _cmd_classical(args):
    if args.particle == "electron":
        z0 = np.array([complex(c) for c in args.z.split(",")])
        if len(z0) != 4:
            raise _UsageError("electron spinor needs 4 components")
        pz = args.pz
        p = FourVector(math.sqrt(args.mass ** 2 + pz * pz), 0.0, 0.0, pz)
        state = ElectronState(FourVector(0, 0, 0, 0), p, z0)
    else:
        eta = np.array([complex(c) for c in args.z.split(",")])[:2]
        if len(eta) != 2:
            raise _UsageError("photon internal state needs 2 components")
        p = FourVector(args.pz, 0.0, 0.0, args.pz)
        state = PhotonClassicalState(FourVector(0, 0, 0, 0), p, eta)
    traj = integrate(state, None, (0.0, args.tau_max), args.dt)
    if args.stride > 1:
        from .dynamics import Trajectory
        sl = slice(None, None, args.stride)
        traj = Trajectory(traj.tau[sl], traj.x[sl], traj.p[sl],
                          traj.spinor[sl], traj.zbar_z[sl], traj.H[sl],
                          traj.aborted)
    text = trajectory_csv(traj)
    if args.format == "json":
        lines = text.strip().split("\n")
        cols = lines[0].split(",")
        rows = [dict(zip(cols, (float(v) for v in ln.split(","))))
                for ln in lines[1:]]
        cfg = {k: v for k, v in sorted(vars(args).items())
               if k not in ("func", "output") and v is not None}
        text = json.dumps({"config": cfg, "rows": rows}, indent=1) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_selftest(args):
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        checks.append((name, ok))
        print(f"{'PASS' if ok else 'FAIL'} {name}")

    from . import algebra, states
    rng = np.random.default_rng(7)

    def clifford():
        g = algebra.GAMMA
        metric = np.diag([1.0, -1.0, -1.0, -1.0])
        return all(np.allclose(g[m] @ g[n] + g[n] @ g[m],
                               2 * metric[m, n] * np.eye(4), atol=1e-14)
                   for m in range(4) for n in range(4))

    def dirac_residual():
        for _ in range(50):
            p3 = rng.normal(size=3)
            E = math.sqrt(1.0 + p3 @ p3)
            p = FourVector.from_spatial(E, p3)
            u = states.electron_spinor(p, +1).components
            if np.linalg.norm((algebra.slash(p) - np.eye(4)) @ u) > 1e-12:
                return False
        return True

    def photon_residual():
        for kind in states.PHOTON_KINDS:
            k = 0.0 if kind == "vacuum" else 1.3
            st = states.photon_state(kind, k)
            if states.wave_equation_residual(st) > 1e-12:
                return False
        return True

    def subtraction_zero():
        return abs(loops.vacuum_polarization_finite(0.0)) <= 1e-12

    def crossing():
        cfg = processes.annihilation_cm_config(0.7, 1.1, 0.3)
        a = processes.pair_annihilation_amplitude(cfg).value
        b = processes.apply_crossing("compton",
                                     processes.COMPTON_TO_ANNIHILATION,
                                     cfg).value
        return abs(a - b) <= 1e-12 * max(1.0, abs(a))

    def exchange():
        cfg = processes.moller_cm_config(1.5, 0.8, 0.2)
        swapped = dict(cfg.momenta)
        swapped["p_f1"], swapped["p_f2"] = swapped["p_f2"], swapped["p_f1"]
        spins = dict(cfg.spins)
        spins["p_f1"], spins["p_f2"] = spins["p_f2"], spins["p_f1"]
        c2 = processes.KinematicConfig("moller", swapped, spins, {},
                                       frame="cm", mass=cfg.mass)
        a = processes.electron_electron_amplitude(cfg).value
        b = processes.electron_electron_amplitude(c2).value
        return abs(a + b) <= 1e-12 * max(1.0, abs(a))

    check("clifford-algebra", clifford)
    check("dirac-residual", dirac_residual)
    check("photon-residual", photon_residual)
    check("vacuum-pol-subtraction", subtraction_zero)
    check("crossing-consistency", crossing)
    check("exchange-antisymmetry", exchange)
    if all(ok for _, ok in checks):
        return 0
    return 1


# -- parser ----------------------------------------------------------------

def _add_common(sp, quad=False):
    sp.add_argument("--mass", type=float, default=1.0)
    sp.add_argument("--alpha", type=float, default=ALPHA_DEFAULT)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--mev", action="store_true",
                    help="display energies in MeV (0.51099895 MeV per m)")
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--sweep", default=None,
                    help="name:start:stop:count[:log]")
    if quad:
        sp.add_argument("--abs-tol", type=float, default=1e-12)
        sp.add_argument("--rel-tol", type=float, default=1e-10)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fqed", description=__doc__)
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("compton")
    sp.add_argument("--omega-in", dest="omega_in", type=float, default=1.0)
    sp.add_argument("--theta", type=float, default=90.0)
    _add_common(sp)
    sp.set_defaults(func=_cmd_compton)

    sp = sub.add_parser("annihilate")
    sp.add_argument("--pmag", type=float, default=0.5)
    sp.add_argument("--theta", type=float, default=60.0)
    _add_common(sp)
    sp.set_defaults(func=_cmd_annihilate)

    sp = sub.add_parser("brems")
    sp.add_argument("--e-in", dest="e_in", type=float, default=2.0)
    sp.add_argument("--omega", type=float, default=0.5)
    sp.add_argument("--theta-e", dest="theta_e", type=float, default=20.0)
    sp.add_argument("--theta-k", dest="theta_k", type=float, default=45.0)
    sp.add_argument("--Z", type=float, default=1.0)
    _add_common(sp)
    sp.set_defaults(func=_cmd_brems)

    sp = sub.add_parser("pairprod")
    sp.add_argument("--omega-in", dest="omega_in", type=float, default=3.0)
    sp.add_argument("--e-plus", dest="e_plus", type=float, default=1.5)
    sp.add_argument("--theta-p", dest="theta_p", type=float, default=30.0)
    sp.add_argument("--theta-m", dest="theta_m", type=float, default=30.0)
    sp.add_argument("--Z", type=float, default=1.0)
    _add_common(sp)
    sp.set_defaults(func=_cmd_pairprod)

    for name, fn in (("moller", _cmd_moller), ("bhabha", _cmd_bhabha)):
        sp = sub.add_parser(name)
        sp.add_argument("--energy", type=float, default=2.0)
        sp.add_argument("--theta", type=float, default=60.0)
        _add_common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("vacuum-pol")
    sp.add_argument("--k2", type=float, default=None)
    _add_common(sp, quad=True)
    sp.set_defaults(func=_cmd_vacuum_pol)

    sp = sub.add_parser("self-energy")
    sp.add_argument("--p2", type=float, default=0.5,
                    help="p^2 in units of m^2")
    _add_common(sp, quad=True)
    sp.set_defaults(func=_cmd_self_energy)

    sp = sub.add_parser("energy-shift")
    sp.add_argument("--spectrum", required=True)
    sp.add_argument("--level", default=None)
    sp.add_argument("--k-max", dest="k_max", type=float, default=10.0)
    _add_common(sp, quad=True)
    sp.set_defaults(func=_cmd_energy_shift)

    sp = sub.add_parser("classical")
    sp.add_argument("--particle", choices=("electron", "photon"),
                    default="electron")
    sp.add_argument("--z", default="0.7071067811865476,0,"
                                   "0.7071067811865476,0",
                    help="comma-separated internal components")
    sp.add_argument("--pz", type=float, default=0.0)
    sp.add_argument("--tau-max", dest="tau_max", type=float, default=100.0)
    sp.add_argument("--dt", type=float, default=1e-3)
    sp.add_argument("--stride", type=int, default=1)
    _add_common(sp)
    sp.set_defaults(func=_cmd_classical)

    sp = sub.add_parser("selftest")
    _add_common(sp)
    sp.set_defaults(func=_cmd_selftest)

    return ap


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    try:
        rc = args.func(args)
        return 0 if rc is None else rc
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (PoleError, SingularityError, NumericError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT
    except (DomainError, FqedError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
