"""Klein-Nishina angular distribution from explicit spinor sums.

Sweeps the lab scattering angle at a few incident photon energies,
printing the spin-averaged |M|^2 and the differential cross section.
The low-energy row reproduces the Thomson limit, where the 0-degree to
90-degree ratio approaches 2.
"""

import math

from fqed import processes

ENERGIES = [0.01, 0.5, 2.0]          # omega_i in units of m
ANGLES = range(0, 181, 15)


def dsigma(omega_in, theta):
    cfg = processes.compton_lab_config(omega_in, theta)
    m2 = processes.spin_summed_squared(cfg)
    w2 = processes.compton_omega_out(omega_in, theta)
    return m2, (w2 / omega_in) ** 2 * m2 / (64.0 * math.pi ** 2)


def main():
    for omega in ENERGIES:
        print(f"\nomega_i = {omega} m")
        print(f"{'theta':>6} {'|M|^2 avg':>14} {'dsigma/dOmega':>16}")
        for deg in ANGLES:
            theta = math.radians(deg)
            if deg in (0, 180):
                # avoid the exactly forward/backward degenerate frames
                theta += 1e-6
            m2, ds = dsigma(omega, theta)
            print(f"{deg:>6} {m2:>14.6e} {ds:>16.6e}")
        m2_0, _ = dsigma(omega, 1e-6)
        m2_90, _ = dsigma(omega, math.pi / 2)
        print(f"  forward/perpendicular ratio: {m2_0 / m2_90:.6f}"
              f"  (Thomson limit: 2)")


if __name__ == "__main__":
    main()
