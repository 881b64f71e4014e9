"""Physical constants in natural units (hbar = c = 1)."""

ALPHA_DEFAULT = 7.2973525693e-3         # fine-structure constant
ELECTRON_MASS_MEV = 0.51099895          # display-only rescaling factor
