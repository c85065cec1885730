"""Physical constants (CODATA 2018 / exact SI values, hardcoded for reproducibility)."""

K_B = 1.380649e-23  # Boltzmann constant, J/K (exact)
H_PLANCK = 6.62607015e-34  # Planck constant, J*s (exact)
C_LIGHT = 299792458.0  # speed of light, m/s (exact)

TWO_PI = 6.283185307179586
