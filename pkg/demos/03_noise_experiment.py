"""
Noisy localization and low-pass smoothing
=========================================

Repeat the localization of the target at (4, 3) 90 times with Gaussian errors
on the measured tilt (0.1 deg) and height (0.5 m), then smooth the X and Y
series with a first-order low-pass filter (alpha = 0.125).
"""
import sys

from fisheyeloc import NoiseSpec, SimConfig, run_simulation
from fisheyeloc.simulation import format_table, write_csv

records, stats = run_simulation(SimConfig(seed=1))
print(format_table(stats))
print(f"variance kept by the filter: X {stats.x.var_filtered / stats.x.var_raw:.3f}, "
      f"Y {stats.y.var_filtered / stats.y.var_raw:.3f} (white-noise value 0.067)")

###############################################################################
# Adding the 4 px detection error makes the raw scatter much wider.

_, noisy = run_simulation(SimConfig(seed=1, noise=NoiseSpec(pixel_std=4.0)))
print()
print(format_table(noisy))

###############################################################################
# The per-trial CSV is suitable for plotting raw against filtered values.

if len(sys.argv) > 1:
    with open(sys.argv[1], "w", newline="") as fh:
        write_csv(records, fh)
    print(f"wrote {sys.argv[1]}")
