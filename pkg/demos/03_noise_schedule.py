#!/usr/bin/env python3
"""The variance-preserving cosine schedule and what input scaling does to it.

Run: python demos/03_noise_schedule.py
"""

import numpy as np

from bitseg import schedule as sch

# gamma(t) interpolates from 1 (clean data) to 0 (pure noise); alpha and
# sigma are its square-root split, so alpha^2 + sigma^2 = 1 at every t.
ts = np.round(np.linspace(0.0, 1.0, 11), 2)

print("cosine schedule (b = 1.0):")
print("   t     gamma   alpha   sigma     SNR")
plain = sch.NoiseSchedule(1.0)
for t in ts:
    a, s = sch.coefficients(t, plain)
    snr = sch.snr(t, plain) if t > 0 else float("inf")
    print(f"  {t:4.2f}  {plain.gamma(t):6.4f}  {a:6.4f}  {s:6.4f}  {snr:8.3f}")

# Input scaling multiplies the SNR by b < 1 everywhere: the same schedule
# becomes "harder" because the signal drowns earlier. For highly redundant
# targets like segmentation bits this is what forces the model to actually
# look at the image.
print("\nSNR at selected times for different input scales b:")
print("   t      b=1.0     b=0.5     b=0.1    b=0.02")
for t in (0.1, 0.3, 0.5, 0.7, 0.9):
    row = [sch.snr(t, sch.NoiseSchedule(b)) for b in (1.0, 0.5, 0.1, 0.02)]
    print(f"  {t:4.2f}  " + "  ".join(f"{v:8.4f}" for v in row))
print("(each column is exactly b times the first one)")

# The mid-schedule point gamma = 1/2 moves toward t=0 as b shrinks:
print("\ntime where gamma_b crosses 1/2:")
grid = np.linspace(0, 1, 100_001)
for b in (1.0, 0.5, 0.1, 0.02):
    g = sch.NoiseSchedule(b).gamma(grid)
    print(f"  b={b:4.2f}: t = {grid[np.argmin(np.abs(g - 0.5))]:.3f}")

# Loss weightings reweight the MSE across the process. The sigmoid weighting
# (bias -4) down-weights the easy high-SNR region near t=0:
print("\nloss weights w(t) at b=0.1:")
print("   t    sigmoid(-4)  constant   snr_eps")
scaled = sch.NoiseSchedule(0.1)
for t in (0.1, 0.3, 0.5, 0.7, 0.9):
    w_sig = sch.loss_weight(t, scaled, sch.LossWeighting("sigmoid", -4.0))
    w_eps = sch.loss_weight(t, scaled, sch.LossWeighting("snr_eps"))
    print(f"  {t:4.2f}  {w_sig:10.6f}  {1.0:8.1f}  {w_eps:9.5f}")
