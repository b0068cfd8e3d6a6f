#!/usr/bin/env python3
"""Analog bits: how 2^k classes become k signed bits, and what the
continuous bit activations say about class probabilities.

Run: python demos/01_analog_bits.py
"""

import numpy as np

from bitseg import bitcodec as bc

# --- Encoding: class index -> signed bits (MSB first), decode by threshold ---
print("class -> 4-bit code (0 -> -1, 1 -> +1):")
for c in (0, 5, 10, 15):
    code = bc.encode_bits(c, 4)
    print(f"  {c:2d} -> {code}   decodes back to {bc.decode_bits(code)}")

# Noisy activations still decode: threshold at 0.
noisy = np.array([0.93, -0.41, 0.08, -0.77])
print(f"\nnoisy activations {noisy} -> class {bc.decode_bits(noisy)} (bits 1010)")

# --- Probabilities from non-thresholded activations -------------------------
# Treating bits as independent gives each class the product of its per-bit
# probabilities. A fully undecided pixel spreads mass over every class:
p = bc.class_probabilities(np.zeros(4))
print(f"\nall-zero activations: every class gets 1/16 = {p[0]:.6f} (sum {p.sum():.0f})")

# If two classes differ in ONE bit, a pixel can put exactly half on each --
# the undecided bit splits the mass while the shared bits stay certain:
a, b = 0b1111, 0b1110
mid = (bc.encode_bits(a, 4) + bc.encode_bits(b, 4)) / 2
p = bc.class_probabilities(mid)
print(f"midpoint of {a:04b} and {b:04b}: p({a:04b}) = {p[a]:.2f}, p({b:04b}) = {p[b]:.2f}, others {p.sum() - p[a] - p[b]:.2f}")

# But if they differ in k bits, 2^k classes soak up mass at 2^-k each.
# This is the cost of the bit encoding -- and why the palette module tries
# to give neighboring masks codes that differ in a single bit:
for a, b in [(0b1111, 0b1100), (0b1111, 0b0000)]:
    k = bin(a ^ b).count("1")
    mid = (bc.encode_bits(a, 4) + bc.encode_bits(b, 4)) / 2
    p = bc.class_probabilities(mid)
    spread = int(np.sum(p > 0))
    print(f"midpoint of {a:04b} and {b:04b} (differ in {k} bits): "
          f"{spread} classes at {p.max():.4f} each")

# --- The two baseline encodings for comparison -------------------------------
print("\nonehot code for class 2 of 4 (rescaled to zero mean, unit variance):")
print(" ", np.round(bc.encode_onehot(2, 4), 3))
print("rgb palette colors for the first 4 of 64 classes:")
print(np.round(bc.rgb_palette(4), 3))
