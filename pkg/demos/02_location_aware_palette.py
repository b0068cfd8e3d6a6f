#!/usr/bin/env python3
"""Location-aware palette: the four grid modes and centroid-based assignment.

Run: python demos/02_location_aware_palette.py
"""

import numpy as np

from bitseg import palette as pal

N_BITS = 4  # 16 codes on a 4x4 grid


def mean_adjacent_hamming(grid):
    total, count = 0, 0
    for r in range(grid.side):
        for c in range(grid.side):
            for dr, dc in ((1, 0), (0, 1)):
                if r + dr < grid.side and c + dc < grid.side:
                    total += pal.hamming(int(grid.codes[r, c]), int(grid.codes[r + dr, c + dc]))
                    count += 1
    return total / count


print("grid arrangements of the 16 4-bit codes (shown in binary):\n")
for mode in ("similar", "random", "different"):
    grid = pal.build_grid(mode, N_BITS, seed=0)
    print(f"mode={mode}  (mean adjacent Hamming distance {mean_adjacent_hamming(grid):.2f})")
    for row in grid.codes:
        print("   " + "  ".join(f"{int(v):04b}" for v in row))
    print()

# The similar grid is a 2-d gray code: gray(r) in the high bits, gray(c) in
# the low bits, so every 4-neighbor pair differs in exactly one bit.
print("1-d gray code for reference:", [pal.gray(i) for i in range(8)])

# --- Assigning masks to codes by centroid ------------------------------------
# Three masks on a 32x32 canvas; the grid cell is 8x8 pixels. Two centroids
# land in the same cell, so the smaller mask is pushed to the nearest free one.
canvas = (32, 32)
masks = []
big = np.zeros(canvas, dtype=bool); big[0:6, 0:6] = True          # cell (0,0)
crowder = np.zeros(canvas, dtype=bool); crowder[6:8, 1:3] = True  # also cell (0,0)
corner = np.zeros(canvas, dtype=bool); corner[26:31, 26:31] = True  # cell (3,3)
masks = [big, crowder, corner]

grid = pal.build_similar_grid(N_BITS)
codes = pal.assign_lap(masks, grid, canvas)
for name, mask, code in zip(("big", "crowder", "corner"), masks, codes):
    cy, cx = pal.centroid(mask)
    print(f"{name:8s} centroid ({cy:5.1f}, {cx:5.1f}) -> code {code:2d} ({code:04b})")
print("the crowded-out mask got a neighboring cell's code, one bit away")

# Without a grid (mode none) masks just get 1..N by size:
print("mode=none assignments:", pal.assign_lap(masks, None, canvas))

# Entity maps are remapped the same way at data-load time:
entity_map = np.zeros(canvas, dtype=np.int32)
entity_map[big] = 1
entity_map[corner] = 2
remapped = pal.remap_labelmap(entity_map, grid)
print("remapped entity ids ->", sorted(np.unique(remapped).tolist()))
