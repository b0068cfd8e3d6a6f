#!/usr/bin/env python3
"""Partition metrics: adjusted Rand index and Hungarian-matched IoU.

Run: python demos/06_metrics.py
"""

import numpy as np

from bitseg import metrics as mt

# Both metrics treat label maps as partitions: the label VALUES never matter,
# only which pixels share one. That is the right notion for class-agnostic
# segmentation, where the model is free to name masks however it likes.
gt = np.array(
    [
        [0, 0, 1, 1],
        [0, 0, 1, 1],
        [2, 2, 1, 1],
        [2, 2, 1, 1],
    ]
)

relabeled = (gt + 5) % 3 + 40
print("relabeled ground truth:    ARI", mt.ari(gt, relabeled), " (perfect)")

# The classic worked example: splitting the 2x2 map the wrong way is WORSE
# than chance pair agreement, hence the negative score.
a = np.array([[0, 0], [1, 1]])
b = np.array([[0, 1], [0, 1]])
print("orthogonal 2x2 partitions: ARI", mt.ari(a, b))

# A constant prediction collapses to the chance level 0 by construction.
print("constant prediction:       ARI", mt.ari(gt, np.zeros_like(gt)))

# Mean IoU after optimal matching: predicted classes are matched one-to-one
# to ground-truth classes to maximize total IoU; unmatched ground-truth
# classes count as zero.
pred = gt.copy()
pred[gt == 2] = 1  # merge class 2 into 1
iou, match = mt.hungarian_iou(gt, pred)
print(f"\nmerging one class: mean IoU {iou:.3f}")
for g, p, v in match.pairs:
    print(f"  gt {g} <- pred {p}: IoU {v:.3f}")
print(f"  unmatched gt classes: {match.unmatched_gt}")

# The assignment solver prefers total score over greedy pairs:
m = np.array([[0.9, 0.8], [0.85, 0.1]])
rows, cols = mt.solve_assignment(m)
print(f"\nassignment on {m.tolist()}: pairs {list(zip(rows.tolist(), cols.tolist()))} "
      f"(total {m[rows, cols].sum():.2f} beats greedy 1.00)")

# best_of_n scores a list of candidate segmentations and keeps the winner.
rng = np.random.default_rng(0)
candidates = [rng.integers(0, 3, gt.shape) for _ in range(3)] + [gt]
best, idx = mt.best_of_n(gt, candidates)
print(f"\nbest of {len(candidates)} candidates: ARI {best} at index {idx}")
