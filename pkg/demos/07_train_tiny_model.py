#!/usr/bin/env python3
"""End-to-end mini run: generate data, train a small model for a few hundred
iterations, sample segmentations, and score them. Takes a couple of minutes
on a laptop core; this is a smoke-scale version of the desk-scale experiment
(see scripts/run_desk_scale.py for the real one).

Run: python demos/07_train_tiny_model.py
"""

from pathlib import Path

import torch

from bitseg.datagen import SceneConfig, generate_dataset, load_dataset
from bitseg.denoiser import NetConfig, load_checkpoint
from bitseg.diffusion import SamplerConfig
from bitseg.experiment import ExperimentConfig
from bitseg.sweeps import run_training
from bitseg.trainer import TrainConfig, evaluate_model

torch.set_num_threads(max(1, torch.get_num_threads()))

root = Path("demos_output/tiny_run")
data_dir = root / "data"

exp = ExperimentConfig(
    encoding_kind="bits",
    n_bits=4,
    lap_mode="similar",
    input_scale=0.1,
    prediction_type="x",
    net=NetConfig(base_width=24, depth_per_level=1, levels=3, time_embed_dim=64),
    train=TrainConfig(
        iterations=300, batch_size=8, lr_peak=2e-4, warmup_iters=30,
        decay_tail_iters=75, eval_every=100, eval_samples=8, seed=0,
    ),
    sampler=SamplerConfig(steps=8, guidance_weight=1.0, seed=0),
    scene=SceneConfig(size=32, min_entities=2, max_entities=8),
    data_dir=str(data_dir),
    out_dir=str(root / "run"),
)

if not (data_dir / "meta.json").exists():
    print("generating 256 train / 16 val / 16 test scenes ...")
    generate_dataset(data_dir, exp.scene, {"train": 256, "val": 16, "test": 16})

print(f"training {exp.lap_mode}-LAP, b={exp.input_scale}, {exp.train.iterations} iterations ...")
ckpt = run_training(exp)
print(f"checkpoint: {ckpt}")

print("\nvalidation curve (iter, loss, ari, iou, lr):")
for line in (root / "run" / "metrics.csv").read_text().strip().splitlines():
    print("  " + line)

net, sched, _ = load_checkpoint(ckpt)
ari, iou = evaluate_model(net, load_dataset(data_dir, "test"), exp.sampler, sched)
print(f"\nheld-out test scenes: ARI {ari:.3f}, IoU {iou:.3f}")
print("(the desk-scale experiment trains 20k iterations; see scripts/run_desk_scale.py)")
