"""Train a small reverse-engineering model on synthetic scenes.

This is a desk-scale run (4 images, 40 epochs, ~4 minutes on one CPU
core) that overfits enough for the other demos to show meaningful
reconstructions. The checkpoint and loss history land in
demos/output/attack/.

Run:  python demos/02_train_attack.py
"""

from pathlib import Path

import featpriv as fp
from featpriv.synthetic import synthetic_scene

OUT = Path(__file__).parent / "output" / "attack"
HARRIS = fp.HarrisConfig(scale=4.0, rel_threshold=0.001)

images = [synthetic_scene(128, 128, seed=200 + i, n_rects=100, n_mosaics=9)
          for i in range(4)]
dataset = []
for img in images:
    keypoints = fp.detect_harris(img, 300, HARRIS)
    dataset.append((img, fp.extract_descriptors(img, keypoints, "sift")))
print("features per image:", [len(fs) for _, fs in dataset])

config = fp.TrainConfig(
    epochs=40,
    adversarial_start=41,   # sentinel: no adversarial phase at this scale
    crop_size=128,
    batch_size=2,
    seed=0,
)

checkpoint = fp.train_attack(
    dataset, config, out_dir=OUT,
    progress=lambda row: print(
        f"epoch {row['epoch']:3d}  l_mae {row['l_mae']:.4f}  "
        f"l_perc {row['l_perc']:.4f}"))

first = checkpoint.loss_history[0]["l_mae"]
last = checkpoint.loss_history[-1]["l_mae"]
print(f"\nl_mae {first:.4f} -> {last:.4f}; checkpoint written to "
      f"{OUT / 'checkpoint.pt'}")
print(f"loss history CSV: {OUT / 'loss_history.csv'}")
