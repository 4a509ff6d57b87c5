"""Reconstruct images from their features and measure privacy/utility.

Uses the checkpoint from demo 02: reconstructs the training scenes,
scores them with SSIM, checks what a stub object detector would still
find, and measures matching recall on a synthetically warped image pair.

Run:  python demos/02_train_attack.py   (once)
      python demos/03_reconstruct_and_measure.py
"""

import json
import sys
from pathlib import Path

import featpriv as fp
from featpriv.synthetic import synthetic_scene, warped_pair

OUT = Path(__file__).parent / "output"
CKPT = OUT / "attack" / "checkpoint.pt"
if not CKPT.is_file():
    sys.exit("no checkpoint found - run demos/02_train_attack.py first")

checkpoint = fp.load_checkpoint(CKPT)
HARRIS = fp.HarrisConfig(scale=4.0, rel_threshold=0.001)

# --- privacy: how well do the training scenes reconstruct? ------------------
print("reconstruction SSIM per training scene:")
for i in range(4):
    image = synthetic_scene(128, 128, seed=200 + i, n_rects=100, n_mosaics=9)
    recon, used = fp.reconstruct(image, "sift", checkpoint,
                                 max_keypoints=300, harris_cfg=HARRIS)
    score = fp.ssim(image, recon)
    fp.save_image(OUT / f"recon_{i}.png", recon)
    print(f"  scene {i}: ssim {score:.3f}  ({len(used)} features used)")

# --- privacy: object recall via the stub detector ----------------------------
# Sidecar annotations stand in for a real detector: one "person" box on
# scene 0, and the same file describes what the detector finds on the
# reconstruction (here: the same box, i.e. the object survived).
ann = OUT / "annotations"
ann.mkdir(exist_ok=True)
record = {"x_min": 30, "y_min": 30, "x_max": 90, "y_max": 90,
          "class": "person", "score": 0.9}
(ann / "scene0.boxes.jsonl").write_text(json.dumps(record) + "\n")

image0 = synthetic_scene(128, 128, seed=200, n_rects=100, n_mosaics=9)
orig_dets = fp.detect_objects(image0, backend="stub", image_id="scene0",
                              sidecar_dir=ann)
recon0 = fp.load_image(OUT / "recon_0.png")
recon_dets = fp.detect_objects(recon0, backend="stub", image_id="scene0",
                               sidecar_dir=ann)
recall, matches = fp.object_recall(orig_dets, recon_dets)
print(f"object recall (stub annotations): {recall:.2f} "
      f"({len(matches)}/{len(orig_dets)} objects re-found)")

# --- utility: matching recall on a warped pair --------------------------------
image_a, image_b, _ = warped_pair(256, seed=900, angle_deg=10.0)
feats_a = fp.extract_descriptors(image_a, fp.detect_harris(image_a, 1000),
                                 "sift")
feats_b = fp.extract_descriptors(image_b, fp.detect_harris(image_b, 1000),
                                 "sift")
result = fp.match_features(feats_a, feats_b)
print(f"matching a 10-degree rotated pair: {result.inliers} inliers of "
      f"{result.putative} putative matches -> success={result.success}")
print(f"matching recall over the one-pair list: "
      f"{fp.matching_recall([(feats_a, feats_b)]):.2f}")
