"""Walk through the feature side of the pipeline.

Detects Harris corners on a synthetic scene, extracts descriptors with
each method, assembles the sparse feature map the attack model consumes,
and round-trips the features through the SFV1 file format.

Run:  python demos/01_features_and_sparse_maps.py
"""

from pathlib import Path

import numpy as np

import featpriv as fp
from featpriv.synthetic import synthetic_scene

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# A corner-rich seeded scene stands in for a user photo.
image = synthetic_scene(256, 256, seed=3)
fp.save_image(OUT / "scene.png", image)

keypoints = fp.detect_harris(image, max_keypoints=1000)
print(f"detected {len(keypoints)} Harris corners "
      f"(strongest response {keypoints[0].response:.2e})")

for method in ("sift", "binary", "learned"):
    features = fp.extract_descriptors(image, keypoints, method)
    print(f"{method:8s}: {len(features):4d} descriptors of width "
          f"{features.channels}")

features = fp.extract_descriptors(image, keypoints, "sift")

# The sparse map is zero everywhere except the descriptor cells.
sparse = fp.assemble_sparse_map(features, 256, 256)
occupied = len(sparse.occupancy)
print(f"sparse map {sparse.shape}: {occupied} occupied cells "
      f"({occupied / (256 * 256):.2%} of the grid)")

# Visualize occupancy on the image.
overlay = image.copy()
for row, col in sparse.occupancy:
    r0, r1 = max(0, row - 1), min(256, row + 2)
    c0, c1 = max(0, col - 1), min(256, col + 2)
    overlay[r0:r1, c0:c1] = (1.0, 0.1, 0.1)
fp.save_image(OUT / "keypoints.png", overlay)

# SFV1 round trip is bit-exact.
fp.write_features(OUT / "scene.sfv", features)
loaded = fp.read_features(OUT / "scene.sfv")
assert np.array_equal(loaded.descriptors, features.descriptors)
print(f"SFV1 round trip OK -> {OUT / 'scene.sfv'}")
