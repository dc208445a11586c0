"""Writes the digits embedding fixture used by the smoke test.

sklearn's 8x8 digits (1797 points, 64 features) scaled to [0, 1]. Classes
are digit mod 3; clusters are the original digits.
"""

import argparse
import json
from pathlib import Path

import numpy as np
from sklearn.datasets import load_digits


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path,
                        default=Path(__file__).resolve().parents[2] / "tests" / "fixtures" / "digits_mod3.csv")
    args = parser.parse_args()

    digits = load_digits()
    x = digits.data.astype(np.float64) / 16.0
    clusters = digits.target.astype(int)
    labels = clusters % 3

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w") as f:
        for row, y in zip(x, labels):
            f.write(",".join(repr(float(v)) for v in row) + f",{y}\n")
    sidecar = {"name": "digits-mod3", "num_classes": 3, "clusters": clusters.tolist()}
    Path(str(args.out) + ".json").write_text(json.dumps(sidecar) + "\n")


if __name__ == "__main__":
    main()
