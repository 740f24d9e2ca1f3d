#!/usr/bin/env python3
"""Convert the digit JSON files shipped by the `mnist` npm package into an
idx3-ubyte image file.

Usage: mnist_json_to_idx.py <package/src/digits> <out-file>

Each JSON file holds {"data": [...]} with 28*28 intensities per image scaled
to [0, 1] and rounded to three decimals; they are mapped back to bytes.
Images are interleaved round-robin across digit classes so that any prefix
of the output is roughly class-balanced.
"""
import json
import struct
import sys
from pathlib import Path

SIDE = 28


def main() -> int:
    src, out = Path(sys.argv[1]), Path(sys.argv[2])
    per_digit = []
    for digit in range(10):
        raw = json.loads((src / f"{digit}.json").read_text())["data"]
        count = len(raw) // (SIDE * SIDE)
        per_digit.append([raw[i * SIDE * SIDE:(i + 1) * SIDE * SIDE] for i in range(count)])

    images = []
    for r in range(max(len(d) for d in per_digit)):
        for d in per_digit:
            if r < len(d):
                images.append(d[r])

    with out.open("wb") as f:
        f.write(struct.pack(">IIII", 0x00000803, len(images), SIDE, SIDE))
        for img in images:
            f.write(bytes(min(255, max(0, round(v * 255))) for v in img))
    print(f"wrote {len(images)} images to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
