#!/usr/bin/env python3
"""Export point clouds for all sample surfaces into a directory.

Writes one PLY file per surface, plus a CSV of the degree-six surface at a
higher resolution for plotting; prints the residual summary.
"""

import argparse
import pathlib

from celestial import sampling


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="clouds")
    parser.add_argument("--resolution", type=int, default=80)
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for surface in sampling.SURFACES:
        cloud = sampling.sample(surface, args.resolution)
        path = out / f"{surface}.ply"
        sampling.write_ply(cloud, str(path))
        print(
            f"{surface:<9} {len(cloud.points):>6} points  "
            f"max residual {cloud.max_residual:.2e}  -> {path}"
        )
    dense = sampling.sample("dp6", 2 * args.resolution)
    sampling.write_csv(dense, str(out / "dp6_dense.csv"))
    print(f"dp6 dense {len(dense.points):>6} points  -> {out / 'dp6_dense.csv'}")


if __name__ == "__main__":
    main()
