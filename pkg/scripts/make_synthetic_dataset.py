#!/usr/bin/env python3
"""Regenerate data/synthetic_ckd.csv (seeded synthetic stand-in dataset).

The output is NOT the UCI chronic-kidney-disease data; see
renalchain.viability.synthetic for what it is and is not good for.
"""

import argparse
from pathlib import Path

from renalchain.viability.synthetic import DEFAULT_SEED, write_synthetic_dataset


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "data" / "synthetic_ckd.csv",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()
    write_synthetic_dataset(args.out, seed=args.seed)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
