#!/usr/bin/env python3
"""Reproduce the three |gamma_3| bound derivations and print a summary table.

Usage: python scripts/run_bounds.py [--grid-step 0.05]
"""

import argparse

from gamma3lab import FAMILIES, global_bound


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid-step", type=float, default=0.05)
    args = parser.parse_args()

    header = f"{'family':<8}{'interior max':>16}{'best edge':>14}{'grid check':>14}{'|gamma3| bound':>17}"
    print(header)
    print("-" * len(header))
    for tag in ("f1", "f2", "f3"):
        report = global_bound(FAMILIES[tag], grid_step=args.grid_step)
        interior = max(v for _, v in report.interior_points)
        best_edge = max(v for _, _, v in report.edge_maxima)
        print(
            f"{report.family.tag:<8}{interior:>16.10f}{best_edge:>14.8f}"
            f"{report.grid_max:>14.8f}{report.gamma3_bound:>17.12f}"
        )
        for note in report.notes:
            print(f"    note: {note}")


if __name__ == "__main__":
    main()
