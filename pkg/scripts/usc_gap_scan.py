#!/usr/bin/env python3
"""Map where the volume-ratio certificates actually certify.

Scans the two-variable and n-variable contradiction certificates over a
(x, t) grid and prints, per t, the solver ratio at each x together with
the x -> 0 limit.  Ratios above 1 certify that no enclosing-simplex
volume can be upper semicontinuous at the degenerate base point; the scan
makes the pin threshold t = (n-1) mu(x) visible as the line where the
solver ratio detaches from the fully active stationary-point value.
"""

import argparse

from wumetric.wu import (
    certify_contradiction_g2,
    certify_contradiction_gn,
    gn_ratio_limit,
)


def scan_g2(x_grid, t_grid) -> None:
    print("# two-variable certificate (ratio / bound t^2(1-x)^2)")
    header = "t\\x " + " ".join(f"{x:>18.4g}" for x in x_grid)
    print(header)
    for t in t_grid:
        cells = []
        for x in x_grid:
            rep = certify_contradiction_g2(x, t)
            mark = "*" if rep.certified else " "
            cells.append(f"{rep.ratio:>10.6f}/{rep.ratio_bound:<6.4f}{mark}")
        print(f"{t:<4.2f} " + " ".join(cells))
    print("(* = certified: solver ratio > 1)\n")


def scan_gn(n, x_grid, t_grid) -> None:
    print(f"# {n}-variable certificate (solver ratio, limit as x -> 0)")
    for t in t_grid:
        limit = gn_ratio_limit(n, t)
        cells = []
        for x in x_grid:
            rep = certify_contradiction_gn(n, x, t)
            mark = "*" if rep.certified else " "
            cells.append(f"{rep.ratio:.6f}{mark}")
        print(f"t={t:<4.2f} limit={limit:.6f}  " + " ".join(cells))
    print("(* = certified: solver ratio > 1)")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="dimension for the gn scan")
    parser.add_argument(
        "--x-grid",
        default="0.1,0.01,0.001,0.0001",
        help="comma-separated base-point offsets",
    )
    parser.add_argument(
        "--t-grid",
        default="1.1,1.3,1.6,2.0,3.0",
        help="comma-separated pin values (g2 uses them directly, gn needs > n/2)",
    )
    args = parser.parse_args(argv)
    x_grid = [float(v) for v in args.x_grid.split(",")]
    t_grid = [float(v) for v in args.t_grid.split(",")]

    scan_g2(x_grid, [t for t in t_grid if t > 1.0])
    scan_gn(args.n, x_grid, [t for t in t_grid if t > args.n / 2.0])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
