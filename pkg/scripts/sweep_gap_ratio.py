#!/usr/bin/env python3
"""Sweep the gap ratio for the cube and sphere conventions.

Writes a CSV table and an SVG chart of the permittivity deviation ratio.

Example:
  python scripts/sweep_gap_ratio.py --kappa-min 0.5 --kappa-max 4 --points 64 --outdir out
"""

import argparse
from pathlib import Path

from vacuumresponse.report import SweepConfig, rows_to_csv, sweep_rows
from vacuumresponse.svgchart import Series, sweep_chart


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--kappa-min", type=float, default=0.5)
    ap.add_argument("--kappa-max", type=float, default=4.0)
    ap.add_argument("--points", type=int, default=64)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()

    config = SweepConfig(
        kappa_min=args.kappa_min,
        kappa_max=args.kappa_max,
        points=args.points,
        conventions=("cube", "sphere"),
    )
    rows = sweep_rows(config)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "gap_ratio_sweep.csv").write_text(rows_to_csv(rows), encoding="utf-8")

    series = [
        Series(token, [(r.kappa, r.eps_ratio) for r in rows if r.convention == token])
        for token in config.conventions
    ]
    chart = sweep_chart(
        series,
        x_label="gap ratio (transition energy / rest energy)",
        y_label="permittivity estimate / measured value",
        reference_y=1.0,
        reference_label="measured",
    )
    (outdir / "gap_ratio_sweep.svg").write_text(chart, encoding="utf-8")
    print(f"wrote {outdir / 'gap_ratio_sweep.csv'} and {outdir / 'gap_ratio_sweep.svg'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
