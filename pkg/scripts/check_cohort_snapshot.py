#!/usr/bin/env python3
"""Recompute the quick crossing indicator over the bundled reference cohort.

data/cohort_snapshot_2023.csv holds consolidated career statistics for 30
researchers (public Google Scholar snapshot, mid-2023): publication and
citation totals, the most-cited paper's count, the Hirsch index, and whether
the windowed g = k crossing was observed.  This script recomputes citations
per paper (D), the peak ratio R = max/D, and the R >= 40 flag from the raw
totals, checks them against the printed integers, and reports how well the
flag agrees with the observed crossings.

Usage: python scripts/check_cohort_snapshot.py [--csv PATH] [--r-threshold X]
"""

import argparse
import csv
import sys
from pathlib import Path

from citeineq import cites_per_paper, hirsch_sqrt_ratio, peak_ratio

DEFAULT_CSV = Path(__file__).resolve().parent.parent / "data" / "cohort_snapshot_2023.csv"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", type=Path, default=DEFAULT_CSV)
    parser.add_argument("--r-threshold", type=float, default=40.0)
    args = parser.parse_args()

    with open(args.csv, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))

    print(f"{'researcher':<16} {'N_p':>5} {'N_c':>7} {'max':>6} {'D':>7} {'R':>7} "
          f"{'flag':>5} {'crossed':>10} {'h/sqrt(N_c)':>12}")
    mismatches = 0
    flagged = []
    for row in rows:
        n_pubs, n_cites = int(row["n_pubs"]), int(row["n_cites"])
        max_cites, h = int(row["max_citations"]), int(row["h_index"])
        d = cites_per_paper(n_pubs, n_cites)
        r = peak_ratio(max_cites, n_pubs, n_cites)
        flag = r >= args.r_threshold
        if flag:
            flagged.append(row)
        if abs(round(d) - int(row["cites_per_paper_printed"])) > 1:
            mismatches += 1
        if abs(round(r) - int(row["peak_ratio_printed"])) > 1:
            mismatches += 1
        print(f"{row['name']:<16} {n_pubs:>5} {n_cites:>7} {max_cites:>6} {d:>7.1f} {r:>7.1f} "
              f"{'yes' if flag else 'no':>5} {row['crossing']:>10} {hirsch_sqrt_ratio(h, n_cites):>12.3f}")

    yes_rate = sum(r["crossing"] == "Yes" for r in flagged) / len(flagged)
    agree_all = sum((r["crossing"] == "Yes") == (peak_ratio(int(r["max_citations"]),
                    int(r["n_pubs"]), int(r["n_cites"])) >= args.r_threshold) for r in rows) / len(rows)
    print()
    print(f"rows checked: {len(rows)}; printed-integer mismatches beyond +-1: {mismatches}")
    print(f"flagged (R >= {args.r_threshold:g}): {len(flagged)}; "
          f"crossing rate among flagged: {yes_rate:.1%}")
    print(f"overall flag/crossing agreement: {agree_all:.1%}")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
