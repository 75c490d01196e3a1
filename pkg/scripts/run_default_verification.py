#!/usr/bin/env python3
"""Run the full identity suite over the default grid and summarize findings.

Prints per-check statistics, then every discrepancy between a published
form and the derived one, grouped by check.  Optionally dumps the raw
reports as JSON for archiving.
"""

import argparse
import json
import sys
import time
from collections import Counter, defaultdict

from umbralcalc.identities import ALL_CHECK_IDS, default_grid, run_suite, summarize


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--json-out", help="write raw reports to this path")
    args = parser.parse_args()

    grid = default_grid()
    started = time.perf_counter()
    reports = run_suite(grid, ALL_CHECK_IDS, jobs=args.jobs)
    elapsed = time.perf_counter() - started

    per_check: dict[str, Counter] = defaultdict(Counter)
    for report in reports:
        per_check[report.check_id][report.status] += 1

    width = max(len(cid) for cid in ALL_CHECK_IDS)
    for cid in ALL_CHECK_IDS:
        counts = per_check[cid]
        print(
            f"{cid.ljust(width)}  pass={counts['pass']:5d}  "
            f"fail={counts['fail']:4d}  skipped={counts['skipped']:5d}"
        )
    stats = summarize(reports)
    print(
        f"\ntotal={stats['total']} pass={stats['pass']} fail={stats['fail']} "
        f"skipped={stats['skipped']} discrepancy_notes={stats['discrepancy_notes']} "
        f"({elapsed:.1f}s)"
    )

    notes = defaultdict(set)
    for report in reports:
        if report.paper_discrepancy:
            notes[report.check_id].add(report.paper_discrepancy)
    if notes:
        print("\ndistinct discrepancy findings:")
        for cid in ALL_CHECK_IDS:
            for note in sorted(notes.get(cid, ())):
                print(f"  [{cid}] {note}")

    if args.json_out:
        payload = {
            "reports": [r.to_record() for r in reports],
            "summary": stats,
        }
        with open(args.json_out, "w") as handle:
            json.dump(payload, handle, indent=2)
        print(f"\nraw reports written to {args.json_out}")

    return 1 if stats["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
