"""Run the full local-relation verification sweep and print JSON reports.

Usage: python scripts/run_relation_sweep.py [--max-weight W] [--jobs N]
"""

from __future__ import annotations

import argparse
import sys

from ypa.heisenberg import RELATION_IDS, verify_relation


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    all_ok = True
    for name in RELATION_IDS:
        report = verify_relation(name, args.max_weight, args.jobs)
        print(report.to_json())
        all_ok &= report.verified
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
