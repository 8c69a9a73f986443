#!/usr/bin/env python
"""
Script: run every verification mode at desk scale and print a summary

Usage:
    python scripts/run_acceptance.py
    python scripts/run_acceptance.py --jobs 4 --radius 20 --bound 200

Options:
    --jobs N      : worker processes for the sweeps (default: 1)
    --radius N    : image-box radius (default: 5)
    --bound N     : surjectivity / classical bound (default: 50)
    --zbound N    : positive-triple hypotenuse bound (default: 100)
    --kmax N      : falling factorial identity up to k (default: 20)

Exits 0 when every run passes, 1 otherwise.
"""

import argparse
import os
import sys
from datetime import datetime

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.core.logging_config import setup_logging
from app.services.verify_service import (
    check_classical,
    check_falling_factorial,
    check_image_box,
    check_positive_surjectivity,
    check_surjectivity,
    check_symbolic,
)


def run_all(jobs: int, radius: int, bound: int, zbound: int, kmax: int) -> list:
    runs = [
        ("symbolic", lambda: check_symbolic()),
        ("falling factorial", lambda: check_falling_factorial(kmax)),
        ("surjectivity", lambda: check_surjectivity(bound, jobs=jobs)),
        ("image box", lambda: check_image_box(radius, jobs=jobs)),
        ("positive surjectivity", lambda: check_positive_surjectivity(zbound, jobs=jobs)),
        ("classical", lambda: check_classical(bound)),
    ]

    reports = []
    for label, run in runs:
        print(f"\n[{datetime.now()}] Running {label}...")
        report = run()
        print(f"  {report.summary_line()}")
        for key, value in report.details.items():
            print(f"  {key}: {value}")
        reports.append(report)
    return reports


def main():
    parser = argparse.ArgumentParser(description='Run all verification modes')
    parser.add_argument('--jobs', type=int, default=1, help='Worker processes for sweeps')
    parser.add_argument('--radius', type=int, default=5, help='Image-box radius')
    parser.add_argument('--bound', type=int, default=50, help='Surjectivity and classical bound')
    parser.add_argument('--zbound', type=int, default=100, help='Positive-triple hypotenuse bound')
    parser.add_argument('--kmax', type=int, default=20, help='Largest k for the falling factorial identity')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log sweep progress')

    args = parser.parse_args()
    setup_logging("INFO" if args.verbose else "WARNING")

    print("=" * 60)
    print("Acceptance Run")
    print("=" * 60)

    reports = run_all(args.jobs, args.radius, args.bound, args.zbound, args.kmax)
    failed = [r for r in reports if not r.passed]

    print("\n" + "=" * 60)
    print("Summary:")
    print(f"  Runs: {len(reports)}")
    print(f"  Points checked: {sum(r.checked for r in reports)}")
    print(f"  Failed runs: {len(failed)}")
    for report in failed:
        print(f"    {report.mode.value}: {report.failure_count} failures")
    print("=" * 60)

    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
