"""Run every check suite and print a timing table."""

import argparse
import time

from shiftsim.checks import DEFAULT_SAMPLES, DEFAULT_SEED, SUITES, run_suite

# Suites whose count is a radius or a fixed range, not a sample size.
UNSCALED = {"worked-example", "half-finite", "ball"}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--scale", type=float, default=1.0, help="multiply default sample counts")
    args = parser.parse_args()
    failed = 0
    for name in SUITES:
        samples = DEFAULT_SAMPLES[name]
        if name not in UNSCALED:
            samples = max(1, round(samples * args.scale))
        start = time.perf_counter()
        res = run_suite(name, samples, args.seed)
        print(f"{name:18s} {res.summary().splitlines()[0]:16s} {time.perf_counter() - start:7.2f}s")
        failed += not res.ok
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
