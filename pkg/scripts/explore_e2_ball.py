"""Grow the word ball on alpha, lambda and (1 2) and report sphere sizes."""

import argparse

from shiftsim.classes import E, contains
from shiftsim.houghton import HoughtonElement, ball_enumerate
from shiftsim.perm import ALPHA, LAMBDA, cycle_preview, mk_finite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--radius", type=int, default=6)
    args = parser.parse_args()
    gens = [HoughtonElement(1, g) for g in (ALPHA, LAMBDA, mk_finite([(1, 2)]))]
    ball = ball_enumerate(gens, args.radius)
    print(f"radius {ball.radius}: {len(ball)} elements{' (truncated)' if ball.truncated else ''}")
    for r, size in enumerate(ball.sphere_sizes):
        print(f"  sphere {r}: {size}")
    outside = sum(not contains(E(2), e.flat) for e in ball.elements)
    print(f"outside E(2): {outside}")
    finite = sorted((e.flat for e in ball.elements if e.flat.p == 1 and not e.flat.is_identity), key=lambda g: g.T)
    print(f"finitary elements: {len(finite)}")
    for g in finite[:10]:
        print(f"  {cycle_preview(g, g.T)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
