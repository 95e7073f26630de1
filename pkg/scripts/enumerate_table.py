"""Count data over (Z/p)^s by rank and Dynkin type, with linking statistics."""
from __future__ import annotations

import argparse
from collections import Counter

from pointedhopf.linking import enumerate_data, enumerate_linkings, linkable_pairs, remark_bound, vertices_linkable_to_two


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--s", type=int, default=1)
    ap.add_argument("--theta-max", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    by_type: Counter = Counter()
    linked: Counter = Counter()
    two: Counter = Counter()
    for d in enumerate_data(args.p, args.s, args.theta_max, budget=1 << 24, threads=args.threads):
        key = (d.theta, " x ".join(d.components.classification.labels()))
        by_type[key] += 1
        if linkable_pairs(d):
            linked[key] += 1
            if vertices_linkable_to_two(d):
                two[key] += 1
    print(f"p = {args.p}, s = {args.s}, theta <= {args.theta_max}, bound 2s(p-1)/(p-2) = "
          f"{remark_bound(args.p, args.s):.3f}")
    print(f"{'theta':>5}  {'type':<24} {'data':>7} {'linkable':>9} {'to two':>7}")
    for key in sorted(by_type):
        print(f"{key[0]:>5}  {key[1]:<24} {by_type[key]:>7} {linked[key]:>9} {two[key]:>7}")
    print(f"total {sum(by_type.values())}, with a vertex linkable to two: {sum(two.values())}")


if __name__ == "__main__":
    main()
