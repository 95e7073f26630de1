"""Smallest data over Z/p where one vertex is linkable to two others, with the arithmetic behind it."""
from __future__ import annotations

import argparse

from pointedhopf.linking import enumerate_data, linkable_pairs, vertices_linkable_to_two


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--s", type=int, default=1)
    ap.add_argument("--theta-max", type=int, default=3)
    ap.add_argument("--limit", type=int, default=5)
    args = ap.parse_args()
    shown = 0
    for d in enumerate_data(args.p, args.s, args.theta_max):
        multi = vertices_linkable_to_two(d)
        if not multi:
            continue
        print(f"g = {[list(x.exponents) for x in d.g]}  chi = {[list(x.exponents) for x in d.chi]}  "
              f"type = {' x '.join(d.components.classification.labels())}")
        print(f"  cartan = {[list(r) for r in d.cartan]}  q = {list(d.q)}")
        print(f"  linkable pairs = {[(i + 1, j + 1) for i, j in linkable_pairs(d)]}")
        for v, ps in multi:
            print(f"  vertex {v + 1} is linkable to {[p + 1 for p in ps]}")
        shown += 1
        if shown == args.limit:
            break
    if not shown:
        print("no vertex linkable to two vertices in this range")


if __name__ == "__main__":
    main()
