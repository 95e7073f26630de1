"""Nichols algebra dimensions against the PBW series for FL data."""
from __future__ import annotations

import argparse
import time

from pointedhopf.linking import fl_datum
from pointedhopf.nichols import DEFAULT_BUDGET, nichols_dims, pbw_hilbert_series
from pointedhopf.rootsys import block_diagonal, cartan_of_type

DEFAULT_CASES = ["A1:3", "A1:5", "A1:7", "A1+A1:3", "A2:3", "A1+A1:5", "B2:3"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cases", nargs="*", default=DEFAULT_CASES, help="TYPE[+TYPE...]:N, e.g. A2:3")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    print(f"{'datum':<12} {'match':<6} {'total':>6} {'secs':>7}  dims")
    for case in args.cases:
        label, N = case.split(":")
        cartan = block_diagonal(*(cartan_of_type(x) for x in label.split("+")))
        d = fl_datum(cartan, int(N))
        t0 = time.perf_counter()
        dims = nichols_dims(d.braiding, budget=args.budget, threads=args.threads)
        secs = time.perf_counter() - t0
        pbw = pbw_hilbert_series(d.root_data, list(d.components.N))
        if dims.truncated:
            status = "trunc"
        else:
            status = "yes" if dims.dims == pbw.dims else "NO"
        print(f"{case:<12} {status:<6} {dims.total:>6} {secs:>7.2f}  {list(dims.dims)}")


if __name__ == "__main__":
    main()
