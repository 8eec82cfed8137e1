#!/usr/bin/env python3
"""Measure how fast the exact peak approaches its asymptotic law.

For the central case (l=2, a=1) prints, per decade of m, the exact sandwich
bounds (as floats), the peak/law ratio and its distance from 1; for any
other (l, a) prints the measured-peak/conjectured-law ratio.  Everything is
computed in log space, so very large m stay cheap and finite:

    python scripts/asymptotic_decay.py --decades 5
    python scripts/asymptotic_decay.py --l 3 --a 2/3 --m-list 10,100,1000
"""

import argparse

from powsumseq import (
    SeqParams,
    central_ratio,
    conjectured_ratio,
    parse_rational,
    sandwich_bounds,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--decades", type=int, default=4,
                        help="use m = 10, 100, ..., 10^decades")
    parser.add_argument("--m-list", default=None,
                        help="explicit comma-separated m values instead")
    parser.add_argument("--l", type=int, default=2)
    parser.add_argument("--a", type=parse_rational, default=1)
    args = parser.parse_args(argv)

    if args.m_list:
        ms = [int(part) for part in args.m_list.split(",") if part.strip()]
    else:
        ms = [10**k for k in range(1, args.decades + 1)]

    central_case = args.l == 2 and args.a == 1
    if central_case:
        print(f"{'m':>10}  {'lower':>12}  {'peak':>12}  {'upper':>12}  "
              f"{'ratio':>14}  {'|ratio-1|':>10}")
    else:
        print(f"{'m':>10}  {'ratio':>14}  {'|ratio-1|':>10}")

    for m in ms:
        if central_case:
            ratio = central_ratio(m).ratio
            if m <= 800:  # the peak value itself overflows double near m=875
                s = sandwich_bounds(m)
                row = f"{float(s.lower):>12.6g}  {float(s.value):>12.6g}  {float(s.upper):>12.6g}"
            else:
                row = f"{'-':>12}  {'-':>12}  {'-':>12}"
            print(f"{m:>10}  {row}  {ratio:>14.10f}  {abs(ratio - 1):>10.2e}")
        else:
            ratio = conjectured_ratio(SeqParams(m, args.l, args.a)).ratio
            print(f"{m:>10}  {ratio:>14.10f}  {abs(ratio - 1):>10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
