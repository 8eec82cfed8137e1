#!/usr/bin/env python3
"""Build the certificate polynomial families and verify every guarantee.

Constructs X_n, Y_n through both the polynomial and the scalar-recurrence
route (any disagreement aborts the build), then checks the closed forms,
the coefficient domination bound, the sign certificate, the equivalence
chain and both peak inequalities in exact integer arithmetic:

    python scripts/certificate_audit.py                    # acceptance scale
    python scripts/certificate_audit.py --n-max 500 --dump polys.txt
"""

import argparse
import time

from powsumseq import build_cert_table, dump_polynomials, run_all


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=200)
    parser.add_argument("--sign-q-max", type=int, default=200)
    parser.add_argument("--chain-q-max", type=int, default=500)
    parser.add_argument("--goal-q-max", type=int, default=500)
    parser.add_argument("--left-m-max", type=int, default=2000)
    parser.add_argument("--dump", metavar="PATH", default=None,
                        help="also write every polynomial's coefficients")
    args = parser.parse_args(argv)

    start = time.monotonic()
    report = run_all(
        n_max=args.n_max,
        sign_q_max=args.sign_q_max,
        chain_q_max=args.chain_q_max,
        goal_q_max=args.goal_q_max,
        left_m_max=args.left_m_max,
    )
    for verdict in report.verdicts:
        mark = "PASS" if verdict.passed else "FAIL"
        extra = "" if verdict.first_failure is None else f"  [{verdict.first_failure}]"
        print(f"[{mark}] {verdict.name:28s} checked {verdict.checked:>8}{extra}")
    total = sum(v.checked for v in report.verdicts)
    print(f"\n{total} individual verifications in {time.monotonic() - start:.1f}s")

    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            fh.write(dump_polynomials(build_cert_table(args.n_max)))
        print(f"polynomials written to {args.dump}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
