#!/usr/bin/env python3
"""Compare the two integral approximations of a rational dominant coweight.

For each grid point nu in the dominant cone this prints the minimal integral
dominant mu* above nu (used in the component-count prediction) next to the
set of maximal integral dominant coweights below nu.  The two notions agree
surprisingly often but not always; this script only reports, it asserts
nothing.

Usage:
    python3 scripts/chen_zhu_report.py --type A2 --height 4 --denominator 4
"""

import argparse

from kvcalc import kv, rootdata, strata


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="A2")
    ap.add_argument("--isogeny", default="sc")
    ap.add_argument("--height", type=int, default=4)
    ap.add_argument("--denominator", type=int, default=4)
    args = ap.parse_args()

    rd = rootdata.build_root_datum(args.type, args.isogeny)
    lams = rootdata.dominant_integral_sweep(rd, args.height + 2 * rd.rank)

    agree = differ = 0
    print("nu\tmin-above\tmax-below\tverdict")
    for nu in strata.rational_grid(rd, args.height, args.denominator):
        above = [lam for lam in lams if rootdata.leq_q(rd, nu, lam)]
        if not above:
            continue
        big = max(above, key=sum)
        mu_star = kv.best_integral_approx(rd, nu, big)
        below = kv.chen_zhu_approx(rd, nu)
        same = len(below) == 1 and below[0] == mu_star
        agree += same
        differ += not same
        print(
            "{}\t{}\t{}\t{}".format(
                rootdata.format_coweight(nu),
                rootdata.format_coweight(mu_star),
                " ".join(rootdata.format_coweight(v) for v in below) or "-",
                "equal" if same else "DIFFER",
            )
        )
    print(f"# equal {agree}  differ {differ}")


if __name__ == "__main__":
    main()
