#!/usr/bin/env python3
"""Survey intersections of pairs of Lucas V-sequences.

For every admissible parameter pair in the requested range, decide whether
the two induced Pell systems share infinitely many x-values (d1*d2 square)
or only the trivial x = 2, and print the minimal match plus the first few
common values when the family is infinite.

    python3 scripts/intersection_demo.py --flavor plus_plus --max-param 12
    python3 scripts/intersection_demo.py --flavor mixed --count 6 --check
"""

import argparse

from pellucas.intersection import (FLAVORS, PellSystem, brute_force_common,
                                   intersect, square_product_test)


def admissible_pairs(flavor: str, max_param: int):
    lo = 4 if flavor == "minus_minus" else 1
    lo2 = 4 if flavor in ("minus_minus", "mixed") else 1
    for p1 in range(lo, max_param + 1):
        for p2 in range(max(lo2, p1 + 1 if flavor != "mixed" else lo2),
                        max_param + 1):
            if flavor != "mixed" and p1 == p2:
                continue
            yield p1, p2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--flavor", choices=[f for f in FLAVORS
                                         if f != "opposite_signs"],
                    default="plus_plus")
    ap.add_argument("--max-param", type=int, default=12)
    ap.add_argument("--count", type=int, default=5,
                    help="how many common values to list per infinite family")
    ap.add_argument("--check", action="store_true",
                    help="cross-check every verdict against brute force")
    args = ap.parse_args()

    infinite = 0
    for p1, p2 in admissible_pairs(args.flavor, args.max_param):
        system = PellSystem(args.flavor, p1, p2)
        if not square_product_test(system):
            if args.check:
                assert brute_force_common(system, 50_000) == [(2, 0, 0)]
            continue
        r = intersect(system, args.count)
        infinite += 1
        xs = [s[0] for s in r.solutions]
        print(f"({p1:>2},{p2:>2})  d1={system.d1:<4} d2={system.d2:<4} "
              f"minimal (m,n)={r.minimal_pair}  "
              f"x: {', '.join(map(str, xs))}, ...")
        if args.check:
            expect = brute_force_common(system, 50_000)
            got = [s for s in r.solutions if s[0] <= 50_000]
            assert got == expect[:len(got)], (p1, p2)
    print(f"\n{infinite} infinite famil{'y' if infinite == 1 else 'ies'} "
          f"among {sum(1 for _ in admissible_pairs(args.flavor, args.max_param))} "
          f"pairs ({args.flavor}, params <= {args.max_param}); "
          "all other pairs intersect only in x = 2.")


if __name__ == "__main__":
    main()
