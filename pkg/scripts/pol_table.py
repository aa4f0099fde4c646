#!/usr/bin/env python3
"""Tabulate the large-radius polynomials Pol_n(u, 2g).

Each component n of the exponential tower carries exact polynomials in u of
degree 2g at genus g; this prints them for a requested range, either as a
human-readable table or as JSON.

Example:
    python3 scripts/pol_table.py --n-max 3 --g-max 4
    python3 scripts/pol_table.py --n-max 2 --g-max 3 --json
"""

import argparse
import json
import sys

from resurgentia.largeradius import gen_Hn


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n-max", type=int, default=3, dest="n_max")
    ap.add_argument("--g-max", type=int, default=4, dest="g_max")
    ap.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    args = ap.parse_args()

    if args.json:
        doc = {}
        for n in range(1, args.n_max + 1):
            pref, _, pols = gen_Hn(n, args.g_max)
            doc[str(n)] = {
                "prefactor": pref,
                "pols": {str(2 * g): pols[g - 1].to_map() for g in range(1, args.g_max + 1)},
            }
        json.dump(doc, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
        return 0

    for n in range(1, args.n_max + 1):
        pref, _, pols = gen_Hn(n, args.g_max)
        print(f"component n = {n}, prefactor {pref}:")
        for g in range(1, args.g_max + 1):
            print(f"  Pol_{n}(u, {2 * g}) = {pols[g - 1].to_str()}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
