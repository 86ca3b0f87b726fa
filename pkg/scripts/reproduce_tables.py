"""Print every reference table the package can rebuild, as CSV.

    python3 scripts/reproduce_tables.py                # all tables, n = 6 search skipped
    python3 scripts/reproduce_tables.py --table t6 --allow-long --workers 4
"""

import argparse
import sys

from simplexcube.serialize import rows_to_csv
from simplexcube.tables import TABLE_NAMES, build_table, crossover_n, seventh_dimension_certificate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--table", choices=TABLE_NAMES + ("all",), default="all")
    ap.add_argument("--allow-long", action="store_true", help="include the n = 6 exhaustive search")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    names = TABLE_NAMES if args.table == "all" else (args.table,)
    for name in names:
        rows = build_table(name, allow_long=args.allow_long, workers=args.workers)
        sys.stdout.write(f"# {name}\n{rows_to_csv(rows)}\n")
        if name == "theta-lower":
            print(f"# Legendre bound first exceeds 3 - 4/(n+1) at n = {crossover_n()}\n")
        if name == "t6":
            cert = seventh_dimension_certificate()
            print(f"# n = 7: xi = {cert['xi']}, norm = {cert['norm']}, "
                  f"lower bound {cert['theta_lower']} (tight: {cert['theta_tight']})\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
