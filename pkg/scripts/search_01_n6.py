"""Exhaustive six-dimensional (0,1)-simplex search for xi'_6 and theta'_6.

Visits all C(63, 6) = 67,945,521 vertex sets with the origin pinned.  Takes
tens of minutes on one core; pass --workers to spread the first-vertex
blocks over processes.

    python3 scripts/search_01_n6.py --workers 4 --objective both
"""

import argparse
import sys
import time

from simplexcube.exact import format_rational
from simplexcube.families import search_01


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--objective", choices=("xi", "norm", "both"), default="both")
    args = ap.parse_args()
    objectives = ("xi", "norm") if args.objective == "both" else (args.objective,)
    for obj in objectives:
        t0 = time.time()

        def progress(done, total):
            print(f"  {obj}: {done}/{total} ({100 * done / total:.1f}%) {time.time() - t0:.0f}s",
                  file=sys.stderr, flush=True)

        res = search_01(6, obj, allow_long=True, workers=args.workers, progress=progress)
        print(f"{obj}: {format_rational(res.value)}  candidates={res.candidates}  "
              f"nonsingular={res.nonsingular}  time={time.time() - t0:.0f}s")
        for v in res.witness.vertices:
            print("   ", " ".join(str(int(x)) for x in v))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
