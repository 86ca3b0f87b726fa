"""Gap between the regular-simplex projector norm on the ball and sqrt(n).

Prints ``n, psi_norm(n), d_n``; d_n vanishes exactly when n + 1 is a perfect
square.  Pass --plot to draw the series with matplotlib (not a package
dependency).
"""

import argparse
import math

from simplexcube.ball import d_n, psi_norm
from simplexcube.serialize import format_float


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=120)
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args()
    ns = range(1, args.max + 1)
    ds = [float(d_n(n)) for n in ns]
    print("n,psi_norm,d_n,sqrt_n")
    for n, d in zip(ns, ds):
        print(f"{n},{format_float(psi_norm(n).norm)},{format_float(d)},{format_float(math.sqrt(n))}")
    if args.plot:
        import matplotlib.pyplot as plt

        plt.plot(list(ns), ds, ".-")
        plt.xlabel("n")
        plt.ylabel("d_n")
        plt.show()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
