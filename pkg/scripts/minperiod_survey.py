"""Survey m(H_{g,b}) over a (g, b) grid: which cells are exact and how wide the rest are."""

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass

from surfper.minperiod import min_period


@dataclass
class Config:
    genus_max: int = 6
    b_max: int = 60
    out: str = "-"


def main(cfg: Config) -> int:
    stats = Counter()
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["g", "b", "orientation", "status", "lower", "upper", "source"])
    for g in range(0, cfg.genus_max + 1):
        for b in range(1, cfg.b_max + 1):
            for o in ("preserving", "reversing"):
                r = min_period(g, b, o)
                stats[(g, o, r.status)] += 1
                w.writerow([g, b, o, r.status, r.lower, r.upper, r.provenance[0][0]])
    if fh is not sys.stdout:
        fh.close()
    for (g, o, s), n in sorted(stats.items()):
        print(f"g={g} {o:<10} {s:<8} {n}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--genus-max", type=int, default=6)
    p.add_argument("--b-max", type=int, default=60)
    p.add_argument("--out", default="-")
    a = p.parse_args()
    sys.exit(main(Config(a.genus_max, a.b_max, a.out)))
