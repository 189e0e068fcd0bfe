"""Compare the closed-form existence tests with exhaustive search on a signature grid."""

import argparse
import time
from dataclasses import dataclass

from surfper.groups import oracle_grid


@dataclass
class Config:
    max_R: int = 4
    max_m: int = 12
    max_TB: int = 3
    max_n: int = 24


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    rep = oracle_grid(cfg.max_R, cfg.max_m, cfg.max_TB, cfg.max_n)
    dt = time.perf_counter() - t0
    print(f"{cfg}: {rep.cases} cases, {rep.witnesses} witnesses verified, "
          f"{len(rep.mismatches)} mismatches, {len(rep.bad_witnesses)} bad witnesses ({dt:.1f}s)")
    for m in rep.mismatches[:20]:
        print("mismatch", m)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        p.add_argument("--" + f.replace("_", "-"), type=int, default=v)
    a = p.parse_args()
    raise SystemExit(main(Config(a.max_R, a.max_m, a.max_TB, a.max_n)))
