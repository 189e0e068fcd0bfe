"""Regenerate every embedded table and diff it against the fixtures."""

import argparse
import io
import sys
from dataclasses import dataclass

from surfper.cli import run


@dataclass
class Config:
    fmt: str = "md"
    genus_max: int = 6


def main(cfg: Config) -> int:
    for name in ("ttaabb", "f2", "f2r", "vikings"):
        print(f"## {name}\n")
        run(["table", name, "--format", cfg.fmt])
        print()
    for name in ("singular", "universo"):
        for g in range(2, cfg.genus_max + 1):
            if name == "universo" and g % 2:
                continue
            print(f"## {name} g={g}\n")
            run(["table", name, "--genus", str(g), "--format", cfg.fmt])
            print()
    out = io.StringIO()
    code = run(["verify", "--suite", "tables"], out)
    sys.stderr.write(out.getvalue())
    return code


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--format", default="md", choices=["csv", "md", "json"])
    p.add_argument("--genus-max", type=int, default=6)
    a = p.parse_args()
    sys.exit(main(Config(a.format, a.genus_max)))
