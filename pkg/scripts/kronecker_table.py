"""Poincare polynomials of generalized Kronecker moduli over a box of dimension vectors.

    python3 scripts/kronecker_table.py --arrows 3 --max-a 4 --max-b 5
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from quivermod import is_coprime, poincare
from quivermod.presets import preset_kronecker


@dataclass(frozen=True)
class TableConfig:
    arrows: int = 3
    max_a: int = 4
    max_b: int = 5
    method: str = "tm"


def rows(cfg: TableConfig):
    for a in range(1, cfg.max_a + 1):
        for b in range(1, cfg.max_b + 1):
            Q, S, d = preset_kronecker(cfg.arrows, a, b)
            if not is_coprime(S, d):
                continue
            r = poincare(Q, S, d, method=cfg.method)
            yield {"a": a, "b": b, "dim": r.moduli_dim, "euler": r.euler,
                   "poincare": r.poincare_str("q") if not r.empty else "empty"}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--arrows", type=int, default=TableConfig.arrows)
    p.add_argument("--max-a", type=int, default=TableConfig.max_a)
    p.add_argument("--max-b", type=int, default=TableConfig.max_b)
    p.add_argument("--method", default=TableConfig.method)
    args = p.parse_args(argv)
    cfg = TableConfig(args.arrows, args.max_a, args.max_b, args.method)
    writer = csv.DictWriter(sys.stdout, fieldnames=["a", "b", "dim", "euler", "poincare"])
    writer.writeheader()
    for row in rows(cfg):
        writer.writerow(row)


if __name__ == "__main__":
    main()
