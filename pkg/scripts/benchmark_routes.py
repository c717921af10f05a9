"""Time the counting-series routes against each other on growing Kronecker dimension vectors.

    python3 scripts/benchmark_routes.py --arrows 3 --max-total 13
"""

import argparse
import time
from dataclasses import dataclass

from quivermod import betti, hn
from quivermod.presets import preset_kronecker
from quivermod.quiver import is_coprime


@dataclass(frozen=True)
class BenchConfig:
    arrows: int = 3
    max_total: int = 13
    # the recursion gets slow quickly; only run it below this total dimension
    recursion_limit: int = 9


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def cases(cfg: BenchConfig):
    for total in range(2, cfg.max_total + 1):
        a = total // 2
        d = (a, total - a)
        Q, S, _ = preset_kronecker(cfg.arrows, *d)
        if is_coprime(S, d):
            yield Q, S, d


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--arrows", type=int, default=BenchConfig.arrows)
    p.add_argument("--max-total", type=int, default=BenchConfig.max_total)
    p.add_argument("--recursion-limit", type=int, default=BenchConfig.recursion_limit)
    args = p.parse_args(argv)
    cfg = BenchConfig(args.arrows, args.max_total, args.recursion_limit)

    print(f"{'d':>8} {'lattice':>7} {'deg':>4} {'tm s':>8} {'interp s':>9} {'recursion s':>12}")
    for Q, S, d in cases(cfg):
        hn.clear_caches()
        tm, t_tm = timed(betti.poincare, Q, S, d)
        interp, t_in = timed(betti.poincare_interpolated, Q, S, d)
        assert interp == tm
        rec = "-"
        if sum(d) <= cfg.recursion_limit:
            hn.clear_caches()
            value, t_rec = timed(betti.poincare, Q, S, d, "recursion")
            assert value == tm
            rec = f"{t_rec:.3f}"
        lat = len(betti.lattice_points(Q, S, d))
        print(f"{str(d):>8} {lat:>7} {tm.poincare_q.degree:>4} {t_tm:>8.3f} {t_in:>9.3f} {rec:>12}")


if __name__ == "__main__":
    main()
