"""Time basic vs refined vs closed-form polarization on free step-2 algebras.

Usage: python3 scripts/bench_methods.py [--max-m 7] [--trials 20] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from nilpol.free_step2 import build_free_step2, polarize_free, zariski_check
from nilpol.vergne import polarize_basic, polarize_refined


@dataclass(frozen=True)
class BenchConfig:
    max_m: int = 7
    trials: int = 20
    seed: int = 0


def sample(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]


def run(cfg: BenchConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'m':>3} {'n':>4} {'basic ms':>10} {'refined ms':>11} {'closed ms':>10}  agree")
    for m in range(2, cfg.max_m + 1):
        g, lay = build_free_step2(m)
        ells = []
        while len(ells) < cfg.trials:
            ell = sample(rng, g.n)
            if zariski_check(lay, ell):
                ells.append(ell)
        timings, outputs = {}, {}
        for label, fn in (("basic", lambda e: polarize_basic(g, e)),
                          ("refined", lambda e: polarize_refined(g, e)),
                          ("closed", lambda e: polarize_free(lay, e))):
            t0 = time.perf_counter()
            outputs[label] = [fn(e).p_basis for e in ells]
            timings[label] = 1000 * (time.perf_counter() - t0) / len(ells)
        agree = outputs["basic"] == outputs["refined"] == outputs["closed"]
        print(f"{m:>3} {g.n:>4} {timings['basic']:>10.2f} {timings['refined']:>11.2f} {timings['closed']:>10.2f}  {agree}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-m", type=int, default=BenchConfig.max_m)
    p.add_argument("--trials", type=int, default=BenchConfig.trials)
    p.add_argument("--seed", type=int, default=BenchConfig.seed)
    a = p.parse_args()
    run(BenchConfig(a.max_m, a.trials, a.seed))


if __name__ == "__main__":
    main()
