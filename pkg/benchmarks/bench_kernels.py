#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Runs each kernel on a representative workload with both backends, checks
that the outputs are bit-identical, and prints timings with the speedup.

    python benchmarks/bench_kernels.py [--n 10] [--rounds 200000] [--repeat 3]
"""

import argparse
import random
import time

from lupi import _kernels_py

try:
    from lupi import _kernels
except ImportError:
    _kernels = None


def random_probs(rng, n):
    raw = [rng.random() for _ in range(n)]
    total = sum(raw)
    return [v / total for v in raw]


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10, help="player count for the oracle kernels")
    parser.add_argument("--enum-n", type=int, default=6, help="player count for full enumeration")
    parser.add_argument("--rounds", type=int, default=200_000, help="simulation rounds")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best is kept)")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels are not built; install with `pip install -e .` first")
        return 1

    rng = random.Random(args.seed)
    n = args.n
    common = random_probs(rng, n)
    distinct = [random_probs(rng, n) for _ in range(n - 1)]
    enum_rows = [random_probs(rng, args.enum_n) for _ in range(args.enum_n)]
    sim_rows = [random_probs(rng, 4) for _ in range(4)]

    workloads = [
        (
            f"win_probs_common (n={n}, {n - 1} opponents)",
            lambda k: k.win_probs_common(common, n - 1),
        ),
        (
            f"win_probs_distinct (n={n}, 3^{n} states)",
            lambda k: k.win_probs_distinct(distinct),
        ),
        (
            f"enum_profile_payoffs (n={args.enum_n}, {args.enum_n}^{args.enum_n} outcomes)",
            lambda k: k.enum_profile_payoffs(enum_rows),
        ),
        (
            f"simulate_rounds (n=4, {args.rounds} rounds)",
            lambda k: k.simulate_rounds(sim_rows, args.rounds, args.seed),
        ),
    ]

    name_width = max(len(name) for name, _ in workloads)
    print(f"{'kernel'.ljust(name_width)}  {'python':>10}  {'c':>10}  {'speedup':>8}  match")
    for name, call in workloads:
        t_py, out_py = best_time(lambda: call(_kernels_py), args.repeat)
        t_c, out_c = best_time(lambda: call(_kernels), args.repeat)
        match = "yes" if out_py == out_c else "NO"
        print(
            f"{name.ljust(name_width)}  {t_py:>9.4f}s  {t_c:>9.4f}s  {t_py / t_c:>7.1f}x  {match}"
        )
        if match == "NO":
            raise SystemExit(f"backends disagree on {name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
