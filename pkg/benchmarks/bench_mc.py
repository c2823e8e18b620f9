"""Benchmark the compiled Monte Carlo kernel against the interpreted one.

Both kernels implement the same counter-derived streams, so besides timing
the runs this script asserts their histograms are bit-identical.

    python benchmarks/bench_mc.py --trials 1000000 --max-tosses 10
"""

import argparse
import time

from petersburg import _mc_pure

try:
    from petersburg import _mc_core
except ImportError:
    _mc_core = None


def timed(kernel, seed, trials, max_tosses, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel.stop_histogram(seed, trials, max_tosses)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=1_000_000)
    parser.add_argument("--max-tosses", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0x5EED_2026)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    pure_time, pure_hist = timed(_mc_pure, args.seed, args.trials, args.max_tosses, args.repeats)
    print(f"pure      {args.trials:>10} trials  {pure_time * 1e3:10.1f} ms")

    if _mc_core is None:
        print("compiled  kernel not built (python setup.py build_ext --inplace)")
        return

    core_time, core_hist = timed(_mc_core, args.seed, args.trials, args.max_tosses, args.repeats)
    print(f"compiled  {args.trials:>10} trials  {core_time * 1e3:10.1f} ms")
    assert pure_hist == core_hist, "kernels disagree"
    print(f"histograms identical; speedup {pure_time / core_time:.1f}x")


if __name__ == "__main__":
    main()
