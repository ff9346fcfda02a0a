"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot paths (window enumeration and overlap scoring) on
synthetic workloads under both backends, checks they agree, and prints a
wall-time table. Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --positions 8 --max-senses 6
"""

import argparse
import random
import time

from shotgunwsd import _pykernels

try:
    from shotgunwsd import _ckernels
except ImportError:
    _ckernels = None


def build_window(rng, positions, max_senses):
    counts = [rng.randint(1, max_senses) for _ in range(positions)]
    n = len(counts)
    pair_base = [0] * (n * n)
    pair_flat = []
    for p in range(n):
        for q in range(p + 1, n):
            pair_base[p * n + q] = len(pair_flat)
            pair_flat.extend(rng.random()
                             for _ in range(counts[p] * counts[q]))
    return counts, pair_base, pair_flat


def build_sequences(rng, length, alphabet):
    return ([rng.randrange(alphabet) for _ in range(length)],
            [rng.randrange(alphabet) for _ in range(length)])


def best_of(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--positions", type=int, default=8,
                        help="window length for enumeration (default: 8)")
    parser.add_argument("--max-senses", type=int, default=5,
                        help="max senses per position (default: 5)")
    parser.add_argument("--candidates", type=int, default=20,
                        help="configurations kept per window (default: 20)")
    parser.add_argument("--overlap-length", type=int, default=160,
                        help="token sequence length (default: 160)")
    parser.add_argument("--alphabet", type=int, default=40,
                        help="distinct token ids (default: 40)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats, best kept (default: 5)")
    parser.add_argument("--seed", type=int, default=13)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    counts, pair_base, pair_flat = build_window(rng, args.positions,
                                                args.max_senses)
    seq_a, seq_b = build_sequences(rng, args.overlap_length, args.alphabet)
    product = 1
    for count in counts:
        product *= count
    print(f"enumerate_topc: {args.positions} positions, "
          f"{product} configurations, c={args.candidates}")
    print(f"lesk_overlap_ids: 2 x {args.overlap_length} tokens, "
          f"alphabet {args.alphabet}")
    print()

    workloads = [
        ("enumerate_topc", lambda impl: impl.enumerate_topc(
            counts, pair_base, pair_flat, args.candidates)),
        ("lesk_overlap_ids", lambda impl: impl.lesk_overlap_ids(
            seq_a, seq_b)),
    ]
    print(f"{'kernel':<20}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, call in workloads:
        py_time, py_result = best_of(lambda: call(_pykernels), args.repeats)
        if _ckernels is None:
            print(f"{name:<20}{py_time * 1e3:>10.2f}ms{'absent':>12}"
                  f"{'n/a':>10}")
            continue
        c_time, c_result = best_of(lambda: call(_ckernels), args.repeats)
        if py_result != c_result:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<20}{py_time * 1e3:>10.2f}ms{c_time * 1e3:>10.2f}ms"
              f"{py_time / c_time:>9.1f}x")


if __name__ == "__main__":
    main()
