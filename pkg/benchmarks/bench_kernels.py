"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 7]

Each kernel runs on the same random input under both backends; results are
compared before timing so a speedup never hides a wrong answer.
"""

import argparse
import random
import sys
import timeit

from ordo import _kernels


def random_rows(rng, n, density=0.3):
    return [sum(1 << j for j in range(n) if j != i and rng.random() < density) for i in range(n)]


def random_weights(rng, n):
    return [0 if i == j or rng.random() < 0.5 else rng.randint(1, 50) for i in range(n) for j in range(n)]


def random_preds(rng, n):
    order = list(range(n))
    rng.shuffle(order)
    preds = [0] * n
    for pos, i in enumerate(order):
        for earlier in order[:pos]:
            if rng.random() < 0.15:
                preds[i] |= 1 << earlier
    return preds


def random_counts(rng, n):
    return [0 if i == j else rng.randint(0, 40) for i in range(n) for j in range(n)]


def cases(rng):
    yield "closure n=24", "closure", (random_rows(rng, 24), 24)
    yield "closure n=64", "closure", (random_rows(rng, 64, 0.05), 64)
    yield "widest_paths n=20", "widest_paths", (random_weights(rng, 20), 20)
    yield "widest_paths n=40", "widest_paths", (random_weights(rng, 40), 40)
    yield "count_extensions n=14", "count_extensions", (random_preds(rng, 14), 14)
    yield "kemeny_table n=10", "kemeny_table", (random_counts(rng, 10), 10)
    yield "kemeny_table n=12", "kemeny_table", (random_counts(rng, 12), 12)


def best_time(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    if _kernels.compiled is None:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':<24}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, name, inputs in cases(rng):
        py_fn, c_fn = getattr(_kernels.python, name), getattr(_kernels.compiled, name)
        if py_fn(*inputs) != c_fn(*inputs):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        t_py = best_time(py_fn, inputs, args.repeat)
        t_c = best_time(c_fn, inputs, args.repeat)
        print(f"{label:<24}{t_py * 1e3:>10.3f}ms{t_c * 1e3:>10.3f}ms{t_py / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
