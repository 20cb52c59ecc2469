"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from threeval import kernels
from threeval.examples import distributive_lattices, make_b, make_bt, product


def cases():
    bt = make_bt()
    L = product(bt, bt, bt).lattice  # 27 elements
    M18 = product(bt, bt, make_b()).lattice
    small = distributive_lattices(10)
    full2 = sorted((x, y) for x in range(2) for y in range(2))
    k3 = sorted((x, y) for x in range(3) for y in range(3) if x != y)
    k3_loops = sorted(k3 + [(0, 0), (1, 1)])

    def inv(pairs):
        return [pairs.index((y, x)) for x, y in pairs]

    return {
        "law checks, 27 elements": lambda k: k.law_witnesses(L.n, L.flat_meet, L.flat_join, L.zero, L.one),
        "prime filters, 47 lattices of size 10": lambda k: [
            k.prime_filter_masks(M.n, M.flat_meet, M.flat_join, M.zero) for M in small
        ],
        "prime filters, 18 elements": lambda k: k.prime_filter_masks(
            M18.n, M18.flat_meet, M18.flat_join, M18.zero
        ),
        "converse sweep, 4 pairs": lambda k: k.converse_sweep(4, inv(full2)),
        "converse sweep, 6 pairs": lambda k: k.converse_sweep(6, inv(k3)),
        "converse sweep, 8 pairs": lambda k: k.converse_sweep(8, inv(k3_loops)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.backends()
    print(f"active backend: {kernels.BACKEND}")
    if len(backends) < 2:
        print("compiled kernels not built; only the Python backend is timed")
    header = f"{'case':40s}" + "".join(f"{name:>12s}" for name in backends) + ("   speedup" if len(backends) == 2 else "")
    print(header)
    for label, fn in cases().items():
        results = {}
        times = {}
        for name, impl in backends.items():
            results[name] = fn(impl)
            times[name] = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label!r}")
        row = f"{label:40s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
