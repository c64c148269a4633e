"""Time the numba and pure-numpy kernel paths on the same inputs.

    python3 benchmarks/bench_kernels.py [--length 10] [--repeat 3]

Each kernel runs once per backend to warm up (numba compiles on first use),
then ``--repeat`` timed runs; the best time is reported together with a check
that both backends returned identical arrays.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from eebraid import _accel, kernels


def _best(fn, repeat: int) -> tuple[float, object]:
    out = fn()
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=10, help="word length for the batch kernels")
    ap.add_argument("--count", type=int, default=20000, help="number of random words")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    words = rng.integers(0, 4, size=(args.count, args.length), dtype=np.int8)
    small = words[: max(1, args.count // 20)]
    # a preimage target: psi at t=2 (mod p) of a fixed reduced word of length 10
    gens = kernels.generator_mats_mod(2)
    mod = kernels.MERSENNE
    target = np.array([1, 0, 0, 1], dtype=np.int64)
    for c in (0, 1, 1, 2, 3, 0, 1, 2, 3, 3):
        a, b, cc, d = target
        ga, gb, gc, gd = gens[c]
        target = np.array([a * ga + b * gc, a * gb + b * gd, cc * ga + d * gc, cc * gb + d * gd]) % mod

    cases = {
        "orbit_min": lambda: kernels.orbit_min(words),
        "burau_batch": lambda: kernels.burau_batch(words),
        "switched_traces": lambda: kernels.switched_traces(small),
        "bracket_hist": lambda: kernels.bracket_hist(small),
        "preimage_candidates": lambda: kernels.preimage_candidates(target, 10, 0, 2),
    }
    if not _accel.HAVE_NUMBA:
        print("numba is not installed; only the numpy path can run")
    print(f"{'kernel':<22}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}  agree")
    for name, fn in cases.items():
        times = {}
        outs = {}
        for backend in (("numba", "numpy") if _accel.HAVE_NUMBA else ("numpy",)):
            with _accel.use_backend(backend):
                times[backend], outs[backend] = _best(fn, args.repeat)
        if len(times) == 2:
            agree = _same(outs["numba"], outs["numpy"])
            speed = times["numpy"] / times["numba"] if times["numba"] > 0 else float("inf")
            print(f"{name:<22}{times['numba']:>12.4f}{times['numpy']:>12.4f}{speed:>9.1f}x  {agree}")
        else:
            print(f"{name:<22}{'-':>12}{times['numpy']:>12.4f}{'-':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
