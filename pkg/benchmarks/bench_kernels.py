"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--target 200000] [--q 11]
"""
from __future__ import annotations

import argparse
import importlib
import statistics
import time

import numpy as np

from stci import _fallback
from stci.curves import BinomialShape, base_equations, binomial_rules, build_fstar, make_extension
from stci.mpoly import embed
from stci.oracle import _pack


def backends():
    out = {"python": _fallback}
    try:
        out["cython"] = importlib.import_module("stci._core")
    except ImportError:
        pass
    return out


def timeit(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), result


def workloads(target, q):
    spec = make_extension((3, 4, 6), 1, 25)
    fstar = build_fstar(spec, binomial_rules((3, 4, 6), "xn")).fstar
    eqs = [embed(f, 5) for f in base_equations(BinomialShape((3, 4, 6), "xn"))] + [fstar]
    coeffs, exps, offsets = _pack(eqs, q)
    exps = np.asarray(exps, dtype=np.int64)
    coins = [3, 4, 6, 25, 31]
    return {
        f"min_coin_tables coins={coins} limit={target}": lambda mod: mod.min_coin_tables(coins, target),
        f"common_zeros P^4(F_{q}) 3 equations": lambda mod: mod.common_zeros(q, 5, coeffs, exps, offsets),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--target", type=int, default=200_000)
    ap.add_argument("--q", type=int, default=11)
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled core not built; only the fallback is timed")
    for name, work in workloads(args.target, args.q).items():
        print(name)
        times, results = {}, {}
        for label, mod in mods.items():
            times[label], results[label] = timeit(lambda: work(mod), args.repeat)
            print(f"  {label:7s} {times[label] * 1000:10.2f} ms")
        if len(results) == 2:
            same = np.array_equal(np.asarray(results["python"]), np.asarray(results["cython"]))
            print(f"  speedup {times['python'] / times['cython']:.1f}x, identical output: {same}")


if __name__ == "__main__":
    main()
