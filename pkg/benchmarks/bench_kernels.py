"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks call both backend modules directly on identical inputs;
the end-to-end benchmark re-runs a small sweep in a subprocess with
LEXSEG_PURE_PYTHON=1 so the import-time backend switch takes effect.

Run:  python3 benchmarks/bench_kernels.py [--end-to-end]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lexseg import _kernels_py as pure  # noqa: E402

try:
    from lexseg import _kernels as compiled
except ImportError:
    compiled = None


def make_inputs(seed=1):
    rng = random.Random(seed)
    mons = [tuple(rng.randint(0, 4) for _ in range(5)) for _ in range(400)]
    gens = tuple(mons[:40])
    mats = [
        [[rng.randint(0, 32002) for _ in range(30)] for _ in range(30)]
        for _ in range(5)
    ]
    return mons, gens, mats


def bench(label, fn, repeats=5):
    best = min(timeit(fn) for _ in range(repeats))
    print(f"  {label:<28} {best * 1000:8.2f} ms")
    return best


def timeit(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_backend(name, impl):
    mons, gens, mats = make_inputs()
    print(f"{name}:")
    times = {}
    times["member"] = bench(
        "member x 400", lambda: [impl.member(m, gens) for m in mons]
    )
    times["minimalize"] = bench(
        "minimalize(40 gens) x 50", lambda: [impl.minimalize(gens) for _ in range(50)]
    )
    times["colon_gens"] = bench(
        "colon_gens x 400", lambda: [impl.colon_gens(gens, m) for m in mons]
    )
    times["gf_rank"] = bench(
        "gf_rank(30x30, p=32003) x 5",
        lambda: [impl.gf_rank(mat, 32003) for mat in mats],
    )
    return times


def end_to_end():
    code = (
        "import time, lexseg\n"
        "from lexseg.sweep import sweep\n"
        "t0 = time.perf_counter()\n"
        "r = sweep((2, 3), (2, 3))\n"
        "assert r.ok\n"
        "print(f'{lexseg.BACKEND}: sweep n=2..3 d=2..3 "
        "{time.perf_counter() - t0:.2f}s')\n"
    )
    for env_extra in ({}, {"LEXSEG_PURE_PYTHON": "1"}):
        env = dict(os.environ, **env_extra)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--end-to-end", action="store_true")
    args = parser.parse_args()

    pure_times = run_backend("pure python", pure)
    if compiled is None:
        print("compiled extension not built; skipping comparison")
    else:
        compiled_times = run_backend("cython", compiled)
        print("speedup (pure / cython):")
        for key in pure_times:
            print(f"  {key:<28} {pure_times[key] / compiled_times[key]:8.2f}x")
    if args.end_to_end:
        end_to_end()


if __name__ == "__main__":
    main()
