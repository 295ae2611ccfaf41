"""Time the compiled and pure-numpy centroid-store kernels side by side.

    python benchmarks/bench_kernels.py --dim 256 --rows 32 --repeat 20000

Prints microseconds per call for each kernel and backend, then the cost of a
full ``CosStore.observe`` under each backend.
"""

import argparse
import time

import numpy as np

from drr import kernels
from drr.numerics import RandomSource


def per_call_us(fn, repeat: int) -> float:
    fn()
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return 1e6 * (time.perf_counter() - t0) / repeat


def kernel_cases(mod, rows: int, dim: int, rng: np.random.Generator):
    cents = rng.normal(size=(rows, dim))
    counts = np.ones(rows, dtype=np.int64)
    feats = rng.normal(size=(rows, dim))
    owners = rng.integers(0, rows, size=rows).astype(np.int64)
    q = rng.normal(size=dim)
    work = cents.copy()
    return {
        "nearest_row": lambda: mod.nearest_row(cents, rows, q),
        "farthest_owned": lambda: mod.farthest_owned(feats, owners, rows, cents[0], int(owners[0])),
        "farthest_from_own": lambda: mod.farthest_from_own(feats, owners, rows, cents),
        "absorb": lambda: mod.absorb(work, counts, rows, q, 1e9),
    }


def observe_us(backend: str, dim: int, n: int, budget: int) -> float:
    import importlib
    import os

    os.environ["DRR_PURE_PYTHON"] = "1" if backend == "python" else "0"
    import drr.kernels as k
    import drr.memory as m

    importlib.reload(k)
    importlib.reload(m)
    rng = np.random.default_rng(0)
    labels = rng.integers(0, 10, size=n)
    xs = rng.normal(size=(n, dim))
    store = m.CosStore(budget, threshold=float(np.sqrt(2 * dim)), rng=RandomSource(0, "bench"))
    t0 = time.perf_counter()
    for x, y in zip(xs, labels):
        store.observe(x, int(y), int(y) // 2, x)
    return 1e6 * (time.perf_counter() - t0) / n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=256)
    ap.add_argument("--rows", type=int, default=32, help="centroids or slots scanned per call")
    ap.add_argument("--repeat", type=int, default=20000)
    ap.add_argument("--observe", type=int, default=20000, help="stream length for the observe benchmark")
    ap.add_argument("--budget", type=int, default=500)
    args = ap.parse_args()

    try:
        backends = {"cython": kernels.load("cython"), "python": kernels.load("python")}
    except ImportError:
        backends = {"python": kernels.load("python")}
        print("compiled kernels not built; timing the python backend only")
    rng = np.random.default_rng(0)
    cases = {b: kernel_cases(mod, args.rows, args.dim, rng) for b, mod in backends.items()}
    names = list(cases["python"])
    print(f"dim={args.dim} rows={args.rows} repeat={args.repeat}")
    print(f"{'kernel':<20}" + "".join(f"{b + ' us':>14}" for b in backends) + f"{'speedup':>10}")
    for name in names:
        t = {b: per_call_us(cases[b][name], args.repeat) for b in backends}
        speed = t["python"] / t["cython"] if "cython" in t else float("nan")
        print(f"{name:<20}" + "".join(f"{t[b]:>14.2f}" for b in backends) + f"{speed:>10.1f}")
    print()
    obs = {b: observe_us(b, args.dim, args.observe, args.budget) for b in backends}
    print(f"{'CosStore.observe':<20}" + "".join(f"{obs[b]:>14.2f}" for b in backends)
          + (f"{obs['python'] / obs['cython']:>10.1f}" if "cython" in obs else ""))


if __name__ == "__main__":
    main()
