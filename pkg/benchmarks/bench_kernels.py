"""Compare the numba and numpy kernel backends.

Usage: ``python3 benchmarks/bench_kernels.py [--resolution N] [--repeat R]``

Times one map sweep per closed form and one significance-boundary root scan
on each backend, and checks that both backends return identical arrays.
"""

import argparse
import time

import numpy as np

from relspin import _kernels
from relspin.figures import N_PRESAMPLE, ROOT_VMAX


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--resolution", type=int, default=512)
    parser.add_argument("--curve-resolution", type=int, default=1000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"numpy": _kernels.numpy_backend}
    if _kernels.numba_backend is not None:
        backends["numba"] = _kernels.numba_backend
    else:
        print("numba backend disabled (RELSPIN_DISABLE_JIT set); timing numpy only")

    axis = np.linspace(-1.0, 1.0, args.resolution)
    v1, v3 = np.meshgrid(axis, axis)
    v2 = np.zeros_like(v1)
    abs_v3 = np.linspace(0.0, 1.0, args.curve_resolution, endpoint=False)

    jobs = {f"{name} map {args.resolution}^2": (lambda b, n=name: getattr(b, n)(v1, v2, v3))
            for name in ("eq4_v", "eq5_v", "eq6_v", "eq7_v", "eq8_v")}
    jobs[f"eq4 roots x{args.curve_resolution}"] = lambda b: b.eq4_roots(abs_v3, 0.01, N_PRESAMPLE, ROOT_VMAX)

    # warm the JIT cache so compile time is not counted
    for b in backends.values():
        for job in jobs.values():
            job(b)

    header = f"{'job':<24}" + "".join(f"{n:>12}" for n in backends)
    print(header + (f"{'speedup':>10}{'identical':>11}" if "numba" in backends else ""))
    for label, job in jobs.items():
        times, outs = {}, {}
        for name, b in backends.items():
            times[name], outs[name] = best_of(lambda: job(b), args.repeat)
        row = f"{label:<24}" + "".join(f"{times[n] * 1e3:>10.1f}ms" for n in backends)
        if "numba" in times:
            a, c = outs["numpy"], outs["numba"]
            a, c = (a if isinstance(a, tuple) else (a,)), (c if isinstance(c, tuple) else (c,))
            same = all(np.array_equal(x, y, equal_nan=True) for x, y in zip(a, c))
            row += f"{times['numpy'] / times['numba']:>9.1f}x{str(same):>11}"
        print(row)


if __name__ == "__main__":
    main()
