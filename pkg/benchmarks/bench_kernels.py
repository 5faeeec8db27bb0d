"""Compare the numba kernels with their pure-numpy counterparts.

    python3 benchmarks/bench_kernels.py [--sizes 8 16 64] [--repeat 5]

Timings are the best of ``--repeat`` runs, each averaging enough calls to
take at least 0.2 s. Compilation happens once, before any timing.
"""

import argparse
import timeit

import numpy as np

from qcalogero import _kernels


def kernel_args(name, n):
    # Chebyshev points on [1, 2]; the values only need to be distinct and nonzero
    x = 1.5 + 0.5 * np.cos((2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n))
    if name == "delta_table":
        return (x, np.linspace(0.9, 2.1, 2 * n))
    if name == "vandermonde_form":
        return (x, np.arange(n, dtype=np.float64))
    if name == "jackson_table":
        return (x, 1.5)
    return (x,)


def best_time(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 64])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    jit = _kernels.jit_kernels()
    for name, fn in jit.items():
        fn(*kernel_args(name, 4))

    print(f"{'kernel':<18}{'n':>6}{'numpy (us)':>14}{'numba (us)':>14}{'speedup':>10}")
    for name in sorted(_kernels.NUMPY_KERNELS):
        for n in args.sizes:
            call_args = kernel_args(name, n)
            t_np = best_time(_kernels.NUMPY_KERNELS[name], call_args, args.repeat)
            t_nb = best_time(jit[name], call_args, args.repeat)
            print(f"{name:<18}{n:>6}{t_np * 1e6:>14.1f}{t_nb * 1e6:>14.1f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
