"""Compare the compiled kernels against the pure numpy fallback.

Times the three hot coefficient-array kernels (exterior product,
identity-metric Clifford product, table-driven Clifford product) and the
blade-pair table construction on random dense inputs, then reports the
end-to-end product cost through the public interface with whichever
backend the package selected.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --dims 3,6,8 --repeats 50
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

import eucliff
from eucliff import _kernels

try:
    from eucliff import _speedups
except ImportError:
    _speedups = None


def _median_call_seconds(func, args_list, repeats: int) -> float:
    """Median over repeats of the mean per-call time across args_list."""
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            func(*args)
        samples.append((time.perf_counter() - t0) / len(args_list))
    return statistics.median(samples)


def _fmt(seconds: float) -> str:
    if seconds >= 1.0:
        return f"{seconds:8.2f} s "
    if seconds >= 1e-3:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds * 1e6:8.2f} us"


def _row(label: str, pure_s: float, fast_s: float | None) -> str:
    if fast_s is None:
        return f"{label:<28} {_fmt(pure_s)}          -        -"
    return f"{label:<28} {_fmt(pure_s)} {_fmt(fast_s)} {pure_s / fast_s:7.1f}x"


def bench_pairwise_kernels(dims, pairs: int, repeats: int, rng) -> list[str]:
    lines = []
    for dim in dims:
        size = 1 << dim
        xs = [rng.uniform(-1.0, 1.0, size) for _ in range(pairs)]
        ys = [rng.uniform(-1.0, 1.0, size) for _ in range(pairs)]
        table = _kernels.build_table(np.eye(dim))
        for name, attr, extra in (
            ("wedge", "wedge_into", ()),
            ("product, identity metric", "gp_orthonormal_into", ()),
            ("product, prebuilt table", "gp_table_into", (table,)),
        ):
            args = [(x, y, *extra, np.zeros(size)) for x, y in zip(xs, ys)]
            pure_s = _median_call_seconds(getattr(_kernels, attr), args, repeats)
            fast_s = None
            if _speedups is not None:
                for a in args:
                    a[-1][:] = 0.0
                fast_s = _median_call_seconds(getattr(_speedups, attr), args, repeats)
            lines.append(_row(f"{name}, n={dim}", pure_s, fast_s))
    return lines


def bench_table_build(dims, repeats: int, rng) -> list[str]:
    lines = []
    for dim in dims:
        a = rng.uniform(-1.0, 1.0, (dim, dim))
        gram = a.T @ a + 0.1 * np.eye(dim)
        pure_s = _median_call_seconds(_kernels.build_table, [(gram,)], repeats)
        fast_s = None
        if _speedups is not None:
            fast_s = _median_call_seconds(_speedups.build_table, [(gram,)], repeats)
        lines.append(_row(f"table build, n={dim}", pure_s, fast_s))
    return lines


def bench_public_interface(dim: int, pairs: int, repeats: int, rng) -> list[str]:
    eucliff.clear_caches()
    gram = rng.uniform(-1.0, 1.0, (dim, dim))
    metric = eucliff.metric_from_gram(gram.T @ gram + 0.1 * np.eye(dim))
    t0 = time.perf_counter()
    eucliff.cayley_table_for(metric)
    build_s = time.perf_counter() - t0
    mvs = [
        (
            eucliff.Multivector(dim, rng.uniform(-1.0, 1.0, 1 << dim)),
            eucliff.Multivector(dim, rng.uniform(-1.0, 1.0, 1 << dim)),
        )
        for _ in range(pairs)
    ]
    product_s = _median_call_seconds(
        lambda x, y: eucliff.geometric_product_table(x, y, metric), mvs, repeats
    )
    eucliff.clear_caches()
    return [
        f"selected backend: {eucliff.BACKEND}",
        f"cayley_table_for, n={dim}, random SPD metric: {build_s:.3f} s",
        f"geometric_product_table, n={dim}, dense operands: {_fmt(product_s).strip()} median",
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="3,5,8", help="comma-separated dimensions")
    parser.add_argument("--repeats", type=int, default=10, help="timing repeats per kernel")
    parser.add_argument("--pairs", type=int, default=4, help="operand pairs per repeat")
    parser.add_argument("--seed", type=int, default=7, help="random seed")
    opts = parser.parse_args()
    dims = [int(d) for d in opts.dims.split(",") if d]
    rng = np.random.default_rng(opts.seed)

    if _speedups is None:
        print("compiled backend unavailable; timing the numpy fallback only")
    header = f"{'kernel':<28} {'numpy':>11} {'compiled':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for line in bench_pairwise_kernels(dims, opts.pairs, opts.repeats, rng):
        print(line)
    build_dims = [d for d in dims if d >= 4] or dims[-1:]
    for line in bench_table_build(build_dims, max(3, opts.repeats // 3), rng):
        print(line)
    print()
    for line in bench_public_interface(max(dims), opts.pairs, opts.repeats, rng):
        print(line)


if __name__ == "__main__":
    main()
