"""Compare the compiled kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--repeat N]

Three workloads: lifting grid points back through a projection, the
decompose/compose round trip, and bare elimination steps. Each is run with
both backends and the results are checked to be identical.
"""

import argparse
import random
import statistics
import time
from contextlib import contextmanager

from exactpoly import _pykernel, conversion as cv, fourier_motzkin as fm
from exactpoly.geometry import HPolyhedron

try:
    from exactpoly import _ckernel
except ImportError:
    _ckernel = None


@contextmanager
def backend(module):
    saved = fm._kernel
    fm._kernel = module
    try:
        yield
    finally:
        fm._kernel = saved


def random_h(rng, n, m):
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
    return HPolyhedron.from_inequalities(A, [rng.randint(-3, 3) for _ in range(m)], n)


def lift_workload(seed=1):
    rng = random.Random(seed)
    jobs = []
    for _ in range(40):
        P = random_h(rng, 4, rng.randint(3, 6))
        _, trace = fm.project(P, 3)
        pts = [([rng.randint(-16, 16) for _ in range(3)], 4) for _ in range(2000)]
        jobs.append((trace, pts))

    def run():
        out = []
        for trace, pts in jobs:
            # a fresh plan each run so both backends see the same work
            trace.__dict__.pop("lift_plan", None)
            out.append(fm.lift_scaled(trace, pts))
        return out

    return run


def roundtrip_workload(seed=2):
    rng = random.Random(seed)
    polys = [random_h(rng, 3, rng.randint(3, 6)) for _ in range(40)]

    def run():
        return [cv.compose(cv.decompose(P)) for P in polys]

    return run


def step_workload(seed=3):
    rng = random.Random(seed)
    systems = []
    for _ in range(200):
        P = random_h(rng, 4, 8)
        systems.append(([a + (b,) for a, b in zip(P.A.rows, P.b)], [False] * 8))

    def run():
        out = []
        for rows, strict in systems:
            step = fm._kernel.fm_step(rows, strict, 0)
            out.append(fm._kernel.reduce_rows(step[3], step[4]))
        return out

    return run


def measure(run, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = run()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernel is None:
        print("compiled kernel not built; only the fallback is available")
    workloads = [
        ("lift 80k points", lift_workload()),
        ("decompose+compose x40", roundtrip_workload()),
        ("fm_step+reduce x200", step_workload()),
    ]
    print(f"{'workload':<24}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, run in workloads:
        with backend(_pykernel):
            t_py, r_py = measure(run, args.repeat)
        if _ckernel is None:
            print(f"{name:<24}{t_py:>10.3f}{'-':>10}{'-':>9}")
            continue
        with backend(_ckernel):
            t_c, r_c = measure(run, args.repeat)
        if r_py != r_c:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<24}{t_py:>10.3f}{t_c:>10.3f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
