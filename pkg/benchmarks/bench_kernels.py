"""Compare the compiled and pure-Python kernels on the three hot paths.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one operation on freshly built algebras (so no cached
verdicts leak between backends) and checks that both backends agree.
"""

import argparse
import random
import time

from pealab import boolean, chain, kernels, product
from pealab.formats import export_algebra, load_algebra_text
from pealab.jordan import decomposition_extremum
from pealab.measures import sample_signed_measure, state_space
from pealab.riesz import rdp_profile


def algebras():
    return {
        "boolean(7)": boolean(7),
        "chain(80)": chain(80),
        "product(chain(5),chain(5))": product(chain(5), chain(5)),
        "product(boolean(3),chain(6))": product(boolean(3), chain(6)),
    }


def bench_validate(text):
    """Building from text runs the associativity and difference-table kernels."""
    return load_algebra_text(text).digest


def bench_profile(text):
    E = load_algebra_text(text)
    return tuple(v.holds for v in rdp_profile(E))


def bench_fold(E, measures):
    return decomposition_extremum(E, measures, True).values


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if "cython" not in kernels.BACKENDS:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for name, E in algebras().items():
        text = export_algebra(E)
        P = state_space(E)
        rng = random.Random(0)
        ms = [sample_signed_measure(E, P, rng, 3) for _ in range(4)]
        jobs = {
            "validate": lambda: bench_validate(text),
            "rdp profile": lambda: bench_profile(text),
            "join fold x4": lambda: bench_fold(E, ms),
        }
        for job, fn in jobs.items():
            res = {}
            for backend in ("cython", "python"):
                kernels.use(backend)
                res[backend] = timed(fn, args.repeat)
            kernels.use("cython")
            if res["cython"][1] != res["python"][1]:
                raise SystemExit(f"backends disagree on {job} for {name}")
            c, p = res["cython"][0], res["python"][0]
            rows.append((name, len(E), job, c, p, p / c if c else float("inf")))
    print(f"{'algebra':30} {'n':>4} {'operation':14} {'cython ms':>10} {'python ms':>10} {'speedup':>8}")
    for name, n, job, c, p, s in rows:
        print(f"{name:30} {n:>4} {job:14} {c * 1e3:>10.2f} {p * 1e3:>10.2f} {s:>7.1f}x")


if __name__ == "__main__":
    main()
