"""Compare the compiled kernels with the pure-Python fallback.

Both backends receive identical inputs; the script checks that their outputs
agree before reporting timings.  Run with ``python3 benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import timeit

from dgseries import _pykernels, corpus, testing
from dgseries.dfinite import recurrence_to_annihilator
from dgseries.exact import box

try:
    from dgseries import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def sweep_case(problem, window):
    eq = problem.equation.to_forward()
    m = eq.m
    lo = problem.base_offset
    seed = {}
    for x in box(lo, window):
        if any(a - b < k for a, b, k in zip(x, lo, m)):
            v = problem.phi(x)
            if v:
                seed[x] = v
    interior = [y for y in box(tuple(a + b for a, b in zip(lo, m)), window)]
    lead = eq.terms[m].kernel_terms()
    others = [(a, p.kernel_terms()) for a, p in eq.terms.items() if a != m]

    def run(mod):
        return mod.recurrence_sweep(dict(seed), interior, m, lead, others)

    return run


def apply_case(problem, window):
    from dgseries.recurrence import solve_cauchy

    F = solve_cauchy(problem, window)
    terms = recurrence_to_annihilator(problem.equation.to_forward(), problem.ell).kernel_terms()
    coeffs = dict(F.coeffs)

    def run(mod):
        return mod.apply_terms(terms, coeffs, F.window)

    return run


def eval_case(seed, n):
    rng = random.Random(seed)
    q = testing.poly(rng, 2, max_degree=4, max_terms=8).kernel_terms()
    points = [(testing.rational(rng), testing.rational(rng)) for _ in range(n)]

    def run(mod):
        return [mod.poly_eval(q, p) for p in points]

    return run


def cases(scale: int):
    yield "sweep  schroeder 1-D", sweep_case(corpus.schroeder(), (60 * scale,))
    yield "sweep  pascal 2-D", sweep_case(corpus.pascal(), (20 * scale, 20 * scale))
    rng = random.Random(7)
    P, _ = testing.problem(rng, 2, max_order=2, max_degree=2)
    yield "sweep  random poly 2-D", sweep_case(P, tuple(k + 8 * scale for k in P.equation.m))
    yield "apply  schroeder annihilator", apply_case(corpus.schroeder(), (60 * scale,))
    yield "apply  pascal annihilator", apply_case(corpus.pascal(), (20 * scale, 20 * scale))
    yield "eval   bivariate polynomial", eval_case(3, 500 * scale)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", type=int, default=1, help="problem size multiplier")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'case':32s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, run in cases(args.scale):
        if run(_pykernels) != run(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        timings = {}
        for label, mod in (("python", _pykernels), ("cython", _ckernels)):
            samples = timeit.repeat(lambda: run(mod), number=1, repeat=args.repeat)
            timings[label] = statistics.median(samples) * 1e3
        ratio = timings["python"] / timings["cython"]
        print(f"{name:32s} {timings['python']:10.2f} {timings['cython']:10.2f} {ratio:7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
