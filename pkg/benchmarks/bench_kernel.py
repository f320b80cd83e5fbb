"""Benchmark: compiled kernel vs pure-Python kernel.

Times randomized products in A_2 and sl2 plus a weighted Groebner run,
with each backend instantiated directly so both are measured in one
process.  Run: python3 benchmarks/bench_kernel.py
"""

import random
import time
from fractions import Fraction

from skewgb import _kernel_py
from skewgb.ring import RingPresentation, sl2_presentation, weyl_presentation

try:
    from skewgb import _kernel_c
except ImportError:
    _kernel_c = None


def random_terms(rng, m, n, nterms, max_exp):
    terms = {}
    for _ in range(nterms):
        a = tuple(rng.randrange(max_exp + 1) for _ in range(m))
        b = tuple(rng.randrange(max_exp + 1) for _ in range(n))
        terms[(a, b)] = Fraction(rng.randrange(-9, 10) or 1)
    return terms


def bench_backend(kernel_cls, P, pairs, repeats=3):
    q1 = tuple(P._q1)
    q2 = {(i - 1, j - 1): entry for (i, j), entry in P._q2.items()}
    best = float("inf")
    result = None
    for _ in range(repeats):
        kern = kernel_cls(P.m, P.n, q1, q2)
        start = time.perf_counter()
        for f, g in pairs:
            result = kern.multiply(f, g)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    rng = random.Random(20240817)
    cases = [
        ("weyl-2", weyl_presentation(2), 3, 40),
        ("sl2", sl2_presentation(), 2, 40),
    ]
    for name, P, max_exp, npairs in cases:
        pairs = [
            (
                random_terms(rng, P.m, P.n, 6, max_exp),
                random_terms(rng, P.m, P.n, 6, max_exp),
            )
            for _ in range(npairs)
        ]
        t_py, r_py = bench_backend(_kernel_py.MulKernel, P, pairs)
        line = f"{name}: pure-python {t_py * 1000:8.1f} ms"
        if _kernel_c is not None:
            t_c, r_c = bench_backend(_kernel_c.MulKernel, P, pairs)
            assert r_py == r_c, "backend results disagree"
            line += f" | cython {t_c * 1000:8.1f} ms | speedup {t_py / t_c:4.2f}x"
        else:
            line += " | cython unavailable"
        print(line)


if __name__ == "__main__":
    main()
