"""Wall-time scaling of soft tracing in the number of codewords.

Bench codes are subcodes of a Reed-Solomon code over GF(p) concatenated
with the unit-vector code.  Two distinct polynomials of degree < k agree
on at most k - 1 points, so with more than t(k - 1) evaluation points the
outer code is t-frameproof, and unit-vector concatenation keeps that.
Frameproof codes have t-uniqueness descendant codes, so every attack of
size <= t must trace back exactly.
"""

from __future__ import annotations

import itertools
import random
import statistics
import time

from .attack import averaging_attack
from .code import Code
from .concat import concatenate
from .trace import soft_trace

__all__ = ["reed_solomon_code", "unit_vector_code", "bench_code", "time_soft_trace", "scaling_report"]


def reed_solomon_code(p: int, k: int, n1: int) -> Code:
    """All polynomials of degree < k over GF(p) evaluated at 0..n1-1 (p prime, n1 <= p)."""
    if n1 > p:
        raise ValueError(f"need n1 <= p, got n1={n1}, p={p}")
    cols = []
    for coeffs in itertools.product(range(p), repeat=k):
        cols.append(tuple(sum(c * x**e for e, c in enumerate(coeffs)) % p for x in range(n1)))
    return Code(tuple(cols), p)


def unit_vector_code(q: int) -> Code:
    return Code(tuple(tuple(int(i == j) for i in range(q)) for j in range(q)), 2)


def bench_code(M: int, t: int, p: int = 23, seed: int = 0) -> Code:
    """Random ``M``-word binary t-frameproof code of fixed length ``(t + 1) * p``."""
    rs = reed_solomon_code(p, 2, t + 1)
    if M > rs.M:
        raise ValueError(f"at most {rs.M} codewords available, asked for {M}")
    picks = sorted(random.Random(seed).sample(range(1, rs.M + 1), M))
    return concatenate(rs.subcode(picks), unit_vector_code(p))


def time_soft_trace(code: Code, t: int, attacks: int = 20, repeats: int = 5, seed: int = 0) -> float:
    """Median wall time of one soft trace over random size-``t`` attacks.

    Raises if any trace does not return its colluder set.
    """
    rng = random.Random(seed)
    words = []
    for _ in range(attacks):
        C0 = tuple(sorted(rng.sample(range(1, code.M + 1), t)))
        words.append((C0, averaging_attack(code, C0)))
    samples = []
    for _ in range(repeats):
        for C0, x in words:
            start = time.perf_counter()
            out = soft_trace(code, x, t)
            samples.append(time.perf_counter() - start)
            if out.colluders != C0:
                raise AssertionError(f"soft trace returned {out.colluders} for {C0}")
    return statistics.median(samples)


def scaling_report(
    sizes=(64, 128, 256, 512), t: int = 3, seed: int = 0, attacks: int = 20, repeats: int = 5
) -> dict:
    medians = {M: time_soft_trace(bench_code(M, t, seed=seed), t, attacks, repeats, seed) for M in sizes}
    ratios = [medians[b] / medians[a] for a, b in zip(sizes, sizes[1:])]
    return {
        "t": t,
        "n": bench_code(sizes[0], t, seed=seed).n,
        "seed": seed,
        "median_seconds": {str(M): v for M, v in medians.items()},
        "doubling_ratios": ratios,
        "max_ratio": max(ratios) if ratios else None,
    }
