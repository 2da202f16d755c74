"""Directional gaps of the symmetric family along random Gaussian directions.

For ``k <= t`` the closure is the box, so for a direction ``G``
``gap(G) = sum |G_i| - (sum of the t largest |G_i|)`` and the gap along the
unit vector is that divided by ``|G|``.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from ..core.polytope import HPolytope, LinIneq, VPolytope
from ..families import closed_form_gap_sym
from ..metrics import gap
from .report import ExperimentReport
from .rng import DIRECTIONS, GAUSSIANS, RandomSource, wilson_interval

HIST_EDGES = np.linspace(0.0, 1.0, 101)  # gap / sqrt(n)
CROSSCHECK_MAX_N = 20
FOLDED_MEAN = math.sqrt(2 / math.pi)


def _sample(seed: int, n: int, t: int, i: int) -> Tuple[float, float, float, float]:
    g = RandomSource(seed, GAUSSIANS).gaussians(i, n)
    a = np.abs(g)
    l1 = float(a.sum())
    top = float(np.partition(a, n - t)[n - t:].sum())
    norm = float(np.sqrt(np.dot(g, g)))
    return (l1 - top) / norm, l1, top, norm


def _chunk(args) -> List[Tuple[float, float, float, float]]:
    seed, n, t, lo, hi = args
    return [_sample(seed, n, t, i) for i in range(lo, hi)]


def _run_samples(seed: int, n: int, t: int, samples: int, workers: int):
    if workers <= 1:
        return _chunk((seed, n, t, 0, samples))
    size = max(1, -(-samples // (workers * 4)))
    jobs = [(seed, n, t, lo, min(samples, lo + size)) for lo in range(0, samples, size)]
    out = []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_chunk, jobs):
            out.extend(part)
    return out


def symmetric_extreme_points(t: int, n: int) -> VPolytope:
    """All {-1,0,1} vectors with at most ``t`` nonzeros (direct enumeration)."""
    pts = []
    for s in range(t + 1):
        for supp in itertools.combinations(range(n), s):
            for signs in itertools.product((1, -1), repeat=s):
                v = [Fraction(0)] * n
                for i, sg in zip(supp, signs):
                    v[i] = Fraction(sg)
                pts.append(tuple(v))
    return VPolytope.from_points(pts, n)


def symmetric_closure_rows(t: int, n: int, k: int) -> HPolytope:
    """Box plus all signed k-subset rows, not canonicalised."""
    rows = list(HPolytope.box(n, -1, 1).ineqs)
    for I in itertools.combinations(range(n), k):
        for signs in itertools.product((1, -1), repeat=k):
            a = [0] * n
            for i, s in zip(I, signs):
                a[i] = s
            rows.append(LinIneq.of(a, t))
    return HPolytope(n, tuple(rows))


def crosscheck(n: int, t: int, k: int, count: int, seed: int) -> List[dict]:
    """Closed form vs the exact pipeline on rationalised Gaussian directions."""
    inner = symmetric_extreme_points(t, n)
    outer = symmetric_closure_rows(t, n, k)
    src = RandomSource(seed, DIRECTIONS)
    out = []
    for j in range(count):
        g = np.rint(src.gaussians(j, n) * 1000).astype(np.int64)
        c = tuple(Fraction(int(x), 1000) for x in g)
        want = closed_form_gap_sym(t, n, k, c)
        got = gap(inner, outer, c).gap
        out.append({"direction": j, "closed_form": want, "exact": got, "match": want == got})
    return out


def run_directional(n: int, t: int, k: int, samples: int, seed: int,
                    workers: int = 1, crosscheck_count: int = 0) -> ExperimentReport:
    if n < 10 or n % 10:
        raise ValueError("n must be a positive multiple of 10")
    if t != n // 10:
        raise ValueError("t must equal n/10")
    if not 1 <= k <= t:
        raise ValueError("need 1 <= k <= t")
    if samples < 1:
        raise ValueError("samples must be positive")
    start = time.perf_counter()
    rows = _run_samples(seed, n, t, samples, workers)
    sqrt_n = math.sqrt(n)
    threshold = sqrt_n / 20

    report = ExperimentReport("directional", {"n": n, "t": t, "k": k, "samples": samples, "seed": seed})
    events = {"gap_ge_threshold": 0, "l1_ge_0.7n": 0, "top_le_0.6n": 0, "norm_le_2sqrt_n": 0}
    total_abs = 0.0
    for i, (g, l1, top, norm) in enumerate(rows):
        e = {
            "gap_ge_threshold": g >= threshold,
            "l1_ge_0.7n": l1 >= 0.7 * n,
            "top_le_0.6n": top <= 0.6 * n,
            "norm_le_2sqrt_n": norm <= 2 * sqrt_n,
        }
        for key, hit in e.items():
            events[key] += hit
        total_abs += l1
        report.records.append({"sample": i, "gap": g, "l1": l1, "top": top, "norm": norm,
                               "gap_over_sqrt_n": g / sqrt_n})

    freqs = {}
    for key, cnt in events.items():
        lo, hi = wilson_interval(cnt, samples)
        freqs[key] = {"count": cnt, "frequency": cnt / samples, "wilson99": [lo, hi]}
    gaps = np.array([r[0] for r in rows])
    mean_abs = total_abs / (samples * n)
    report.summary = {
        "threshold": threshold,
        "events": freqs,
        "mean_abs_gaussian": mean_abs,
        "gap_over_sqrt_n": {"min": float(gaps.min() / sqrt_n), "mean": float(gaps.mean() / sqrt_n),
                            "max": float(gaps.max() / sqrt_n)},
    }
    report.bounds = {
        "gap_ge_threshold": 1 - 4 / n,
        "l1_ge_0.7n": 1 - 1 / n,
        "top_le_0.6n": 1 - 2 / n,
        "norm_le_2sqrt_n": 1 - 1 / n,
        "mean_abs_gaussian": FOLDED_MEAN,
    }
    counts, _ = np.histogram(gaps / sqrt_n, bins=HIST_EDGES)
    report.histogram = [{"bin_lo": float(HIST_EDGES[j]), "bin_hi": float(HIST_EDGES[j + 1]),
                         "count": int(counts[j])} for j in range(len(counts))]
    report.passed = freqs["gap_ge_threshold"]["frequency"] >= report.bounds["gap_ge_threshold"]
    if crosscheck_count:
        if n > CROSSCHECK_MAX_N:
            raise ValueError(f"exact cross-check limited to n <= {CROSSCHECK_MAX_N}")
        checks = crosscheck(n, t, k, crosscheck_count, seed)
        report.certificates.extend(checks)
        report.summary["crosscheck_all_match"] = all(c["match"] for c in checks)
        report.passed = report.passed and report.summary["crosscheck_all_match"]
    report.wall_time = time.perf_counter() - start
    return report
