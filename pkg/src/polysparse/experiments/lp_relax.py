"""LP relaxation ``Q_n`` of ``P(n/2, n)`` against the sparse closure."""
from __future__ import annotations

import itertools
import time
from fractions import Fraction

from ..closure import sparse_closure
from ..core.dd import extreme_points, facets
from ..core.polytope import VPolytope, equal, intersect
from ..families import make_qn, make_simplex_family
from ..metrics import hausdorff_sq
from .common import ResourceRefusal
from .report import ExperimentReport

MAX_N = 6


def expected_sq_dist(n: int) -> Fraction:
    return n * Fraction(n - 2, 2 * n + 4) ** 2


def integer_hull_of_qn(n: int) -> VPolytope:
    Q = make_qn(n)
    pts = [tuple(Fraction(x) for x in p) for p in itertools.product((0, 1), repeat=n)]
    return VPolytope(n, extreme_points([p for p in pts if Q.contains_point(p)]))


def run_lp_relax(n: int) -> ExperimentReport:
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    if n > MAX_N:
        raise ResourceRefusal(f"lp-relax is exact-only and limited to n <= {MAX_N}")
    start = time.perf_counter()
    P = make_simplex_family(n // 2, n)
    Q = make_qn(n)
    want = expected_sq_dist(n)
    report = ExperimentReport("lp-relax", {"n": n})
    for k in range(1, n // 2 + 1):
        C = intersect(sparse_closure(P, k), Q)
        d = hausdorff_sq(P, C)
        report.records.append({
            "k": k, "sq_dist": d.sq_dist, "expected": want, "match": d.sq_dist == want,
            "witness_outer": d.witness_outer, "witness_inner": d.witness_inner,
        })
    hull = integer_hull_of_qn(n)
    hull_ok = equal(facets(hull), P)
    report.certificates.append({"integer_hull_vertices": len(hull.vertices), "hull_equals_P": hull_ok})
    report.summary = {"all_match": all(r["match"] for r in report.records), "hull_equals_P": hull_ok,
                      "expected_sq_dist": want, "expected_dist_float": float(want) ** 0.5}
    report.passed = report.summary["all_match"] and hull_ok
    report.wall_time = time.perf_counter() - start
    return report
