"""Batch runner for every exact invariant the package promises.

Each named check records pass/fail; exceptions are recorded as failures so
one broken check does not hide the others.
"""
from __future__ import annotations

import itertools
import time
from fractions import Fraction
from typing import Callable, Dict, Iterator, Tuple

from ..closure import is_down_monotone, sparse_closure, symmetrize
from ..core.duality import polar
from ..core.dd import vertices
from ..core.io import format_poly, parse_poly
from ..core.polytope import HPolytope, LinIneq, canonicalize, contains, equal, intersect
from ..families import (
    closed_form_sq_dist,
    make_simplex_family,
    make_symmetric_closure,
    make_symmetric_family,
)
from ..metrics import hausdorff_sq, verify_dist_gap
from .common import ResourceRefusal
from .corpus import down_monotone_corpus
from .lp_relax import run_lp_relax
from .report import ExperimentReport

MAX_N = 6
SMALL_N = 4  # symmetrisation and corpus checks
DIST_GAP_SAMPLES = 200

Check = Tuple[str, Callable[[], object]]


def _bugged(P: HPolytope) -> HPolytope:
    """Flip the first coefficient of the first row that is not a bound."""
    rows = list(P.ineqs)
    for i, h in enumerate(rows):
        if sum(1 for a in h.a if a) > 1:
            a = list(h.a)
            a[0] = -a[0]
            rows[i] = LinIneq(tuple(a), h.b)
            break
    return HPolytope(P.dim, tuple(rows))


def nonneg_orthant(n: int) -> HPolytope:
    rows = []
    for i in range(n):
        a = [0] * n
        a[i] = -1
        rows.append(LinIneq.of(a, 0))
    return HPolytope(n, tuple(rows))


def grid(n: int, steps: int = 9):
    vals = [Fraction(-1) + Fraction(2 * j, steps - 1) for j in range(steps)]
    return itertools.product(vals, repeat=n)


def _distance_formula(max_n: int, inject_bug: bool) -> Iterator[Check]:
    cases = [(1, n) for n in range(2, max_n + 1)]
    cases += [(n // 2, n) for n in range(4, max_n + 1, 2)]
    for t, n in cases:
        for k in range(1, n + 1):
            def run(t=t, n=n, k=k):
                P = make_simplex_family(t, n)
                if inject_bug:
                    P = canonicalize(_bugged(P))
                got = hausdorff_sq(P, sparse_closure(P, k)).sq_dist
                want = closed_form_sq_dist(t, n, k)
                return got == want, {"sq_dist": got, "expected": want}
            yield f"distance_formula[t={t},n={n},k={k}]", run


def _symmetric_family(max_n: int) -> Iterator[Check]:
    for n in range(2, min(max_n, SMALL_N) + 1):
        for t in range(1, n + 1):
            def fam(t=t, n=n):
                return equal(symmetrize(make_simplex_family(t, n)), make_symmetric_family(t, n)), None
            yield f"symmetric.family[t={t},n={n}]", fam
            for k in range(1, n + 1):
                def clo(t=t, n=n, k=k):
                    S = make_symmetric_family(t, n)
                    return equal(sparse_closure(S, k), make_symmetric_closure(t, n, k)), None
                yield f"symmetric.closure[t={t},n={n},k={k}]", clo


def _lp_relaxation(max_n: int) -> Iterator[Check]:
    for n in range(4, max_n + 1, 2):
        def run(n=n):
            r = run_lp_relax(n)
            return r.passed, r.summary
        yield f"lp_relaxation[n={n}]", run


def _corpus_checks(max_n: int) -> Iterator[Check]:
    for name, P in down_monotone_corpus(min(max_n, SMALL_N)):
        n = P.dim
        yield f"corpus.down_monotone[{name}]", (lambda P=P: (is_down_monotone(P), None))
        for k in range(1, n):
            def dist_gap(P=P, k=k):
                res = verify_dist_gap(P, sparse_closure(P, k), samples=DIST_GAP_SAMPLES, seed=k)
                ok = res["identity_holds"] and res["violations"] == 0
                return ok, {"sq_dist": res["sq_dist"], "violations": res["violations"]}
            yield f"dist_gap[{name},k={k}]", dist_gap

            def sym_closure(P=P, k=k):
                return equal(sparse_closure(symmetrize(P), k), symmetrize(sparse_closure(P, k))), None
            yield f"symmetrisation.closure[{name},k={k}]", sym_closure

            def orthant_slice(P=P, k=k):
                lhs = intersect(sparse_closure(symmetrize(P), k), nonneg_orthant(P.dim))
                return equal(lhs, sparse_closure(P, k)), None
            yield f"symmetrisation.orthant_slice[{name},k={k}]", orthant_slice

            def monotone(P=P, k=k):
                Pk, Pk1 = sparse_closure(P, k), sparse_closure(P, k + 1)
                return contains(Pk, Pk1) and contains(Pk1, P), None
            yield f"closure.monotone[{name},k={k}]", monotone

            def idempotent(P=P, k=k):
                Pk = sparse_closure(P, k)
                return equal(sparse_closure(Pk, k), Pk), None
            yield f"closure.idempotent[{name},k={k}]", idempotent

        def union(P=P):
            S = symmetrize(P)
            bad = [x for x in grid(P.dim)
                   if S.contains_point(x) != P.contains_point(tuple(abs(v) for v in x))]
            return not bad, {"grid_points": 9 ** P.dim, "mismatches": len(bad)}
        yield f"symmetrisation.union_grid[{name}]", union

        def roundtrip(P=P):
            V = vertices(P)
            return parse_poly(format_poly(P)) == P and parse_poly(format_poly(V)) == V, None
        yield f"io.roundtrip[{name}]", roundtrip


def _polar(max_n: int) -> Iterator[Check]:
    for n in range(2, min(max_n, SMALL_N) + 1):
        def cross(n=n):
            return equal(polar(make_symmetric_family(1, n)), HPolytope.box(n, -1, 1)), None
        yield f"polar.cross_polytope[n={n}]", cross
        for t in range(1, n + 1):
            def involution(t=t, n=n):
                S = make_symmetric_family(t, n)
                return equal(polar(polar(S)), S), None
            yield f"polar.involution[t={t},n={n}]", involution


def suite_checks(max_n: int, inject_bug: bool = False) -> Iterator[Check]:
    yield from _distance_formula(max_n, inject_bug)
    yield from _symmetric_family(max_n)
    yield from _lp_relaxation(max_n)
    yield from _corpus_checks(max_n)
    yield from _polar(max_n)


def verify_suite(max_n: int, inject_bug: bool = False) -> ExperimentReport:
    if max_n > MAX_N:
        raise ResourceRefusal(f"verify suite limited to max_n <= {MAX_N}")
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    start = time.perf_counter()
    report = ExperimentReport("verify", {"max_n": max_n, "inject_bug": inject_bug})
    failed = []
    for name, fn in suite_checks(max_n, inject_bug):
        rec: Dict[str, object] = {"check": name}
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        rec["passed"] = bool(ok)
        if detail is not None:
            rec["detail"] = detail
        report.records.append(rec)
        if not ok:
            failed.append(name)
    report.summary = {"checks": len(report.records), "failed": len(failed), "failed_checks": failed}
    report.passed = not failed
    report.wall_time = time.perf_counter() - start
    return report
