"""Exact nearest points, Hausdorff distances and directional gaps.

Euclidean lengths are kept squared so every quantity stays rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from .core.dd import vertices
from .core.linalg import QVector, dot, qvec, solve, sq_norm, sub
from .core.polytope import Polytope, VPolytope, contains, support

_ZERO = Fraction(0)


class NotNestedError(ValueError):
    """Hausdorff distance requested for a pair with inner not inside outer."""


@dataclass(frozen=True)
class DistanceResult:
    sq_dist: Fraction
    witness_outer: QVector
    witness_inner: QVector

    @property
    def dist(self) -> float:
        return float(self.sq_dist) ** 0.5


@dataclass(frozen=True)
class GapRecord:
    direction: tuple
    support_outer: object
    support_inner: object
    gap: object


def _affine_minimizer(pts: List[QVector]) -> List[Fraction]:
    """Weights summing to 1 that minimise the norm of the affine combination."""
    m = len(pts)
    if m == 1:
        return [Fraction(1)]
    # [G 1; 1^T 0] [w; mu] = [0; 1]
    mat = [[dot(pts[i], pts[j]) for j in range(m)] + [Fraction(1)] for i in range(m)]
    mat.append([Fraction(1)] * m + [_ZERO])
    rhs = [_ZERO] * m + [Fraction(1)]
    sol = solve(mat, rhs)
    return list(sol[:m])


def _combine(weights: Sequence[Fraction], pts: Sequence[QVector]) -> QVector:
    n = len(pts[0])
    return tuple(sum((w * p[i] for w, p in zip(weights, pts) if w), _ZERO) for i in range(n))


def min_norm_point(points: Sequence[QVector]) -> QVector:
    """Wolfe's minimum-norm-point algorithm in exact arithmetic.

    Ties (entering point, initial point) go to the lowest index.
    """
    pts = list(points)
    if not pts:
        raise ValueError("empty point set")
    norms = [sq_norm(p) for p in pts]
    start = min(range(len(pts)), key=lambda i: (norms[i], i))
    corral = [start]
    lam = [Fraction(1)]
    y = pts[start]
    while True:
        yy = sq_norm(y)
        vals = [dot(y, p) for p in pts]
        j = min(range(len(pts)), key=lambda i: (vals[i], i))
        if yy <= vals[j]:
            return y
        if j in corral:
            raise AssertionError("minimum-norm-point cycled")
        corral.append(j)
        lam.append(_ZERO)
        while True:
            alpha = _affine_minimizer([pts[i] for i in corral])
            if all(a > 0 for a in alpha):
                lam = alpha
                y = _combine(lam, [pts[i] for i in corral])
                break
            theta = min(l / (l - a) for l, a in zip(lam, alpha) if a <= 0)
            lam = [(1 - theta) * l + theta * a for l, a in zip(lam, alpha)]
            keep = [i for i, l in enumerate(lam) if l > 0]
            corral = [corral[i] for i in keep]
            lam = [lam[i] for i in keep]
            y = _combine(lam, [pts[i] for i in corral])


def _as_vpoly(P: Polytope) -> VPolytope:
    return P if isinstance(P, VPolytope) else vertices(P)


def nearest_point(P: Polytope, x: Sequence) -> DistanceResult:
    """Exact Euclidean projection of ``x`` onto ``P``."""
    V = _as_vpoly(P)
    if not V.vertices:
        raise ValueError("nearest point into an empty polytope")
    x = qvec(x)
    if len(x) != V.dim:
        raise ValueError("point dimension mismatch")
    shifted = [sub(v, x) for v in V.vertices]
    y = min_norm_point(shifted)
    proj = tuple(a + b for a, b in zip(y, x))
    return DistanceResult(sq_norm(y), x, proj)


def certify_nearest(P: Polytope, res: DistanceResult) -> bool:
    """Check ``(x - y).(v - y) <= 0`` for every vertex ``v``."""
    V = _as_vpoly(P)
    d = sub(res.witness_outer, res.witness_inner)
    return all(dot(d, sub(v, res.witness_inner)) <= 0 for v in V.vertices)


def hausdorff_sq(inner: Polytope, outer: Polytope, check_nested: bool = True) -> DistanceResult:
    """Squared Hausdorff distance ``max_{x in outer} min_{y in inner} |x - y|^2``.

    The maximum is attained at a vertex of ``outer``. Ties go to the
    lexicographically smallest vertex.
    """
    if inner.dim != outer.dim:
        raise ValueError("dimension mismatch")
    if check_nested and not contains(outer, inner):
        raise NotNestedError("inner polytope is not contained in the outer one")
    Vin = _as_vpoly(inner)
    Vout = _as_vpoly(outer)
    best: Optional[DistanceResult] = None
    for v in Vout.vertices:
        res = nearest_point(Vin, v)
        if best is None or res.sq_dist > best.sq_dist:
            best = res
    return best


def gap(inner: Polytope, outer: Polytope, c: Sequence) -> GapRecord:
    """``max_{outer} c.x - max_{inner} c.x`` for exact ``c``."""
    cv = qvec(c)
    so = support(outer, cv)
    si = support(inner, cv)
    return GapRecord(cv, so, si, so - si)


def random_directions(n: int, count: int, seed: int, scale: int = 1000) -> List[QVector]:
    """Seeded integer directions: rounded scaled Gaussians, zero vectors skipped."""
    rng = np.random.Generator(np.random.Philox(seed))
    out: List[QVector] = []
    while len(out) < count:
        g = np.rint(rng.standard_normal(n) * scale).astype(np.int64)
        if g.any():
            out.append(tuple(Fraction(int(v)) for v in g))
    return out


def verify_dist_gap(inner: Polytope, outer: Polytope, samples: int = 1000, seed: int = 0) -> dict:
    """Check that the Hausdorff distance equals the worst directional gap.

    With ``c = x0 - y0`` for the Hausdorff witnesses, exact arithmetic must
    give ``gap(c)^2 == sq_dist * |c|^2``. For seeded random directions
    ``c'`` the gap must satisfy ``gap(c')^2 <= sq_dist * |c'|^2``.
    """
    Vin = _as_vpoly(inner)
    Vout = _as_vpoly(outer)
    d = hausdorff_sq(Vin, Vout)
    c = sub(d.witness_outer, d.witness_inner)
    if any(c):
        g = gap(Vin, Vout, c).gap
        identity = g >= 0 and g * g == d.sq_dist * sq_norm(c)
    else:
        g = _ZERO
        identity = d.sq_dist == 0
    violations = 0
    worst = Fraction(0)
    for cp in random_directions(Vin.dim, samples, seed):
        gp = gap(Vin, Vout, cp).gap
        bound = d.sq_dist * sq_norm(cp)
        if gp * gp > bound or gp < 0:
            violations += 1
        if bound:
            worst = max(worst, gp * gp / bound)
    return {
        "sq_dist": d.sq_dist,
        "witness_outer": d.witness_outer,
        "witness_inner": d.witness_inner,
        "witness_direction": c,
        "witness_gap": g,
        "identity_holds": identity,
        "samples": samples,
        "violations": violations,
        "max_gap_sq_ratio": worst,
    }
