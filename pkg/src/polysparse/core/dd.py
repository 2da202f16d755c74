"""Double description method: exact vertex and facet enumeration.

Both directions reduce to computing generators of a polyhedral cone
``{y : h_i . y >= 0}`` given by integer rows. Generators are kept as
primitive integer vectors and zero sets as bitmasks; adjacency uses the
combinatorial test.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple

from .linalg import QVector, integer_scaled
from .polytope import HPolytope, LinIneq, VPolytope, _normalize_sort


class UnboundedError(ValueError):
    """The H-polytope has a nonzero recession cone."""


def _primitive(v: List[int]) -> Tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _idot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v) if a and b)


def cone_generators(rows: Sequence[Tuple[int, ...]], dim: int):
    """Extreme rays and a lineality basis of ``{y in Z^dim : row . y >= 0}``."""
    lines: List[Tuple[int, ...]] = [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    rays: List[Tuple[Tuple[int, ...], int]] = []

    for idx, h in enumerate(rows):
        bit = 1 << idx
        pivot = next((l for l in lines if _idot(h, l) != 0), None)
        if pivot is not None:
            hl = _idot(h, pivot)
            sgn = 1 if hl > 0 else -1
            new_lines = []
            for l in lines:
                if l is pivot:
                    continue
                hv = _idot(h, l)
                if hv:
                    l = _primitive([hl * a - hv * p for a, p in zip(l, pivot)])
                new_lines.append(l)
            new_rays = []
            for r, z in rays:
                hv = _idot(h, r)
                if hv:
                    r = _primitive([abs(hl) * a - sgn * hv * p for a, p in zip(r, pivot)])
                new_rays.append((r, z | bit))
            new_rays.append((tuple(sgn * p for p in pivot), bit - 1))
            lines, rays = new_lines, new_rays
            continue

        pos, neg, zero = [], [], []
        for i, (r, z) in enumerate(rays):
            hv = _idot(h, r)
            if hv > 0:
                pos.append((i, hv))
            elif hv < 0:
                neg.append((i, hv))
            else:
                zero.append((r, z | bit))
        if not neg:
            rays = [rays[i] for i, _ in pos] + zero
            continue
        min_common = dim - len(lines) - 2
        all_z = [z for _, z in rays]
        combined = []
        for ip, hp in pos:
            rp, zp = rays[ip]
            for iN, hn in neg:
                rn, zn = rays[iN]
                common = zp & zn
                if bin(common).count("1") < min_common:
                    continue
                if any(
                    common & z == common and i != ip and i != iN
                    for i, z in enumerate(all_z)
                ):
                    continue
                v = _primitive([hp * a - hn * b for a, b in zip(rn, rp)])
                combined.append((v, common | bit))
        rays = [rays[i] for i, _ in pos] + zero + combined
    return [r for r, _ in rays], lines


@lru_cache(maxsize=1024)
def vertices(P: HPolytope) -> VPolytope:
    """Vertex list of a bounded H-polytope (empty tuple when infeasible)."""
    n = P.dim
    rows = [tuple([1] + [0] * n)]
    for h in P.ineqs:
        rows.append(integer_scaled((h.b,) + tuple(-a for a in h.a)))
    rays, lines = cone_generators(rows, n + 1)
    verts = sorted(
        tuple(Fraction(x, r[0]) for x in r[1:]) for r in rays if r[0] > 0
    )
    if verts and (lines or any(r[0] == 0 for r in rays)):
        raise UnboundedError("polyhedron is unbounded")
    return VPolytope(n, tuple(verts))


def facets(V: VPolytope) -> HPolytope:
    """Irredundant H-description of ``conv(V)``; equations appear as row pairs."""
    n = V.dim
    if not V.vertices:
        return HPolytope.empty(n)
    rows = [integer_scaled((Fraction(1),) + tuple(-x for x in v)) for v in V.vertices]
    rays, lines = cone_generators(rows, n + 1)
    ineqs = []
    for r in rays:
        if any(r[1:]):
            ineqs.append(LinIneq(tuple(Fraction(x) for x in r[1:]), Fraction(r[0])))
    for l in lines:
        a = tuple(Fraction(x) for x in l[1:])
        ineqs.append(LinIneq(a, Fraction(l[0])))
        ineqs.append(LinIneq(tuple(-x for x in a), Fraction(-l[0])))
    return _normalize_sort(HPolytope(n, tuple(ineqs)))


def extreme_points(points: Sequence[QVector]) -> Tuple[QVector, ...]:
    """The extreme points among ``points``, sorted."""
    pts = sorted(set(points))
    if len(pts) <= 1:
        return tuple(pts)
    hull = facets(VPolytope(len(pts[0]), tuple(pts)))
    return vertices(hull).vertices
