"""Orthogonal projection onto a coordinate subspace.

Fourier-Motzkin on the H-description, or the hull of the projected vertices.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from .dd import facets
from .polytope import HPolytope, LinIneq, VPolytope, _normalize_sort, canonicalize, remove_redundant


def _eliminate(rows: Sequence[LinIneq], j: int) -> List[LinIneq]:
    """Eliminate coordinate ``j`` and drop that column."""
    pos, neg, out = [], [], []
    for h in rows:
        c = h.a[j]
        if c > 0:
            pos.append(h)
        elif c < 0:
            neg.append(h)
        else:
            out.append(LinIneq(h.a[:j] + h.a[j + 1:], h.b))
    for p in pos:
        cp = p.a[j]
        for m in neg:
            cm = -m.a[j]
            a = tuple(cm * x + cp * y for x, y in zip(p.a, m.a))
            out.append(LinIneq(a[:j] + a[j + 1:], cm * p.b + cp * m.b))
    return out


def project(P: HPolytope, keep: Iterable[int]) -> HPolytope:
    return _project(P, tuple(sorted(set(keep))))


@lru_cache(maxsize=4096)
def _project(P: HPolytope, keep: Tuple[int, ...]) -> HPolytope:
    """Projection of ``P`` onto the coordinates in ``keep`` (sorted order).

    Variables are eliminated one at a time, cheapest first (fewest new rows,
    lowest index on ties), and redundant rows are pruned by LP after every
    step to keep the intermediate systems small.
    """
    if not keep:
        raise ValueError("projection onto an empty coordinate set")
    if keep[0] < 0 or keep[-1] >= P.dim:
        raise IndexError("projection index out of range")
    P = canonicalize(P)
    if P.is_empty_marker():
        return HPolytope.empty(len(keep))

    labels = list(range(P.dim))
    rows = list(P.ineqs)
    drop = [i for i in labels if i not in keep]
    while drop:
        def cost(var):
            j = labels.index(var)
            npos = sum(1 for h in rows if h.a[j] > 0)
            nneg = sum(1 for h in rows if h.a[j] < 0)
            return (npos * nneg - npos - nneg, var)

        var = min(drop, key=cost)
        j = labels.index(var)
        rows = _eliminate(rows, j)
        labels.pop(j)
        drop.remove(var)
        sys_ = _normalize_sort(HPolytope(len(labels), tuple(rows)))
        rows = list(remove_redundant(sys_).ineqs)
    return canonicalize(HPolytope(len(keep), tuple(rows)))


def project_vertices(V: VPolytope, keep: Iterable[int]) -> HPolytope:
    """Projection of ``conv(V)`` as the facets of the projected vertex set."""
    keep = tuple(sorted(set(keep)))
    if not keep:
        raise ValueError("projection onto an empty coordinate set")
    if keep[0] < 0 or keep[-1] >= V.dim:
        raise IndexError("projection index out of range")
    pts = VPolytope.from_points({tuple(v[i] for i in keep) for v in V.vertices}, len(keep))
    return canonicalize(facets(pts))


def lift(Q: HPolytope, coords: Sequence[int], dim: int) -> HPolytope:
    """Cylinder ``{x in R^dim : x_coords in Q}``."""
    coords = list(coords)
    if len(coords) != Q.dim:
        raise ValueError("coordinate list does not match the polytope dimension")
    ineqs = []
    for h in Q.ineqs:
        a = [h.a[0] * 0] * dim
        for c, v in zip(coords, h.a):
            a[c] = v
        ineqs.append(LinIneq(tuple(a), h.b))
    return HPolytope(dim, tuple(ineqs))
