"""Polar sets."""
from __future__ import annotations

from fractions import Fraction

from .dd import facets, vertices
from .polytope import HPolytope, LinIneq, Polytope, VPolytope, _normalize_sort, canonicalize


class OriginNotInteriorError(ValueError):
    pass


def _require_origin_interior(H: HPolytope) -> None:
    # on an irredundant description the origin is interior iff every row is strict at 0
    if H.is_empty_marker() or any(h.b <= 0 for h in H.ineqs):
        raise OriginNotInteriorError("polar needs the origin in the interior")


def polar(P: Polytope) -> HPolytope:
    """``P° = {z : z.x <= 1 for all x in P}`` as an H-polytope.

    Each vertex ``v`` of ``P`` contributes the row ``v.z <= 1``.
    """
    if isinstance(P, VPolytope):
        V = P
        H = facets(P)
    else:
        H = canonicalize(P)
        V = vertices(H)
    _require_origin_interior(H)
    rows = tuple(LinIneq(v, Fraction(1)) for v in V.vertices)
    return _normalize_sort(HPolytope(P.dim, rows))
