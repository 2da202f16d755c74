"""Exact polyhedral core: rationals, LP, H/V conversion, projection."""
from .dd import UnboundedError, facets, vertices
from .duality import OriginNotInteriorError, polar
from .io import FormatError, format_poly, parse_poly, read_poly, write_poly
from .linalg import (
    DimensionError,
    QMatrix,
    QVector,
    Rational,
    cayley_rotation,
    is_orthogonal,
    q,
    qmat,
    qvec,
)
from .lp import LPResult
from .polytope import (
    HPolytope,
    LinIneq,
    Polytope,
    VPolytope,
    canonicalize,
    canonicalize_v,
    contains,
    equal,
    intersect,
    reflect,
    reflect_point,
    scale,
    solve_lp,
    support,
)
from .projection import lift, project, project_vertices

__all__ = [
    "DimensionError", "FormatError", "HPolytope", "LPResult", "LinIneq",
    "OriginNotInteriorError", "Polytope", "QMatrix", "QVector", "Rational",
    "UnboundedError", "VPolytope", "canonicalize", "canonicalize_v",
    "cayley_rotation", "contains", "equal", "facets", "format_poly",
    "intersect", "is_orthogonal", "lift", "parse_poly", "polar", "project", "project_vertices",
    "q", "qmat", "qvec", "read_poly", "reflect", "reflect_point", "scale",
    "solve_lp", "support", "vertices", "write_poly",
]
