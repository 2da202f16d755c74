"""H- and V-polytopes over the rationals and the basic set operations on them.

Coordinates are indexed from 0. An index set ``I`` passed to :func:`reflect`
names the coordinates that keep their sign; all others are negated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple, Union

from .linalg import (
    DimensionError,
    Number,
    QVector,
    dot,
    q,
    qvec,
    support_size,
)
from .lp import LPResult, feasible_point, lp_max

_ZERO = Fraction(0)


@dataclass(frozen=True, order=True)
class LinIneq:
    """The half-space ``a . x <= b``."""

    a: QVector
    b: Fraction

    @classmethod
    def of(cls, a: Iterable[Number], b: Number) -> "LinIneq":
        return cls(qvec(a), q(b))

    @property
    def dim(self) -> int:
        return len(self.a)

    @property
    def sparsity(self) -> int:
        return support_size(self.a)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return dot(self.a, x) <= self.b

    def normalized(self) -> "LinIneq":
        """Scale so the first nonzero coefficient has absolute value 1."""
        lead = next((abs(v) for v in self.a if v), None)
        if lead is None or lead == 1:
            return self
        return LinIneq(tuple(v / lead for v in self.a), self.b / lead)

    def is_tautology(self) -> bool:
        return not any(self.a) and self.b >= 0

    def is_contradiction(self) -> bool:
        return not any(self.a) and self.b < 0


@dataclass(frozen=True)
class HPolytope:
    """``{x : a_i . x <= b_i for all i}``."""

    dim: int
    ineqs: Tuple[LinIneq, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        for h in self.ineqs:
            if h.dim != self.dim:
                raise DimensionError(f"inequality of dimension {h.dim} in a {self.dim}-polytope")

    @classmethod
    def from_rows(cls, rows: Iterable[Tuple[Iterable[Number], Number]], dim: Optional[int] = None):
        ineqs = tuple(LinIneq.of(a, b) for a, b in rows)
        if dim is None:
            if not ineqs:
                raise ValueError("dimension needed for an empty row list")
            dim = ineqs[0].dim
        return cls(dim, ineqs)

    @classmethod
    def empty(cls, dim: int) -> "HPolytope":
        """Canonical marker for the empty set: the single row ``0 <= -1``."""
        return cls(dim, (LinIneq(tuple(_ZERO for _ in range(dim)), Fraction(-1)),))

    @classmethod
    def box(cls, dim: int, lo: Number = 0, hi: Number = 1) -> "HPolytope":
        rows = []
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            rows.append((e, hi))
            e = [0] * dim
            e[i] = -1
            rows.append((e, -q(lo)))
        return cls.from_rows(rows, dim)

    @property
    def A(self) -> Tuple[QVector, ...]:
        return tuple(h.a for h in self.ineqs)

    @property
    def b(self) -> QVector:
        return tuple(h.b for h in self.ineqs)

    def is_empty_marker(self) -> bool:
        return any(h.is_contradiction() for h in self.ineqs)

    def contains_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionError("point dimension mismatch")
        return all(h.satisfied_by(x) for h in self.ineqs)

    def __len__(self) -> int:
        return len(self.ineqs)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite point set."""

    dim: int
    vertices: Tuple[QVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionError("vertex dimension mismatch")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be pairwise distinct")

    @classmethod
    def from_points(cls, points: Iterable[Iterable[Number]], dim: Optional[int] = None):
        pts = sorted(set(qvec(p) for p in points))
        if dim is None:
            if not pts:
                raise ValueError("dimension needed for an empty point list")
            dim = len(pts[0])
        return cls(dim, tuple(pts))

    def __len__(self) -> int:
        return len(self.vertices)


Polytope = Union[HPolytope, VPolytope]


def _check_dims(P: Polytope, Q: Polytope) -> None:
    if P.dim != Q.dim:
        raise DimensionError(f"dimensions differ: {P.dim} vs {Q.dim}")


def solve_lp(P: HPolytope, c: Sequence[Number]) -> LPResult:
    """Exact ``max c.x`` over ``P`` (Bland's rule, deterministic)."""
    cv = qvec(c)
    if len(cv) != P.dim:
        raise DimensionError(f"objective of length {len(cv)} for a {P.dim}-polytope")
    return lp_max(P.A, P.b, cv)


def support(P: Polytope, c: Sequence[Number]) -> Fraction:
    """``max_{x in P} c.x``; raises on an empty or unbounded problem."""
    cv = qvec(c)
    if len(cv) != P.dim:
        raise DimensionError("direction dimension mismatch")
    if isinstance(P, VPolytope):
        if not P.vertices:
            raise ValueError("support of an empty polytope")
        return max(dot(cv, v) for v in P.vertices)
    res = lp_max(P.A, P.b, cv)
    if not res.optimal:
        raise ValueError(f"support function undefined: LP is {res.status}")
    return res.value


def is_feasible(P: HPolytope) -> bool:
    return feasible_point(P.A, P.b, P.dim) is not None


def _normalize_sort(P: HPolytope) -> HPolytope:
    """Normalise rows, merge parallel duplicates, drop tautologies, sort."""
    best = {}
    for h in P.ineqs:
        if h.is_contradiction():
            return HPolytope.empty(P.dim)
        if h.is_tautology():
            continue
        h = h.normalized()
        prev = best.get(h.a)
        if prev is None or h.b < prev:
            best[h.a] = h.b
    return HPolytope(P.dim, tuple(sorted(LinIneq(a, b) for a, b in best.items())))


def remove_redundant(P: HPolytope) -> HPolytope:
    """Drop every row implied by the others; each drop is certified by an LP.

    Row ``i`` is dropped when ``max a_i . x`` over the remaining rows is at
    most ``b_i``. Rows are visited in order and removed one at a time, so the
    described set never changes.
    """
    rows = list(P.ineqs)
    i = 0
    while i < len(rows):
        others = rows[:i] + rows[i + 1:]
        if others:
            res = lp_max([h.a for h in others], [h.b for h in others], rows[i].a)
            if res.optimal and res.value <= rows[i].b:
                del rows[i]
                continue
        i += 1
    return HPolytope(P.dim, tuple(rows))


@lru_cache(maxsize=4096)
def canonicalize(P: HPolytope) -> HPolytope:
    """Redundancy-free, normalised, lexicographically sorted description.

    An infeasible system becomes :meth:`HPolytope.empty`.
    """
    P = _normalize_sort(P)
    if P.is_empty_marker():
        return P
    if not is_feasible(P):
        return HPolytope.empty(P.dim)
    return remove_redundant(P)


def canonicalize_v(V: VPolytope) -> VPolytope:
    """Keep only extreme points, sorted."""
    from .dd import extreme_points

    return VPolytope(V.dim, extreme_points(V.vertices))


def intersect(P: HPolytope, Q: HPolytope) -> HPolytope:
    _check_dims(P, Q)
    return canonicalize(HPolytope(P.dim, P.ineqs + Q.ineqs))


def add_cuts(P: HPolytope, cuts: Iterable[LinIneq]) -> HPolytope:
    return canonicalize(HPolytope(P.dim, P.ineqs + tuple(cuts)))


def scale(P: Polytope, alpha: Number) -> Polytope:
    """``alpha * P`` for ``alpha > 0``."""
    alpha = q(alpha)
    if alpha <= 0:
        raise ValueError("scale factor must be positive")
    if isinstance(P, VPolytope):
        return VPolytope(P.dim, tuple(sorted(tuple(alpha * x for x in v) for v in P.vertices)))
    return HPolytope(P.dim, tuple(LinIneq(h.a, h.b * alpha) for h in P.ineqs))


def reflect_point(x: Sequence[Fraction], keep: Iterable[int]) -> QVector:
    """``x^I``: negate every coordinate whose index is not in ``keep``."""
    keep = set(keep)
    return tuple(v if i in keep else -v for i, v in enumerate(x))


def reflect(P: Polytope, keep: Iterable[int]) -> Polytope:
    """``P^I = {x^I : x in P}``; an involution."""
    keep = frozenset(keep)
    if any(i < 0 or i >= P.dim for i in keep):
        raise IndexError("reflection index out of range")
    if isinstance(P, VPolytope):
        return VPolytope(P.dim, tuple(sorted(reflect_point(v, keep) for v in P.vertices)))
    return HPolytope(P.dim, tuple(LinIneq(reflect_point(h.a, keep), h.b) for h in P.ineqs))


def contains(outer: Polytope, inner: Polytope) -> bool:
    """Whether ``inner`` is a subset of ``outer``.

    Each row of ``outer`` is checked valid for ``inner`` by an LP (or by the
    vertex list when ``inner`` is a V-polytope).
    """
    _check_dims(outer, inner)
    if isinstance(inner, HPolytope) and not is_feasible(inner):
        return True
    if isinstance(inner, VPolytope) and not inner.vertices:
        return True
    if isinstance(outer, VPolytope):
        from .dd import facets

        outer = facets(outer)
    for h in outer.ineqs:
        if isinstance(inner, VPolytope):
            if any(dot(h.a, v) > h.b for v in inner.vertices):
                return False
            continue
        res = lp_max(inner.A, inner.b, h.a)
        if res.status != "optimal" or res.value > h.b:
            return False
    return True


def equal(P: Polytope, Q: Polytope) -> bool:
    """Set equality by double inclusion."""
    _check_dims(P, Q)
    return contains(P, Q) and contains(Q, P)
