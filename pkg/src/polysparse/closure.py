"""Sparse closures, budgeted closures and orthant symmetrisation."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .core.dd import facets, vertices
from .core.linalg import dot
from .core.lp import lp_max
from .core.polytope import (
    HPolytope,
    LinIneq,
    VPolytope,
    _normalize_sort,
    canonicalize,
    reflect_point,
    support,
)
from .core.projection import lift, project, project_vertices

log = logging.getLogger(__name__)


class InvalidCutError(ValueError):
    """A cut in a budget set is violated by the reference polytope."""

    def __init__(self, index: int, cut: LinIneq, support_value: Fraction):
        self.index = index
        self.cut = cut
        self.support_value = support_value
        super().__init__(
            f"cut #{index} ({_show(cut)}) is invalid: max over the polytope is "
            f"{support_value} > {cut.b}"
        )


def _show(h: LinIneq) -> str:
    return " ".join(str(a) for a in h.a) + f" <= {h.b}"


@dataclass(frozen=True)
class ClosureSpec:
    k: int
    dim: int

    def __post_init__(self):
        if not 1 <= self.k <= self.dim:
            raise ValueError(f"sparsity k={self.k} outside 1..{self.dim}")


@dataclass(frozen=True)
class CutSet:
    """A finite set ``D`` of inequalities, each certified valid on construction."""

    cuts: Tuple[LinIneq, ...]
    label: str = ""
    reference: Optional[HPolytope] = field(default=None, compare=False, repr=False)

    @classmethod
    def certified(cls, P: HPolytope, cuts: Iterable[LinIneq], label: str = "") -> "CutSet":
        cuts = tuple(cuts)
        for i, h in enumerate(cuts):
            if h.dim != P.dim:
                raise ValueError(f"cut #{i} has dimension {h.dim}, polytope has {P.dim}")
            val = support(P, h.a)
            if val > h.b:
                raise InvalidCutError(i, h, val)
        return cls(cuts, label, P)

    def __len__(self) -> int:
        return len(self.cuts)


def sparse_closure(P: HPolytope, k: int, method: str = "vertex") -> HPolytope:
    """``P^k``: intersection of all valid inequalities with at most k nonzeros.

    Computed as the intersection over k-subsets ``K`` (lexicographic order)
    of the cylinders over ``proj_K(P)``. Projections come from the vertex
    set (``method="vertex"``) or from Fourier-Motzkin (``method="fm"``);
    both give the same polytope.
    """
    ClosureSpec(k, P.dim)
    if method not in ("vertex", "fm"):
        raise ValueError(f"unknown method {method!r}")
    P = canonicalize(P)
    if P.is_empty_marker() or k == P.dim:
        return P
    V = vertices(P)  # raises on unbounded input
    rows = []
    for K in itertools.combinations(range(P.dim), k):
        Q = project_vertices(V, K) if method == "vertex" else project(P, K)
        rows.extend(lift(Q, K, P.dim).ineqs)
        # merge duplicate rows as we go; LP pruning happens once at the end
        rows = list(_normalize_sort(HPolytope(P.dim, tuple(rows))).ineqs)
    return canonicalize(HPolytope(P.dim, tuple(rows)))


def budgeted_closure(P: HPolytope, k: int, D) -> HPolytope:
    """``P^{k,D}``: the sparse closure cut further by the inequalities of ``D``."""
    if not isinstance(D, CutSet) or D.reference is None or canonicalize(D.reference) != canonicalize(P):
        D = CutSet.certified(P, D.cuts if isinstance(D, CutSet) else D,
                             D.label if isinstance(D, CutSet) else "")
    closure = sparse_closure(P, k)
    return canonicalize(HPolytope(P.dim, closure.ineqs + D.cuts))


def _in_orthant(P: HPolytope) -> bool:
    for i in range(P.dim):
        e = [Fraction(0)] * P.dim
        e[i] = Fraction(-1)
        res = lp_max(P.A, P.b, e)
        if res.status == "unbounded" or (res.optimal and res.value > 0):
            return False
    return True


class NotInOrthantError(ValueError):
    pass


def _sign_patterns(a: Sequence[Fraction]):
    supp = [i for i, v in enumerate(a) if v]
    for signs in itertools.product((1, -1), repeat=len(supp)):
        out = list(a)
        for i, s in zip(supp, signs):
            if s < 0:
                out[i] = -out[i]
        yield tuple(out)


def symmetrize(P: HPolytope, method: str = "auto") -> HPolytope:
    """``conv`` of the 2^n orthant reflections of ``P`` (``P`` in the nonnegative orthant).

    ``method="fast"`` (or ``"auto"``) reflects each row of a description
    ``{x >= 0 : a_i x <= b_i}`` with ``a_i >= 0``; when some ``a_i`` has a
    negative entry it falls back to ``"generic"``, which reflects the vertex
    set and recomputes facets.
    """
    if method not in ("auto", "fast", "generic"):
        raise ValueError(f"unknown method {method!r}")
    P = canonicalize(P)
    if P.is_empty_marker():
        return P
    if not _in_orthant(P):
        raise NotInOrthantError("symmetrize needs a polytope inside the nonnegative orthant")
    n = P.dim

    if method in ("auto", "fast"):
        rows = []
        nonneg_ok = True
        for h in P.ineqs:
            is_bound = h.b == 0 and sum(1 for v in h.a if v) == 1 and min(h.a) < 0
            if is_bound:
                continue
            if any(v < 0 for v in h.a):
                nonneg_ok = False
                break
            rows.extend(LinIneq(a, h.b) for a in _sign_patterns(h.a))
        if nonneg_ok:
            vertices(P)  # boundedness
            return canonicalize(HPolytope(n, tuple(rows)))
        if method == "fast":
            log.info("symmetrize: negative coefficient, falling back to the generic path")

    V = vertices(P)
    pts = set()
    for mask in itertools.product((True, False), repeat=n):
        keep = [i for i in range(n) if mask[i]]
        for v in V.vertices:
            pts.add(reflect_point(v, keep))
    return facets(VPolytope(n, tuple(sorted(pts))))


def is_down_monotone(P: HPolytope) -> bool:
    """Whether ``0 <= y <= x`` and ``x in P`` imply ``y in P``.

    Checked on the vertex set: zeroing any single coordinate of any vertex
    must stay inside ``P``.
    """
    P = canonicalize(P)
    if P.is_empty_marker():
        return True
    if not _in_orthant(P):
        return False
    for v in vertices(P).vertices:
        for i, x in enumerate(v):
            if x:
                w = v[:i] + (Fraction(0),) + v[i + 1:]
                if not all(dot(h.a, w) <= h.b for h in P.ineqs):
                    return False
    return True
