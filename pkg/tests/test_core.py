import itertools
from fractions import Fraction as F

import pytest

from polysparse.core import (
    DimensionError,
    HPolytope,
    LinIneq,
    OriginNotInteriorError,
    UnboundedError,
    VPolytope,
    cayley_rotation,
    canonicalize,
    contains,
    equal,
    facets,
    intersect,
    is_orthogonal,
    lift,
    polar,
    project,
    q,
    qmat,
    reflect,
    reflect_point,
    scale,
    solve_lp,
    support,
    vertices,
)
from polysparse.core.linalg import determinant, identity, matmul, sq_norm, sub, transpose
from polysparse.families import make_qn, make_simplex_family, make_symmetric_family


def box(n, lo=0, hi=1):
    return HPolytope.box(n, lo, hi)


def V(*pts):
    return VPolytope.from_points(pts)


# --- numbers -----------------------------------------------------------------

def test_q_accepts_exact_and_rejects_float():
    assert q(3) == 3
    assert q("2/6") == F(1, 3)
    with pytest.raises(TypeError):
        q(0.5)


# --- LP ------------------------------------------------------------------------

def test_lp_box_corner():
    res = solve_lp(box(2), (1, 1))
    assert res.optimal and res.value == 2 and res.argmax == (1, 1)


def test_lp_simplex():
    assert solve_lp(make_simplex_family(1, 2), (1, 1)).value == 1


def test_lp_cross_polytope():
    assert support(make_symmetric_family(1, 4), (1, 1, 1, 1)) == 1


def test_lp_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve_lp(box(2), (1, 1, 1))


def test_lp_infeasible_and_unbounded():
    empty = HPolytope.from_rows([((1,), 0), ((-1,), -1)])
    assert solve_lp(empty, (1,)).status == "infeasible"
    ray = HPolytope.from_rows([((-1, 0), 0), ((0, -1), 0)])
    assert solve_lp(ray, (1, 1)).status == "unbounded"


def test_lp_deterministic_argmax():
    P = make_qn(4)
    a = solve_lp(P, (1, 1, 1, 1))
    b = solve_lp(P, (1, 1, 1, 1))
    assert a == b
    assert a.value == F(8, 3)


# --- canonical form ------------------------------------------------------------

def test_canonicalize_dominated_row():
    P = HPolytope.from_rows([((1,), 1), ((1,), 2)])
    assert canonicalize(P) == HPolytope.from_rows([((1,), 1)])


def test_canonicalize_drops_redundant_dense_cut():
    Q = make_qn(4)
    assert support(Q, (1, 1, 1, 1)) == F(8, 3)
    withcut = HPolytope(4, Q.ineqs + (LinIneq.of((1, 1, 1, 1), 4),))
    assert canonicalize(withcut) == Q


def test_canonicalize_idempotent_and_normalised():
    P = HPolytope.from_rows([((2, 4), 6), ((-3, 0), 0), ((0, -5), 0), ((1, 1), 10)])
    C = canonicalize(P)
    assert canonicalize(C) == C
    for h in C.ineqs:
        first = next(a for a in h.a if a)
        assert abs(first) == 1
    assert list(C.ineqs) == sorted(C.ineqs)


def test_canonicalize_empty_marker():
    P = HPolytope.from_rows([((1, 0), 0), ((-1, 0), -1), ((0, 1), 1)])
    C = canonicalize(P)
    assert C.is_empty_marker()
    assert canonicalize(C) == C


# --- projection ------------------------------------------------------------------

def test_project_simplex():
    assert equal(project(make_simplex_family(1, 3), (0, 1)), make_simplex_family(1, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_project_box(n):
    for K in itertools.combinations(range(n), 2):
        assert equal(project(box(n), K), box(2))


def test_project_symmetric():
    assert equal(project(make_symmetric_family(2, 4), (0, 1)), box(2, -1, 1))


def test_project_empty_keep_rejected():
    with pytest.raises(ValueError):
        project(box(2), ())


def test_project_of_empty_is_empty():
    P = HPolytope.from_rows([((1, 0), 0), ((-1, 0), -1)])
    assert project(P, (1,)).is_empty_marker()


def test_lift_is_cylinder():
    L = lift(box(1), (1,), 3)
    assert L.contains_point((F(100), F(1, 2), F(-7)))
    assert not L.contains_point((F(0), F(2), F(0)))


def test_project_stays_in_box():
    P = make_symmetric_family(2, 4)
    for K in itertools.combinations(range(4), 3):
        assert contains(box(3, -1, 1), project(P, K))


# --- vertices / facets -------------------------------------------------------------

def test_vertices_simplex():
    assert set(vertices(make_simplex_family(1, 2)).vertices) == {(0, 0), (1, 0), (0, 1)}


def test_vertices_cross_polytope():
    want = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(vertices(make_symmetric_family(1, 2)).vertices) == want


def test_vertex_count_symmetric_2_4():
    # oracle: every {-1,0,1} point with <= 2 nonzeros lies in the polytope;
    # the 2-nonzero ones have the largest norm so they are extreme, the others
    # are midpoints (e_i = ((e_i + e_j) + (e_i - e_j))/2, 0 = midpoint of +-v)
    cand = [p for p in itertools.product((-1, 0, 1), repeat=4) if sum(1 for x in p if x) <= 2]
    top = max(sum(x * x for x in p) for p in cand)
    oracle = {p for p in cand if sum(x * x for x in p) == top}
    assert len(oracle) == 24
    assert set(vertices(make_symmetric_family(2, 4)).vertices) == oracle


def test_vertices_unbounded_raises():
    with pytest.raises(UnboundedError):
        vertices(HPolytope.from_rows([((-1, 0), 0), ((0, -1), 0), ((0, 1), 1)]))


def test_vertices_of_empty():
    assert vertices(HPolytope.from_rows([((1,), 0), ((-1,), -1)])).vertices == ()


@pytest.mark.parametrize("P", [
    make_simplex_family(1, 3), make_simplex_family(2, 4), make_qn(4),
    make_symmetric_family(2, 3), box(3, -1, 2),
])
def test_facets_vertices_round_trip(P):
    assert equal(facets(vertices(P)), P)
    assert canonicalize(facets(vertices(P))) == canonicalize(P)


def test_facets_drops_interior_points():
    W = V((0, 0), (2, 0), (0, 2), (2, 2), (1, 1))
    assert equal(facets(W), box(2, 0, 2))


def test_facets_lower_dimensional():
    seg = V((0, 0), (1, 1))
    H = facets(seg)
    assert H.contains_point((F(1, 2), F(1, 2)))
    assert not H.contains_point((F(1, 2), F(0)))


# --- intersect / equal / contains ----------------------------------------------------

def test_intersect_self():
    P = make_qn(4)
    assert equal(intersect(P, P), P)


def test_intersect_box_with_cut():
    cut = HPolytope.from_rows([((1, 1), 1)])
    assert equal(intersect(box(2), cut), make_simplex_family(1, 2))


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionError):
        intersect(box(2), box(3))


def test_qn_inside_box_closure():
    Q = make_qn(4)
    assert equal(intersect(box(4), Q), Q)


def test_equal_examples():
    P = make_simplex_family(1, 2)
    assert equal(P, canonicalize(P))
    assert not equal(P, box(2))


def test_equal_mixed_representations():
    assert equal(vertices(box(2)), box(2))


# --- scale / reflect -------------------------------------------------------------------

def test_scale():
    P = make_symmetric_family(2, 3)
    assert equal(scale(P, 1), P)
    assert equal(scale(scale(P, 2), F(1, 2)), P)
    with pytest.raises(ValueError):
        scale(P, 0)
    with pytest.raises(ValueError):
        scale(P, -1)


def test_scale_contains_two_thirds_signs():
    S = scale(box(3, -1, 1), F(2, 3))
    for x in itertools.product((-1, 1), repeat=3):
        assert S.contains_point(tuple(F(2 * v, 3) for v in x))


def test_reflect_identity_and_flip():
    P = make_simplex_family(1, 2)
    assert equal(reflect(P, (0, 1)), P)
    assert equal(reflect(P, (0,)), V((0, 0), (1, 0), (0, -1)))


@pytest.mark.parametrize("t,n", [(1, 3), (2, 3), (2, 4)])
def test_symmetric_family_is_reflection_invariant(t, n):
    P = make_symmetric_family(t, n)
    for r in range(n + 1):
        for keep in itertools.combinations(range(n), r):
            assert equal(reflect(P, keep), P)


def test_reflect_preserves_distances():
    pts = vertices(make_qn(4)).vertices
    for x, y in itertools.combinations(pts, 2):
        for keep in [(), (0,), (1, 3), (0, 1, 2)]:
            d = sq_norm(sub(reflect_point(x, keep), reflect_point(y, keep)))
            assert d == sq_norm(sub(x, y))


# --- polar ------------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_polar_box_is_cross_polytope(n):
    assert equal(polar(box(n, -1, 1)), make_symmetric_family(1, n))


def test_polar_involution():
    P = make_symmetric_family(2, 4)
    assert equal(polar(polar(P)), P)


def test_polar_scaling():
    assert equal(polar(box(2, -2, 2)), scale(make_symmetric_family(1, 2), F(1, 2)))


def test_polar_needs_interior_origin():
    with pytest.raises(OriginNotInteriorError):
        polar(box(2))


# --- rotations --------------------------------------------------------------------------

def test_cayley_zero():
    assert cayley_rotation(qmat([[0, 0], [0, 0]])) == identity(2)


def test_cayley_quarter_turn():
    # (I - S)(I + S)^-1 for this S is the quarter turn [[0,-1],[1,0]]
    R = cayley_rotation(qmat([[0, 1], [-1, 0]]))
    assert R == qmat([[0, -1], [1, 0]])
    assert matmul(transpose(R), R) == identity(2)


def test_cayley_random_orthogonal():
    S = qmat([[0, F(1, 2), -3], [F(-1, 2), 0, F(2, 3)], [3, F(-2, 3), 0]])
    R = cayley_rotation(S)
    assert is_orthogonal(R)
    assert determinant(R) == 1


def test_cayley_rejects_non_skew():
    with pytest.raises(ValueError):
        cayley_rotation(qmat([[1, 0], [0, 0]]))


def test_project_vertices_matches_fm():
    from polysparse.core import project_vertices
    for P in (make_qn(4), make_symmetric_family(2, 4), make_simplex_family(2, 3)):
        Vp = vertices(P)
        for K in itertools.combinations(range(P.dim), 2):
            assert project_vertices(Vp, K) == project(P, K)
