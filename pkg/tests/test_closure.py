import itertools
from fractions import Fraction as F

import pytest

from polysparse.closure import (
    CutSet,
    InvalidCutError,
    NotInOrthantError,
    budgeted_closure,
    is_down_monotone,
    sparse_closure,
    symmetrize,
)
from polysparse.core import HPolytope, LinIneq, VPolytope, contains, equal, facets, reflect, vertices
from polysparse.families import make_qn, make_simplex_family, make_symmetric_closure, make_symmetric_family


def box(n, lo=0, hi=1):
    return HPolytope.box(n, lo, hi)


def test_closure_simplex_k1_is_box():
    assert equal(sparse_closure(make_simplex_family(1, 2), 1), box(2))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_half_simplex_closure_is_box(n):
    P = make_simplex_family(n // 2, n)
    for k in range(1, n // 2 + 1):
        assert equal(sparse_closure(P, k), box(n))


def test_cross_polytope_closure_k2():
    rows = list(box(3, -1, 1).ineqs)
    for i, j in itertools.combinations(range(3), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            a = [0, 0, 0]
            a[i], a[j] = si, sj
            rows.append(LinIneq.of(a, 1))
    want = HPolytope(3, tuple(rows))
    assert equal(sparse_closure(make_symmetric_family(1, 3), 2), want)


def test_closure_k_range():
    P = make_simplex_family(1, 3)
    with pytest.raises(ValueError):
        sparse_closure(P, 0)
    with pytest.raises(ValueError):
        sparse_closure(P, 4)
    assert sparse_closure(P, 3) == P


def test_closure_monotone_and_idempotent():
    P = make_qn(4)
    prev = None
    for k in range(1, 5):
        C = sparse_closure(P, k)
        assert contains(C, P)
        if prev is not None:
            assert contains(prev, C)
        assert equal(sparse_closure(C, k), C)
        prev = C


def test_closure_of_symmetric_is_reflection_invariant():
    C = sparse_closure(make_symmetric_family(1, 3), 2)
    for keep in [(), (0,), (1, 2)]:
        assert equal(reflect(C, keep), C)


def test_budgeted_empty_budget():
    P = make_simplex_family(1, 3)
    assert equal(budgeted_closure(P, 1, CutSet.certified(P, [])), sparse_closure(P, 1))


@pytest.mark.parametrize("n", [2, 4])
def test_budgeted_single_dense_cut_recovers_polytope(n):
    P = make_simplex_family(n // 2, n)
    D = CutSet.certified(P, [LinIneq.of([1] * n, F(n, 2))])
    for k in range(1, n + 1):
        assert equal(budgeted_closure(P, k, D), P)


def test_budgeted_strict_subset_keeps_mixed_sign_point():
    P = make_symmetric_family(2, 4)
    D = CutSet.certified(P, [LinIneq.of([1, 1, 1, 1], 2)])
    B = budgeted_closure(P, 2, D)
    Pk = sparse_closure(P, 2)
    assert contains(Pk, B) and not contains(B, Pk)
    assert B.contains_point((1, 1, -1, -1))


def test_invalid_cut_names_offender():
    P = make_simplex_family(1, 2)
    with pytest.raises(InvalidCutError) as err:
        CutSet.certified(P, [LinIneq.of([1, 0], 1), LinIneq.of([1, 1], F(1, 2))])
    assert err.value.index == 1
    assert err.value.support_value == 1
    with pytest.raises(InvalidCutError):
        budgeted_closure(P, 1, [LinIneq.of([2, 1], 1)])


def test_symmetrize_examples():
    for n in (2, 3, 4):
        assert equal(symmetrize(make_simplex_family(1, n)), make_symmetric_family(1, n))
        assert equal(symmetrize(box(n)), box(n, -1, 1))
    assert equal(symmetrize(make_simplex_family(2, 3)), make_symmetric_family(2, 3))


def test_symmetrize_fast_falls_back_on_negative_coefficients():
    # x in [0,1]^2, x1 - x2 <= 1/2
    P = HPolytope.from_rows([((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1), ((1, -1), F(1, 2))])
    assert equal(symmetrize(P, "fast"), symmetrize(P, "generic"))


def test_symmetrize_rejects_outside_orthant():
    with pytest.raises(NotInOrthantError):
        symmetrize(box(2, -1, 1))
    with pytest.raises(ValueError):
        symmetrize(box(2), "bogus")


def test_down_monotone():
    for t in (1, 2, 3):
        assert is_down_monotone(make_simplex_family(t, 3))
    assert is_down_monotone(make_qn(4))
    seg = facets(VPolytope.from_points([(0, 1), (1, 0)]))
    assert not is_down_monotone(seg)


def test_symmetric_closure_constructor_examples():
    assert equal(make_symmetric_closure(2, 4, 2), box(4, -1, 1))
    generic = sparse_closure(symmetrize(make_simplex_family(1, 3)), 2)
    assert equal(make_symmetric_closure(1, 3, 2), generic)


def test_closure_vertices_bounded():
    C = sparse_closure(make_qn(4), 2)
    assert len(vertices(C).vertices) > 0


def test_vertex_and_fm_projection_routes_agree():
    from polysparse.experiments.corpus import down_monotone_corpus
    for _, P in down_monotone_corpus(3):
        for k in range(1, P.dim):
            assert sparse_closure(P, k, "vertex") == sparse_closure(P, k, "fm")
    S = make_symmetric_family(2, 4)
    assert sparse_closure(S, 3, "vertex") == sparse_closure(S, 3, "fm")
    with pytest.raises(ValueError):
        sparse_closure(S, 1, "bogus")
