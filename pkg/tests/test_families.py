import itertools
import math
from fractions import Fraction as F

import pytest

from polysparse.closure import sparse_closure, symmetrize
from polysparse.core import HPolytope, canonicalize, equal, facets, vertices
from polysparse.metrics import gap
from polysparse.families import (
    FamilyParams,
    UnsupportedParameters,
    bernstein_bound,
    bernstein_exponents_dense_budget,
    closed_form_gap_sym,
    closed_form_sq_dist,
    make_qn,
    make_simplex_family,
    make_symmetric_family,
)
from polysparse.experiments.lp_relax import integer_hull_of_qn


def test_simplex_1_2_drops_upper_bounds():
    P = make_simplex_family(1, 2)
    assert P == HPolytope.from_rows([((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simplex_n_n_is_box(n):
    assert make_simplex_family(n, n) == canonicalize(HPolytope.box(n))


def test_half_simplex_is_half_cube():
    P = make_simplex_family(2, 4)
    inside = sum(1 for x in itertools.product((0, 1), repeat=4) if P.contains_point(x))
    assert inside == 1 + 4 + 6


def test_family_param_errors():
    with pytest.raises(ValueError):
        make_simplex_family(0, 3)
    with pytest.raises(ValueError):
        make_simplex_family(4, 3)
    with pytest.raises(ValueError):
        make_qn(3)
    with pytest.raises(ValueError):
        make_symmetric_family(F(3, 2), 3)
    with pytest.raises(ValueError):
        FamilyParams(3, F(1), 4)


def test_qn_examples():
    assert make_qn(2) == make_simplex_family(1, 2)
    Q = make_qn(4)
    x = (F(2, 3),) * 4
    assert Q.contains_point(x)
    for I in itertools.combinations(range(4), 3):
        assert sum(x[i] for i in I) == 2
    assert equal(facets(integer_hull_of_qn(4)), make_simplex_family(2, 4))


def test_symmetric_family_cross_polytope():
    for n in (2, 3, 4):
        pts = set(vertices(make_symmetric_family(1, n)).vertices)
        want = set()
        for i in range(n):
            for s in (1, -1):
                e = [0] * n
                e[i] = s
                want.add(tuple(e))
        assert pts == want


def test_closed_form_sq_dist_examples():
    assert closed_form_sq_dist(1, 2, 1) == F(1, 2)
    assert closed_form_sq_dist(2, 4, 3) == F(1, 9)
    assert closed_form_sq_dist(2, 4, 2) == 1
    with pytest.raises(UnsupportedParameters):
        closed_form_sq_dist(2, 5, 1)


def test_closed_form_sq_dist_matches_unsquared_formula():
    for n in range(2, 9):
        for k in range(1, n + 1):
            want = (math.sqrt(n) / k - 1 / math.sqrt(n)) ** 2
            assert float(closed_form_sq_dist(1, n, k)) == pytest.approx(want, abs=1e-12)


def test_closed_form_gap_examples():
    assert closed_form_gap_sym(1, 4, 1, (1, 0, 0, 0)) == 0
    assert closed_form_gap_sym(1, 4, 1, (F(1, 2),) * 4) == F(3, 2)
    c = [1 / math.sqrt(10)] * 10
    assert closed_form_gap_sym(1, 10, 1, c) == pytest.approx(9 / math.sqrt(10), abs=1e-12)
    with pytest.raises(UnsupportedParameters):
        closed_form_gap_sym(1, 4, 2, (1, 1, 1, 1))


def test_closed_form_gap_against_lp():
    inner = make_symmetric_family(1, 4)
    outer = HPolytope.box(4, -1, 1)
    c = (F(1, 2),) * 4
    assert closed_form_gap_sym(1, 4, 1, c) == gap(inner, outer, c).gap


def test_bernstein_examples():
    assert bernstein_bound(2, 1, 1) == pytest.approx(math.exp(-1))
    # tie: w^2/(4U) = 3w/(4M) when w = 3U/M
    U, M = 2.0, 0.5
    w = 3 * U / M
    assert bernstein_bound(w, U, M) == pytest.approx(math.exp(-w * w / (4 * U)))
    with pytest.raises(ValueError):
        bernstein_bound(0, 1, 1)


def test_bernstein_dense_budget_exponents():
    b, k, d, n = 0.4, 5, 50, 200
    e1, e2 = bernstein_exponents_dense_budget(b, k, d, n)
    assert e1 == pytest.approx(30 ** 2 * b * k * math.log(d) / (4 * (n - k)))
    assert e2 == pytest.approx(30 / 4 * 3 * b * math.sqrt(k * math.log(d)))


def test_symmetrize_generic_agrees_with_family():
    for t in (1, 2, 3):
        assert equal(symmetrize(make_simplex_family(t, 3), "generic"), make_symmetric_family(t, 3))


def test_closure_of_symmetric_half_is_box():
    for n in (2, 4):
        S = make_symmetric_family(n // 2, n)
        for k in range(1, n // 2 + 1):
            assert equal(sparse_closure(S, k), HPolytope.box(n, -1, 1))
