from fractions import Fraction as F

import pytest

from polysparse.core import FormatError, HPolytope, VPolytope, format_poly, parse_poly, read_poly, write_poly
from polysparse.families import make_qn, make_symmetric_family


def test_parse_with_comments_and_fractions():
    text = """
    # unit simplex, scaled
    H 2 3
    -1 0 <= 0   # x >= 0
    0 -1 <= 0
    1 1 <= 3/2
    """
    P = parse_poly(text)
    assert isinstance(P, HPolytope)
    assert P.ineqs[2].b == F(3, 2)


def test_round_trip_h_and_v(tmp_path):
    P = make_qn(4)
    assert parse_poly(format_poly(P)) == P
    W = VPolytope.from_points([(0, F(1, 3)), (F(-2, 7), 1)])
    assert parse_poly(format_poly(W)) == W
    path = tmp_path / "q4.hpoly"
    write_poly(make_symmetric_family(2, 3), path)
    assert read_poly(path) == make_symmetric_family(2, 3)


@pytest.mark.parametrize("text", [
    "",
    "X 2 1\n1 1 <= 1",
    "H 2 2\n1 1 <= 1",
    "H 2 1\n1 <= 1",
    "H 2 1\n1 1 >= 1",
    "H 1 1\n0.5 <= 1",
    "H 1 1\n1 <= 1e3",
    "V 2 2\n0 0\n0 0",
    "V 2 1\n1 2 3",
    "H 1 1\n1 <= 1/0",
])
def test_malformed_inputs(text):
    with pytest.raises(FormatError):
        parse_poly(text)
