"""Plain-text ``.hpoly`` / ``.vpoly`` formats.

``.hpoly``::

    H <dim> <rows>
    a1 a2 ... an <= b

``.vpoly``::

    V <dim> <rows>
    x1 x2 ... xn

Numbers are integers or ``p/q``; ``#`` starts a comment.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import List, Union

from .polytope import HPolytope, LinIneq, Polytope, VPolytope


class FormatError(ValueError):
    pass


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num(tok: str, lineno: int) -> Fraction:
    try:
        if "." in tok or "e" in tok.lower():
            raise ValueError
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {lineno}: {tok!r} is not an integer or p/q") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def format_poly(P: Polytope) -> str:
    if isinstance(P, HPolytope):
        out = [f"H {P.dim} {len(P.ineqs)}"]
        for h in P.ineqs:
            out.append(" ".join(_fmt(a) for a in h.a) + " <= " + _fmt(h.b))
    else:
        out = [f"V {P.dim} {len(P.vertices)}"]
        for v in P.vertices:
            out.append(" ".join(_fmt(a) for a in v))
    return "\n".join(out) + "\n"


def parse_poly(text: str) -> Polytope:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty input")
    lineno, head = lines[0]
    if len(head) != 3 or head[0] not in ("H", "V"):
        raise FormatError(f"line {lineno}: expected 'H <dim> <rows>' or 'V <dim> <rows>'")
    try:
        dim, nrows = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"line {lineno}: bad header") from None
    body = lines[1:]
    if len(body) != nrows:
        raise FormatError(f"header announces {nrows} rows, found {len(body)}")
    if head[0] == "H":
        ineqs: List[LinIneq] = []
        for lineno, toks in body:
            if len(toks) != dim + 2 or toks[dim] != "<=":
                raise FormatError(f"line {lineno}: expected {dim} coefficients, '<=', rhs")
            a = tuple(_num(t, lineno) for t in toks[:dim])
            ineqs.append(LinIneq(a, _num(toks[-1], lineno)))
        return HPolytope(dim, tuple(ineqs))
    pts = []
    for lineno, toks in body:
        if len(toks) != dim:
            raise FormatError(f"line {lineno}: expected {dim} coordinates")
        pts.append(tuple(_num(t, lineno) for t in toks))
    if len(set(pts)) != len(pts):
        raise FormatError("duplicate vertices")
    return VPolytope(dim, tuple(pts))


def read_poly(path: Union[str, Path]) -> Polytope:
    return parse_poly(Path(path).read_text())


def write_poly(P: Polytope, path: Union[str, Path]) -> None:
    Path(path).write_text(format_poly(P))
