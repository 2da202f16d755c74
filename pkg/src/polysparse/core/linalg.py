"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors and matrices are tuples of
them so that every geometric object is hashable and immutable.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]

Number = Union[int, Fraction, str]


class DimensionError(ValueError):
    """Raised when operands live in different ambient dimensions."""


def q(x: Number) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: every value entering the exact pipeline must be
    rational by construction.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def qvec(xs: Iterable[Number]) -> QVector:
    return tuple(q(x) for x in xs)


def qmat(rows: Iterable[Iterable[Number]]) -> QMatrix:
    return tuple(qvec(r) for r in rows)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def smul(alpha: Fraction, v: Sequence[Fraction]) -> QVector:
    return tuple(alpha * a for a in v)


def sq_norm(v: Sequence[Fraction]) -> Fraction:
    """Squared Euclidean norm; kept squared so it stays rational."""
    return sum((a * a for a in v), Fraction(0))


def l1_norm(v: Sequence[Fraction]) -> Fraction:
    return sum((abs(a) for a in v), Fraction(0))


def support_size(v: Sequence[Fraction]) -> int:
    return sum(1 for a in v if a != 0)


def integer_scaled(v: Sequence[Fraction]) -> Tuple[int, ...]:
    """Smallest positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[Fraction]]) -> QMatrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> QMatrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> QVector:
    return tuple(dot(row, v) for row in a)


def inverse(m: Sequence[Sequence[Fraction]]) -> QMatrix:
    """Gauss-Jordan inverse over the rationals.

    Raises ``ZeroDivisionError`` when ``m`` is singular.
    """
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> QVector:
    """Solve the square system ``m x = rhs`` exactly."""
    n = len(m)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncol = len(mat[0])
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / mat[r][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    mat = [list(r) for r in m]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col] != 0:
                f = mat[i][col] / mat[col][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[col])]
    return det


def is_skew_symmetric(s: Sequence[Sequence[Fraction]]) -> bool:
    n = len(s)
    return all(len(row) == n for row in s) and all(
        s[i][j] == -s[j][i] for i in range(n) for j in range(n)
    )


def cayley_rotation(s: Sequence[Sequence[Number]]) -> QMatrix:
    """Rational rotation ``(I - S)(I + S)^-1`` from a skew-symmetric ``S``.

    The result is exactly orthogonal with determinant 1. Rotations having
    -1 as an eigenvalue are not in the image of this map.
    """
    sm = qmat(s)
    if not is_skew_symmetric(sm):
        raise ValueError("cayley_rotation needs a skew-symmetric matrix")
    n = len(sm)
    eye = identity(n)
    plus = tuple(tuple(eye[i][j] + sm[i][j] for j in range(n)) for i in range(n))
    minus = tuple(tuple(eye[i][j] - sm[i][j] for j in range(n)) for i in range(n))
    try:
        inv = inverse(plus)
    except ZeroDivisionError:
        raise ValueError("I + S is singular") from None
    return matmul(minus, inv)


def is_orthogonal(r: Sequence[Sequence[Fraction]]) -> bool:
    n = len(r)
    return matmul(transpose(r), r) == identity(n)
