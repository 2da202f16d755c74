"""The concrete polytope families and their closed-form quantities.

Notation used below: ``P(t, n) = {x in [0,1]^n : sum x <= t}``, ``Q(n)`` is
its LP relaxation with all ``(n/2 + 1)``-subset cuts, and the symmetric
family is the orthant symmetrisation of ``P(t, n)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core.linalg import Number, q
from .core.polytope import HPolytope, LinIneq, canonicalize


@dataclass(frozen=True)
class FamilyParams:
    n: int
    t: Fraction
    k: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 1 <= self.t <= self.n:
            raise ValueError(f"t={self.t} outside [1, {self.n}]")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k={self.k} outside [1, {self.n}]")


def _unit(n: int, i: int, s: int = 1):
    e = [0] * n
    e[i] = s
    return e


def _integer_t(t: Number, n: int) -> int:
    tq = q(t)
    if tq.denominator != 1:
        raise ValueError("t must be an integer for this family")
    FamilyParams(n, tq)
    return int(tq)


def make_simplex_family(t: Number, n: int) -> HPolytope:
    """``{x in [0,1]^n : x_1 + ... + x_n <= t}``, canonical."""
    tq = q(t)
    FamilyParams(n, tq)
    rows = []
    for i in range(n):
        rows.append((_unit(n, i, -1), 0))
        rows.append((_unit(n, i), 1))
    rows.append(([1] * n, tq))
    return canonicalize(HPolytope.from_rows(rows, n))


def make_qn(n: int) -> HPolytope:
    """Unit box cut by ``sum_{i in I} x_i <= n/2`` for every ``|I| = n/2 + 1``."""
    if n < 2 or n % 2:
        raise ValueError("Q_n needs an even n >= 2")
    rows = []
    for i in range(n):
        rows.append((_unit(n, i, -1), 0))
        rows.append((_unit(n, i), 1))
    for I in itertools.combinations(range(n), n // 2 + 1):
        a = [0] * n
        for i in I:
            a[i] = 1
        rows.append((a, n // 2))
    return canonicalize(HPolytope.from_rows(rows, n))


def _signed_rows(n: int, support: Sequence[int], t: int):
    for signs in itertools.product((1, -1), repeat=len(support)):
        a = [0] * n
        for i, s in zip(support, signs):
            a[i] = s
        yield (a, t)


def make_symmetric_family(t: Number, n: int) -> HPolytope:
    """``{x in [-1,1]^n : sum_{i in I} x_i - sum_{i not in I} x_i <= t for all I}``."""
    t = _integer_t(t, n)
    rows = list(HPolytope.box(n, -1, 1).ineqs)
    rows += [LinIneq.of(a, b) for a, b in _signed_rows(n, range(n), t)]
    return canonicalize(HPolytope(n, tuple(rows)))


def make_symmetric_closure(t: Number, n: int, k: int) -> HPolytope:
    """k-sparse closure of the symmetric family in closed form.

    Box plus ``sum_{I+} x_i - sum_{I-} x_i <= t`` for every k-subset ``I``
    and every split of ``I`` into ``I+`` and ``I-``.
    """
    t = _integer_t(t, n)
    FamilyParams(n, Fraction(t), k)
    rows = list(HPolytope.box(n, -1, 1).ineqs)
    for I in itertools.combinations(range(n), k):
        rows += [LinIneq.of(a, b) for a, b in _signed_rows(n, I, t)]
    return canonicalize(HPolytope(n, tuple(rows)))


class UnsupportedParameters(ValueError):
    pass


def closed_form_sq_dist(t: Number, n: int, k: int) -> Fraction:
    """Squared distance between ``P(t, n)`` and its k-sparse closure.

    Known only for ``t = 1`` and ``t = n/2``:

    * ``t = 1``: ``n/k^2 - 2/k + 1/n``
    * ``t = n/2``, ``k <= n/2``: ``n/4``
    * ``t = n/2``, ``k > n/2``: ``n (n/(2k) - 1/2)^2``
    """
    tq = q(t)
    FamilyParams(n, tq, k)
    n_q = Fraction(n)
    if tq == 1:
        return n_q / (k * k) - Fraction(2, k) + 1 / n_q
    if tq == n_q / 2:
        if k <= n_q / 2:
            return n_q / 4
        return n_q * (n_q / (2 * k) - Fraction(1, 2)) ** 2
    raise UnsupportedParameters(f"no closed form for t={tq}, n={n}")


def top_sum(values: Sequence, t: int):
    """Sum of the ``t`` largest entries."""
    return sum(sorted(values, reverse=True)[:t])


def closed_form_gap_sym(t: int, n: int, k: int, c: Sequence):
    """Gap of the symmetric family in direction ``c`` when ``k <= t``.

    The closure is the box (support ``sum |c_i|``) and the extreme points of
    the family are the {-1,0,1} vectors with at most ``t`` nonzeros (support
    = sum of the ``t`` largest ``|c_i|``). Exact for Fraction input, float
    otherwise.
    """
    t = _integer_t(t, n)
    FamilyParams(n, Fraction(t), k)
    if k > t:
        raise UnsupportedParameters("closed form needs k <= t; use the exact pipeline")
    if len(c) != n:
        raise ValueError("direction dimension mismatch")
    absc = [abs(x) for x in c]
    return sum(absc) - top_sum(absc, t)


def bernstein_bound(w: float, U: float, M: float) -> float:
    """Tail bound ``exp(-min(w^2/(4U), 3w/(4M)))`` for a centred bounded sum."""
    if w <= 0 or U <= 0 or M <= 0:
        raise ValueError("Bernstein bound needs w, U, M > 0")
    return math.exp(-min(w * w / (4 * U), 3 * w / (4 * M)))


def bernstein_exponents_dense_budget(b: float, k: int, d: int, n: int):
    """Both exponents of the bound at ``w = 30 b sqrt(log d)/sqrt(k)``,
    ``U = b (n - k)/k^2`` and ``M = 1/k``."""
    w = 30 * b * math.sqrt(math.log(d)) / math.sqrt(k)
    U = b * (n - k) / k ** 2
    M = 1 / k
    return w * w / (4 * U), 3 * w / (4 * M)
