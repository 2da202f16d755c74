"""Small down-monotone test polytopes shared by the verify suite and the tests."""
from __future__ import annotations

from typing import List, Tuple

from ..core.polytope import HPolytope, LinIneq, canonicalize
from ..families import make_qn, make_simplex_family
from .rng import RandomSource

CORPUS_SEED = 20240601


def random_down_monotone(n: int, rows: int, index: int) -> HPolytope:
    """Unit box cut by ``rows`` inequalities ``a.x <= b`` with ``a >= 0``."""
    gen = RandomSource(CORPUS_SEED, n).generator(index)
    ineqs = list(HPolytope.box(n).ineqs)
    for _ in range(rows):
        a = [int(v) for v in gen.integers(0, 4, size=n)]
        if not any(a):
            a[0] = 1
        b = int(gen.integers(1, max(2, sum(a))))
        ineqs.append(LinIneq.of(a, b))
    return canonicalize(HPolytope(n, tuple(ineqs)))


def down_monotone_corpus(max_n: int = 4) -> List[Tuple[str, HPolytope]]:
    out = []
    for n in range(2, max_n + 1):
        for t in range(1, n):
            out.append((f"simplex(t={t},n={n})", make_simplex_family(t, n)))
        if n % 2 == 0:
            out.append((f"qn(n={n})", make_qn(n)))
        for j in range(2):
            out.append((f"random(n={n},#{j})", random_down_monotone(n, 2, j)))
    return out
