from __future__ import annotations

from fractions import Fraction


class ResourceRefusal(RuntimeError):
    """The requested size is beyond what the exact pipeline is allowed to attempt."""


def fstats(values):
    """min / median / max of a list of Fractions (lower median for even length)."""
    vs = sorted(values)
    if not vs:
        return {}
    return {"min": vs[0], "median": vs[(len(vs) - 1) // 2], "max": vs[-1],
            "min_float": float(vs[0]), "max_float": float(vs[-1])}

