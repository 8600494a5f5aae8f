from __future__ import annotations

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.local_model.valuation import MonomialValuation


def colength(v: MonomialValuation, p: int) -> int:
    """#{(i, j) in N**2 : a*i + b*j < p}, the colength of the valuation ideal."""
    if p < 0:
        raise InvalidInputError(f"p must be >= 0, got {p}")
    total = 0
    j = 0
    while v.b * j < p:
        total += (p - v.b * j - 1) // v.a + 1
        j += 1
    return total
