"""Closed-form Frobenius number and genus for two and three generators."""

from .errors import InternalInconsistency
from .intkernel import gcd


def sylvester(a1: int, a2: int) -> tuple[int, int]:
    """``g = a1 a2 - a1 - a2`` and ``N = (a1-1)(a2-1)/2`` for coprime ``a1, a2 > 1``."""
    if a1 <= 1 or a2 <= 1:
        raise ValueError("sylvester needs both generators > 1")
    if gcd(a1, a2) != 1:
        raise ValueError(f"generators {a1}, {a2} are not coprime")
    return a1 * a2 - a1 - a2, (a1 - 1) * (a2 - 1) // 2


def frobenius3(a, data) -> tuple[int, int]:
    """``g`` and ``N`` from the data ``l_i``, ``x_ij`` of a pairwise coprime triple."""
    a1, a2, a3 = a
    l1, l2, l3 = data.l
    lll = l1 * l2 * l3
    g = lll + max(data.x12 * data.x23 * data.x31, data.x21 * data.x32 * data.x13) - (a1 + a2 + a3)
    twice_n = (l1 - 1) * a1 + (l2 - 1) * a2 + (l3 - 1) * a3 - lll + 1
    if twice_n % 2:
        raise InternalInconsistency(f"odd genus numerator {twice_n} for {a}")
    return g, twice_n // 2
