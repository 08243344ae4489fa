"""Brute-force ground truth for membership, gap sets and the minimal representations.

Nothing here touches the lattice code. Tables are bit-packed into a single
Python int: bit ``z`` is set iff ``z`` is representable.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import InfiniteGapSet, OracleLimitExceeded
from .solution_basis import FrobeniusData

TABLE_LIMIT = 10**8


class MembershipTable:
    """Bit table over ``0..bound``; ``table[z]`` is True iff ``z`` is representable."""

    def __init__(self, bits: int, bound: int):
        self.bits = bits
        self.bound = bound

    def __len__(self):
        return self.bound + 1

    def __getitem__(self, z: int) -> bool:
        if not 0 <= z <= self.bound:
            raise IndexError(z)
        return bool(self.bits >> z & 1)

    def gaps_bits(self) -> int:
        return ~self.bits & ((1 << (self.bound + 1)) - 1)


def membership_table(a, bound: int, limit: int = TABLE_LIMIT) -> MembershipTable:
    """Coin-change DP ``t[0] = 1; t[z] |= t[z - a_i]`` over ``0..bound``.

    Each generator is folded in with doubling shifts, which has the same
    effect as the ascending scan ``t[z] |= t[z - a_i]`` for that generator.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound + 1 > limit:
        raise OracleLimitExceeded(f"table of {bound + 1} entries exceeds limit {limit}")
    mask = (1 << (bound + 1)) - 1
    bits = 1
    for ai in a:
        if ai < 1:
            raise ValueError("generators must be positive")
        step = ai
        while step <= bound:
            bits |= (bits << step) & mask
            step <<= 1
    return MembershipTable(bits, bound)


@dataclass(frozen=True)
class GapSet:
    gaps: list[int]
    frontier: int

    @property
    def g(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def N(self) -> int:
        return len(self.gaps)


def _bit_positions(x):
    digits = format(x, "b")[::-1] if x else ""
    return [i for i, c in enumerate(digits) if c == "1"]


def brute_gaps(a, limit: int = TABLE_LIMIT) -> GapSet:
    """Enumerate every non-representable natural.

    The table grows until the largest gap is followed by ``min(a)``
    representable integers, which certifies that everything beyond is
    representable. The scan never exceeds the product of the generators.
    """
    a = tuple(a)
    d = reduce(gcd, a)
    if d != 1:
        raise InfiniteGapSet(d)
    lo = min(a)
    cap = 1
    for ai in a:
        cap *= ai
    bound = min(cap, max(4 * max(a), 64))
    while True:
        table = membership_table(a, bound, limit)
        holes = table.gaps_bits()
        top = holes.bit_length() - 1
        if bound - top >= lo or bound >= cap:
            return GapSet(_bit_positions(holes), bound)
        bound = min(cap, 2 * bound)


def _pair_representations(target, p, q):
    """All ``(s, t)`` with ``s*p + t*q == target``, ``s, t >= 0``."""
    return [(s, (target - s * p) // q) for s in range(target // p + 1) if (target - s * p) % q == 0]


def brute_lx(a) -> tuple[FrobeniusData | None, list[int], dict]:
    """Minimal multiples ``l_i`` and their representations by exhaustive search.

    Returns ``(data, l, reps)`` where ``reps[i]`` lists every
    representation of ``l_i * a_i`` by the other two generators.
    ``data`` is None when some ``l_i == 1`` (representations of ``a_i``
    itself need not be unique there) and raises if uniqueness fails otherwise.
    """
    a = tuple(a)
    ls = []
    reps = {}
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        l = 1
        while True:
            found = _pair_representations(l * a[i], a[j], a[k])
            if found:
                break
            l += 1
        ls.append(l)
        reps[i] = found
    if min(ls) < 2:
        return None, ls, reps
    for i in range(3):
        if len(reps[i]) != 1:
            raise AssertionError(f"minimal representation of l_{i + 1} a_{i + 1} is not unique: {reps[i]}")
    (x12, x13), (x21, x23), (x31, x32) = reps[0][0], reps[1][0], reps[2][0]
    data = FrobeniusData(ls[0], ls[1], ls[2], x12, x13, x21, x23, x31, x32)
    return data, ls, reps
