"""From a reduced lattice basis to the three basic vectors and the data l_i, x_ij."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import NamedTuple

from .errors import DegenerateVector, InternalInconsistency, InvalidSolutionBasis
from .lattice import Vector, height, neg, sub


class SolutionBasis(NamedTuple):
    """``f_i`` carries ``l_i`` in slot ``i`` and ``-x_ij`` in the other two."""

    f1: Vector
    f2: Vector
    f3: Vector


@dataclass(frozen=True)
class FrobeniusData:
    l1: int
    l2: int
    l3: int
    x12: int
    x13: int
    x21: int
    x23: int
    x31: int
    x32: int

    @property
    def l(self) -> tuple[int, int, int]:
        return (self.l1, self.l2, self.l3)

    def x(self, i: int, j: int) -> int:
        """``x_ij`` with 1-based indices."""
        return getattr(self, f"x{i}{j}")

    def x_dict(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in ("x12", "x13", "x21", "x23", "x31", "x32")}

    def basis(self) -> SolutionBasis:
        return SolutionBasis(
            (self.l1, -self.x12, -self.x13),
            (-self.x21, self.l2, -self.x23),
            (-self.x31, -self.x32, self.l3),
        )


def positive_index(w: Vector) -> int:
    """0-based index of the single positive coordinate of a sign-normalized vector."""
    return next(i for i, c in enumerate(w) if c > 0)


def _pattern_ok(w):
    return sum(c > 0 for c in w) == 1 and sum(c < 0 for c in w) == 2


def normalize_sign(w: Vector) -> Vector:
    """Return ``w`` or ``-w``, whichever has one positive and two negative entries."""
    if _pattern_ok(w):
        return tuple(w)
    if _pattern_ok(neg(w)):
        return neg(w)
    raise DegenerateVector(f"{w} has no one-positive/two-negative orientation")


def solution_basis(u: Vector, v: Vector) -> SolutionBasis:
    """Basic vectors ``u``, ``v - ceil(lam) u``, ``v - floor(lam) u`` for a reduced basis.

    ``lam = v_i / u_i`` where ``i`` is the positive slot of the normalized
    ``u``; the rounding is exact. The results are relabelled by positive slot.
    """
    u = normalize_sign(u)
    i = positive_index(u)
    lam = Fraction(v[i], u[i])
    if lam.denominator == 1:
        raise DegenerateVector(f"lambda = {lam} is an integer; v_- and v_+ coincide")
    candidates = [u, normalize_sign(sub(v, u, ceil(lam))), normalize_sign(sub(v, u, floor(lam)))]
    slots = {}
    for w in candidates:
        slots.setdefault(positive_index(w), w)
    if len(slots) != 3:
        raise InvalidSolutionBasis(f"basic vectors {candidates} share a sector")
    return SolutionBasis(slots[0], slots[1], slots[2])


def check_identities(a, d: FrobeniusData) -> None:
    """Raise InternalInconsistency unless all identities linking ``a`` and ``d`` hold."""
    a1, a2, a3 = a
    l1, l2, l3 = d.l
    problems = []
    if min(d.l) < 2:
        problems.append("some l_i < 2")
    if min(d.x_dict().values()) < 1:
        problems.append("some x_ij < 1")
    # minimal representations
    if l1 * a1 != d.x12 * a2 + d.x13 * a3:
        problems.append("l1*a1 representation")
    if l2 * a2 != d.x21 * a1 + d.x23 * a3:
        problems.append("l2*a2 representation")
    if l3 * a3 != d.x31 * a1 + d.x32 * a2:
        problems.append("l3*a3 representation")
    # column sums
    if (l1, l2, l3) != (d.x21 + d.x31, d.x12 + d.x32, d.x13 + d.x23):
        problems.append("l_i != x_ji + x_ki")
    # L-shape areas
    if a3 != l1 * l2 - d.x12 * d.x21 or a1 != l2 * l3 - d.x23 * d.x32 or a2 != l3 * l1 - d.x31 * d.x13:
        problems.append("area identity a_k = l_i l_j - x_ij x_ji")
    if a1 != d.x12 * l3 + d.x13 * d.x32 or a2 != d.x21 * l3 + d.x23 * d.x31:
        problems.append("area identity a_1 = x12 l3 + x13 x32 / a_2 = x21 l3 + x23 x31")
    if problems:
        raise InternalInconsistency(f"identity violations for {a}: {', '.join(problems)}")


def extract_data(sb: SolutionBasis, a) -> FrobeniusData:
    """Read ``l_i`` and ``x_ij`` off the basic vectors and validate them against ``a``."""
    f1, f2, f3 = sb
    for f in sb:
        if height(a, f):
            raise InternalInconsistency(f"basic vector {f} has nonzero height")
    if sub(sub(f1, f2, -1), f3, -1) != (0, 0, 0):
        raise InternalInconsistency(f"basic vectors {sb} do not sum to zero")
    d = FrobeniusData(
        l1=f1[0], x12=-f1[1], x13=-f1[2],
        x21=-f2[0], l2=f2[1], x23=-f2[2],
        x31=-f3[0], x32=-f3[1], l3=f3[2],
    )
    check_identities(a, d)
    return d
