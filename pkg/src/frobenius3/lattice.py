"""The rank-2 lattice of integer points of height zero, and its reduction.

Norms are measured with the integer quadratic form

    <x, y> = (a1*x1 - a2*x2) * (a1*y1 - a2*y2) + 3*a3**2 * x3*y3

under which the three coordinate planes cut the kernel plane at 60 degrees.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalInconsistency
from .intkernel import extended_gcd

Vector = tuple[int, int, int]


class LatticeBasis(NamedTuple):
    u: Vector
    v: Vector


class GramMatrix(NamedTuple):
    g11: int
    g12: int
    g22: int

    @property
    def det(self) -> int:
        return self.g11 * self.g22 - self.g12 * self.g12


@dataclass(frozen=True)
class GramForm:
    """Integer form ``Q = [[a1^2, -a1 a2, 0], [-a1 a2, a2^2, 0], [0, 0, 3 a3^2]]``."""

    a1: int
    a2: int
    a3: int

    def matrix(self) -> list[list[int]]:
        a1, a2, a3 = self.a1, self.a2, self.a3
        return [[a1 * a1, -a1 * a2, 0], [-a1 * a2, a2 * a2, 0], [0, 0, 3 * a3 * a3]]

    def inner(self, x: Vector, y: Vector) -> int:
        a1, a2 = self.a1, self.a2
        return ((a1 * x[0] - a2 * x[1]) * (a1 * y[0] - a2 * y[1])
                + 3 * self.a3 * self.a3 * x[2] * y[2])

    def norm2(self, x: Vector) -> int:
        return self.inner(x, x)

    def gram(self, basis: LatticeBasis) -> GramMatrix:
        u, v = basis
        return GramMatrix(self.inner(u, u), self.inner(u, v), self.inner(v, v))


def inner(q: GramForm, x: Vector, y: Vector) -> int:
    return q.inner(x, y)


def height(a, x: Vector) -> int:
    """Value of the linear functional ``sum(a_i * x_i)``."""
    return a[0] * x[0] + a[1] * x[1] + a[2] * x[2]


def cross(x: Vector, y: Vector) -> Vector:
    return (x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0])


def sub(x: Vector, y: Vector, k: int = 1) -> Vector:
    """``x - k*y``."""
    return (x[0] - k * y[0], x[1] - k * y[1], x[2] - k * y[2])


def neg(x: Vector) -> Vector:
    return (-x[0], -x[1], -x[2])


def initial_basis(a) -> LatticeBasis:
    """Basis ``e1 = (a2, -a1, 0)``, ``e2 = (a3*m1, a3*m2, -1)`` with ``m1*a1 + m2*a2 = 1``.

    Raises ValueError unless ``gcd(a1, a2) == 1``.
    """
    a1, a2, a3 = a
    g, m1, m2 = extended_gcd(a1, a2)
    if g != 1:
        raise ValueError(f"gcd(a1, a2) = {g}; reduce common factors first")
    e1 = (a2, -a1, 0)
    e2 = (a3 * m1, a3 * m2, -1)
    # e1 x e2 = (a1, a2, a3); this certifies that the pair spans all of L.
    if cross(e1, e2) != (a1, a2, a3) or height(a, e1) or height(a, e2):
        raise InternalInconsistency(f"initial basis check failed for {a}")
    return LatticeBasis(e1, e2)


def _nearest(num: int, den: int) -> int:
    # round(num/den) with ties toward +inf; den > 0
    return (2 * num + den) // (2 * den)


def lagrange_reduce(basis: LatticeBasis, q: GramForm, check: bool = False):
    """Lagrange (Gauss) reduction with incremental Gram bookkeeping.

    Returns ``(reduced_basis, gram, loops)``. The Gram entries are updated
    from the previous entries alone, never recomputed; with ``check=True``
    each loop is cross-checked against a full recomputation, the invariant
    determinant and height zero.
    """
    u, v = basis
    g11, g12, g22 = q.gram(basis)
    if g11 * g22 - g12 * g12 <= 0:
        raise ValueError("degenerate basis: Gram determinant is not positive")
    if g11 > g22:
        u, v = v, u
        g11, g22 = g22, g11
    det = g11 * g22 - g12 * g12
    a = (q.a1, q.a2, q.a3)

    loops = 0
    while True:
        loops += 1
        x = _nearest(g12, g11)
        y = g12 - x * g11
        r = sub(v, u, x)
        v, u = u, r
        # |v - x u|^2 = g22 - x*(g12 + y), using the pre-update g12
        g11, g22 = g22 - x * (y + g12), g11
        g12 = y
        if check:
            if (g11, g12, g22) != q.gram(LatticeBasis(u, v)):
                raise InternalInconsistency(f"Gram bookkeeping drifted at loop {loops}")
            if g11 * g22 - g12 * g12 != det:
                raise InternalInconsistency(f"determinant changed at loop {loops}")
            if height(a, u) or height(a, v):
                raise InternalInconsistency(f"left the kernel plane at loop {loops}")
        if g11 >= g22:
            break
    return LatticeBasis(v, u), GramMatrix(g22, g12, g11), loops


def verify_reduced(basis: LatticeBasis, q: GramForm) -> bool:
    """Size-reduction test ``0 < g11 <= g22`` and ``2|g12| <= g11``."""
    g11, g12, g22 = q.gram(basis)
    return 0 < g11 <= g22 and 2 * abs(g12) <= g11 and g11 * g22 > g12 * g12
