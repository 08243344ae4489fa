"""Geometric cross-checks: corner heights, L-shape areas, volume, boundary counts.

Everything is integral. Halves and quarters are carried by scaling, so
``volW_times2`` is twice the volume of the pocket region and the
point-count identity is evaluated after multiplying through by 4.
"""

from dataclasses import asdict, dataclass

from .closed_forms import frobenius3
from .errors import InternalInconsistency
from .intkernel import gcd


@dataclass(frozen=True)
class DiagnosticsBundle:
    fq1: int
    fq2: int
    areas: tuple[int, int, int]
    volW_times2: int
    z1: int
    z2: int
    z3: int
    z0: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["areas"] = list(self.areas)
        return d


def corner_heights(a, data) -> tuple[int, int]:
    """Heights of the two protruding corners; ``max - sum(a)`` is the Frobenius number."""
    a1, a2, a3 = a
    base = data.l3 * a3
    fq1 = base + data.x21 * a1
    fq2 = base + data.x12 * a2
    g, _ = frobenius3(a, data)
    if max(fq1, fq2) - (a1 + a2 + a3) != g:
        raise InternalInconsistency(f"corner heights {fq1}, {fq2} disagree with g={g}")
    return fq1, fq2


def area_identities(a, data) -> tuple[int, int, int]:
    l1, l2, l3 = data.l
    areas = (
        l2 * l3 - data.x23 * data.x32,
        l3 * l1 - data.x31 * data.x13,
        l1 * l2 - data.x12 * data.x21,
    )
    if areas != tuple(a):
        raise InternalInconsistency(f"L-shape areas {areas} != generators {tuple(a)}")
    return areas


def volume_W(a, data) -> int:
    """Twice the volume of the pocket region: ``sum(l_i a_i) - l1 l2 l3``."""
    l1, l2, l3 = data.l
    v2 = l1 * a[0] + l2 * a[1] + l3 * a[2] - l1 * l2 * l3
    if v2 < 0:
        raise InternalInconsistency(f"negative volume {v2}/2 for {a}")
    return v2


def boundary_counts(a, data) -> tuple[int, int, int]:
    """Relative-interior lattice points on L-shape faces, reentrant edges, protruding edges."""
    s = sum(data.l)
    z1 = sum(a) - 2 * s + 3
    z2 = s - 3
    z3 = s - 6
    if min(z1, z2, z3) < 0:
        raise InternalInconsistency(f"negative boundary count ({z1}, {z2}, {z3}) for {a}")
    return z1, z2, z3


def pocket_point_count(a, data, n=None) -> int:
    """Interior lattice points of the pocket region, recovered from the volume.

    ``4*z0 = 4*vol - 2*z1 - 3*z2 - z3 - 7``. Compared against ``n`` when given.
    """
    z1, z2, z3 = boundary_counts(a, data)
    four_z0 = 2 * volume_W(a, data) - 2 * z1 - 3 * z2 - z3 - 7
    if four_z0 % 4 or four_z0 < 0:
        raise InternalInconsistency(f"non-integral or negative z0 = {four_z0}/4 for {a}")
    z0 = four_z0 // 4
    if n is not None and z0 != n:
        raise InternalInconsistency(f"z0 = {z0} but N = {n} for {a}")
    return z0


def diagnostics(a, data) -> DiagnosticsBundle:
    fq1, fq2 = corner_heights(a, data)
    _, n = frobenius3(a, data)
    z1, z2, z3 = boundary_counts(a, data)
    return DiagnosticsBundle(
        fq1=fq1, fq2=fq2,
        areas=area_identities(a, data),
        volW_times2=volume_W(a, data),
        z1=z1, z2=z2, z3=z3,
        z0=pocket_point_count(a, data, n),
    )


def shoelace2(poly) -> int:
    """Twice the signed area of a closed polygon."""
    s = 0
    for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
        s += x0 * y1 - x1 * y0
    return s


def boundary_points(poly) -> int:
    return sum(gcd(x1 - x0, y1 - y0) for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]))


def lshape_polygon(a, data, i: int) -> list[tuple[int, int]]:
    """Counter-clockwise vertices of the L-shape in the plane ``x_i = 0``.

    Coordinates are ``(x_j, x_k)`` with ``j, k`` the cyclic successors of
    ``i`` (1-based). The shape is the ``l_j`` by ``l_k`` box with the
    ``x_kj`` by ``x_jk`` corner removed.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"plane index must be 1, 2 or 3, got {i}")
    j = i % 3 + 1
    k = j % 3 + 1
    lj, lk = data.l[j - 1], data.l[k - 1]
    xij, xik = data.x(i, j), data.x(i, k)
    poly = [(0, 0), (lj, 0), (lj, xik), (xij, xik), (xij, lk), (0, lk)]
    area2 = shoelace2(poly)
    if area2 != 2 * a[i - 1]:
        raise InternalInconsistency(f"L-shape {i} has area {area2}/2, expected {a[i - 1]}")
    return poly


def sector_directions(a) -> tuple[tuple[int, int, int], ...]:
    """Directions of the traces of the coordinate planes in the kernel plane."""
    a1, a2, a3 = a
    return (0, -a3, a2), (a3, 0, -a1), (-a2, a1, 0)
