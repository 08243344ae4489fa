"""Top-level dispatch: trivial cases, two generators, common factors, the lattice path."""

from dataclasses import dataclass
from functools import reduce
import logging

from .closed_forms import frobenius3, sylvester
from .errors import FrobeniusError, InfiniteGapSet, OracleLimitExceeded
from .geometry import DiagnosticsBundle, diagnostics as _diagnostics
from .intkernel import gcd, is_representable_pair
from .lattice import GramForm, initial_basis, lagrange_reduce
from .solution_basis import FrobeniusData, SolutionBasis, extract_data, solution_basis
from . import oracle

log = logging.getLogger(__name__)

SYLVESTER = "sylvester"
LATTICE3 = "lattice3"
COMMON_FACTOR = "reduced-common-factor"
ORACLE_FALLBACK = "oracle-fallback"
ORACLE = "oracle"

# inputs whose generator product is below this may be handed to the oracle
FALLBACK_PRODUCT_LIMIT = 10**12


@dataclass
class Solution:
    a: tuple[int, ...]
    method: str
    g: int
    N: int
    data: FrobeniusData | None = None
    basis: SolutionBasis | None = None
    loops: int | None = None
    diagnostics: DiagnosticsBundle | None = None


def validate_generators(a) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if not 1 <= len(a) <= 3:
        raise ValueError(f"expected 2 or 3 generators, got {len(a)}")
    if any(x < 1 for x in a):
        raise ValueError(f"generators must be positive integers, got {a}")
    return a


def detect_superfluous(a) -> int | None:
    """Index of a generator representable by the other two (``l_i == 1``), if any."""
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        if is_representable_pair(a[j], a[k], a[i]):
            return i
    return None


def lattice_data(a, check: bool = False):
    """Run the lattice pipeline on a pairwise coprime triple with all ``l_i >= 2``."""
    q = GramForm(*a)
    reduced, _, loops = lagrange_reduce(initial_basis(a), q, check=check)
    sb = solution_basis(reduced.u, reduced.v)
    return extract_data(sb, a), sb, loops


def _pairwise_factor(a):
    for i in range(3):
        for j in range(i + 1, 3):
            d = gcd(a[i], a[j])
            if d > 1:
                return i, j, d
    return None


def _oracle_solution(a, method):
    gs = oracle.brute_gaps(a)
    return Solution(a, method, gs.g, gs.N)


def solve(a, diagnostics: bool = False, check: bool = False, fallback: bool = True) -> Solution:
    """Frobenius number ``g`` and gap count ``N`` of two or three generators.

    ``g = -1`` and ``N = 0`` when some generator is 1. Raises InfiniteGapSet
    when the generators share a factor. ``diagnostics`` attaches the
    geometric cross-check bundle on the lattice path; ``check`` turns on
    per-loop verification inside the reduction.
    """
    orig = validate_generators(a)
    if 1 in orig:
        return Solution(orig, SYLVESTER, -1, 0)
    vals = tuple(dict.fromkeys(orig))
    d = reduce(gcd, vals)
    if d != 1:
        raise InfiniteGapSet(d)
    if len(vals) == 2:
        g, n = sylvester(*vals)
        return Solution(orig, SYLVESTER, g, n)

    factor = _pairwise_factor(vals)
    if factor is not None:
        i, j, d = factor
        k = 3 - i - j
        reduced = list(vals)
        reduced[i] //= d
        reduced[j] //= d
        inner = solve(reduced, fallback=fallback)
        ak = vals[k]
        g = d * inner.g + (d - 1) * ak
        n = d * inner.N + (d - 1) * (ak - 1) // 2
        return Solution(orig, COMMON_FACTOR, g, n)

    drop = detect_superfluous(vals)
    if drop is not None:
        rest = [x for m, x in enumerate(vals) if m != drop]
        g, n = sylvester(*rest)
        return Solution(orig, SYLVESTER, g, n)

    try:
        data, sb, loops = lattice_data(vals, check=check)
        g, n = frobenius3(vals, data)
        diag = _diagnostics(vals, data) if diagnostics else None
    except FrobeniusError as exc:
        if not fallback or vals[0] * vals[1] * vals[2] > FALLBACK_PRODUCT_LIMIT:
            raise
        log.warning("lattice path failed for %s (%s); using oracle", vals, exc)
        try:
            return _oracle_solution(orig, ORACLE_FALLBACK)
        except OracleLimitExceeded:
            raise exc
    return Solution(orig, LATTICE3, g, n, data=data, basis=sb, loops=loops, diagnostics=diag)


def solve_oracle(a) -> Solution:
    """Brute-force answer, bypassing every closed form."""
    a = validate_generators(a)
    return _oracle_solution(a, ORACLE)
