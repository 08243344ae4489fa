import random
from math import log2

import pytest

from frobenius3.errors import InternalInconsistency
from frobenius3.lattice import (GramForm, LatticeBasis, cross, height, initial_basis, inner,
                                lagrange_reduce, verify_reduced)

from oracles import pairwise_coprime, quad, shortest_norm

EX2 = (4327, 6716, 9237)


def test_height():
    assert height(EX2, (-53, -47, 59)) == 0
    assert height(EX2, (0, 0, 0)) == 0
    assert height((5, 6, 7), (1, 1, 0)) == 11


def test_initial_basis_example2():
    e1, e2 = initial_basis(EX2)
    assert e1 == (6716, -4327, 0)
    assert e2 == (9237 * 2055, 9237 * -1324, -1)
    assert cross(e1, e2) == EX2


def test_initial_basis_small():
    e1, e2 = initial_basis((5, 6, 7))
    assert (e1, e2) == ((6, -5, 0), (-7, 7, -1))
    assert height((5, 6, 7), e1) == height((5, 6, 7), e2) == 0
    assert cross(e1, e2) == (5, 6, 7)


def test_initial_basis_needs_coprime_pair():
    with pytest.raises(ValueError):
        initial_basis((4, 6, 7))


def test_inner_against_matrix_product():
    q = GramForm(5, 6, 7)
    assert inner(q, (6, -5, 0), (6, -5, 0)) == quad((5, 6, 7), (6, -5, 0), (6, -5, 0)) == 3600
    assert inner(q, (6, -5, 0), (-7, 7, -1)) == quad((5, 6, 7), (6, -5, 0), (-7, 7, -1)) == -4620
    assert inner(q, (0, 0, 0), (3, 1, 4)) == 0
    assert q.matrix() == [[25, -30, 0], [-30, 36, 0], [0, 0, 147]]


def test_reduce_example2():
    q = GramForm(*EX2)
    (u, v), gram, loops = lagrange_reduce(initial_basis(EX2), q, check=True)
    assert {u, tuple(-c for c in u)} & {(-53, -47, 59)}
    assert {v, tuple(-c for c in v)} & {(-130, 59, 18)}
    assert loops == 6
    assert gram == q.gram(LatticeBasis(u, v))
    assert verify_reduced(LatticeBasis(u, v), q)


def test_initial_basis_not_reduced():
    q = GramForm(*EX2)
    b = initial_basis(EX2)
    g11, g12, _ = q.gram(b)
    assert 2 * abs(g12) > g11
    assert not verify_reduced(b, q)


def test_reduce_small_is_shortest():
    a = (5, 6, 7)
    q = GramForm(*a)
    (u, v), gram, _ = lagrange_reduce(initial_basis(a), q, check=True)
    assert u in {(-1, 2, -1), (1, -2, 1)}
    assert gram.g11 == 436
    # every height-zero vector in [-10, 10]^3
    norms = [quad(a, x, x) for x in
             ((i, j, k) for i in range(-10, 11) for j in range(-10, 11) for k in range(-10, 11))
             if height(a, x) == 0 and x != (0, 0, 0)]
    assert min(norms) == 436


def test_already_reduced_is_fixed_point():
    q = GramForm(*EX2)
    b = LatticeBasis((-53, -47, 59), (-130, 59, 18))
    out, gram, loops = lagrange_reduce(b, q, check=True)
    assert loops == 1
    assert out == b
    assert gram == q.gram(b)


def test_reduce_swaps_input_order():
    q = GramForm(*EX2)
    e1, e2 = initial_basis(EX2)
    out_a, _, _ = lagrange_reduce(LatticeBasis(e1, e2), q)
    out_b, _, _ = lagrange_reduce(LatticeBasis(e2, e1), q)
    assert out_a == out_b


def test_shifted_basis_not_reduced():
    q = GramForm(*EX2)
    u, v = (-53, -47, 59), (-130, 59, 18)
    shifted = LatticeBasis(u, tuple(vi + 5 * ui for ui, vi in zip(u, v)))
    assert not verify_reduced(shifted, q)


def test_degenerate_basis():
    with pytest.raises(ValueError):
        lagrange_reduce(LatticeBasis((6, -5, 0), (12, -10, 0)), GramForm(5, 6, 7))


def test_check_catches_off_plane_input():
    # an independent pair that does not lie in the kernel plane
    with pytest.raises(InternalInconsistency):
        lagrange_reduce(LatticeBasis((1, 0, 0), (0, 0, 1)), GramForm(5, 6, 7), check=True)


def _random_triples(rng, count, hi):
    out = []
    while len(out) < count:
        a = tuple(rng.randint(2, hi) for _ in range(3))
        if pairwise_coprime(a):
            out.append(a)
    return out


def test_reduced_vector_is_shortest_random():
    rng = random.Random(5)
    for a in _random_triples(rng, 150, 200):
        q = GramForm(*a)
        (u, v), gram, _ = lagrange_reduce(initial_basis(a), q, check=True)
        best, args = shortest_norm(a, gram.g11)
        assert best == gram.g11
        assert u in args


# Frozen after calibration on seeds 0..3: mean slope about 0.2 loops per bit.
LOOP_C1, LOOP_C2 = 4, 0.4


def test_loop_count_regression_bound():
    rng = random.Random(2)
    for hi in (10**3, 10**6, 10**9, 10**12):
        for a in _random_triples(rng, 200, hi):
            _, _, loops = lagrange_reduce(initial_basis(a), GramForm(*a))
            assert loops <= LOOP_C1 + LOOP_C2 * log2(max(a))
