import random
from math import gcd

import pytest

from frobenius3.errors import InfiniteGapSet, OracleLimitExceeded
from frobenius3.oracle import brute_gaps, brute_lx, membership_table

from oracles import dp_members


def test_membership_examples():
    t = membership_table((3, 5), 10)
    assert [z for z in range(11) if t[z]] == [0, 3, 5, 6, 8, 9, 10]
    t = membership_table((5, 6, 7), 15)
    assert [z for z in range(16) if not t[z]] == [1, 2, 3, 4, 8, 9]
    assert membership_table((7,), 0)[0]


def test_membership_matches_plain_dp():
    rng = random.Random(3)
    for _ in range(100):
        a = [rng.randint(1, 60) for _ in range(rng.randint(1, 3))]
        t = membership_table(a, 500)
        ref = dp_members(a, 500)
        assert [t[z] for z in range(501)] == ref


def test_membership_limit():
    with pytest.raises(OracleLimitExceeded):
        membership_table((3, 5), 10, limit=5)


def test_brute_gaps_examples():
    gs = brute_gaps((3, 4, 5))
    assert (gs.gaps, gs.g, gs.N) == ([1, 2], 2, 2)
    assert brute_gaps((2, 3)).gaps == [1]
    assert brute_gaps((1, 9)).gaps == []
    with pytest.raises(InfiniteGapSet):
        brute_gaps((4, 6, 10))


def test_brute_gaps_example2():
    gs = brute_gaps((4327, 6716, 9237))
    assert (gs.g, gs.N) == (920947, 493045)


def test_frontier_certificate():
    rng = random.Random(8)
    for _ in range(100):
        a = [rng.randint(2, 80) for _ in range(3)]
        if gcd(*a[:2], a[2]) != 1:
            continue
        gs = brute_gaps(a)
        ref = dp_members(a, gs.frontier + 3 * max(a))
        assert gs.gaps == [z for z, ok in enumerate(ref) if not ok]
        assert gs.frontier - gs.g >= min(a)


def test_brute_lx_examples():
    d, l, _ = brute_lx((5, 6, 7))
    assert (d.l1, d.x12, d.x13, d.l2, d.x21, d.x23, d.l3, d.x31, d.x32) == (4, 1, 2, 2, 1, 1, 3, 3, 1)
    d, _, _ = brute_lx((9, 10, 11))
    assert d.l == (6, 2, 5) and d.x13 == 4 and d.x31 == 5


def test_brute_lx_superfluous_is_reported():
    d, l, reps = brute_lx((3, 5, 15))
    assert d is None
    assert l[2] == 1
    assert len(reps[2]) > 1
