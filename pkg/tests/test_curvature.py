"""Curvature values, sign censuses, and the annulus identity."""

import random
from fractions import Fraction

import pytest

import groupcurv as gc
from conftest import naive_norms, parity_kernel, slow_kappa

# sign counts (positive, zero, negative) per sphere in the Heisenberg group
HEIS_CENSUS = {
    1: (1, 0, 0, 4),
    2: (2, 0, 0, 12),
    3: (3, 0, 8, 28),
    4: (4, 0, 22, 60),
    5: (5, 16, 24, 124),
    6: (6, 24, 82, 188),
    7: (7, 56, 128, 292),
    8: (8, 80, 248, 396),
}


def test_kappa_free_generator(free2, free2_table):
    a = free2.word("a")
    assert gc.kappa(free2_table, a) == Fraction(-1)
    assert gc.kappa_bar(free2_table, a) == Fraction(-1)
    cubed = free2.word("aaa")
    assert gc.kappa(free2_table, cubed) == Fraction(-1)
    assert gc.kappa_bar(free2_table, cubed) == Fraction(-1, 3)


def test_kappa_central_element(heis, heis_table):
    z = heis.group.element((0, 0, 1))
    assert gc.kappa(heis_table, z) == 0


def test_kappa_at_identity(free2_table):
    # kappa is zero at the identity; the normalized form is undefined there
    assert gc.kappa(free2_table, ()) == 0
    with pytest.raises(gc.PreconditionError):
        gc.kappa_bar(free2_table, ())


def test_kappa_needs_headroom(free2, free2_table):
    # elements at the rim have conjugates outside the table
    rim = free2.word("ab" * 3)
    with pytest.raises(gc.OutOfBallError):
        gc.kappa(free2_table, rim)


def test_kappa_matches_direct_average(free2, heis):
    for spec, radius in ((free2, 3), (heis, 4)):
        table = gc.enumerate_ball(spec, radius + 2)
        norms = naive_norms(spec, radius + 2)
        rng = random.Random(1234)
        pool = [x for x, n in table.norms.items() if 1 <= n <= radius]
        for x in rng.sample(pool, 40):
            k = gc.kappa(table, x)
            assert k == slow_kappa(spec, norms, x)
            assert (k * spec.gens.size).denominator == 1


def test_delta(free2, free2_table):
    a = free2.word("a")
    assert gc.delta(free2_table, free2.word("a"), a) == 0
    assert gc.delta(free2_table, free2.word("b"), a) == -2


def test_census_flat_zn2(zn2):
    c = gc.census(zn2, 8)
    assert c.all_flat
    assert [r.total for r in c.rows] == [4 * n for n in range(1, 9)]
    assert all(r.min_kappa == 0 and r.max_kappa == 0 for r in c.rows)


def test_census_heis(heis):
    c = gc.census(heis, 8)
    assert not c.all_flat
    for n, pos, zero, neg in HEIS_CENSUS.values():
        row = c.row(n)
        assert (row.positive, row.zero, row.negative) == (pos, zero, neg)
    with pytest.raises(gc.PreconditionError):
        c.row(9)


def test_census_free_group_strictly_negative(free2):
    c = gc.census(free2, 7)
    for row in c.rows:
        assert row.positive == 0 and row.zero == 0
        assert row.negative == 4 * 3 ** (row.sphere - 1)
        assert row.max_kappa < 0


def test_census_witnesses(heis):
    c = gc.census(heis, 5, witnesses=True)
    for row in c.rows:
        assert row.witness_min and row.witness_max
    plain = gc.census(heis, 5)
    assert all(r.witness_min is None for r in plain.rows)


def test_census_fbd_z3(fbd_z3):
    c = gc.census(fbd_z3, 5)
    first = c.row(1)
    assert (first.positive, first.zero, first.negative) == (0, 2, 6)
    assert first.min_kappa == Fraction(-3, 4)
    for n in range(2, 6):
        row = c.row(n)
        assert (row.positive, row.zero, row.negative) == (0, 6, 0)


def test_census_z2xdinf(z2xdinf):
    c = gc.census(z2xdinf, 6)
    first = c.row(1)
    assert (first.positive, first.zero, first.negative) == (0, 1, 4)
    assert first.min_kappa == Fraction(-4, 5)
    for n in range(2, 7):
        assert c.row(n).zero == c.row(n).total == 4


def test_census_restricted(heis):
    ker = parity_kernel(heis)
    c = gc.census(heis, 6, filter=ker)
    assert c.restricted
    assert [r.total for r in c.rows] == [0, 12, 0, 82, 0, 294]


def test_census_radius_validated(heis):
    with pytest.raises(gc.PreconditionError):
        gc.census(heis, 0)


# --- annulus identity ---------------------------------------------------------

def test_annulus_heis(heis, heis_table):
    rep = gc.annulus_sum(heis_table, None, 3, 8)
    assert rep.identity_holds
    assert rep.lhs == rep.rhs == Fraction(-720)
    assert rep.annulus_size == sum(len(heis_table.sphere(n)) for n in range(4, 9))
    assert rep.y1_size == 88
    assert rep.y2_size == 1528
    assert rep.upper_bound == 2 * (82 + 164)
    assert rep.lhs <= rep.upper_bound
    assert rep.inner_sphere_sizes == (82, 164)
    assert not rep.restricted


def test_annulus_free(free2):
    table = gc.enumerate_ball(free2, 8)
    rep = gc.annulus_sum(table, None, 1, 6)
    assert rep.identity_holds
    assert rep.lhs == rep.rhs == Fraction(-1452)
    assert rep.y1_size == 8
    assert rep.y2_size == 2912
    assert rep.upper_bound == 2 * (12 + 36)


def test_annulus_restricted(heis, heis_table):
    restricted = gc.restrict_to_kernel(heis_table, parity_kernel(heis))
    rep = gc.annulus_sum(restricted, restricted.kernel, 3, 8)
    assert rep.identity_holds
    assert rep.lhs == rep.rhs == Fraction(-440)
    assert rep.annulus_size == 1100
    assert rep.y1_size == 24
    assert rep.y2_size == 904
    assert rep.restricted


def test_annulus_preconditions(heis, heis_table):
    with pytest.raises(gc.PreconditionError):
        gc.annulus_sum(heis_table, None, -1, 6)
    with pytest.raises(gc.PreconditionError):
        gc.annulus_sum(heis_table, None, 3, 7)  # needs r1 < r2 - 4
    small = gc.enumerate_ball(heis, 6)
    with pytest.raises(gc.PreconditionError):
        gc.annulus_sum(small, None, 1, 6)  # table must reach r2 + 2


def test_pair_cancellation(heis, heis_table, free2):
    assert gc.pair_cancellation_violations(heis_table, None, 3, 8) == []
    table = gc.enumerate_ball(free2, 8)
    assert gc.pair_cancellation_violations(table, None, 1, 6) == []
