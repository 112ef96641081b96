"""Ball enumeration, norms, budgets, kernel restriction."""

import random

import pytest

import groupcurv as gc
from conftest import Z2_QUOTIENT, naive_norms, parity_kernel, s3_table

HEIS_SPHERES = [1, 4, 12, 36, 82, 164, 294, 476, 724, 1052, 1464, 1972, 2590]
SL2_SPHERES = [1, 4, 12, 30, 68, 148, 293]


def sphere_sizes(table):
    return [len(table.sphere(n)) for n in range(table.radius + 1)]


def test_sphere_sizes_zn2(zn2):
    t = gc.enumerate_ball(zn2, 6)
    assert sphere_sizes(t) == [1, 4, 8, 12, 16, 20, 24]


def test_sphere_sizes_free2(free2_table):
    assert sphere_sizes(free2_table) == [1, 4, 12, 36, 108, 324, 972]


def test_sphere_sizes_heis(heis_table):
    assert sphere_sizes(heis_table)[:11] == HEIS_SPHERES[:11]


def test_sphere_sizes_dinf(dinf):
    t = gc.enumerate_ball(dinf, 9)
    assert sphere_sizes(t) == [1] + [2] * 9


def test_sphere_sizes_z2xdinf(z2xdinf):
    t = gc.enumerate_ball(z2xdinf, 8)
    assert sphere_sizes(t) == [1, 5, 4, 4, 4, 4, 4, 4, 4]


def test_sphere_sizes_fbd_z3(fbd_z3):
    t = gc.enumerate_ball(fbd_z3, 6)
    assert sphere_sizes(t) == [1, 8, 6, 6, 6, 6, 6]


def test_sphere_sizes_sl2_unipotents():
    g = gc.IntegerMatrixGroup(2, [((1, 1), (0, 1)), ((1, 0), (1, 1))])
    spec = gc.GroupSpec(g)
    t = gc.enumerate_ball(spec, 6)
    assert sphere_sizes(t) == SL2_SPHERES


def test_finite_group_pads_empty_spheres(s3_spec):
    t = gc.enumerate_ball(s3_spec, 4)
    assert sphere_sizes(t) == [1, 5, 0, 0, 0]
    assert t.ball_size(4) == 6


def test_ball_size_is_cumulative(free2_table):
    total = 0
    for n in range(free2_table.radius + 1):
        total += len(free2_table.sphere(n))
        assert free2_table.ball_size(n) == total
    assert free2_table.size == total


def test_sphere_out_of_range(free2_table):
    with pytest.raises(gc.PreconditionError):
        free2_table.sphere(free2_table.radius + 1)
    with pytest.raises(gc.PreconditionError):
        free2_table.ball_size(-1)


def test_spheres_are_sorted(heis_table):
    for n in range(5):
        s = heis_table.sphere(n)
        assert list(s) == sorted(s)


def test_norms_match_naive_bfs(free2, dinf, z2xdinf):
    for spec, radius in ((free2, 4), (dinf, 6), (z2xdinf, 5)):
        t = gc.enumerate_ball(spec, radius)
        assert t.norms == naive_norms(spec, radius)


def test_norm_raises_outside_table(free2, free2_table):
    deep = free2.word("ab" * 4)  # norm 8 > radius 6
    with pytest.raises(gc.OutOfBallError):
        free2_table.norm(deep)
    with pytest.raises(gc.OutOfBallError):
        gc.norm(free2_table, deep)


def test_member_is_kernel_membership(free2, free2_table):
    # unrestricted tables treat everything as in the kernel
    assert free2_table.member(free2.word("ab"))
    t = gc.restrict_to_kernel(free2_table, parity_kernel(free2))
    assert t.member(free2.word("ab"))
    assert not t.member(free2.word("a"))
    with pytest.raises(gc.OutOfBallError):
        t.member(free2.word("ab" * 4))


def test_norm_targeted_matches_table(heis, heis_table):
    rng = random.Random(5150)
    pool = sorted(heis_table.norms)
    for x in rng.sample(pool, 150):
        assert gc.norm_targeted(heis, x) == heis_table.norms[x]


def test_norm_targeted_identity(free2):
    assert gc.norm_targeted(free2, free2.group.identity()) == 0


def test_norm_targeted_limit(free2):
    deep = free2.word("ab" * 16)
    with pytest.raises(gc.OutOfBallError):
        gc.norm_targeted(free2, deep, limit=50)


def test_norm_targeted_unreachable():
    # the 3-cycle generates only the even permutations
    table, names = s3_table()
    spec = gc.build_spec(
        {"family": "finite_table", "table": table, "names": names,
         "generators": ["120"]}
    )
    transposition = spec.group.element("102")
    with pytest.raises(gc.UnreachableElementError):
        gc.norm_targeted(spec, transposition)


def test_enumeration_budget(heis):
    with pytest.raises(gc.ResourceLimitError):
        gc.enumerate_ball(heis, 6, max_elements=100)


def test_enumeration_budget_env(heis, monkeypatch):
    monkeypatch.setenv(gc.MAX_ELEMENTS_ENV, "50")
    with pytest.raises(gc.ResourceLimitError):
        gc.enumerate_ball(heis, 5)
    monkeypatch.setenv(gc.MAX_ELEMENTS_ENV, "1000")
    t = gc.enumerate_ball(heis, 5)
    assert t.size == 299
    # an explicit argument beats the environment
    with pytest.raises(gc.ResourceLimitError):
        gc.enumerate_ball(heis, 5, max_elements=10)


def test_enumeration_deadline(heis):
    import time

    with pytest.raises(gc.ResourceLimitError, match="time budget"):
        gc.enumerate_ball(heis, 6, deadline=time.monotonic() - 1.0)
    # radius 0 never reaches a layer boundary, so nothing can trip
    t = gc.enumerate_ball(heis, 0, deadline=time.monotonic() - 1.0)
    assert t.size == 1


# --- kernel restriction ------------------------------------------------------

def test_parity_kernel_dinf(dinf):
    t = gc.enumerate_ball(dinf, 6)
    t = gc.restrict_to_kernel(t, parity_kernel(dinf))
    assert sphere_sizes(t) == [1, 0, 2, 0, 2, 0, 2]
    assert [p for p in t.sphere(2)] == [(-1, 0), (1, 0)]
    assert t.kernel is not None


def test_parity_kernel_heis(heis):
    t = gc.enumerate_ball(heis, 6)
    t = gc.restrict_to_kernel(t, parity_kernel(heis))
    assert sphere_sizes(t) == [1, 0, 12, 0, 82, 0, 294]


def test_parity_kernel_free(free2, free2_table):
    t = gc.restrict_to_kernel(free2_table, parity_kernel(free2))
    assert sphere_sizes(t) == [1, 0, 12, 0, 108, 0, 972]
    # norms stay ambient after restriction
    assert t.norm(free2.word("ab")) == 2
    assert t.norm(free2.word("a")) == 1  # still visible, just not in the kernel
    assert t.ambient_sphere(1) == free2_table.sphere(1)


def test_kernel_images_multiplicative(free2, free2_table):
    ker = parity_kernel(free2)
    t = gc.restrict_to_kernel(free2_table, ker)
    q = ker.quotient
    rng = random.Random(88)
    pool = sorted(p for p in t.norms if t.norms[p] <= 5)
    for _ in range(200):
        x = rng.choice(pool)
        for s, img in zip(free2.gens.elements, ker.images):
            y = free2.group.multiply(x, s)
            if y in t.images:
                assert t.images[y] == q.multiply(t.images[x], img)


def test_kernel_image_count_checked(free2, free2_table):
    z2 = gc.group_from_config(Z2_QUOTIENT)
    ker = gc.KernelSpec(z2, [z2.element("g")], label="short")
    with pytest.raises(gc.ConfigError):
        gc.restrict_to_kernel(free2_table, ker)


def test_inconsistent_images_detected(heis):
    # x -> (01), y -> (12) in Sym(3) does not extend to the Heisenberg group:
    # the images do not commute with the commutator structure
    table, names = s3_table()
    ker = gc.load_kernel(
        {"quotient": {"family": "finite_table", "table": table, "names": names},
         "images": {"a": "102", "b": "210"}},
        heis,
    )
    t = gc.enumerate_ball(heis, 4)
    with pytest.raises(gc.HomomorphismError):
        gc.restrict_to_kernel(t, ker)


def test_describe_mentions_restriction(dinf):
    t = gc.enumerate_ball(dinf, 4)
    plain = t.describe()
    t = gc.restrict_to_kernel(t, parity_kernel(dinf))
    assert plain != t.describe()
