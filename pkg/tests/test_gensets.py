"""Conjugation closure, dihedral extension sets, flatness certificates."""

import pytest

import groupcurv as gc


def test_closure_s3xz(s3xz_spec):
    res = gc.conjugation_closure(s3xz_spec)
    assert len(res.elements) == 7
    assert not res.terminated
    assert res.genset is not None
    # orbit sizes line up with the (symmetrized) generating set
    by_gen = {s3xz_spec.group.render(g): n
              for g, n in zip(s3xz_spec.gens.elements, res.orbit_sizes)}
    assert by_gen["(102,(0))"] == 3
    assert by_gen["(120,(0))"] == 2
    assert by_gen["(012,(1))"] == 1
    assert sorted(res.orbit_sizes) == [1, 1, 2, 2, 3]


def test_closure_genset_is_symmetric_and_flat(s3xz_spec):
    res = gc.conjugation_closure(s3xz_spec)
    closed = gc.GroupSpec(s3xz_spec.group, res.genset)
    t = gc.enumerate_ball(closed, 4)
    assert [t.ball_size(n) for n in range(5)] == [1, 8, 20, 32, 44]
    c = gc.census(closed, 8)
    assert c.all_flat


def test_closure_budget(s3xz_spec):
    res = gc.conjugation_closure(s3xz_spec, budget=2)
    assert res.terminated
    assert res.genset is None
    assert res.budget == 2
    with pytest.raises(gc.PreconditionError):
        gc.conjugation_closure(s3xz_spec, budget=0)


def test_closure_deadline(s3xz_spec):
    import time

    with pytest.raises(gc.ResourceLimitError, match="time budget"):
        gc.conjugation_closure(s3xz_spec, deadline=time.monotonic() - 1.0)


def test_closure_abelian_is_identity_map(zn2):
    res = gc.conjugation_closure(zn2)
    assert res.orbit_sizes == [1, 1, 1, 1]
    assert set(res.elements) == set(zn2.gens.elements)


def test_extension_genset_z2xdinf(z2xdinf):
    gens = gc.dinf_extension_genset(z2xdinf)
    assert gens.elements == (
        (1, (0, 0)), (0, (0, 1)), (1, (0, 1)), (0, (-1, 1)), (1, (-1, 1)),
    )
    assert gens.size == 5


def test_extension_genset_fbd_z3(fbd_z3):
    gens = gc.dinf_extension_genset(fbd_z3)
    assert gens.size == 8
    assert set(gens.elements) == set(fbd_z3.gens.elements)


def test_extension_genset_family_checked(heis):
    with pytest.raises(gc.FamilyMismatchError):
        gc.dinf_extension_genset(heis)


def test_verify_flat_z2xdinf(z2xdinf):
    rep = gc.verify_flat(z2xdinf, gc.dinf_extension_genset(z2xdinf), 10, 3)
    assert rep.flat
    assert rep.kappa_zero and rep.norms_match
    assert rep.failures == []
    assert rep.genset_size == 5


def test_verify_flat_fbd_z3(fbd_z3):
    rep = gc.verify_flat(fbd_z3, gc.dinf_extension_genset(fbd_z3), 8, 1)
    assert rep.flat


def test_verify_flat_cutoff_zero_fails(z2xdinf):
    rep = gc.verify_flat(z2xdinf, gc.dinf_extension_genset(z2xdinf), 10, 0)
    assert not rep.flat
    assert not rep.kappa_zero
    assert rep.norms_match
    assert len(rep.failures) == 4
    assert all("-4/5" in f for f in rep.failures)


def test_verify_flat_preconditions(z2xdinf, heis):
    gens = gc.dinf_extension_genset(z2xdinf)
    with pytest.raises(gc.PreconditionError):
        gc.verify_flat(z2xdinf, gens, 4, 3)  # needs radius >= cutoff + 3
    with pytest.raises(gc.PreconditionError):
        gc.verify_flat(z2xdinf, gens, 10, -1)
    with pytest.raises(gc.FamilyMismatchError):
        gc.verify_flat(heis, heis.gens, 10, 3)
