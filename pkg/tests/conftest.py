"""Shared fixtures and independent oracles.

The oracles below recompute norms and curvature by the most naive method
available so the optimized paths in the package are checked against code
that shares nothing with them beyond the group operations.
"""

import itertools
from fractions import Fraction

import pytest

import groupcurv as gc


def naive_norms(spec, radius):
    """Right-multiplication BFS, independent of enumerate_ball's left BFS."""
    group = spec.group
    norms = {group.identity(): 0}
    frontier = [group.identity()]
    for n in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in spec.gens.elements:
                y = group.multiply(x, s)
                if y not in norms:
                    norms[y] = n
                    nxt.append(y)
        frontier = nxt
    return norms


def slow_kappa(spec, norms, x):
    """Direct evaluation of the defining average, no shared code with kappa()."""
    group = spec.group
    total = 0
    for s in spec.gens.elements:
        c = group.multiply(group.multiply(s, x), group.invert(s))
        total += norms[x] - norms[c]
    return Fraction(total, spec.gens.size)


# --- small reference groups -------------------------------------------------

def s3_table():
    """Multiplication table of Sym(3) on sorted one-line permutations."""
    perms = sorted(itertools.permutations(range(3)))
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    names = ["".join(str(i) for i in p) for p in perms]
    return table, names


Z2_QUOTIENT = {"family": "finite_table", "table": [[0, 1], [1, 0]], "names": ["e", "g"]}


def parity_kernel(spec):
    """Kernel of the mod-2 length map: every generator goes to the flip."""
    images = {letter: "g" for letter in spec.letters}
    return gc.load_kernel(
        {"quotient": Z2_QUOTIENT, "images": images, "label": "parity"}, spec
    )


FBD_Z3_CONFIG = {
    "family": "finite_by_dihedral",
    "finite": {"family": "finite_table", "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
               "names": ["e", "t", "u"]},
    "alpha": [0, 2, 1],
    "beta": [0, 2, 1],
    "a_squared": 0,
    "b_squared": 0,
}


@pytest.fixture(scope="session")
def free2():
    return gc.build_spec("free:2")


@pytest.fixture(scope="session")
def heis():
    return gc.build_spec("heis3")


@pytest.fixture(scope="session")
def dinf():
    return gc.build_spec("dinf")


@pytest.fixture(scope="session")
def z2xdinf():
    return gc.build_spec("z2xdinf")


@pytest.fixture(scope="session")
def zn2():
    return gc.build_spec("zn:2")


@pytest.fixture(scope="session")
def s3_spec():
    table, names = s3_table()
    return gc.build_spec({"family": "finite_table", "table": table, "names": names})


@pytest.fixture(scope="session")
def s3xz_spec():
    """Sym(3) x Z with a transposition, a 3-cycle, and the shift."""
    table, names = s3_table()
    cfg = {
        "family": "direct_product",
        "left": {"family": "finite_table", "table": table, "names": names},
        "right": {"family": "free_abelian", "rank": 1},
        "generators": [["102", [0]], ["120", [0]], ["012", [1]]],
    }
    return gc.build_spec(cfg)


@pytest.fixture(scope="session")
def fbd_z3():
    return gc.build_spec(FBD_Z3_CONFIG)


@pytest.fixture(scope="session")
def free2_table(free2):
    return gc.enumerate_ball(free2, 6)


@pytest.fixture(scope="session")
def heis_table(heis):
    return gc.enumerate_ball(heis, 10)
