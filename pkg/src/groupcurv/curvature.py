"""Conjugation curvature: pointwise values, sphere censuses, annulus identities.

For an element x and symmetric generating set S, the curvature is

    kappa(x) = (1/|S|) * sum_{s in S} (|x| - |s x s^-1|)

with exact norms from a ball table, so every value is a Fraction with
denominator dividing |S|. The annulus machinery certifies the exact
cancellation identity: summing kappa over an annulus telescopes to boundary
terms, pairs (s, x) whose conjugate crosses the annulus boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .balls import BallTable, KernelSpec, enumerate_ball, restrict_to_kernel
from .errors import PreconditionError
from .groups import Element, GroupSpec

CENSUS_PAD = 2  # census at radius R needs conjugate norms up to R + 2


def delta(table: BallTable, s: Element, x: Element) -> int:
    """Norm drop |x| - |s x s^-1| along conjugation by a single generator."""
    group = table.spec.group
    conj = group.multiply(group.multiply(s, x), group.invert(s))
    return table.norm(x) - table.norm(conj)


def kappa(table: BallTable, x: Element) -> Fraction:
    """Exact conjugation curvature of x over the table's generating set."""
    group = table.spec.group
    gens = table.spec.gens
    nx = table.norm(x)
    total = 0
    for s, s_inv in zip(gens.elements, gens.inverses):
        conj = group.multiply(group.multiply(s, x), s_inv)
        total += nx - table.norm(conj)
    return Fraction(total, gens.size)


def kappa_bar(table: BallTable, x: Element) -> Fraction:
    """Curvature normalized by the norm; undefined at the identity."""
    nx = table.norm(x)
    if nx == 0:
        raise PreconditionError("normalized curvature is undefined at the identity")
    return kappa(table, x) / nx


@dataclass
class CensusRow:
    sphere: int
    positive: int
    zero: int
    negative: int
    min_kappa: Fraction | None = None
    max_kappa: Fraction | None = None
    witness_min: str | None = None
    witness_max: str | None = None

    @property
    def total(self) -> int:
        return self.positive + self.zero + self.negative


@dataclass
class CurvatureCensus:
    spec_desc: str
    radius: int
    restricted: bool
    rows: list[CensusRow] = field(default_factory=list)

    def row(self, n: int) -> CensusRow:
        for r in self.rows:
            if r.sphere == n:
                return r
        raise PreconditionError(f"census has no sphere {n}")

    @property
    def all_flat(self) -> bool:
        """True when every counted element has curvature exactly zero."""
        return all(r.positive == 0 and r.negative == 0 for r in self.rows)


def census(
    spec: GroupSpec,
    radius: int,
    filter: KernelSpec | None = None,
    witnesses: bool = False,
    max_elements: int | None = None,
    deadline: float | None = None,
) -> CurvatureCensus:
    """Sign census of curvature on every sphere from 1 to radius.

    Internally enumerates radius + 2 so each conjugate's norm is in range.
    With a kernel filter, only kernel elements are counted; their curvature
    is still measured in the ambient metric.
    """
    if radius < 1:
        raise PreconditionError(f"census radius must be >= 1, got {radius}")
    table = enumerate_ball(
        spec, radius + CENSUS_PAD, max_elements=max_elements, deadline=deadline
    )
    if filter is not None:
        table = restrict_to_kernel(table, filter)
    out = CurvatureCensus(spec.describe(), radius, filter is not None)
    render = spec.group.render
    for n in range(1, radius + 1):
        row = CensusRow(n, 0, 0, 0)
        for x in table.sphere(n):
            k = kappa(table, x)
            if k > 0:
                row.positive += 1
            elif k < 0:
                row.negative += 1
            else:
                row.zero += 1
            if row.min_kappa is None or k < row.min_kappa:
                row.min_kappa = k
                if witnesses:
                    row.witness_min = render(x)
            if row.max_kappa is None or k > row.max_kappa:
                row.max_kappa = k
                if witnesses:
                    row.witness_max = render(x)
        out.rows.append(row)
    return out


@dataclass
class AnnulusReport:
    r1: int
    r2: int
    annulus_size: int
    lhs: Fraction
    rhs: Fraction
    identity_holds: bool
    y1_size: int
    y2_size: int
    upper_bound: int
    inner_sphere_sizes: tuple[int, int]
    restricted: bool


def _check_annulus_args(table: BallTable, r1: int, r2: int) -> None:
    if r1 < 0:
        raise PreconditionError(f"annulus needs r1 >= 0, got {r1}")
    if not r1 < r2 - 4:
        raise PreconditionError(
            f"annulus needs r1 < r2 - 4 so the boundary layers stay disjoint; "
            f"got r1={r1}, r2={r2}"
        )
    if table.radius < r2 + 2:
        raise PreconditionError(
            f"annulus up to {r2} needs a table of radius >= {r2 + 2}, "
            f"got {table.radius}"
        )


def _boundary_pairs(table: BallTable, r1: int, r2: int):
    """Conjugation pairs whose norm crosses the annulus boundary.

    Y1: x in the two innermost annulus spheres whose conjugate drops to
    norm <= r1. Y2: x in the two outermost spheres whose conjugate escapes to
    norm >= r2 + 1. Each entry is (s, x, conjugate, delta).
    """
    group = table.spec.group
    gens = table.spec.gens
    y1 = []
    y2 = []
    for n in (r1 + 1, r1 + 2):
        for x in table.sphere(n):
            for s, s_inv in zip(gens.elements, gens.inverses):
                conj = group.multiply(group.multiply(s, x), s_inv)
                nc = table.norm(conj)
                if nc <= r1:
                    y1.append((s, x, conj, n - nc))
    for n in (r2 - 1, r2):
        for x in table.sphere(n):
            for s, s_inv in zip(gens.elements, gens.inverses):
                conj = group.multiply(group.multiply(s, x), s_inv)
                nc = table.norm(conj)
                if nc >= r2 + 1:
                    y2.append((s, x, conj, n - nc))
    return y1, y2


def annulus_sum(
    table: BallTable,
    filter: KernelSpec | None,
    r1: int,
    r2: int,
) -> AnnulusReport:
    """Certify the exact annulus cancellation identity on spheres r1+1..r2.

    The left side sums kappa over the annulus; the right side sums the norm
    drops of the boundary-crossing pairs, divided by |S|. The two agree
    exactly, and the report also carries the a priori upper bound
    2*(|S(r1+1)| + |S(r1+2)|) on the left side.
    """
    _check_annulus_args(table, r1, r2)
    if filter is not None:
        table = restrict_to_kernel(table, filter)
    lhs = Fraction(0)
    count = 0
    for n in range(r1 + 1, r2 + 1):
        for x in table.sphere(n):
            lhs += kappa(table, x)
            count += 1
    y1, y2 = _boundary_pairs(table, r1, r2)
    size = table.spec.gens.size
    rhs = Fraction(sum(d for *_, d in y1) + sum(d for *_, d in y2), size)
    inner = (len(table.sphere(r1 + 1)), len(table.sphere(r1 + 2)))
    return AnnulusReport(
        r1=r1,
        r2=r2,
        annulus_size=count,
        lhs=lhs,
        rhs=rhs,
        identity_holds=(lhs == rhs),
        y1_size=len(y1),
        y2_size=len(y2),
        upper_bound=2 * (inner[0] + inner[1]),
        inner_sphere_sizes=inner,
        restricted=table.kernel is not None,
    )


def pair_cancellation_violations(
    table: BallTable,
    filter: KernelSpec | None,
    r1: int,
    r2: int,
) -> list[str]:
    """Check the involution pairing on boundary-crossing pairs.

    Each pair (s, x) cancels against (s^-1, s x s^-1): conjugating back must
    return to x and the two norm drops must sum to zero. Returns a rendered
    description per violation; a correct table yields an empty list.
    """
    _check_annulus_args(table, r1, r2)
    if filter is not None:
        table = restrict_to_kernel(table, filter)
    group = table.spec.group
    render = group.render
    violations: list[str] = []
    y1, y2 = _boundary_pairs(table, r1, r2)
    for s, x, conj, d in y1 + y2:
        s_inv = group.invert(s)
        back = group.multiply(group.multiply(s_inv, conj), s)
        d_back = table.norm(conj) - table.norm(back)
        if back != x or d + d_back != 0:
            violations.append(
                f"pair (s={render(s)}, x={render(x)}) fails: "
                f"returns to {render(back)} with drops {d} and {d_back}"
            )
    return violations


__all__ = [
    "delta",
    "kappa",
    "kappa_bar",
    "census",
    "annulus_sum",
    "pair_cancellation_violations",
    "CensusRow",
    "CurvatureCensus",
    "AnnulusReport",
]
