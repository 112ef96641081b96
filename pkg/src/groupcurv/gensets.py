"""Generating-set constructions: conjugation closures and flat extension sets.

A generating set closed under conjugation by itself makes every curvature
value zero, because conjugation permutes the generators and so preserves word
norms. For extensions of the infinite dihedral group there is a concrete
candidate set, the fibre together with both lift cosets, and its flatness is
checked on an actual ball rather than assumed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .balls import enumerate_ball
from .curvature import kappa
from .errors import FamilyMismatchError, PreconditionError, ResourceLimitError
from .groups import (
    Element,
    FiniteByDihedralGroup,
    GeneratingSet,
    GroupSpec,
    _dinf_word_length,
)

DEFAULT_CLOSURE_BUDGET = 10_000


@dataclass
class ClosureResult:
    spec_desc: str
    elements: tuple
    orbit_sizes: list[int]
    terminated: bool
    budget: int
    genset: GeneratingSet | None = None


def conjugation_closure(
    spec: GroupSpec,
    budget: int | None = None,
    deadline: float | None = None,
) -> ClosureResult:
    """Close the generating set under conjugation by its own elements.

    Each original generator's full conjugation orbit is explored; the union,
    in discovery order, is the closed set. The budget caps the number of
    distinct elements collected: exceeding it stops the exploration and marks
    the result terminated, with no generating set attached. A completed
    closure is returned as a GeneratingSet whose symmetry is verified, not
    assumed. The optional deadline is a time.monotonic() instant checked
    once per sweep; passing it raises a resource error instead of marking
    termination, since a timeout says nothing about the closure itself.
    """
    if budget is None:
        budget = DEFAULT_CLOSURE_BUDGET
    if budget < 1:
        raise PreconditionError(f"closure budget must be >= 1, got {budget}")
    group = spec.group
    gens = spec.gens.elements
    collected: list[Element] = []
    member: set = set()
    orbit_of: dict = {}
    orbit_sizes: list[int] = []
    terminated = False
    for g in gens:
        if terminated:
            break
        if g in orbit_of:
            orbit_sizes.append(orbit_of[g])
            continue
        orbit = [g]
        seen = {g}
        frontier = [g]
        while frontier and not terminated:
            if deadline is not None and time.monotonic() > deadline:
                raise ResourceLimitError(
                    f"conjugation closure exceeded the time budget "
                    f"({len(member) + len(orbit)} elements so far)"
                )
            nxt = []
            for y in frontier:
                for s, s_inv in zip(spec.gens.elements, spec.gens.inverses):
                    c = group.multiply(group.multiply(s, y), s_inv)
                    if c not in seen:
                        seen.add(c)
                        orbit.append(c)
                        nxt.append(c)
                        if len(member) + len(orbit) > budget:
                            terminated = True
                            break
                if terminated:
                    break
            frontier = nxt
        for y in orbit:
            if y not in member:
                member.add(y)
                collected.append(y)
        if not terminated:
            for y in orbit:
                orbit_of[y] = len(orbit)
            orbit_sizes.append(len(orbit))
    result = ClosureResult(
        spec_desc=spec.describe(),
        elements=tuple(collected),
        orbit_sizes=orbit_sizes,
        terminated=terminated,
        budget=budget,
    )
    if not terminated:
        result.genset = GeneratingSet(group, collected, symmetrize=False)
    return result


def dinf_extension_genset(spec: GroupSpec) -> GeneratingSet:
    """The fibre-and-lift generating set of a dihedral extension.

    Lists the nontrivial fibre elements, then the lift of each dihedral
    reflection together with its fibre translates. The set's symmetry is a
    consequence of the extension data and is verified on construction.
    """
    group = spec.group
    if not isinstance(group, FiniteByDihedralGroup):
        raise FamilyMismatchError(
            f"extension generating set needs a finite_by_dihedral group, "
            f"got {group.describe()}"
        )
    finite = group.finite
    ident = finite.identity()
    fibre = [f for f in range(finite.order) if f != ident]
    elements = [(f, (0, 0)) for f in fibre]
    for reflection in ((0, 1), (-1, 1)):
        elements.append((ident, reflection))
        elements.extend((f, reflection) for f in fibre)
    return GeneratingSet(group, elements, symmetrize=False)


@dataclass
class FlatnessReport:
    spec_desc: str
    genset_size: int
    radius: int
    cutoff: int
    kappa_zero: bool
    norms_match: bool
    failures: list[str] = field(default_factory=list)

    @property
    def flat(self) -> bool:
        return self.kappa_zero and self.norms_match


MAX_REPORTED_FAILURES = 10


def verify_flat(
    spec: GroupSpec,
    genset: GeneratingSet | Iterable[Element],
    radius: int,
    cutoff: int,
    max_elements: int | None = None,
    deadline: float | None = None,
) -> FlatnessReport:
    """Check a dihedral extension's generating set for flatness on a ball.

    Two properties are certified on the ball of the given radius: curvature
    vanishes on every sphere beyond the cutoff, and the word norm of every
    element of norm > 1 equals the reduced length of its dihedral image over
    the two standard reflections. Both are checked exhaustively; the first
    few failures are reported verbatim.
    """
    group = spec.group
    if not isinstance(group, FiniteByDihedralGroup):
        raise FamilyMismatchError(
            f"flatness check needs a finite_by_dihedral group, got {group.describe()}"
        )
    if cutoff < 0:
        raise PreconditionError(f"cutoff must be >= 0, got {cutoff}")
    if radius < cutoff + 3:
        raise PreconditionError(
            f"flatness check needs radius >= cutoff + 3; got radius={radius}, "
            f"cutoff={cutoff}"
        )
    if not isinstance(genset, GeneratingSet):
        genset = GeneratingSet(group, list(genset))
    work = GroupSpec(group, genset)
    table = enumerate_ball(work, radius + 2, max_elements=max_elements, deadline=deadline)
    report = FlatnessReport(
        spec_desc=work.describe(),
        genset_size=genset.size,
        radius=radius,
        cutoff=cutoff,
        kappa_zero=True,
        norms_match=True,
    )

    def note(message: str) -> None:
        if len(report.failures) < MAX_REPORTED_FAILURES:
            report.failures.append(message)

    for n in range(cutoff + 1, radius + 1):
        for x in table.sphere(n):
            k = kappa(table, x)
            if k != 0:
                report.kappa_zero = False
                note(f"kappa({group.render(x)}) = {k} at norm {n}")
    for n in range(2, radius + 1):
        for x in table.sphere(n):
            quotient_length = _dinf_word_length(group.dihedral_part(x))
            if quotient_length != n:
                report.norms_match = False
                note(
                    f"norm {n} of {group.render(x)} differs from its dihedral "
                    f"image length {quotient_length}"
                )
    return report


__all__ = [
    "conjugation_closure",
    "dinf_extension_genset",
    "verify_flat",
    "ClosureResult",
    "FlatnessReport",
    "DEFAULT_CLOSURE_BUDGET",
]
