"""Breadth-first ball enumeration, word norms, and kernel-restricted tables.

A BallTable stores every element of norm at most R together with its exact
word norm over the generating set of the spec. Spheres are kept as lists
sorted by payload so that every downstream report is deterministic.

Norms of single elements can also be computed without a full table by a
bidirectional layered search (norm_targeted), which is what makes stable-norm
sampling of high powers feasible.
"""

from __future__ import annotations

import os
import time
from typing import Sequence

from .errors import (
    ConfigError,
    HomomorphismError,
    OutOfBallError,
    PreconditionError,
    ResourceLimitError,
    UnreachableElementError,
)
from .groups import Element, Group, GroupSpec

DEFAULT_MAX_ELEMENTS = 50_000_000
MAX_ELEMENTS_ENV = "CURV_MAX_ELEMENTS"

DEFAULT_TARGETED_LIMIT = 1_000_000


def _element_budget(max_elements: int | None) -> int:
    if max_elements is not None:
        return max_elements
    raw = os.environ.get(MAX_ELEMENTS_ENV)
    if raw is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{MAX_ELEMENTS_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{MAX_ELEMENTS_ENV} must be positive, got {value}")
    return value


class KernelSpec:
    """Kernel of a homomorphism given by generator images in a quotient group.

    ``images`` is aligned with the generating set of the spec the kernel is
    applied to, one image per generator in set order. Whether the images are
    consistent (i.e. actually define a homomorphism on the enumerated ball)
    is certified edge by edge in restrict_to_kernel, not assumed here.
    """

    def __init__(self, quotient: Group, images: Sequence[Element], label: str = "kernel"):
        self.quotient = quotient
        self.images = tuple(images)
        self.label = label

    def describe(self) -> str:
        return f"{self.label} -> {self.quotient.describe()}"


class BallTable:
    """All elements of word norm <= radius, with exact norms.

    ``norms`` always covers the full ambient ball. When the table has been
    restricted to a kernel, ``sphere`` and ``ball_size`` see only kernel
    elements while ``norm`` keeps answering in the ambient metric; curvature
    of a kernel element is still measured with the ambient generating set.
    """

    __slots__ = ("spec", "radius", "norms", "_spheres", "kernel", "images", "_kernel_spheres")

    def __init__(self, spec, radius, norms, spheres, kernel=None, images=None, kernel_spheres=None):
        self.spec: GroupSpec = spec
        self.radius: int = radius
        self.norms: dict[Element, int] = norms
        self._spheres: list[list[Element]] = spheres
        self.kernel: KernelSpec | None = kernel
        self.images: dict[Element, Element] | None = images
        self._kernel_spheres: list[list[Element]] | None = kernel_spheres

    @property
    def size(self) -> int:
        return len(self.norms)

    def __contains__(self, x) -> bool:
        return x in self.norms

    def norm(self, x) -> int:
        try:
            return self.norms[x]
        except KeyError:
            raise OutOfBallError(
                f"element {self.spec.group.render(x)} is outside the enumerated ball "
                f"of radius {self.radius}"
            )

    def _check_sphere_index(self, n: int) -> None:
        if not 0 <= n <= self.radius:
            raise PreconditionError(
                f"sphere {n} requested from a table of radius {self.radius}"
            )

    def ambient_sphere(self, n: int) -> list[Element]:
        """Sphere of the full group ball regardless of any kernel restriction."""
        self._check_sphere_index(n)
        return self._spheres[n]

    def sphere(self, n: int) -> list[Element]:
        """Sorted sphere at norm n; restricted when the table has a kernel."""
        self._check_sphere_index(n)
        if self._kernel_spheres is not None:
            return self._kernel_spheres[n]
        return self._spheres[n]

    def ball_size(self, n: int | None = None) -> int:
        """Number of (restriction-visible) elements of norm <= n."""
        if n is None:
            n = self.radius
        self._check_sphere_index(n)
        spheres = self._kernel_spheres if self._kernel_spheres is not None else self._spheres
        return sum(len(spheres[i]) for i in range(n + 1))

    def member(self, x) -> bool:
        """Kernel membership; vacuously true for an unrestricted table."""
        if self.kernel is None:
            return True
        if x not in self.images:
            raise OutOfBallError(
                f"element {self.spec.group.render(x)} has no image: outside the ball"
            )
        return self.images[x] == self.kernel.quotient.identity()

    def describe(self) -> str:
        base = f"ball of radius {self.radius} in {self.spec.describe()}"
        if self.kernel is not None:
            base += f", restricted to {self.kernel.describe()}"
        return base


def enumerate_ball(
    spec: GroupSpec,
    radius: int,
    max_elements: int | None = None,
    deadline: float | None = None,
) -> BallTable:
    """Enumerate the ball of the given radius by breadth-first search.

    Layer n is produced by left-multiplying layer n-1 by every generator.
    Exceeding the element budget (max_elements, else the CURV_MAX_ELEMENTS
    environment variable, else 5*10^7) aborts with a resource error, as does
    running past ``deadline`` (a time.monotonic() instant, checked between
    layers only, so the overshoot is at most one layer).
    """
    if radius < 0:
        raise PreconditionError(f"ball radius must be >= 0, got {radius}")
    limit = _element_budget(max_elements)
    group = spec.group
    gens = spec.gens.elements
    identity = group.identity()
    norms: dict[Element, int] = {identity: 0}
    spheres: list[list[Element]] = [[identity]]
    frontier: list[Element] = [identity]
    multiply = group.multiply
    for n in range(1, radius + 1):
        layer: list[Element] = []
        for x in frontier:
            for s in gens:
                y = multiply(s, x)
                if y not in norms:
                    norms[y] = n
                    layer.append(y)
        if len(norms) > limit:
            raise ResourceLimitError(
                f"ball enumeration exceeded the element budget of {limit} "
                f"at radius {n} ({len(norms)} elements)"
            )
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError(
                f"ball enumeration exceeded the time budget at radius {n} "
                f"({len(norms)} elements so far)"
            )
        layer.sort()
        spheres.append(layer)
        frontier = layer
        if not layer:
            # the whole group fits in radius n-1; remaining spheres are empty
            spheres.extend([] for _ in range(radius - n))
            break
    return BallTable(spec, radius, norms, spheres)


def norm(table: BallTable, x: Element) -> int:
    """Exact word norm from a precomputed table."""
    return table.norm(x)


def norm_targeted(spec: GroupSpec, x: Element, limit: int | None = None) -> int:
    """Exact word norm of a single element by bidirectional layered search.

    Grows one layer of the smaller frontier at a time, from the identity and
    from x, over the same undirected Cayley edges (right multiplication by a
    generator). Once the best meeting point is no longer beatable by anything
    in the unexplored middle, its value is the norm. Raises OutOfBallError
    when the two searches together would exceed ``limit`` visited elements,
    and UnreachableElementError when a component is exhausted without a meet.
    """
    if limit is None:
        limit = DEFAULT_TARGETED_LIMIT
    group = spec.group
    gens = spec.gens.elements
    if group.is_identity(x):
        return 0
    fwd: dict[Element, int] = {group.identity(): 0}
    bwd: dict[Element, int] = {x: 0}
    fwd_frontier: list[Element] = [group.identity()]
    bwd_frontier: list[Element] = [x]
    depth = {id(fwd): 0, id(bwd): 0}
    best: int | None = None
    multiply = group.multiply
    while True:
        if best is not None and best <= depth[id(fwd)] + depth[id(bwd)]:
            return best
        if not fwd_frontier or not bwd_frontier:
            if best is not None:
                return best
            raise UnreachableElementError(
                f"element {group.render(x)} is not reachable from the identity "
                f"over the given generators"
            )
        if len(fwd_frontier) <= len(bwd_frontier):
            this, other, frontier = fwd, bwd, fwd_frontier
        else:
            this, other, frontier = bwd, fwd, bwd_frontier
        new_depth = depth[id(this)] + 1
        layer: list[Element] = []
        for g in frontier:
            for s in gens:
                y = multiply(g, s)
                if y not in this:
                    this[y] = new_depth
                    layer.append(y)
                    db = other.get(y)
                    if db is not None and (best is None or new_depth + db < best):
                        best = new_depth + db
        depth[id(this)] = new_depth
        if this is fwd:
            fwd_frontier = layer
        else:
            bwd_frontier = layer
        # certify a finished meet before enforcing the budget: the layer that
        # proves minimality may be the same one that crosses the limit
        if best is not None and best <= depth[id(fwd)] + depth[id(bwd)]:
            return best
        if len(fwd) + len(bwd) > limit:
            raise OutOfBallError(
                f"norm search for {group.render(x)} exceeded the limit of {limit} elements"
            )


def restrict_to_kernel(table: BallTable, ker: KernelSpec) -> BallTable:
    """Restrict a ball table to the kernel of the homomorphism given by ker.

    Images are propagated along one search-tree edge per element and then
    certified on every edge inside the ball; any inconsistent edge means the
    generator images do not define a homomorphism, which raises
    HomomorphismError. Norms stay ambient: the restriction only filters which
    elements the spheres show.
    """
    spec = table.spec
    group = spec.group
    gens = spec.gens.elements
    if len(ker.images) != len(gens):
        raise ConfigError(
            f"kernel images cover {len(ker.images)} generators, "
            f"but the generating set has {len(gens)}"
        )
    quotient = ker.quotient
    img_of_gen = dict(zip(gens, ker.images))
    gen_pairs = [(s, group.invert(s)) for s in gens]
    images: dict[Element, Element] = {group.identity(): quotient.identity()}
    for n in range(1, table.radius + 1):
        for x in table.ambient_sphere(n):
            for s, s_inv in gen_pairs:
                parent = group.multiply(s_inv, x)
                if table.norms.get(parent) == n - 1:
                    images[x] = quotient.multiply(img_of_gen[s], images[parent])
                    break
            else:
                raise PreconditionError(
                    f"no parent found for {group.render(x)}; table is inconsistent"
                )
    for n in range(table.radius + 1):
        for x in table.ambient_sphere(n):
            fx = images[x]
            for s in gens:
                y = group.multiply(s, x)
                fy = images.get(y)
                if fy is not None and fy != quotient.multiply(img_of_gen[s], fx):
                    raise HomomorphismError(
                        f"generator images are not a homomorphism: edge "
                        f"{group.render(x)} -> {group.render(y)} is inconsistent"
                    )
    q_id = quotient.identity()
    kernel_spheres = [
        [x for x in table.ambient_sphere(n) if images[x] == q_id]
        for n in range(table.radius + 1)
    ]
    return BallTable(
        spec, table.radius, table.norms, table._spheres,
        kernel=ker, images=images, kernel_spheres=kernel_spheres,
    )


__all__ = [
    "BallTable",
    "KernelSpec",
    "enumerate_ball",
    "norm",
    "norm_targeted",
    "restrict_to_kernel",
    "DEFAULT_MAX_ELEMENTS",
    "DEFAULT_TARGETED_LIMIT",
    "MAX_ELEMENTS_ENV",
]
