"""Conjugation dynamics inside a ball: orbits, exits, descent, boundary profiles.

Everything here works with exact table norms. Whenever a conjugate falls
outside the enumerated ball, the only fact used is the one the table does
certify: its norm exceeds the table radius. All comparisons are arranged so
that this is conclusive, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .balls import BallTable, enumerate_ball, norm_targeted
from .errors import InvariantError, PreconditionError
from .groups import Element, GroupSpec


@dataclass
class OrbitResult:
    start: str
    size: int
    elements: list
    min_norm: int
    min_witnesses: list[str]
    hit_boundary: bool


def orbit(spec: GroupSpec, table: BallTable, x: Element, cap: int) -> OrbitResult:
    """Conjugation orbit of x by generators, truncated at norm <= cap.

    Explores y -> s y s^-1 for every generator s, keeping only conjugates of
    norm <= cap. hit_boundary reports whether some conjugate was discarded
    for exceeding the cap, i.e. whether the truncated orbit might be partial.
    """
    group = spec.group
    if table.radius < cap:
        raise PreconditionError(
            f"orbit capped at norm {cap} needs a table of radius >= {cap}, "
            f"got {table.radius}"
        )
    nx = table.norm(x)
    if nx > cap:
        raise PreconditionError(f"start element has norm {nx} > cap {cap}")
    seen = {x}
    frontier = [x]
    hit_boundary = False
    while frontier:
        nxt = []
        for y in frontier:
            for s, s_inv in zip(spec.gens.elements, spec.gens.inverses):
                c = group.multiply(group.multiply(s, y), s_inv)
                if c in seen:
                    continue
                if c in table.norms and table.norms[c] <= cap:
                    seen.add(c)
                    nxt.append(c)
                else:
                    hit_boundary = True
        frontier = nxt
    elements = sorted(seen)
    min_norm = min(table.norms[y] for y in elements)
    witnesses = [group.render(y) for y in elements if table.norms[y] == min_norm]
    return OrbitResult(
        start=group.render(x),
        size=len(elements),
        elements=elements,
        min_norm=min_norm,
        min_witnesses=witnesses,
        hit_boundary=hit_boundary,
    )


def exiting_time(spec: GroupSpec, table: BallTable, x: Element, k_max: int) -> int | None:
    """Smallest k <= k_max such that some |sigma| <= k conjugates x out of
    the ball of its own norm; None if no such k exists up to k_max.

    A conjugate outside the table certainly has norm above the table radius,
    hence above |x|, so it counts as an exit without knowing its exact norm.
    """
    if k_max < 1:
        raise PreconditionError(f"k_max must be >= 1, got {k_max}")
    if k_max > table.radius:
        raise PreconditionError(
            f"exiting time up to k_max={k_max} needs table radius >= {k_max}"
        )
    group = spec.group
    nx = table.norm(x)
    for k in range(1, k_max + 1):
        for sigma in table.ambient_sphere(k):
            conj = group.multiply(group.multiply(sigma, x), group.invert(sigma))
            nc = table.norms.get(conj)
            if nc is None or nc > nx:
                return k
    return None


@dataclass
class ExitRow:
    sphere: int
    exit_count: int
    y_size: int


@dataclass
class ExitsReport:
    spec_desc: str
    radius: int
    k: int
    rows: list[ExitRow] = field(default_factory=list)
    max_y_size: int = 0


def exits_per_sphere(
    spec: GroupSpec,
    radius: int,
    k: int = 1,
    max_elements: int | None = None,
    deadline: float | None = None,
) -> ExitsReport:
    """Per-sphere exit statistics across one ball.

    For each m, counts the elements of norm m that some |sigma| <= k
    conjugates to norm > m, and the size of the crossing-pair set

        Y(m) = {(s, x): |x| in {m-1, m}, |s x s^-1| > m}.

    The maximum of |Y(m)| bounds every exit count for k = 1, which is the
    bound the report exposes as max_y_size.
    """
    if radius < 1:
        raise PreconditionError(f"radius must be >= 1, got {radius}")
    if not 1 <= k <= radius:
        raise PreconditionError(f"k must be between 1 and the radius, got {k}")
    table = enumerate_ball(spec, radius, max_elements=max_elements, deadline=deadline)
    group = spec.group
    gens = spec.gens
    report = ExitsReport(spec.describe(), radius, k)

    def conj_exceeds(s, s_inv, x, bound):
        c = group.multiply(group.multiply(s, x), s_inv)
        nc = table.norms.get(c)
        return nc is None or nc > bound

    sigmas = []
    for j in range(1, k + 1):
        sigmas.extend(table.ambient_sphere(j))
    sigma_pairs = [(sg, group.invert(sg)) for sg in sigmas]
    for m in range(1, radius + 1):
        y_size = 0
        for n in (m - 1, m):
            for x in table.ambient_sphere(n):
                for s, s_inv in zip(gens.elements, gens.inverses):
                    if conj_exceeds(s, s_inv, x, m):
                        y_size += 1
        exit_count = 0
        for x in table.ambient_sphere(m):
            if any(conj_exceeds(sg, sg_inv, x, m) for sg, sg_inv in sigma_pairs):
                exit_count += 1
        report.rows.append(ExitRow(m, exit_count, y_size))
    report.max_y_size = max((r.y_size for r in report.rows), default=0)
    return report


@dataclass
class ReduceResult:
    start: str
    result: Element
    start_norm: int
    result_norm: int
    conjugator: Element
    steps: list[str]


def reduce_conjugate(spec: GroupSpec, table: BallTable, x: Element) -> ReduceResult:
    """Greedy norm descent through generator conjugations.

    At each step the conjugate s x s^-1 of strictly smallest norm is taken,
    ties broken first by the conjugate's payload and then by generator order,
    so the walk is deterministic. Conjugates outside the table never improve
    and are skipped. Returns the terminal element and a conjugator w with
    w * start * w^-1 = result.
    """
    group = spec.group
    current = x
    current_norm = table.norm(x)
    conjugator = group.identity()
    steps: list[str] = []
    while True:
        best = None
        for idx, (s, s_inv) in enumerate(zip(spec.gens.elements, spec.gens.inverses)):
            c = group.multiply(group.multiply(s, current), s_inv)
            nc = table.norms.get(c)
            if nc is None or nc >= current_norm:
                continue
            key = (nc, c, idx)
            if best is None or key < best[0]:
                best = (key, c, s)
        if best is None:
            break
        _, current, s = best
        current_norm = table.norms[current]
        conjugator = group.multiply(s, conjugator)
        steps.append(group.render(s))
    check = group.multiply(group.multiply(conjugator, x), group.invert(conjugator))
    if check != current:
        raise InvariantError("descent conjugator does not reproduce the result")
    return ReduceResult(
        start=group.render(x),
        result=current,
        start_norm=table.norm(x),
        result_norm=current_norm,
        conjugator=conjugator,
        steps=steps,
    )


@dataclass
class BoundaryRow:
    cutoff: int
    vertices: int
    boundary: int


@dataclass
class BoundaryProfile:
    x: str
    u: str
    v: str
    window: int
    table_radius: int
    distinct_elements: int
    collision_cells: int
    collisions: list[tuple[str, int]]
    rows: list[BoundaryRow]
    lipschitz_edges: int


def _power(group, g, n: int):
    if n < 0:
        g = group.invert(g)
        n = -n
    out = group.identity()
    for _ in range(n):
        out = group.multiply(out, g)
    return out


def conjugacy_graph_boundary(
    spec: GroupSpec,
    x: Element,
    u: Element,
    v: Element,
    m_list: list[int],
    window: int | None = None,
    max_elements: int | None = None,
    deadline: float | None = None,
) -> BoundaryProfile:
    """Boundary profile of the conjugation graph of x under moves by u and v.

    Scans the window of conjugators u^i v^j with |i|, |j| <= window, dedupes
    the resulting conjugates by element (repeats are recorded as collision
    findings, not errors), and for each cutoff m in m_list counts the
    vertices of norm <= m and those with a conjugation neighbor of norm > m.
    Every edge touched is checked against the conjugation Lipschitz bound
    | |y| - |t y t^-1| | <= 2 max(|u|, |v|); a violation is an invariant
    failure of the norm table and raises.
    """
    if not m_list or any(m < 1 for m in m_list):
        raise PreconditionError("m_list must be nonempty positive cutoffs")
    m_list = sorted(set(m_list))
    m_max = m_list[-1]
    w = window if window is not None else m_max
    if w < 1:
        raise PreconditionError(f"window must be >= 1, got {w}")
    group = spec.group
    nu = norm_targeted(spec, u)
    nv = norm_targeted(spec, v)
    tmax = max(nu, nv)
    if tmax == 0:
        raise PreconditionError("conjugators u, v must not both be the identity")
    radius = m_max + 2 * tmax
    table = enumerate_ball(spec, radius, max_elements=max_elements, deadline=deadline)

    cells: dict = {}
    for i in range(-w, w + 1):
        ui = _power(group, u, i)
        for j in range(-w, w + 1):
            conjugator = group.multiply(ui, _power(group, v, j))
            phi = group.multiply(
                group.multiply(conjugator, x), group.invert(conjugator)
            )
            cells.setdefault(phi, []).append((i, j))
    vertices = sorted(cells)
    collisions = [
        (group.render(y), len(cells[y])) for y in vertices if len(cells[y]) > 1
    ]
    collision_cells = sum(len(c) - 1 for c in cells.values())

    moves = [u, group.invert(u), v, group.invert(v)]
    lipschitz_edges = 0
    rows = []
    for m in m_list:
        in_ball = [y for y in vertices if table.norms.get(y, radius + 1) <= m]
        boundary = 0
        for y in in_ball:
            ny = table.norms[y]
            is_boundary = False
            for t in moves:
                z = group.multiply(group.multiply(t, y), group.invert(t))
                nz = table.norms.get(z)
                if nz is None or abs(ny - nz) > 2 * tmax:
                    shown = "outside the table" if nz is None else str(nz)
                    raise InvariantError(
                        f"conjugation moved norm {ny} to {shown}, "
                        f"beyond the Lipschitz bound {2 * tmax}"
                    )
                lipschitz_edges += 1
                if nz > m:
                    is_boundary = True
            if is_boundary:
                boundary += 1
        rows.append(BoundaryRow(m, len(in_ball), boundary))
    return BoundaryProfile(
        x=group.render(x),
        u=group.render(u),
        v=group.render(v),
        window=w,
        table_radius=radius,
        distinct_elements=len(vertices),
        collision_cells=collision_cells,
        collisions=collisions,
        rows=rows,
        lipschitz_edges=lipschitz_edges,
    )


__all__ = [
    "orbit",
    "exiting_time",
    "exits_per_sphere",
    "reduce_conjugate",
    "conjugacy_graph_boundary",
    "OrbitResult",
    "ExitRow",
    "ExitsReport",
    "ReduceResult",
    "BoundaryRow",
    "BoundaryProfile",
]
