"""Command-line interface: one subcommand per certificate or survey.

Every subcommand prints a human-readable summary to stdout and, when --out
is given, writes a deterministic report: a JSON master, one CSV per table,
and PNG figures (suppressed by --no-figures). Elapsed time goes to stdout
only, so the emitted files are byte-identical across runs.

Exit codes: 0 ok, 2 configuration, 3 precondition, 4 resource limit,
5 violated invariant.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .asymptotics import growth_series, stable_norm, verify_negative_curvature_growth
from .balls import enumerate_ball, norm_targeted, restrict_to_kernel
from .config import SHORTHANDS, build_spec, load_genset, load_kernel, parse_element
from .conjugacy import (
    conjugacy_graph_boundary,
    exits_per_sphere,
    orbit,
    reduce_conjugate,
)
from .curvature import annulus_sum, census, kappa, kappa_bar, pair_cancellation_violations
from .errors import ConfigError, GroupCurvError
from .gensets import conjugation_closure, dinf_extension_genset, verify_flat
from .groups import GroupSpec
from .reporting import FigureSpec, Report, Table, emit


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-g", "--group", required=True, metavar="GROUP",
        help=f"group shorthand ({', '.join(SHORTHANDS)}) or JSON config path",
    )
    p.add_argument("--out", metavar="DIR", help="directory for report files")
    p.add_argument("--basename", help="basename for report files (default: command name)")
    p.add_argument("--no-figures", action="store_true", help="skip PNG figures")
    p.add_argument(
        "--max-elements", type=int, default=None, metavar="N",
        help="element budget for ball enumeration",
    )
    p.add_argument(
        "--max-seconds", type=float, default=None, metavar="T",
        help="time budget for the whole command, checked between BFS layers",
    )


def _add_kernel(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--kernel", metavar="FILE",
        help="JSON kernel description: quotient group plus generator images",
    )


def _kernel_of(args, spec: GroupSpec):
    return load_kernel(args.kernel, spec) if getattr(args, "kernel", None) else None


def _deadline_of(args) -> float | None:
    seconds = getattr(args, "max_seconds", None)
    if seconds is None:
        return None
    if seconds <= 0:
        raise ConfigError(f"--max-seconds must be positive, got {seconds}")
    return time.monotonic() + seconds


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _in_kernel(table, x) -> bool:
    return table.images[x] == table.kernel.quotient.identity() if table.kernel else True


def _handle_ball(args) -> Report:
    spec = build_spec(args.group)
    table = enumerate_ball(
        spec, args.radius, max_elements=args.max_elements, deadline=args.deadline
    )
    ker = _kernel_of(args, spec)
    if ker is not None:
        table = restrict_to_kernel(table, ker)
    sizes_rows = []
    element_rows = []
    for n in range(args.radius + 1):
        sizes_rows.append([n, len(table.sphere(n)), table.ball_size(n)])
        for x in table.ambient_sphere(n):
            element_rows.append([spec.group.render(x), n, _in_kernel(table, x)])
    print(table.describe())
    print(f"elements: {table.size}")
    for n, sphere, ball in sizes_rows:
        print(f"  n={n}: sphere {sphere}, ball {ball}")
    report = Report(
        title=table.describe(),
        meta={
            "group": spec.describe(),
            "radius": args.radius,
            "kernel": ker.describe() if ker else None,
            "total_elements": table.size,
        },
        tables=[
            Table("sizes", ["n", "sphere_size", "ball_size"], sizes_rows),
            Table("elements", ["canonical_key", "norm", "in_kernel"], element_rows),
        ],
        figures=[
            FigureSpec(
                "growth", "line", f"ball growth, {spec.describe()}",
                "n", "|B(n)|",
                [r[0] for r in sizes_rows], [("ball size", [r[2] for r in sizes_rows])],
                log_y=True,
            )
        ],
    )
    return report


def _handle_kappa(args) -> Report:
    spec = build_spec(args.group)
    x = parse_element(spec, args.element)
    nx = norm_targeted(spec, x)
    table = enumerate_ball(
        spec, nx + 2, max_elements=args.max_elements, deadline=args.deadline
    )
    k = kappa(table, x)
    rows = []
    group = spec.group
    for s, s_inv in zip(spec.gens.elements, spec.gens.inverses):
        conj = group.multiply(group.multiply(s, x), s_inv)
        rows.append([group.render(s), group.render(conj), nx - table.norm(conj)])
    print(f"element {group.render(x)} in {spec.describe()}")
    print(f"norm    {nx}")
    print(f"kappa   {_fmt(k)}")
    meta = {"element": group.render(x), "norm": nx, "kappa": k}
    if nx > 0:
        kb = kappa_bar(table, x)
        print(f"kappa_bar {_fmt(kb)}")
        meta["kappa_bar"] = kb
    return Report(
        title=f"curvature of {group.render(x)}",
        meta=meta,
        tables=[Table("deltas", ["generator", "conjugate", "delta"], rows)],
    )


def _handle_census(args) -> Report:
    spec = build_spec(args.group)
    ker = _kernel_of(args, spec)
    result = census(
        spec, args.radius, filter=ker, witnesses=args.witnesses,
        max_elements=args.max_elements, deadline=args.deadline,
    )
    rows = [[r.sphere, r.positive, r.zero, r.negative] for r in result.rows]
    print(f"curvature census to radius {args.radius} in {spec.describe()}")
    for r in result.rows:
        print(f"  sphere {r.sphere}: +{r.positive} 0:{r.zero} -{r.negative}")
    tables = [Table("census", ["sphere", "pos", "zero", "neg"], rows)]
    if args.witnesses:
        tables.append(
            Table(
                "witnesses",
                ["sphere", "min_kappa", "witness_min", "max_kappa", "witness_max"],
                [
                    [r.sphere, r.min_kappa, r.witness_min, r.max_kappa, r.witness_max]
                    for r in result.rows
                ],
            )
        )
    return Report(
        title=f"curvature census, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "radius": args.radius,
            "kernel": ker.describe() if ker else None,
            "all_flat": result.all_flat,
        },
        tables=tables,
        figures=[
            FigureSpec(
                "census", "line", "curvature sign counts per sphere",
                "sphere", "count",
                [r.sphere for r in result.rows],
                [
                    ("positive", [r.positive for r in result.rows]),
                    ("zero", [r.zero for r in result.rows]),
                    ("negative", [r.negative for r in result.rows]),
                ],
            )
        ],
    )


def _handle_annulus(args) -> Report:
    spec = build_spec(args.group)
    ker = _kernel_of(args, spec)
    table = enumerate_ball(
        spec, args.r2 + 2, max_elements=args.max_elements, deadline=args.deadline
    )
    rep = annulus_sum(table, ker, args.r1, args.r2)
    violations = pair_cancellation_violations(table, ker, args.r1, args.r2)
    print(f"annulus {args.r1} < |x| <= {args.r2} in {spec.describe()}")
    print(f"  elements        {rep.annulus_size}")
    print(f"  lhs sum kappa   {_fmt(rep.lhs)}")
    print(f"  rhs boundary    {_fmt(rep.rhs)}")
    print(f"  identity holds  {_fmt(rep.identity_holds)}")
    print(f"  upper bound     {rep.upper_bound}")
    print(f"  pairs |Y1|={rep.y1_size} |Y2|={rep.y2_size}")
    print(f"  pair cancellation violations: {len(violations)}")
    tables = [
        Table(
            "annulus",
            [
                "r1", "r2", "annulus_size", "lhs", "rhs", "identity_holds",
                "y1_size", "y2_size", "upper_bound",
            ],
            [[
                rep.r1, rep.r2, rep.annulus_size, rep.lhs, rep.rhs,
                rep.identity_holds, rep.y1_size, rep.y2_size, rep.upper_bound,
            ]],
        )
    ]
    if violations:
        tables.append(Table("violations", ["description"], [[v] for v in violations]))
    return Report(
        title=f"annulus identity, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "kernel": ker.describe() if ker else None,
            "identity_holds": rep.identity_holds,
            "violations": len(violations),
        },
        tables=tables,
    )


def _handle_orbit(args) -> Report:
    spec = build_spec(args.group)
    x = parse_element(spec, args.element)
    table = enumerate_ball(
        spec, args.cap, max_elements=args.max_elements, deadline=args.deadline
    )
    rep = orbit(spec, table, x, args.cap)
    print(f"conjugation orbit of {rep.start} capped at norm {args.cap}")
    print(f"  size {rep.size}, min norm {rep.min_norm}, "
          f"boundary hit: {_fmt(rep.hit_boundary)}")
    print(f"  minimal witnesses: {', '.join(rep.min_witnesses)}")
    rows = [[spec.group.render(y), table.norms[y]] for y in rep.elements]
    return Report(
        title=f"orbit of {rep.start}",
        meta={
            "start": rep.start,
            "cap": args.cap,
            "size": rep.size,
            "min_norm": rep.min_norm,
            "min_witnesses": rep.min_witnesses,
            "hit_boundary": rep.hit_boundary,
        },
        tables=[Table("orbit", ["canonical_key", "norm"], rows)],
    )


def _handle_exits(args) -> Report:
    spec = build_spec(args.group)
    rep = exits_per_sphere(
        spec, args.radius, k=args.k, max_elements=args.max_elements,
        deadline=args.deadline,
    )
    print(f"{args.k}-step exits per sphere in {spec.describe()}")
    for row in rep.rows:
        print(f"  sphere {row.sphere}: exits {row.exit_count}, |Y| {row.y_size}")
    print(f"  max |Y(m)| = {rep.max_y_size}")
    return Report(
        title=f"conjugation exits, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "radius": args.radius,
            "k": args.k,
            "max_y_size": rep.max_y_size,
        },
        tables=[
            Table(
                "exits", ["sphere", "exit_count", "y_size"],
                [[r.sphere, r.exit_count, r.y_size] for r in rep.rows],
            )
        ],
        figures=[
            FigureSpec(
                "exits", "line", "exit counts and boundary pairs per sphere",
                "sphere", "count",
                [r.sphere for r in rep.rows],
                [
                    ("exits", [r.exit_count for r in rep.rows]),
                    ("|Y(m)|", [r.y_size for r in rep.rows]),
                ],
            )
        ],
    )


def _handle_reduce(args) -> Report:
    spec = build_spec(args.group)
    x = parse_element(spec, args.element)
    nx = norm_targeted(spec, x)
    table = enumerate_ball(
        spec, max(nx, 1), max_elements=args.max_elements, deadline=args.deadline
    )
    rep = reduce_conjugate(spec, table, x)
    group = spec.group
    print(f"descent from {rep.start} (norm {rep.start_norm})")
    print(f"  result {group.render(rep.result)} (norm {rep.result_norm}) "
          f"after {len(rep.steps)} step(s)")
    print(f"  conjugator {group.render(rep.conjugator)}")
    return Report(
        title=f"conjugation descent of {rep.start}",
        meta={
            "start": rep.start,
            "start_norm": rep.start_norm,
            "result": group.render(rep.result),
            "result_norm": rep.result_norm,
            "conjugator": group.render(rep.conjugator),
        },
        tables=[
            Table(
                "steps", ["step", "generator"],
                [[i + 1, s] for i, s in enumerate(rep.steps)],
            )
        ],
    )


def _handle_boundary(args) -> Report:
    spec = build_spec(args.group)
    x = parse_element(spec, args.x)
    u = parse_element(spec, args.u)
    v = parse_element(spec, args.v)
    cutoffs = _parse_cutoffs(args.cutoffs)
    rep = conjugacy_graph_boundary(
        spec, x, u, v, cutoffs, window=args.window,
        max_elements=args.max_elements, deadline=args.deadline,
    )
    print(f"conjugacy graph of {rep.x} under u={rep.u}, v={rep.v} "
          f"(window {rep.window}, table radius {rep.table_radius})")
    print(f"  distinct conjugates {rep.distinct_elements}, "
          f"colliding cells {rep.collision_cells}")
    for row in rep.rows:
        print(f"  cutoff {row.cutoff}: vertices {row.vertices}, boundary {row.boundary}")
    tables = [
        Table(
            "profile", ["cutoff", "vertices", "boundary"],
            [[r.cutoff, r.vertices, r.boundary] for r in rep.rows],
        )
    ]
    if rep.collisions:
        tables.append(Table("collisions", ["element", "cells"], [list(c) for c in rep.collisions]))
    return Report(
        title=f"conjugacy boundary profile of {rep.x}",
        meta={
            "x": rep.x, "u": rep.u, "v": rep.v,
            "window": rep.window,
            "table_radius": rep.table_radius,
            "distinct_elements": rep.distinct_elements,
            "collision_cells": rep.collision_cells,
            "lipschitz_edges_checked": rep.lipschitz_edges,
        },
        tables=tables,
        figures=[
            FigureSpec(
                "profile", "line", "conjugacy graph boundary profile",
                "cutoff", "count",
                [r.cutoff for r in rep.rows],
                [
                    ("vertices", [r.vertices for r in rep.rows]),
                    ("boundary", [r.boundary for r in rep.rows]),
                ],
            )
        ],
    )


def _handle_stable_norm(args) -> Report:
    spec = build_spec(args.group)
    x = parse_element(spec, args.element)
    rep = stable_norm(spec, x, args.n_max, limit=args.limit)
    print(f"stable norm samples for {rep.element} in {spec.describe()}")
    for n, value in rep.samples:
        shown = "missing" if value is None else str(value)
        print(f"  |x^{n}| = {shown}")
    print(f"  upper bound {_fmt(rep.upper) if rep.upper is not None else 'none'}")
    print(f"  lower bound {_fmt(rep.lower)}")
    print(f"  verdict     {rep.verdict}")
    rows = [
        [n, value, Fraction(value, n) if value is not None else None]
        for n, value in rep.samples
    ]
    xs = [n for n, value in rep.samples if value is not None]
    ys = [float(Fraction(value, n)) for n, value in rep.samples if value is not None]
    return Report(
        title=f"stable norm of {rep.element}",
        meta={
            "element": rep.element,
            "n_max": rep.n_max,
            "upper": rep.upper,
            "lower": rep.lower,
            "verdict": rep.verdict,
            "note": rep.note,
        },
        tables=[Table("samples", ["n", "norm", "norm_over_n"], rows)],
        figures=[
            FigureSpec(
                "samples", "line", f"|x^n|/n for x = {rep.element}",
                "n", "|x^n|/n", xs, [("per-power bound", ys)],
            )
        ],
    )


def _handle_growth(args) -> Report:
    spec = build_spec(args.group)
    ker = _kernel_of(args, spec)
    rep = growth_series(
        spec, args.radius, filter=ker, max_elements=args.max_elements,
        deadline=args.deadline,
    )
    print(f"growth of {spec.describe()} to radius {args.radius}")
    for n, (s, b) in enumerate(zip(rep.sphere_sizes, rep.ball_sizes)):
        print(f"  n={n}: sphere {s}, ball {b}")
    if rep.fitted_base is not None:
        print(f"  fitted base {rep.fitted_base:.6f} over n in {rep.fit_window}")
    return Report(
        title=f"growth series, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "radius": rep.radius,
            "kernel": ker.describe() if ker else None,
            "fitted_base": rep.fitted_base,
            "fit_window": list(rep.fit_window) if rep.fit_window else None,
        },
        tables=[
            Table(
                "growth", ["n", "ball_size"],
                [[n, b] for n, b in enumerate(rep.ball_sizes)],
            ),
            Table(
                "spheres", ["n", "sphere_size"],
                [[n, s] for n, s in enumerate(rep.sphere_sizes)],
            ),
        ],
        figures=[
            FigureSpec(
                "growth", "line", f"ball sizes, {spec.describe()}",
                "n", "|B(n)|",
                list(range(rep.radius + 1)), [("ball size", rep.ball_sizes)],
                log_y=True,
            )
        ],
    )


def _handle_verify_growth(args) -> Report:
    spec = build_spec(args.group)
    ker = _kernel_of(args, spec)
    rep = verify_negative_curvature_growth(
        spec, ker, args.r_kappa, args.radius, max_elements=args.max_elements,
        deadline=args.deadline,
    )
    print(f"negative-curvature growth chain in {spec.describe()}")
    print(f"  hypothesis kappa < 0 on spheres {args.r_kappa + 1}..{args.radius}: "
          f"{_fmt(rep.hypothesis_holds)}")
    if rep.counterexample:
        print(f"  counterexample: {rep.counterexample}")
    for inst in rep.instances:
        print(f"  r2={inst.r2}: annulus {inst.annulus_size} <= bound {inst.bound}: "
              f"{_fmt(inst.holds)}")
    print(f"  chain holds {_fmt(rep.chain_holds)}; certified {_fmt(rep.certified)}")
    print(f"  guaranteed base squared {_fmt(rep.guaranteed_base_squared)}")
    return Report(
        title=f"curvature-growth certificate, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "kernel": ker.describe() if ker else None,
            "r_kappa": rep.r_kappa,
            "radius": rep.radius,
            "hypothesis_holds": rep.hypothesis_holds,
            "counterexample": rep.counterexample,
            "chain_holds": rep.chain_holds,
            "certified": rep.certified,
            "guaranteed_base_squared": rep.guaranteed_base_squared,
        },
        tables=[
            Table(
                "instances", ["r2", "annulus_size", "bound", "holds"],
                [[i.r2, i.annulus_size, i.bound, i.holds] for i in rep.instances],
            )
        ],
    )


def _handle_closure(args) -> Report:
    spec = build_spec(args.group)
    rep = conjugation_closure(spec, budget=args.budget, deadline=args.deadline)
    print(f"conjugation closure of the generators of {spec.describe()}")
    print(f"  elements {len(rep.elements)}, orbit sizes {rep.orbit_sizes}, "
          f"terminated {_fmt(rep.terminated)}")
    rows = [[i, spec.group.render(y)] for i, y in enumerate(rep.elements)]
    return Report(
        title=f"conjugation closure, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "budget": rep.budget,
            "size": len(rep.elements),
            "orbit_sizes": rep.orbit_sizes,
            "terminated": rep.terminated,
        },
        tables=[Table("closure", ["index", "canonical_key"], rows)],
    )


def _handle_flat_check(args) -> Report:
    spec = build_spec(args.group)
    if args.genset == "extension":
        genset = dinf_extension_genset(spec)
    elif args.genset == "standard":
        genset = spec.gens
    elif args.genset.endswith(".json"):
        genset = load_genset(args.genset, spec)
    else:
        raise ConfigError(
            f"--genset must be 'extension', 'standard', or a JSON config path; "
            f"got {args.genset!r}"
        )
    rep = verify_flat(
        spec, genset, args.radius, args.cutoff,
        max_elements=args.max_elements, deadline=args.deadline,
    )
    print(f"flatness of a {rep.genset_size}-element generating set on {spec.describe()}")
    print(f"  kappa zero beyond cutoff {args.cutoff}: {_fmt(rep.kappa_zero)}")
    print(f"  norms match dihedral image: {_fmt(rep.norms_match)}")
    print(f"  flat: {_fmt(rep.flat)}")
    for failure in rep.failures:
        print(f"  failure: {failure}")
    return Report(
        title=f"flatness check, {spec.describe()}",
        meta={
            "group": spec.describe(),
            "genset_size": rep.genset_size,
            "radius": rep.radius,
            "cutoff": rep.cutoff,
            "kappa_zero": rep.kappa_zero,
            "norms_match": rep.norms_match,
            "flat": rep.flat,
        },
        tables=[Table("failures", ["description"], [[f] for f in rep.failures])],
    )


def _parse_cutoffs(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"cutoff list {text!r} must be comma-separated integers")
    if not values:
        raise ConfigError("cutoff list is empty")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcurv",
        description="exact conjugation-curvature diagnostics on Cayley graph balls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="enumerate a ball and its norms")
    _add_common(p)
    _add_kernel(p)
    p.add_argument("-R", "--radius", type=int, required=True)
    p.set_defaults(handler=_handle_ball)

    p = sub.add_parser("kappa", help="curvature of one element")
    _add_common(p)
    p.add_argument("element", help="word over generator letters or JSON literal")
    p.set_defaults(handler=_handle_kappa)

    p = sub.add_parser("census", help="curvature sign census per sphere")
    _add_common(p)
    _add_kernel(p)
    p.add_argument("-R", "--radius", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="record extremal witnesses")
    p.set_defaults(handler=_handle_census)

    p = sub.add_parser("annulus", help="exact annulus cancellation identity")
    _add_common(p)
    _add_kernel(p)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    p.set_defaults(handler=_handle_annulus)

    p = sub.add_parser("orbit", help="conjugation orbit capped by norm")
    _add_common(p)
    p.add_argument("element")
    p.add_argument("-M", "--cap", type=int, required=True, help="norm cap")
    p.set_defaults(handler=_handle_orbit)

    p = sub.add_parser("exits", help="per-sphere conjugation exit counts")
    _add_common(p)
    p.add_argument("-R", "--radius", type=int, required=True)
    p.add_argument("-k", type=int, default=1, help="conjugator ball radius (default 1)")
    p.set_defaults(handler=_handle_exits)

    p = sub.add_parser("reduce", help="greedy conjugation norm descent")
    _add_common(p)
    p.add_argument("element")
    p.set_defaults(handler=_handle_reduce)

    p = sub.add_parser("boundary-profile", help="conjugacy graph boundary profile")
    _add_common(p)
    p.add_argument("-x", required=True, help="base element")
    p.add_argument("-u", required=True, help="first conjugator")
    p.add_argument("-v", required=True, help="second conjugator")
    p.add_argument("--cutoffs", required=True, help="comma-separated norm cutoffs")
    p.add_argument("--window", type=int, default=None,
                   help="conjugator exponent window (default: max cutoff)")
    p.set_defaults(handler=_handle_boundary)

    p = sub.add_parser("stable-norm", help="bracket the stable norm of an element")
    _add_common(p)
    p.add_argument("element")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--limit", type=int, default=None,
                   help="visited-element limit for each norm search")
    p.set_defaults(handler=_handle_stable_norm)

    p = sub.add_parser("growth", help="exact growth series with a fitted base")
    _add_common(p)
    _add_kernel(p)
    p.add_argument("-R", "--radius", type=int, required=True)
    p.set_defaults(handler=_handle_growth)

    p = sub.add_parser("verify-growth", help="negative-curvature growth certificate")
    _add_common(p)
    _add_kernel(p)
    p.add_argument("--r-kappa", type=int, required=True,
                   help="curvature is hypothesized negative above this norm")
    p.add_argument("-R", "--radius", type=int, required=True)
    p.set_defaults(handler=_handle_verify_growth)

    p = sub.add_parser("closure", help="close the generating set under conjugation")
    _add_common(p)
    p.add_argument("--budget", type=int, default=None,
                   help="maximum number of collected elements")
    p.set_defaults(handler=_handle_closure)

    p = sub.add_parser("flat-check", help="flatness of a dihedral-extension generating set")
    _add_common(p)
    p.add_argument("-R", "--radius", type=int, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--genset", default="extension",
                   help="'extension', 'standard', or a JSON config with generators")
    p.set_defaults(handler=_handle_flat_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        args.deadline = _deadline_of(args)
        report = args.handler(args)
        if args.out:
            formats = ("json", "csv") if args.no_figures else ("json", "csv", "png")
            for path in emit(report, args.out, args.basename or args.command, formats):
                print(f"wrote {path}")
    except GroupCurvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(f"elapsed {time.perf_counter() - started:.3f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
