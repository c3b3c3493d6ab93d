"""Command-line front end.

Machine-readable JSON goes to stdout, a one-line human summary to
stderr.  Exit codes: 0 success, 1 domain-false (not equivalent, not a
member, ...), 2 domain errors (JSON error object on stdout), 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .cf_core import (RegularCF, TailDecision, apply_gl2, canonicalize,
                      cf_to_matrix, eval_cf, expand_rational, tail_equivalent)
from .errors import LamcfError, NoAdmissibleTerm
from .gl2 import (axis_of, classify, decompose_to_cf_generators, fixed_points,
                  in_hecke)
from .hecke_surface import index_bruteforce, surface_invariants
from .invariants import (InvariantDecision, enumerate_delta, invariant_equal,
                         invariant_of_stream, polygon_areas, validate_delta)
from .legendre import (legendre_stream, parse_predicate, search_bound_from_env,
                       steps_from_terms)
from .render import RenderSpec, render_axes

_DECISION_EXIT = {
    TailDecision.EQUIVALENT: 0,
    TailDecision.NOT_EQUIVALENT: 1,
    TailDecision.UNKNOWN: 2,
    InvariantDecision.EQUAL: 0,
    InvariantDecision.NOT_EQUAL: 1,
    InvariantDecision.UNKNOWN: 2,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cf_arg(text: str) -> RegularCF:
    """Fraction argument: inline JSON, a bare [..] list, or @file."""
    text = text.strip()
    if text.startswith("@"):
        text = _read_text(text[1:])
    return jsonio.cf_from_obj(json.loads(text))


# -- cf ---------------------------------------------------------------


def _cmd_cf_expand(args) -> int:
    cf = expand_rational(Fraction(args.rational))
    _emit(jsonio.cf_to_obj(cf))
    _note(f"{args.rational} = {cf}")
    return 0


def _cmd_cf_eval(args) -> int:
    cf = _cf_arg(args.cf)
    value = eval_cf(cf, args.depth)
    _emit(jsonio.fraction_to_obj(value))
    _note(f"{cf} -> {value}")
    return 0


def _cmd_cf_canon(args) -> int:
    cf = canonicalize(_cf_arg(args.cf))
    _emit(jsonio.cf_to_obj(cf))
    _note(f"canonical: {cf}")
    return 0


def _cmd_cf_equiv(args) -> int:
    decision = tail_equivalent(_cf_arg(args.left), _cf_arg(args.right))
    _emit({"decision": decision.value})
    _note(f"tail comparison: {decision.value}")
    return _DECISION_EXIT[decision]


def _cmd_cf_apply(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    cf = apply_gl2(m, _cf_arg(args.cf))
    _emit(jsonio.cf_to_obj(cf))
    _note(f"image: {cf}")
    return 0


def _cmd_cf_matrix(args) -> int:
    m = cf_to_matrix(_cf_arg(args.cf), args.depth)
    _emit(jsonio.mat_to_obj(m))
    _note(f"depth {args.depth}: {m}, det {m.det}")
    return 0


# -- gl2 --------------------------------------------------------------


def _cmd_gl2_classify(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    cls = classify(m)
    _emit({"class": cls.value, "trace": jsonio.int_out(m.trace)})
    _note(f"{m}: {cls.value}")
    return 0


def _cmd_gl2_fix(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    pts = fixed_points(m)
    _emit({"fixed_points": [jsonio.point_to_obj(p) for p in pts]})
    _note(f"{len(pts)} boundary fixed point(s)")
    return 0


def _cmd_gl2_axis(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    axis = axis_of(m)
    _emit(jsonio.axis_to_obj(axis))
    _note(f"axis of {m}: length {axis.length:.6f}")
    return 0


def _cmd_gl2_member(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    member = in_hecke(m, args.level)
    _emit({"member": member, "level": args.level})
    _note(f"{m} {'in' if member else 'not in'} level-{args.level} subgroup")
    return 0 if member else 1


def _cmd_gl2_decompose(args) -> int:
    m = jsonio.mat_from_text(args.matrix)
    terms, p0 = decompose_to_cf_generators(m)
    _emit({"terms": [jsonio.int_out(t) for t in terms], "p0": jsonio.int_out(p0)})
    _note(f"{m} = T({p0}) * {' * '.join(f'G({t})' for t in terms) or 'I'}")
    return 0


# -- genus ------------------------------------------------------------


def _cmd_genus(args) -> int:
    si = surface_invariants(args.level)
    obj = jsonio.surface_to_obj(si)
    if args.check:
        obj["index_bruteforce"] = index_bruteforce(args.level)
    _emit(obj)
    _note(f"level {si.level}: genus {si.genus}, index {si.index}, "
          f"cusps {si.cusps}, e2 {si.elliptic2}, e3 {si.elliptic3}")
    return 0


# -- legendre ---------------------------------------------------------


def _cmd_legendre_run(args) -> int:
    pred = parse_predicate(args.pred)
    bound = args.search_bound
    if bound is None:
        bound = search_bound_from_env()
    steps = []
    try:
        for step in legendre_stream(args.p0, pred, args.steps, bound,
                                    args.level):
            steps.append(step)
            _emit(jsonio.step_to_obj(step))
    except NoAdmissibleTerm as err:
        _emit({"error": err.code, "detail": str(err)})
        _note(f"stopped after {len(steps)} step(s): {err}")
        if args.figure and steps:
            from .figures import save_stream_figure
            save_stream_figure(steps, args.figure)
        return 2
    _note(f"{len(steps)} step(s), final trace "
          f"{steps[-1].trace if steps else 'n/a'}")
    if args.figure:
        from .figures import save_stream_figure
        save_stream_figure(steps, args.figure)
        _note(f"figure written to {args.figure}")
    return 0


# -- delta ------------------------------------------------------------


def _cmd_delta_check(args) -> int:
    delta = validate_delta(jsonio.parse_parts(args.parts), args.genus)
    _emit({
        "parts": [jsonio.int_out(d) for d in delta.doubled],
        "genus": delta.genus,
        "polygon_sizes": list(delta.polygon_sizes),
        "areas_pi": [jsonio.int_out(a) for a in polygon_areas(delta)],
    })
    _note(f"valid: {delta} at genus {delta.genus}, "
          f"total area {sum(polygon_areas(delta))}*pi")
    return 0


def _cmd_delta_enumerate(args) -> int:
    data = enumerate_delta(args.genus)
    _emit({
        "genus": args.genus,
        "count": len(data),
        "data": [[jsonio.int_out(p) for p in d.doubled] for d in data],
    })
    _note(f"{len(data)} singularity data at genus {args.genus}")
    return 0


# -- invariant --------------------------------------------------------


def _cmd_invariant_pack(args) -> int:
    genus = surface_invariants(args.level).genus
    from .errors import InvalidDeltaForLevel, SumMismatch
    from .invariants import SingularityData
    try:
        delta = SingularityData.from_halves(jsonio.parse_parts(args.delta),
                                            genus)
    except SumMismatch as err:
        # the genus came from the level here, so blame the level fit
        raise InvalidDeltaForLevel(
            f"level {args.level} surface has genus {genus}: {err}") from err
    if args.terms is not None:
        text = args.terms.strip()
        if text.startswith("["):
            terms = [jsonio.int_in(t) for t in json.loads(text)]
        else:
            terms = [int(t) for t in text.split(",")]
        steps = steps_from_terms(terms, args.level)
    else:
        steps = [jsonio.step_from_obj(json.loads(line))
                 for line in _read_text(args.stream).splitlines()
                 if line.strip() and not line.lstrip().startswith('{"error"')]
    inv = invariant_of_stream(steps, delta, args.level)
    _emit(jsonio.invariant_to_obj(inv))
    _note(f"invariant at level {args.level}: theta {inv.theta}, "
          f"delta {inv.delta}")
    return 0


def _cmd_invariant_compare(args) -> int:
    one = jsonio.invariant_from_obj(json.loads(_read_text(args.left)))
    other = jsonio.invariant_from_obj(json.loads(_read_text(args.right)))
    decision = invariant_equal(one, other)
    _emit({"decision": decision.value})
    _note(f"invariant comparison: {decision.value}")
    return _DECISION_EXIT[decision]


# -- render -----------------------------------------------------------


def _cmd_render_axes(args) -> int:
    try:
        x_min_s, x_max_s, height_s = args.viewport.split(",")
        viewport = (float(x_min_s), float(x_max_s), float(height_s))
    except ValueError:
        raise UsageError(f"bad viewport {args.viewport!r}; use xmin,xmax,height")
    spec = RenderSpec(
        x_min=viewport[0], x_max=viewport[1], height=viewport[2],
        stroke_width=args.stroke_width,
        matrices=tuple(jsonio.mat_from_text(t) for t in args.matrices),
        orbit_depth=args.orbit,
    )
    svg = render_axes(spec)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    _emit({"svg_file": args.output, "matrices": len(spec.matrices),
           "bytes": len(svg.encode())})
    _note(f"wrote {args.output}")
    return 0


# -- parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lamcf", description=__doc__)
    top = parser.add_subparsers(dest="command")

    cf = top.add_parser("cf", help="continued fractions").add_subparsers(
        dest="subcommand")
    p = cf.add_parser("expand", help="expand a nonnegative rational")
    p.add_argument("rational", help="value like 355/113")
    p.set_defaults(func=_cmd_cf_expand)
    p = cf.add_parser("eval", help="convergent value at a depth")
    p.add_argument("cf", help="fraction JSON, bare [..] list, or @file")
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=_cmd_cf_eval)
    p = cf.add_parser("canon", help="canonical form")
    p.add_argument("cf")
    p.set_defaults(func=_cmd_cf_canon)
    p = cf.add_parser("equiv", help="tail equivalence of two fractions")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_cf_equiv)
    p = cf.add_parser("apply", help="apply a unimodular matrix")
    p.add_argument("matrix", help="a,b,c,d or matrix JSON")
    p.add_argument("cf")
    p.set_defaults(func=_cmd_cf_apply)
    p = cf.add_parser("matrix", help="matrix form at a depth")
    p.add_argument("cf")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=_cmd_cf_matrix)

    gl2 = top.add_parser("gl2", help="2x2 matrix geometry").add_subparsers(
        dest="subcommand")
    p = gl2.add_parser("classify", help="isometry trichotomy")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_gl2_classify)
    p = gl2.add_parser("fix", help="boundary fixed points")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_gl2_fix)
    p = gl2.add_parser("axis", help="axis endpoints and length")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_gl2_axis)
    p = gl2.add_parser("member", help="level-subgroup membership")
    p.add_argument("matrix")
    p.add_argument("level", type=int)
    p.set_defaults(func=_cmd_gl2_member)
    p = gl2.add_parser("decompose", help="generator-word decomposition")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_gl2_decompose)

    p = top.add_parser("genus", help="surface invariants at a level")
    p.add_argument("level", type=int)
    p.add_argument("--check", action="store_true",
                   help="cross-check the index by brute force")
    p.set_defaults(func=_cmd_genus)

    legendre = top.add_parser("legendre", help="construction streams") \
        .add_subparsers(dest="subcommand")
    p = legendre.add_parser("run", help="run a stream, one JSON line per step")
    p.add_argument("--p0", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--pred", default="hyperbolic",
                   help="hyperbolic, odd, even, or modM=R")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--search-bound", type=int, default=None,
                   help="overrides LAMCF_SEARCH_BOUND and the built-in default")
    p.add_argument("--figure", default=None,
                   help="also write a matplotlib summary figure to this path")
    p.set_defaults(func=_cmd_legendre_run)

    delta = top.add_parser("delta", help="singularity data").add_subparsers(
        dest="subcommand")
    p = delta.add_parser("check", help="validate singularity orders")
    p.add_argument("parts", help="half-integer orders like 3/2,1/2")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=_cmd_delta_check)
    p = delta.add_parser("enumerate", help="all data at a genus")
    p.add_argument("genus", type=int)
    p.set_defaults(func=_cmd_delta_enumerate)

    inv = top.add_parser("invariant", help="complete invariants") \
        .add_subparsers(dest="subcommand")
    p = inv.add_parser("pack", help="package a stream as an invariant")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--delta", required=True, help="half-integer orders")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--terms",
                     help="term sequence, comma-separated or a JSON list")
    src.add_argument("--stream", help="JSON-lines file from 'legendre run'")
    p.set_defaults(func=_cmd_invariant_pack)
    p = inv.add_parser("compare", help="three-valued equality")
    p.add_argument("left", help="invariant JSON file (or - for stdin)")
    p.add_argument("right")
    p.set_defaults(func=_cmd_invariant_compare)

    render = top.add_parser("render", help="SVG output").add_subparsers(
        dest="subcommand")
    p = render.add_parser("axes", help="deterministic SVG of axes")
    p.add_argument("matrices", nargs="+", help="matrices a,b,c,d")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--viewport", default="-3,3,2",
                   help="xmin,xmax,height in half-plane units")
    p.add_argument("--stroke-width", type=float, default=1.5)
    p.add_argument("--orbit", type=int, default=0,
                   help="also draw translate conjugates up to this depth")
    p.set_defaults(func=_cmd_render_axes)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            raise UsageError("missing subcommand (try --help)")
        return args.func(args)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 64
    except LamcfError as err:
        _emit({"error": err.code, "detail": str(err)})
        _note(f"error: {err}")
        return 2
    except (ValueError, ZeroDivisionError, json.JSONDecodeError, OSError) as err:
        _emit({"error": "invalid_input", "detail": str(err)})
        _note(f"error: {err}")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
