"""Command line front end.

Subcommands: degrees, canonical, hilbert, lattice, relations, convert,
weyl, strata.  Every command prints either an aligned human-readable
rendering (default) or a single JSON document with the stable envelope
{command, inputs, result, warnings, version}.

Exit codes: 0 success, 2 usage or parse or range error, 3 non-positive
grading, 4 internal cross-check failure, 5 budget exceeded.
"""

import argparse
import json
import sys

from . import __version__
from .errors import (
    BadRange,
    BudgetExceeded,
    CrossCheckFailed,
    MissingIndex,
    NonIntegralCoweight,
    NonPositiveDegree,
    NotPositive,
    UnsupportedType,
    WgrassError,
)
from .exact_linalg import is_column_equivalent
from .grading import (
    GLParams,
    GradingParams,
    degrees,
    dualising_degrees,
    from_gl,
    is_positive,
    is_well_formed,
    param_basis_ambient,
    singular_strata,
    to_gl,
    weyl_act,
)
from .hilbert import DEFAULT_FORMULA_BUDGET, closed_series, weyl_series
from .pluecker import relation_degrees, relations, standard_monomial_count
from .root_data import RepSpec, coweight_lattice

# Orders above this need an explicit --budget for the oracle path.
ORACLE_ORDER_BUDGET = 30


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wgrass",
        description="Exact computations for weighted Grassmannian gradings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    def grading_args(p, need_a=True):
        p.add_argument("-n", type=int, default=None)
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-a", type=_int_list, required=need_a, default=None)

    p = sub.add_parser("degrees", parents=[common],
                       help="coordinate degree table with positivity flags")
    grading_args(p)

    p = sub.add_parser("canonical", parents=[common],
                       help="dualising sheaf degrees and Fano flag")
    grading_args(p)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series")
    grading_args(p)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--method", choices=("closed", "weyl", "oracle", "all"),
                   default=None)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("lattice", parents=[common],
                       help="integral coweight lattice basis")
    p.add_argument("--type", dest="group_type", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--fundamental", required=True,
                   help="an exterior power index for type A, 'standard' for B/D")

    p = sub.add_parser("relations", parents=[common],
                       help="quadratic coordinate relations, optionally graded")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-a", type=_int_list, default=None)

    p = sub.add_parser("convert", parents=[common],
                       help="convert between grading parametrisations")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-k", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-gl", action="store_true")
    group.add_argument("--to-gl", action="store_true")
    p.add_argument("-a", type=_int_list, default=None)
    p.add_argument("--w", type=_int_list, default=None)
    p.add_argument("--u", type=int, default=None)

    p = sub.add_parser("weyl", parents=[common],
                       help="transport a grading along an index permutation")
    grading_args(p)
    p.add_argument("--perm", type=_int_list, required=True,
                   help="one-line notation, 0-indexed")

    p = sub.add_parser("strata", parents=[common],
                       help="potentially singular coordinate strata by prime")
    grading_args(p)
    return parser


def _resolve_params(args):
    if args.a is None:
        raise BadRange("this command needs -a")
    n = args.n if args.n is not None else len(args.a) - 1
    if n != len(args.a) - 1:
        raise BadRange(f"-n {n} disagrees with the {len(args.a)} entries of -a")
    return GradingParams(n, args.k, args.a)


def _poly_payload(poly):
    return [[e, c] for e, c in poly.coeffs]


def cmd_degrees(args):
    p = _resolve_params(args)
    table = degrees(p)
    positive = is_positive(p)
    well_formed = positive and is_well_formed(table)
    result = {
        "n": p.n, "k": p.k, "a": list(p.a),
        "degrees": [{"label": list(I), "degree": d} for I, d in table.items()],
        "positive": positive,
        "well_formed": well_formed,
    }
    lines = [f"T{I}: {d}" for I, d in table.items()]
    lines.append(f"positive: {positive}")
    lines.append(f"well_formed: {well_formed}")
    return result, lines, []


def cmd_canonical(args):
    p = _resolve_params(args)
    dual = dualising_degrees(p)
    warnings = []
    if not dual.well_formed:
        warnings.append("grading is not well-formed; degrees are formal")
    result = {
        "omega_Y": dual.deg_omega_Y,
        "omega_wP": dual.deg_omega_wP,
        "fano": dual.fano,
        "well_formed": dual.well_formed,
    }
    lines = [
        f"deg omega_Y:  {dual.deg_omega_Y}",
        f"deg omega_wP: {dual.deg_omega_wP}",
        f"fano: {dual.fano}",
        f"well_formed: {dual.well_formed}",
    ]
    return result, lines, warnings


def cmd_hilbert(args):
    p = _resolve_params(args)
    order = args.order
    if order < 0:
        raise BadRange("--order must be nonnegative")
    warnings = []
    if args.budget is not None:
        warnings.append(f"budget override in effect: {args.budget}")
    method = args.method
    if method is None:
        method = "all" if p.n <= 4 else "closed"
    oracle_cap = max(ORACLE_ORDER_BUDGET, args.budget or 0)
    series = {}
    closed = weyl = None
    if method in ("closed", "all"):
        closed = closed_series(p, order, budget=args.budget)
        series["closed"] = closed.series
    if method in ("weyl", "all"):
        weyl = weyl_series(p, order, budget=args.budget)
        series["weyl"] = weyl.series
    if method in ("oracle", "all"):
        if order > oracle_cap:
            raise BudgetExceeded(
                f"--order {order} exceeds the oracle budget {oracle_cap}"
            )
        series["oracle"] = standard_monomial_count(p, order)
    if len(set(series.values())) > 1:
        raise CrossCheckFailed(f"series disagree: {series}")
    chosen = closed or weyl
    out = next(iter(series.values()))
    result = {
        "method": method,
        "order": order,
        "series": list(out),
        "numerator": _poly_payload(chosen.numerator) if chosen else None,
        "denominator": _poly_payload(chosen.denominator) if chosen else None,
    }
    lines = [f"series: {', '.join(str(d) for d in out)}"]
    if chosen:
        lines.append(f"numerator coefficients: {_poly_payload(chosen.numerator)}")
        lines.append(f"denominator coefficients: {_poly_payload(chosen.denominator)}")
    lines.append(f"method: {method}")
    return result, lines, warnings


def cmd_lattice(args):
    rep = args.fundamental
    if rep != "standard":
        try:
            rep = int(rep)
        except ValueError:
            raise BadRange(f"--fundamental must be an integer or 'standard', got {rep!r}")
    spec = RepSpec(args.group_type, args.rank, rep)
    lattice = coweight_lattice(spec)
    columns = lattice.basis.columns()
    result = {
        "group_type": spec.group_type,
        "rank": spec.rank,
        "rep": spec.rep,
        "ambient_dim": lattice.ambient_dim,
        "labels": [list(l) if isinstance(l, tuple) else l
                   for l in spec.coordinate_labels],
        "basis": [list(col) for col in columns],
    }
    lines = [f"ambient dimension: {lattice.ambient_dim}",
             f"rank: {lattice.rank}"]
    for i, col in enumerate(columns):
        lines.append(f"basis[{i}]: {list(col)}")
    if spec.group_type == "A":
        gamma = param_basis_ambient(spec.rank, spec.rep)
        match = is_column_equivalent(lattice.basis, gamma)
        if not match:
            raise CrossCheckFailed(
                "coweight lattice does not match the closed-form basis"
            )
        result["matches_gamma_basis"] = True
        lines.append("matches gamma basis: true")
    return result, lines, []


def cmd_relations(args):
    rels = relations(args.n, args.k)
    graded = None
    if args.a is not None:
        p = GradingParams(args.n, args.k, args.a)
        graded = relation_degrees(rels, degrees(p))
    payload = []
    lines = [f"count: {len(rels)}"]
    for i, rel in enumerate(rels):
        entry = {"terms": [[c, list(f1), list(f2)] for c, f1, f2 in rel.terms]}
        text = " ".join(
            f"{'+' if c > 0 else '-'} T{f1}T{f2}" for c, f1, f2 in rel.terms
        ).lstrip("+ ")
        if graded is not None:
            entry["degree"], entry["quasi_homogeneous"] = graded[i]
            text += f"   degree {graded[i][0]}"
        payload.append(entry)
        lines.append(text)
    return {"count": len(rels), "relations": payload}, lines, []


def cmd_convert(args):
    if args.from_gl:
        if args.w is None or args.u is None:
            raise BadRange("--from-gl needs --w and --u")
        n = args.n if args.n is not None else len(args.w) - 1
        p = from_gl(n, args.k, GLParams(args.w, args.u))
        result = {"direction": "from_gl", "w": list(args.w), "u": args.u,
                  "a": list(p.a)}
        lines = [f"a: {','.join(str(x) for x in p.a)}"]
    else:
        if args.a is None:
            raise BadRange("--to-gl needs -a")
        p = _resolve_params(args)
        g = to_gl(p)
        result = {"direction": "to_gl", "a": list(p.a), "w": list(g.w),
                  "u": g.u}
        lines = [f"w: {','.join(str(x) for x in g.w)}", f"u: {g.u}"]
    return result, lines, []


def cmd_weyl(args):
    p = _resolve_params(args)
    q = weyl_act(p, args.perm)
    result = {"perm": list(args.perm), "a": list(p.a), "a_out": list(q.a)}
    lines = [f"a: {','.join(str(x) for x in q.a)}"]
    return result, lines, []


def cmd_strata(args):
    p = _resolve_params(args)
    strata = singular_strata(degrees(p))
    result = {"strata": [
        {"prime": prime, "labels": sorted(list(l) for l in labels)}
        for prime, labels in sorted(strata.items())
    ]}
    lines = []
    for prime, labels in sorted(strata.items()):
        pretty = " ".join(f"T{tuple(l)}" for l in sorted(labels))
        lines.append(f"p = {prime}: {pretty}")
    if not lines:
        lines = ["no strata: all degrees are 1 or coprime"]
    return result, lines, []


HANDLERS = {
    "degrees": cmd_degrees,
    "canonical": cmd_canonical,
    "hilbert": cmd_hilbert,
    "lattice": cmd_lattice,
    "relations": cmd_relations,
    "convert": cmd_convert,
    "weyl": cmd_weyl,
    "strata": cmd_strata,
}


def _echo_inputs(args):
    skip = {"command", "format"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, lines, warnings = HANDLERS[args.command](args)
    except (NotPositive, NonPositiveDegree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CrossCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (BadRange, UnsupportedType, MissingIndex, NonIntegralCoweight,
            WgrassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "machine":
        envelope = {
            "command": args.command,
            "inputs": _echo_inputs(args),
            "result": result,
            "warnings": warnings,
            "version": __version__,
        }
        print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
    else:
        for w in warnings:
            print(f"warning: {w}")
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
