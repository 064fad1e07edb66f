"""Command-line interface.

Verbs mirror the library: ``gens``, ``membership``, ``frobenius``,
``apery``, ``properties``, ``solve`` and the brute-force ``oracle``
counterparts.  Output is deterministic (points in graded-lexicographic
order) in either text or JSON form.

Exit codes: 0 success, 1 computational failure (cap exceeded, unsupported
case, window too small), 2 malformed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import (
    DimensionMismatch,
    InvalidInequality,
    ModularInequality,
    SemigroupError,
    inequality_from_json,
    normalize,
    sort_points,
)
from .diophantine import DiophSystem, minimal_solutions
from .frobenius import frobenius_vectors
from .general import construction_trace, minimal_generators_general
from .oracle import Window, brute_members, brute_min_frobenius, closure_in_window
from .plane import GeneratorSet, minimal_generators
from .properties import apery_intersection, property_report


class UsageError(Exception):
    pass


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    try:
        parts = [Fraction(entry.strip()) for entry in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse vector {text!r}") from exc
    if not parts:
        raise UsageError("empty vector")
    return tuple(parts)


def _parse_window(text: str) -> Window:
    try:
        bounds = tuple(int(entry.strip()) for entry in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse window {text!r}") from exc
    return Window(bounds)


def _load_inequality(args) -> ModularInequality:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read inequality from {args.input}: {exc}")
        try:
            return inequality_from_json(data)
        except (InvalidInequality, DimensionMismatch, ValueError, TypeError) as exc:
            raise UsageError(str(exc))
    if args.f is None or args.g is None or args.b is None:
        raise UsageError("provide --f, --g and --b, or --input FILE")
    try:
        return normalize(_parse_vector(args.f), _parse_vector(args.g),
                         Fraction(args.b))
    except (InvalidInequality, DimensionMismatch, ValueError,
            ZeroDivisionError) as exc:
        raise UsageError(str(exc))


def _resolve_method(args, ineq: ModularInequality) -> str:
    method = args.method
    if ineq.p != 2 and method != "general":
        raise UsageError(
            "the geometric method works in dimension 2; "
            "pass --method general for higher dimensions")
    return method


def _points(points) -> list[list[int]]:
    return [list(pt) for pt in points]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _generator_payload(gens: GeneratorSet) -> dict:
    return {"trivial": gens.trivial, "generators": _points(gens.points)}


def _trace_payload(trace) -> dict:
    return {
        "face_generators": _points(trace.face_generators),
        "face_basis": _points(trace.face_basis),
        "cone_basis": _points(trace.cone_basis),
        "cone_partition": {str(k): _points(v)
                           for k, v in trace.cone_partition.items()},
        "chain": [_points(step) for step in trace.chain],
        "core": _points(trace.core),
        "box_members": _points(trace.box_members),
        "slab_minima": {f"{d},{k}": _points(v)
                        for (d, k), v in sorted(trace.slab_minima.items())},
        "candidates": _points(trace.candidates),
        "generators": _generator_payload(trace.generators),
    }


def _run_gens(args) -> None:
    ineq = _load_inequality(args)
    method = _resolve_method(args, ineq)
    if args.trace and method != "general":
        raise UsageError("--trace is only available with --method general")
    if method == "general":
        if args.trace:
            trace = construction_trace(ineq)
            gens = trace.generators
            payload = _generator_payload(gens)
            payload["trace"] = _trace_payload(trace)
        else:
            gens = minimal_generators_general(ineq)
            payload = _generator_payload(gens)
    else:
        gens = minimal_generators(ineq)
        payload = _generator_payload(gens)
    lines = [f"trivial: {str(gens.trivial).lower()}",
             "generators: " + " ".join(str(tuple(pt)) for pt in gens.points)]
    if args.trace and args.format == "text":
        lines.append("trace: use --format json to serialize the trace")
    _emit(args, payload, lines)


def _run_membership(args) -> None:
    ineq = _load_inequality(args)
    if args.point is None:
        raise UsageError("membership needs --point")
    point = tuple(int(c) for c in _parse_vector(args.point))
    if len(point) != ineq.p:
        raise UsageError(
            f"point has {len(point)} coordinates, inequality has {ineq.p}")
    verdict = ineq.member(point)
    _emit(args, {"point": list(point), "member": verdict},
          [f"member: {str(verdict).lower()}"])


def _run_frobenius(args) -> None:
    ineq = _load_inequality(args)
    report = frobenius_vectors(ineq)
    payload = {
        "delta_size": len(report.delta),
        "all_in_delta": _points(report.frobenius_vectors),
        "minimal": _points(report.minimal),
        "group_basis": _points(report.group_basis),
    }
    lines = [
        f"delta size: {len(report.delta)}",
        "frobenius vectors: " + " ".join(str(tuple(p)) for p in report.frobenius_vectors),
        "minimal: " + " ".join(str(tuple(p)) for p in report.minimal),
    ]
    _emit(args, payload, lines)


def _run_apery(args) -> None:
    ineq = _load_inequality(args)
    data = apery_intersection(ineq)
    payload = {
        "period": list(data.period),
        "axis_generator": list(data.axis_generator),
        "elements": _points(data.elements),
        "maximal": _points(data.maximal),
    }
    lines = [
        f"period: {tuple(data.period)}",
        f"axis generator: {tuple(data.axis_generator)}",
        "elements: " + " ".join(str(tuple(p)) for p in data.elements),
        "maximal: " + " ".join(str(tuple(p)) for p in data.maximal),
    ]
    _emit(args, payload, lines)


def _run_properties(args) -> None:
    ineq = _load_inequality(args)
    report = property_report(ineq)
    witnesses = {}
    for key, value in report.witnesses.items():
        if value is None or isinstance(value, bool):
            witnesses[key] = value
        elif isinstance(value, tuple) and value and isinstance(value[0], tuple):
            witnesses[key] = _points(value)
        elif isinstance(value, tuple):
            witnesses[key] = list(value)
        else:
            witnesses[key] = value
    payload = {
        "cohen_macaulay": report.cohen_macaulay,
        "gorenstein": report.gorenstein,
        "buchsbaum": report.buchsbaum,
        "witnesses": witnesses,
    }
    verdict = {True: "true", False: "false", None: "not determined"}
    lines = [
        f"cohen_macaulay: {verdict[report.cohen_macaulay]}",
        f"gorenstein: {verdict[report.gorenstein]}",
        f"buchsbaum: {verdict[report.buchsbaum]}",
    ]
    _emit(args, payload, lines)


def _run_solve(args) -> None:
    if not args.input:
        raise UsageError("solve needs --input FILE with a system description")
    try:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
        system = DiophSystem.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read system: {exc}")
    result = minimal_solutions(system)
    payload = {
        "solutions": _points(result.points),
        "homogeneous": result.homogeneous,
    }
    lines = ["solutions: " + " ".join(str(tuple(p)) for p in result.points)]
    _emit(args, payload, lines)


def _run_oracle(args) -> None:
    ineq = _load_inequality(args)
    if args.window is None:
        raise UsageError("oracle verbs need --window")
    window = _parse_window(args.window)
    if args.oracle_verb == "members":
        members = sort_points(brute_members(ineq, window))
        _emit(args, {"members": _points(members)},
              ["members: " + " ".join(str(tuple(p)) for p in members)])
    elif args.oracle_verb == "frobenius":
        minimal = sort_points(brute_min_frobenius(ineq, window))
        _emit(args, {"minimal": _points(minimal)},
              ["minimal: " + " ".join(str(tuple(p)) for p in minimal)])
    else:
        method = _resolve_method(args, ineq)
        if method == "general":
            gens = minimal_generators_general(ineq)
        else:
            gens = minimal_generators(ineq)
        reachable = closure_in_window(gens.points, window)
        members = brute_members(ineq, window) | {(0,) * ineq.p}
        missing = sort_points(members - reachable)
        extra = sort_points(reachable - members)
        payload = {
            "agree": not missing and not extra,
            "generators": _points(gens.points),
            "missing": _points(missing),
            "extra": _points(extra),
        }
        lines = [f"agree: {str(payload['agree']).lower()}"]
        _emit(args, payload, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propmod",
        description="Affine semigroups of modular inequalities f(x) mod b <= g(x)")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, window: bool = False) -> None:
        p.add_argument("--f", help="comma-separated f coefficients, rationals allowed")
        p.add_argument("--g", help="comma-separated g coefficients")
        p.add_argument("--b", help="modulus, integer or rational")
        p.add_argument("--input", help="JSON file with keys f, g, b")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if window:
            p.add_argument("--window", help="comma-separated inclusive bounds")

    gens = sub.add_parser("gens", help="minimal generating set")
    common(gens)
    gens.add_argument("--method", choices=("geometric", "general"),
                      default="geometric")
    gens.add_argument("--trace", action="store_true",
                      help="record the intermediate sets (general method)")

    membership = sub.add_parser("membership", help="test one point")
    common(membership)
    membership.add_argument("--point", help="comma-separated coordinates")

    for name, helptext in (("frobenius", "Frobenius vectors"),
                           ("apery", "Apery-set intersection"),
                           ("properties", "ring-theoretic properties")):
        p = sub.add_parser(name, help=helptext)
        common(p)

    solve = sub.add_parser("solve", help="minimal solutions of a linear system")
    solve.add_argument("--input", required=False,
                       help="JSON file describing the system")
    solve.add_argument("--format", choices=("text", "json"), default="text")

    oracle = sub.add_parser("oracle", help="brute-force reference computations")
    oracle.add_argument("oracle_verb", choices=("members", "frobenius", "gens"))
    common(oracle, window=True)
    oracle.add_argument("--method", choices=("geometric", "general"),
                        default="geometric")

    return parser


_RUNNERS = {
    "gens": _run_gens,
    "membership": _run_membership,
    "frobenius": _run_frobenius,
    "apery": _run_apery,
    "properties": _run_properties,
    "solve": _run_solve,
    "oracle": _run_oracle,
}


_VALUE_FLAGS = {"--f", "--g", "--b", "--point", "--window"}


def _merge_values(argv: list[str]) -> list[str]:
    # join "--g -1,-1" into "--g=-1,-1" so leading minus signs survive argparse
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_values(list(argv)))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        _RUNNERS[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (InvalidInequality, DimensionMismatch) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
