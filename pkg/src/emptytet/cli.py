"""Command-line interface.

Subcommands: classify, normalize, enumerate, points, verify.  All output
is UTF-8 with LF line endings and is byte-stable for fixed inputs and
flags; wall-clock timings therefore go to stderr as `#` comment lines.

Exit codes: 0 success, 1 a verification counterexample or an oracle
disagreement was found, 2 usage or input error.
"""

import argparse
import csv
import json
import sys

from .geometry import (
    Tetrahedron,
    bruteforce_verdicts,
    parallelepiped_interior_points,
    volume6,
)
from .normalize import NotNormalizableError, canonicalize
from .verify import (
    verify_coplanarity,
    verify_floor_steps,
    verify_normalization,
    verify_white,
)
from .white import empty_forms, is_clean_form, satisfied_clause, white_empty

SCHEMA_VERSION = 1

_JSON_INT_BOUND = 2**53


def _check_json_ints(obj) -> None:
    """Reject integers JSON consumers cannot hold exactly (|v| >= 2^53)."""
    if isinstance(obj, bool):
        return
    if isinstance(obj, int):
        if abs(obj) >= _JSON_INT_BOUND:
            raise ValueError(f"integer {obj} does not fit the 2^53 JSON bound")
    elif isinstance(obj, dict):
        for value in obj.values():
            _check_json_ints(value)
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            _check_json_ints(value)


def _print_json(payload: dict) -> None:
    _check_json_ints(payload)
    print(json.dumps(payload, separators=(", ", ": ")))


def _fmt_vec(p) -> str:
    return f"({p[0]}, {p[1]}, {p[2]})"


def _form_payload(form) -> dict:
    return {"a": form.a, "b": form.b, "c": form.c, "d": form.d}


# Which plane of the canonical coordinates carries the interior points,
# by the unit-parameter clause that makes the form empty.
_CLAUSE_PLANE = {"a=1": "x=1", "b=1": "y=1", "d=1": "x+y-z=1", "c=1": "c=1"}


def _map_payload(lmap) -> dict:
    return {
        "matrix": [list(row) for row in lmap.matrix],
        "translation": list(lmap.translation),
    }


def _read_tetrahedron(args) -> Tetrahedron:
    if args.file is not None:
        if args.coords:
            raise ValueError("give coordinates either inline or via --file, not both")
        with open(args.file, encoding="utf-8") as fh:
            tokens = fh.read().split()
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise ValueError(f"--file {args.file} must contain whitespace-separated integers")
    else:
        values = args.coords
    if len(values) != 12:
        raise ValueError(f"expected 12 integers (x y z for 4 vertices), got {len(values)}")
    v0, v1, v2, v3 = (tuple(values[i : i + 3]) for i in range(0, 12, 3))
    return Tetrahedron(v0, v1, v2, v3)


def _cmd_classify(args) -> int:
    t = _read_tetrahedron(args)
    try:
        result = canonicalize(t)
    except NotNormalizableError:
        result = None
    form = result.form if result is not None else None
    clean = form is not None and is_clean_form(form)
    empty = form is not None and white_empty(form)
    interior = plane = None
    if empty:
        interior = parallelepiped_interior_points(form.a, form.b, form.c)
        plane = _CLAUSE_PLANE[satisfied_clause(form)]
    oracle = None
    if args.oracle:
        oracle_empty, oracle_clean = bruteforce_verdicts(t)
        oracle = {
            "empty": oracle_empty,
            "clean": oracle_clean,
            "agrees": oracle_empty == empty and oracle_clean == clean,
        }
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "classify",
            "vertices": [list(p) for p in t.vertices()],
            "volume6": volume6(t),
            "clean": clean,
            "empty": empty,
            "canonical_form": _form_payload(form) if form is not None else None,
            "map": _map_payload(result.map) if result is not None else None,
            "plane": plane,
            "interior_points": [list(p) for p in interior] if interior is not None else None,
            "oracle": oracle,
        }
        _print_json(payload)
    else:
        print("vertices:", " ".join(_fmt_vec(p) for p in t.vertices()))
        print("volume6:", volume6(t))
        print("clean:", "yes" if clean else "no")
        print("empty:", "yes" if empty else "no")
        if form is not None:
            print(f"canonical form: a={form.a} b={form.b} c={form.c} d={form.d}")
            print("map matrix rows:", " ".join(_fmt_vec(r) for r in result.map.matrix))
            print("map translation:", _fmt_vec(result.map.translation))
        else:
            print("canonical form: none (not normalizable)")
        if empty:
            print("plane:", plane)
            print(
                "interior points (canonical coordinates):",
                " ".join(_fmt_vec(p) for p in interior) if interior else "none",
            )
        if oracle is not None:
            print(
                "oracle: empty={} clean={} agreement={}".format(
                    *("yes" if v else "no" for v in (oracle["empty"], oracle["clean"], oracle["agrees"]))
                )
            )
    if oracle is not None and not oracle["agrees"]:
        print(
            "oracle disagreement: fast criteria say empty={} clean={}, oracle says empty={} clean={}".format(
                empty, clean, oracle["empty"], oracle["clean"]
            ),
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_normalize(args) -> int:
    t = _read_tetrahedron(args)
    result = canonicalize(t)
    form = result.form
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "normalize",
        "vertices": [list(p) for p in t.vertices()],
        "form": _form_payload(form),
        "map": _map_payload(result.map),
        "image": [list(result.map(p)) for p in t.vertices()],
    }
    if args.check:
        image = {result.map(p) for p in t.vertices()}
        expected = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (form.a, form.b, form.c)}
        if image != expected:
            print(f"check failed: map sends vertices to {sorted(image)}", file=sys.stderr)
            return 1
        payload["check"] = "ok"
    _print_json(payload)
    return 0


def _cmd_enumerate(args) -> int:
    forms = empty_forms(args.c)
    rows = [
        {"a": f.a, "b": f.b, "d": f.d, "clause": satisfied_clause(f)} for f in forms
    ]
    if args.json:
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "enumerate",
                "c": args.c,
                "count": len(rows),
                "forms": rows,
            }
        )
    elif args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["a", "b", "d", "clause"])
        for row in rows:
            writer.writerow([row["a"], row["b"], row["d"], row["clause"]])
    else:
        print("a b d clause")
        for row in rows:
            print(row["a"], row["b"], row["d"], row["clause"])
    return 0


def _cmd_points(args) -> int:
    points = parallelepiped_interior_points(args.a, args.b, args.c)
    if args.json:
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "points",
                "a": args.a,
                "b": args.b,
                "c": args.c,
                "count": len(points),
                "points": [list(p) for p in points],
            }
        )
    elif args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["x", "y", "z"])
        for p in points:
            writer.writerow(list(p))
    else:
        for p in points:
            print(p[0], p[1], p[2])
    return 0


def _run_suite(name: str, args):
    if name == "white":
        return verify_white(**_given(c_max=args.max_c))
    if name == "coplanar":
        return verify_coplanarity(**_given(c_max=args.max_c))
    if name == "fn":
        return verify_floor_steps(**_given(c_max=args.max_c))
    return verify_normalization(
        **_given(trials=args.trials, seed=args.seed, c_max=args.max_c)
    )


def _given(**kwargs) -> dict:
    """Only explicitly provided options; absent ones keep suite defaults."""
    return {key: value for key, value in kwargs.items() if value is not None}


_SUITE_ORDER = ("white", "coplanar", "fn", "normalize")


def _cmd_verify(args) -> int:
    if args.suite:
        requested = set(args.suite)
        names = [name for name in _SUITE_ORDER if name in requested]
    else:
        names = list(_SUITE_ORDER)
    reports = []
    for name in names:
        report = _run_suite(name, args)
        reports.append(report)
        print(f"# suite {name}: {report.duration_seconds:.2f}s", file=sys.stderr)
    ok = all(report.ok for report in reports)
    if args.json:
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "ok": ok,
                "reports": [report.to_dict() for report in reports],
            }
        )
    else:
        for report in reports:
            params = " ".join(f"{k}={v}" for k, v in report.params.items())
            print(
                f"suite {report.suite} ({params}): {report.cases} cases,",
                "ok" if report.ok else "FAIL",
            )
            for check, tally in report.tallies.items():
                print(f"  {check}: {tally.passed} passed, {tally.failed} failed")
            for line in report.counterexamples:
                print(f"  counterexample: {line}")
        print("overall:", "ok" if ok else "FAIL")
    return 0 if ok else 1


def _add_vertex_arguments(sub) -> None:
    sub.add_argument(
        "coords",
        nargs="*",
        type=int,
        metavar="N",
        help="12 integers: x y z for each of the four vertices",
    )
    sub.add_argument("--file", help="read the 12 integers from a file (one vertex per line)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emptytet",
        description="Classify, normalize and verify empty/clean lattice tetrahedra in Z^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "classify",
        help="decide emptiness and cleanliness of a tetrahedron",
        description="Decide whether the tetrahedron is empty and/or clean; "
        "reports the canonical form, witnessing map, and (for empty inputs) "
        "the coplanar interior points of the spanned parallelepiped in "
        "canonical coordinates.",
    )
    _add_vertex_arguments(p)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force lattice scan; exit 1 on disagreement",
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "normalize",
        help="reduce a tetrahedron to standard form T(a, b, c)",
        description="Emit the canonical form and the witnessing affine "
        "unimodular map as JSON.",
    )
    _add_vertex_arguments(p)
    p.add_argument(
        "--check",
        action="store_true",
        help="re-apply the map and verify the image is the standard form",
    )
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser(
        "enumerate",
        help="list all empty forms T(a, b, c) for a given c",
        description="List every (a, b) with T(a, b, c) empty, with the "
        "fourth parameter d and the unit-parameter clause that applies.",
    )
    p.add_argument("c", type=int, help="the third parameter (six times the volume)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "points",
        help="interior lattice points of the parallelepiped of T(a, b, c)",
        description="Print the c - 1 interior lattice points of the "
        "parallelepiped spanned by e1, e2 and (a, b, c); requires "
        "gcd(a, c) = gcd(b, c) = 1.",
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser(
        "verify",
        help="run exhaustive verification suites",
        description="Run the verification suites (white, coplanar, fn, "
        "normalize) and report tallies and counterexamples; exits 1 if any "
        "counterexample is found.",
    )
    p.add_argument(
        "--suite",
        action="append",
        choices=_SUITE_ORDER,
        help="suite to run (repeatable; default: all)",
    )
    p.add_argument("--max-c", type=int, help="largest c to sweep")
    p.add_argument("--trials", type=int, help="normalization round-trip count")
    p.add_argument("--seed", type=int, help="seed for the normalization suite")
    p.add_argument("--json", action="store_true", help="emit JSON reports")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
