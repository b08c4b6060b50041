"""Command line front door.

Four subcommands: `mutate` rewrites a quiver file, `verify` runs a named
check suite and prints a JSON report, `render` draws an angulation file,
`serve` starts the HTTP session service.  Exit codes: 0 all checks pass,
1 a verification failed, 2 the input could not be used.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import random
import sys

from angulate.correspondence import (
    angulation_quiver,
    check_bijection,
    check_commutation,
    colour_sums,
    commutation_sweep,
)
from angulate.polygon import (
    angulation_from_json,
    angulation_to_svg,
    enumerate_angulations,
    random_angulation,
)
from angulate.presentation import inverse_chain, mutation_hom, verify_hom
from angulate.quiver import (
    from_arrows,
    linear_quiver,
    mutate_algorithm,
    mutate_path,
    mutation_reachable,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
    validate,
)

SUITES = ("commutation", "colour-sums", "homomorphisms", "bijection", "order")

EXHAUSTIVE_VERTEX_LIMIT = 14
RANDOM_VERTEX_LIMIT = 26
RANDOM_CASES = 100

# Triangle with one side recoloured off the mutation class; mutating at 2
# three times lands elsewhere, the expected negative for --suite order.
THREE_CYCLE_CONTROL = (
    2,
    (1, 2, 3),
    ((1, 2, 0), (2, 1, 2), (1, 3, 0), (3, 1, 2), (2, 3, 1), (3, 2, 1)),
)


def _parse_vertex(text):
    try:
        return int(text)
    except ValueError:
        return text


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return 2


def _load_json(path):
    return json.loads(pathlib.Path(path).read_text())


def cmd_mutate(args):
    try:
        data = _load_json(args.file)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read quiver file: {exc}")
    try:
        q = quiver_from_json(data)
    except ValueError as exc:
        return _fail(exc)
    problems = validate(q)
    if problems:
        for kind, where in problems:
            print(f"axiom violation: {kind} at {where}", file=sys.stderr)
        return 2
    try:
        for _ in range(args.times):
            q = mutate_algorithm(q, _parse_vertex(args.vertex))
    except ValueError as exc:
        return _fail(exc)
    text = json.dumps(quiver_to_json(q), indent=2) + "\n"
    if args.out:
        pathlib.Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _suite_commutation(args):
    size = args.n * args.m + 2
    checks = []
    if size <= EXHAUSTIVE_VERTEX_LIMIT:
        checked, failures = commutation_sweep(args.n, args.m)
        checks.append(
            {
                "name": "exhaustive",
                "status": "fail" if failures else "pass",
                "cases": checked,
                "failures": [[list(map(list, diags)), list(d)] for diags, d in failures],
            }
        )
    else:
        checks.append(
            {
                "name": "exhaustive",
                "status": "skipped",
                "reason": f"{size}-gon exceeds the {EXHAUSTIVE_VERTEX_LIMIT}-vertex sweep limit",
            }
        )
    if size <= RANDOM_VERTEX_LIMIT:
        rng = random.Random(args.seed)
        bad = 0
        for _ in range(RANDOM_CASES):
            ang = random_angulation(args.n, args.m, steps=48, seed=rng.randrange(2**32))
            if not check_commutation(ang, rng.choice(ang.diagonals)):
                bad += 1
        checks.append(
            {
                "name": "random",
                "status": "fail" if bad else "pass",
                "cases": RANDOM_CASES,
                "failures": bad,
            }
        )
    else:
        checks.append(
            {
                "name": "random",
                "status": "skipped",
                "reason": f"{size}-gon exceeds the {RANDOM_VERTEX_LIMIT}-vertex random limit",
            }
        )
    return checks


def _suite_colour_sums(args):
    size = args.n * args.m + 2
    if size > EXHAUSTIVE_VERTEX_LIMIT:
        return [
            {
                "name": "cells",
                "status": "skipped",
                "reason": f"{size}-gon exceeds the {EXHAUSTIVE_VERTEX_LIMIT}-vertex limit",
            }
        ]
    cells_checked = 0
    try:
        for ang in enumerate_angulations(args.n, args.m):
            cells_checked += len(colour_sums(ang))
        status = "pass"
        detail = {}
    except RuntimeError as exc:
        status = "fail"
        detail = {"failure": str(exc)}
    return [{"name": "cells", "status": status, "cases": cells_checked, **detail}]


def _suite_homomorphisms(args):
    if args.n > 5 or args.m > 3:
        return [
            {
                "name": "mutation maps",
                "status": "skipped",
                "reason": "limited to n <= 5 and m <= 3",
            }
        ]
    base = linear_quiver(args.n, args.m)
    relators = 0
    failures = []
    for q, path in mutation_reachable(base, 2):
        for k in q.vertices:
            report = verify_hom(mutation_hom(q, k), inverse_chain(base, path + (k,)))
            relators += report.checked
            failures.extend(
                {"path": list(path), "vertex": k, "relator": repr(rel)}
                for rel in report.failures
            )
    return [
        {
            "name": "mutation maps",
            "status": "fail" if failures else "pass",
            "cases": relators,
            "failures": failures,
        }
    ]


def _suite_bijection(args):
    try:
        report = check_bijection(args.n, args.m)
    except ValueError as exc:
        return [{"name": "orbit count", "status": "skipped", "reason": str(exc)}]
    return [
        {
            "name": "orbit count",
            "status": "pass" if report.ok else "fail",
            "angulations": report.angulations,
            "rotation_orbits": report.rotation_orbits,
            "quiver_classes": report.quiver_classes,
        }
    ]


def _suite_order(args):
    checks = []
    if args.n > 6 or args.m > 4:
        checks.append(
            {
                "name": "order on the class",
                "status": "skipped",
                "reason": "limited to n <= 6 and m <= 4",
            }
        )
    else:
        cases = 0
        failures = []
        for q, path in mutation_reachable(linear_quiver(args.n, args.m), 3):
            for k in q.vertices:
                cases += 1
                if mutate_path(q, [k] * (args.m + 1)) != q:
                    failures.append({"path": list(path), "vertex": k})
        checks.append(
            {
                "name": "order on the class",
                "status": "fail" if failures else "pass",
                "cases": cases,
                "failures": failures,
            }
        )
    control = from_arrows(*THREE_CYCLE_CONTROL)
    escaped = mutate_path(control, [2, 2, 2]) != control
    checks.append(
        {
            "name": "three-cycle negative control",
            "status": "pass" if escaped else "fail",
            "expected": "mu_2^3 leaves the starting quiver",
            "observed": "left it" if escaped else "returned to it",
        }
    )
    return checks


_SUITE_RUNNERS = {
    "commutation": _suite_commutation,
    "colour-sums": _suite_colour_sums,
    "homomorphisms": _suite_homomorphisms,
    "bijection": _suite_bijection,
    "order": _suite_order,
}


def cmd_verify(args):
    checks = _SUITE_RUNNERS[args.suite](args)
    status = "fail" if any(c["status"] == "fail" for c in checks) else "pass"
    report = {
        "suite": args.suite,
        "n": args.n,
        "m": args.m,
        "seed": args.seed,
        "checks": checks,
        "status": status,
    }
    print(json.dumps(report, indent=2))
    return 1 if status == "fail" else 0


def cmd_render(args):
    try:
        ang = angulation_from_json(_load_json(args.file))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail(f"cannot read angulation file: {exc}")
    if args.svg:
        pathlib.Path(args.svg).write_text(angulation_to_svg(ang))
    if args.dot:
        pathlib.Path(args.dot).write_text(quiver_to_dot(angulation_quiver(ang)))
    return 0


def cmd_serve(args):
    import uvicorn

    from angulate.server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="angulate",
        description="Coloured quiver mutation and polygon angulation toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mutate = sub.add_parser("mutate", help="mutate a quiver file at a vertex")
    mutate.add_argument("file", help="quiver JSON file")
    mutate.add_argument("vertex", help="vertex to mutate at")
    mutate.add_argument("--times", type=_nonnegative, default=1)
    mutate.add_argument("--out", help="output path (default stdout)")
    mutate.set_defaults(handler=cmd_mutate)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--n", type=int, default=4)
    verify.add_argument("--m", type=int, default=2)
    verify.add_argument("--seed", type=int)
    verify.set_defaults(handler=cmd_verify)

    render = sub.add_parser("render", help="draw an angulation file")
    render.add_argument("file", help="angulation JSON file")
    render.add_argument("--svg", help="write the polygon drawing here")
    render.add_argument("--dot", help="write the quiver graph here")
    render.set_defaults(handler=cmd_render)

    serve = sub.add_parser("serve", help="start the HTTP session service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.suite == "commutation" and args.seed is None:
        parser.error("--suite commutation needs --seed")
    if args.command == "render" and not (args.svg or args.dot):
        parser.error("render needs --svg and/or --dot")
    try:
        return args.handler(args)
    except ValueError as exc:
        return _fail(exc)


if __name__ == "__main__":
    sys.exit(main())
