"""Command-line interface.

Sources are a DSL file path, ``-`` for standard input, or
``builtin:<name>`` (``universal:<m>``, ``abelian:<n>``, ``g2``,
``torus:<n>:<m>``, ``torus6:<n>:<m>``).

Exit status: 1 on input errors, 2 when ``verify`` finds a failed check,
0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .alexander import WORKERS_ENV, AlexanderResult, alexander_polynomial
from .braid import g_nm_presentation
from .constructions import builtin, hurwitz_product
from .covering import ResidualPresentError, betti_b1
from .presentation import CPresentation, PresentationError, parse, render
from .reproduce import DEFAULT_SEED, run_all
from .words import WordSyntaxError


class InputError(Exception):
    pass


def load(source: str) -> CPresentation:
    if source.startswith("builtin:"):
        try:
            return builtin(source[len("builtin:") :])
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        return parse(text)
    except (PresentationError, WordSyntaxError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from exc


def _result_text(r: AlexanderResult) -> str:
    lines = [f"label: {r.label or '-'}"]
    lines.append(f"alexander: {r.canonical}")
    if r.factorization is not None:
        facs = " ".join(f"Phi_{d}^{m}" if m > 1 else f"Phi_{d}" for d, m in r.factorization.factors) or "1"
        lines.append(f"factors: {facs}")
        if not r.factorization.complete:
            lines.append(f"residual: {r.factorization.residual} (NON-CYCLOTOMIC)")
    lines.append(f"generators: {r.generator_count}")
    lines.append(f"components: {r.components}")
    lines.append(f"hurwitz_degree: {r.hurwitz_degree if r.hurwitz_degree is not None else '-'}")
    for name, check in r.checks.checks.items():
        status = "pass" if check.passed else "FAIL"
        if not check.applicable:
            status = "n/a"
        lines.append(f"check {name}: {status} ({check.detail})")
    return "\n".join(lines)


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_alexander(args) -> int:
    r = alexander_polynomial(load(args.source), simplify=not args.no_simplify, workers=args.workers)
    _emit(args, r.to_json(), _result_text(r))
    return 0


def cmd_verify(args) -> int:
    r = alexander_polynomial(load(args.source), workers=args.workers)
    _emit(args, r.to_json(), _result_text(r))
    return 0 if r.checks.all_passed else 2


def cmd_product(args) -> int:
    try:
        p = hurwitz_product(load(args.first), load(args.second))
    except PresentationError as exc:
        raise InputError(str(exc)) from exc
    if args.dsl:
        sys.stdout.write(render(p))
        return 0
    r = alexander_polynomial(p, workers=args.workers)
    _emit(args, r.to_json(), _result_text(r))
    return 0


def cmd_betti(args) -> int:
    r = alexander_polynomial(load(args.delta), workers=args.workers)
    if r.factorization is None:
        raise InputError("Alexander polynomial is 0; Betti numbers are undefined")
    try:
        report = betti_b1(r.factorization, args.n)
    except ResidualPresentError as exc:
        raise InputError(str(exc)) from exc
    text = (
        f"n: {report.n}\nb1: {report.b1}\nr_n: {report.r_n}\n"
        f"affine_h1_dim: {report.affine_h1_dim}\ncomponents: {report.components}"
    )
    _emit(args, report.to_json(), text)
    return 0


def cmd_braid_group(args) -> int:
    if args.n < 2 or args.m < 1:
        raise InputError("need n >= 2 and m >= 1")
    sys.stdout.write(render(g_nm_presentation(args.n, args.m)))
    return 0


def cmd_reproduce(args) -> int:
    outcomes = run_all(args.seed)
    if args.json:
        print(json.dumps([o.__dict__ for o in outcomes], indent=2))
    else:
        for o in outcomes:
            print(f"[{'PASS' if o.passed else 'FAIL'}] {o.name} ({o.seconds:.2f}s): {o.detail}")
    return 0 if all(o.passed for o in outcomes) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-alexander",
        description="Alexander polynomials of C-groups and Betti numbers of cyclic coverings.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"processes for minor enumeration (default: ${WORKERS_ENV} or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", parents=[common], help="compute and check the Alexander polynomial")
    p.add_argument("source")
    p.add_argument("--no-simplify", action="store_true", help="skip unit-pivot elimination")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("verify", parents=[common], help="exit 2 if any structural check fails")
    p.add_argument("source")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("product", parents=[common], help="Hurwitz product of two presentations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--dsl", action="store_true", help="print the product presentation instead")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("betti", parents=[common], help="first Betti number of the n-fold cyclic covering")
    p.add_argument("--delta", required=True, help="presentation source")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("braid-group", help="emit the G_{n,m} presentation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_braid_group, json=False)

    p = sub.add_parser("reproduce", help="run the reproduction table")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized suites")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc.__cause__ or exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
