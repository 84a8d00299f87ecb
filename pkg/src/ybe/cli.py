"""Command-line front end.

Exit codes: 0 success, 1 a checked property fails, 2 usage or parse
error, 3 size cap exceeded. All output is deterministic: identical
inputs produce byte-identical stdout and files.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import brace as br
from . import files
from . import perm as pm
from . import power as pw
from . import solution as sol
from .errors import AxiomError, ParseError, SizeCapExceeded

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e


def _print_report(report):
    for axiom in sol.AXIOMS:
        ok = getattr(report, axiom)
        line = f"{axiom}: {'pass' if ok else 'FAIL'}"
        if not ok:
            witness = report.first_counterexample(axiom)
            if witness is not None:
                line += f" at {witness}"
        print(line)


def cmd_verify(args):
    sigma = files.parse_sigma_table(_read(args.file))
    report = sol.verify_tables(tuple(sigma), sol.derive_gamma(sigma))
    _print_report(report)
    return EXIT_OK if report.all_ok else EXIT_PROPERTY


def cmd_permgroup(args):
    s = files.parse_solution(_read(args.file))
    g = sol.permutation_group(s, cap=args.cap)
    print(f"order: {g.order}")
    print("generators:")
    for gen in g.generators:
        print("  " + " ".join(str(v) for v in gen))
    multiset = g.element_order_multiset()
    print("element orders: " + " ".join(str(v) for v in multiset))
    return EXIT_OK


def cmd_power(args):
    s = files.parse_solution(_read(args.file))
    if args.n < 2:
        raise ParseError(f"exponent must be at least 2, got {args.n}")
    a, b, phi = pw.power_perm_group(s, args.n, cap=args.cap)
    base = sol.permutation_group(s, cap=args.cap)
    cond = pw.iso_condition(s, args.n)
    print(f"base group order: {base.order}")
    print(f"power group order: {a.order}")
    print(f"product subgroup order: {b.order}")
    print(f"classification: {cond.value}")
    print(f"isomorphic: {'yes' if phi is not None else 'no'}")
    if args.out:
        ps = pw.power_solution(s, args.n, cap=args.cap)
        header = f"power m={s.m} n={args.n} encoding=lex-msb-first"
        Path(args.out).write_text(
            files.emit_solution(ps.result, header=header), encoding="utf-8"
        )
        print(f"wrote: {args.out}")
    return EXIT_OK


def cmd_enumerate(args):
    if args.m > 4:
        raise SizeCapExceeded(f"enumeration supports m <= 4, got {args.m}")
    found = sol.enumerate_solutions(args.m)
    print(f"count: {len(found)}")
    if args.dedup:
        classes = []
        for s in found:
            if not any(sol.solutions_isomorphic(s, rep) is not None for rep in classes):
                classes.append(s)
        print(f"count up to isomorphism: {len(classes)}")
    if args.outdir:
        outdir = Path(args.outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, s in enumerate(found):
            path = outdir / f"solution_m{args.m}_{i:03d}.txt"
            path.write_text(files.emit_solution(s), encoding="utf-8")
        print(f"wrote {len(found)} files to {outdir}")
    return EXIT_OK


def cmd_present(args):
    s = files.parse_solution(_read(args.file))
    print(f"generators: {' '.join(f'g{i}' for i in range(s.m))}")
    print("relations:")
    count = 0
    for x in range(s.m):
        for y in range(s.m):
            z, t = sol.r_apply(s, x, y)
            if (z, t) == (x, y):
                continue  # trivial relation g_x g_y = g_x g_y
            if (x, y) > (z, t):
                continue  # the involutive partner of an emitted relation
            print(f"  g{x} g{y} = g{z} g{t}")
            count += 1
    print(f"relation count: {count}")
    return EXIT_OK


def cmd_brace_verify(args):
    files.parse_brace(_read(args.file))  # raises on any axiom failure
    print("valid left brace")
    return EXIT_OK


def cmd_brace_solution(args):
    b = files.parse_brace(_read(args.file))
    s = br.associated_solution(b)
    text = files.emit_solution(s)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote: {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_brace_find(args):
    found = br.find_braces(args.k)
    print(f"braces of order {args.k}: {len(found)}")
    for i, b in enumerate(found):
        print(f"brace {i}:")
        for line in files.emit_brace(b).splitlines():
            print("  " + line)
        report = br.check_lambda_properties(b)
        print(f"  lambda properties: {'pass' if report.all_ok else 'FAIL'}")
        s = br.associated_solution(b)
        print(f"  associated solution verifies: yes (group order {sol.permutation_group(s).order})")
    return EXIT_OK


def cmd_brace_lambda_check(args):
    b = files.parse_brace(_read(args.file))
    report = br.check_lambda_properties(b)
    for name in br.LAMBDA_PROPERTIES:
        line = f"{name}: {'pass' if report.flags[name] else 'FAIL'}"
        if not report.flags[name]:
            line += f" at {report.witnesses[name]}"
        print(line)
    return EXIT_OK if report.all_ok else EXIT_PROPERTY


def cmd_brace_eq31_check(args):
    b = files.parse_brace(_read(args.file))
    n = args.n
    if n < 2:
        raise ParseError(f"tuple length must be at least 2, got {n}")
    failures = 0
    if args.samples == 0:
        codec = pw.TupleCodec(b.k, n)
        pairs = ((x, y) for x in codec.all_tuples() for y in codec.all_tuples())
        total = codec.size**2
        for xbar, ybar in pairs:
            if not br.check_eq_3_1(b, xbar, ybar):
                failures += 1
        print(f"checked all {total} tuple pairs (n={n})")
    else:
        rng = random.Random(args.seed)
        for _ in range(args.samples):
            xbar = tuple(rng.randrange(b.k) for _ in range(n))
            ybar = tuple(rng.randrange(b.k) for _ in range(n))
            if not br.check_eq_3_1(b, xbar, ybar):
                failures += 1
        print(f"checked {args.samples} sampled tuple pairs (n={n}, seed={args.seed})")
    print(f"failures: {failures}")
    return EXIT_OK if failures == 0 else EXIT_PROPERTY


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ybe",
        description="Finite involutive Yang-Baxter solutions, power solutions, and left braces.",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=pw.DEFAULT_POWER_CAP,
        help="size cap on constructed degrees and closures (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the five solution axioms of a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("power", help="build the power solution and compare groups")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--out", help="write the power solution file here")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("permgroup", help="permutation group of a solution")
    p.add_argument("file")
    p.set_defaults(func=cmd_permgroup)

    p = sub.add_parser("enumerate", help="exhaustively enumerate all solutions of size m")
    p.add_argument("m", type=int)
    p.add_argument("--dedup", action="store_true", help="also count up to isomorphism")
    p.add_argument("--outdir", help="write one canonical file per solution")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("present", help="emit the structure-group presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_present)

    pb = sub.add_parser("brace", help="left-brace operations")
    bsub = pb.add_subparsers(dest="brace_command", required=True)

    p = bsub.add_parser("verify", help="validate a brace file")
    p.add_argument("file")
    p.set_defaults(func=cmd_brace_verify)

    p = bsub.add_parser("solution", help="associated solution of a brace")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_brace_solution)

    p = bsub.add_parser("find", help="search all braces of a given order")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_brace_find)

    p = bsub.add_parser("lambda-check", help="verify the six lambda-map properties")
    p.add_argument("file")
    p.set_defaults(func=cmd_brace_lambda_check)

    p = bsub.add_parser("eq31-check", help="check the product identity for the h recursion")
    p.add_argument("file")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--samples", type=int, default=0, help="0 = exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_brace_eq31_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except AxiomError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.report is not None:
            _print_report(e.report)
        if e.witness is not None:
            print(f"witness: {e.witness}")
        return EXIT_PROPERTY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
