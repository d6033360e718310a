"""Command line front end: parsing, reports, and the check runner.

Input is an ideal in the plain text grammar ("n=4; x1*x3, x2*x4") or the
JSON form {"n": ..., "gens": [[exponents], ...]}; JSON is detected by a
leading brace. Reports come out as text or, with --json, as a JSON
document carrying exactly the same numbers. Exit codes: 0 on success, 1
for usage or parse trouble, 2 for domain preconditions, 3 when a
mathematically guaranteed fact fails to verify.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .checks import run_all
from .decomposition import associated_primes, criteria_check, partition_degree2
from .errors import (DomainError, ParseError, StructuralError,
                     TheoremViolationError)
from .groebner import DEFAULT_PRIME, certify_witness
from .homology import pd_depth
from .ideals import Monomial, MonomialIdeal, make_ideal
from .matroids import enumerate_matroidal, is_polymatroidal
from .schmitt_vogel import ara_report, build_sv_witness

MAX_EXPONENT = 2 ** 63 - 1
THREADS_VAR = "MATROIDAL_KIT_THREADS"


@dataclass(frozen=True)
class Config:
    """Effective settings for one invocation."""

    field: int | None = None  # None means rationals
    max_n: int = 6
    max_d: int = 3
    certify: bool = True
    as_json: bool = False
    threads: int = 1


class _Scanner:
    """Character scanner with line/column bookkeeping for error messages."""

    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message):
        raise ParseError(message, self.line, self.col)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self):
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_space(self):
        while self.peek() and self.peek() in " \t\r\n":
            self.advance()

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.advance()

    def integer(self, what):
        if not self.peek().isdigit():
            self.error(f"expected {what}")
        value = 0
        while self.peek().isdigit():
            value = value * 10 + int(self.advance())
            if value > MAX_EXPONENT:
                self.error(f"{what} overflow (limit {MAX_EXPONENT})")
        return value


def _parse_factor(scanner):
    """One factor x<idx> or x<idx>^<exp>; returns (index, exponent)."""
    scanner.take("x")
    index = scanner.integer("variable index")
    if index == 0:
        scanner.error("variable index 0 (variables are x1, x2, ...)")
    exponent = 1
    if scanner.peek() == "^":
        scanner.advance()
        exponent = scanner.integer("exponent")
        if exponent == 0:
            scanner.error("exponent must be positive")
    return index, exponent


def _parse_text(text):
    scanner = _Scanner(text)
    scanner.skip_space()
    declared = None
    if scanner.peek() == "n":
        scanner.advance()
        scanner.skip_space()
        scanner.take("=")
        scanner.skip_space()
        declared = scanner.integer("variable count")
        if declared == 0:
            scanner.error("variable count must be positive")
        scanner.skip_space()
        scanner.take(";")
        scanner.skip_space()
    raw = []
    while scanner.peek():
        factors = [_parse_factor(scanner)]
        scanner.skip_space()
        while scanner.peek() == "*":
            scanner.advance()
            scanner.skip_space()
            factors.append(_parse_factor(scanner))
            scanner.skip_space()
        if scanner.peek() and scanner.peek() not in ",":
            scanner.error(f"unexpected character {scanner.peek()!r}")
        raw.append(factors)
        if scanner.peek() == ",":
            scanner.advance()
            scanner.skip_space()
            if not scanner.peek():
                scanner.error("trailing comma")
    if declared is None and not raw:
        raise ParseError("empty input: declare n (e.g. \"n=3;\") or give generators")
    seen = max((i for factors in raw for i, _ in factors), default=0)
    n = declared if declared is not None else seen
    if seen > n:
        raise ParseError(f"variable x{seen} exceeds declared n={n}")
    vectors = []
    for factors in raw:
        exps = [0] * n
        for index, exponent in factors:
            exps[index - 1] += exponent
            if exps[index - 1] > MAX_EXPONENT:
                raise ParseError(f"exponent overflow on x{index} (limit {MAX_EXPONENT})")
        vectors.append(tuple(exps))
    return make_ideal(n, vectors)


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"bad JSON: {err.msg}", err.lineno, err.colno) from err
    if not isinstance(data, dict) or "n" not in data or "gens" not in data:
        raise ParseError('JSON input needs the shape {"n": ..., "gens": [[...], ...]}')
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    gens = data["gens"]
    if not isinstance(gens, list):
        raise ParseError("gens must be a list of exponent vectors")
    vectors = []
    for row in gens:
        if (not isinstance(row, list) or len(row) != n
                or not all(isinstance(e, int) and e >= 0 for e in row)):
            raise ParseError(f"bad exponent vector {row!r} (need {n} non-negative integers)")
        if any(e > MAX_EXPONENT for e in row):
            raise ParseError(f"exponent overflow in {row!r} (limit {MAX_EXPONENT})")
        vectors.append(tuple(row))
    return make_ideal(n, vectors)


def parse_ideal(text):
    """Ideal from the text grammar, or from JSON when the input starts with {.

    The ambient n is the declared one, or the highest variable index
    seen. Generators are minimalized on construction.
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _ideal_payload(ideal):
    return {
        "n": ideal.n,
        "gens": [list(g.exponents) for g in ideal.gens],
        "display": str(ideal),
    }


def _prime_payload(primes):
    return [sorted(p) for p in sorted(primes, key=lambda p: (len(p), sorted(p)))]


def _section(build):
    try:
        return build()
    except DomainError as err:
        return {"skipped": str(err)}


def _decomposition_payload(ideal):
    dec = associated_primes(ideal)
    return {
        "ass": _prime_payload(dec.ass),
        "minimal": _prime_payload(dec.minimal),
        "height": dec.height,
        "big_height": dec.big_height,
        "is_unmixed": dec.is_unmixed,
    }


def _partition_payload(ideal):
    partition = partition_degree2(ideal)
    return {
        "blocks": [sorted(b) for b in partition.blocks],
        "m": partition.m,
    }


def _criteria_payload(ideal):
    report = criteria_check(ideal)
    return {
        "height": report.height,
        "big_height": report.big_height,
        "is_unmixed": report.is_unmixed,
        "ass_count": report.ass_count,
        "block_count": report.block_count,
        "c1_identity": report.c1_identity,
        "colon_facts": [{"variable": i, "height": h, "is_unmixed": u}
                        for i, h, u in report.colon_facts],
        "t2_condition": report.t2_condition,
    }


def _homology_payload(ideal, field):
    profile = pd_depth(ideal, field)
    return {"pd": profile.pd, "depth": profile.depth, "is_cm": profile.is_cm}


def _witness_payload(report):
    payload = {
        "degree": report.degree,
        "lower": report.lower,
        "upper": report.upper,
        "exact": report.exact,
        "sums": [str(q) for q in report.elements],
    }
    if report.witness is not None:
        payload["layers"] = [[str(m) for m in layer]
                             for layer in report.witness.layers]
    return payload


def _certificate_payload(certificate):
    payload = {
        "passed": certificate.passed,
        "field": "rationals" if certificate.field is None else f"gf:{certificate.field}",
        "failing_generators": [str(g) for g in certificate.failing_generators],
    }
    if certificate.subset_failure is not None:
        j, monomial = certificate.subset_failure
        payload["subset_failure"] = {"sum_index": j, "monomial": str(monomial)}
    return payload


def _analyze(ideal, config):
    summary = ideal.summarize()
    report = {
        "input": _ideal_payload(ideal),
        "summary": {
            "mu": summary.mu,
            "is_squarefree": summary.is_squarefree,
            "is_single_degree": summary.is_single_degree,
            "degree": summary.degree,
            "is_full_supported": summary.is_full_supported,
        },
    }

    def matroidal_section():
        certificate = is_polymatroidal(ideal)
        payload = {
            "is_polymatroidal": certificate.holds,
            "is_matroidal": certificate.holds and ideal.is_squarefree,
            "reason": certificate.reason,
        }
        if certificate.failure_witness is not None:
            u, v, i = certificate.failure_witness
            payload["failure_witness"] = {"u": str(u), "v": str(v), "variable": i}
        return payload

    report["matroidal"] = _section(matroidal_section)
    report["decomposition"] = _section(lambda: _decomposition_payload(ideal))
    report["partition"] = _section(lambda: _partition_payload(ideal))
    report["criteria"] = _section(lambda: _criteria_payload(ideal))
    report["homology"] = _section(lambda: _homology_payload(ideal, config.field))

    rank_report = None

    def rank_section():
        nonlocal rank_report
        rank_report = ara_report(ideal)
        return _witness_payload(rank_report)

    report["rank"] = _section(rank_section)
    if not config.certify:
        report["certification"] = {"skipped": "disabled by --no-certify"}
    elif rank_report is None:
        report["certification"] = {"skipped": "no witness to certify"}
    else:
        witness = (rank_report.witness if rank_report.witness is not None
                   else rank_report.elements)
        report["certification"] = _section(
            lambda: _certificate_payload(certify_witness(ideal, witness, config.field)))
    return report


def _enumerate_census(n, d, config):
    if n > config.max_n:
        raise DomainError(f"n={n} exceeds the cap {config.max_n} (raise with --max-n)")
    if d > config.max_d:
        raise DomainError(f"d={d} exceeds the cap {config.max_d} (raise with --max-d)")
    ideals = enumerate_matroidal(n, d, True)
    rows = []
    for ideal in ideals:
        dec = associated_primes(ideal)
        profile = pd_depth(ideal, config.field)
        row = {
            "gens": [list(g.exponents) for g in ideal.gens],
            "display": str(ideal),
            "mu": ideal.mu,
            "is_unmixed": dec.is_unmixed,
            "height": dec.height,
            "pd": profile.pd,
            "is_cm": profile.is_cm,
            "m": partition_degree2(ideal).m if d == 2 else None,
        }
        rows.append(row)
    return {"n": n, "d": d, "count": len(rows), "ideals": rows}


def run_command(command, config, ideal=None, n=None, d=None):
    """Dispatch one command; returns the report payload."""
    if command == "analyze":
        return _analyze(ideal, config)
    if command == "partition":
        return {"input": _ideal_payload(ideal),
                "partition": _partition_payload(ideal)}
    if command == "witness":
        report = ara_report(ideal)
        return {"input": _ideal_payload(ideal), "witness": _witness_payload(report)}
    if command == "certify":
        report = ara_report(ideal)
        witness = report.witness if report.witness is not None else report.elements
        certificate = certify_witness(ideal, witness, config.field)
        return {"input": _ideal_payload(ideal),
                "witness": _witness_payload(report),
                "certification": _certificate_payload(certificate)}
    if command == "enumerate":
        return _enumerate_census(n, d, config)
    if command == "reproduce-paper":
        results = run_all(max_n=config.max_n, max_d=config.max_d,
                          certify=config.certify)
        return [{"name": r.name, "passed": r.passed, "skipped": r.skipped,
                 "detail": r.detail} for r in results]
    raise DomainError(f"unknown command {command!r}")


def _print_block(title, payload, out):
    print(f"{title}:", file=out)
    if "skipped" in payload:
        print(f"  skipped: {payload['skipped']}", file=out)
        return
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"  {key}:", file=out)
            for item in value:
                line = ", ".join(f"{k}={v}" for k, v in item.items())
                print(f"    {line}", file=out)
        else:
            print(f"  {key}: {value}", file=out)


def _render_text(command, payload, out):
    if command == "reproduce-paper":
        passes = skips = 0
        for row in payload:
            if row["skipped"]:
                status = "SKIP"
                skips += 1
            elif row["passed"]:
                status = "PASS"
                passes += 1
            else:
                status = "FAIL"
            print(f"{status:<4} {row['name']}: {row['detail']}", file=out)
        tail = f", {skips} skipped" if skips else ""
        print(f"{passes} of {len(payload) - skips} checks good{tail}", file=out)
        return
    if command == "enumerate":
        print(f"matroidal ideals for n={payload['n']}, d={payload['d']}: "
              f"{payload['count']}", file=out)
        for row in payload["ideals"]:
            flags = []
            flags.append("unmixed" if row["is_unmixed"] else "mixed")
            flags.append("CM" if row["is_cm"] else "not CM")
            if row["m"] is not None:
                flags.append(f"m={row['m']}")
            print(f"  {row['display']}  mu={row['mu']} height={row['height']} "
                  f"pd={row['pd']} [{', '.join(flags)}]", file=out)
        return
    for title, block in payload.items():
        _print_block(title, block, out)


def _parse_field(value):
    if value == "q":
        return None
    if value.startswith("gf:"):
        try:
            p = int(value[3:])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad field {value!r}")
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
        return p
    raise argparse.ArgumentTypeError(f"field must be q or gf:<prime>, got {value!r}")


def _threads_from_env():
    raw = os.environ.get(THREADS_VAR)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ParseError(f"{THREADS_VAR} must be an integer, got {raw!r}")
    if threads < 1:
        raise ParseError(f"{THREADS_VAR} must be at least 1, got {threads}")
    return threads


class _Parser(argparse.ArgumentParser):
    # spec reserves exit status 2 for domain errors; usage trouble is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--field", type=_parse_field, default=None,
                        metavar="q|gf:p",
                        help=f"coefficient field (default q; try gf:{DEFAULT_PRIME})")
    shared.add_argument("--json", action="store_true", dest="as_json",
                        help="emit the report as JSON")
    shared.add_argument("--no-certify", action="store_false", dest="certify",
                        help="skip the radical-membership certification")
    shared.add_argument("--max-n", type=int, default=6, metavar="K",
                        help="cap on the ambient variable count for sweeps")
    shared.add_argument("--max-d", type=int, default=3, metavar="K",
                        help="cap on the generating degree for sweeps")
    parser = _Parser(
        prog="matroidalkit",
        description="Analyze matroidal monomial ideals: decomposition, "
                    "unmixedness, projective dimension, and certified "
                    "arithmetical-rank witnesses.",
        epilog=f"The env var {THREADS_VAR} caps worker parallelism "
               "(the current engine is sequential).")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("analyze", "full report on one ideal"),
        ("partition", "block structure of a degree-2 ideal"),
        ("witness", "layered sums bounding the arithmetical rank"),
        ("certify", "verify the witness sums by radical membership"),
    ]:
        sub = commands.add_parser(name, parents=[shared], help=text)
        sub.add_argument("input", nargs="?", default="-",
                         help="ideal file, or - for stdin (default)")
    enum = commands.add_parser("enumerate", parents=[shared],
                               help="census of matroidal ideals for one (n, d)")
    enum.add_argument("n", type=int)
    enum.add_argument("d", type=int)
    commands.add_parser("reproduce-paper", parents=[shared],
                        help="run the built-in example and theorem checks")
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config(field=args.field, max_n=args.max_n, max_d=args.max_d,
                        certify=args.certify, as_json=args.as_json,
                        threads=_threads_from_env())
        ideal = None
        if args.command in ("analyze", "partition", "witness", "certify"):
            if args.input == "-":
                text = sys.stdin.read()
            else:
                try:
                    with open(args.input, encoding="utf-8") as handle:
                        text = handle.read()
                except OSError as err:
                    raise ParseError(f"cannot read {args.input}: {err.strerror}")
            ideal = parse_ideal(text)
        payload = run_command(args.command, config, ideal=ideal,
                              n=getattr(args, "n", None), d=getattr(args, "d", None))
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1
    except TheoremViolationError as err:
        print(f"theorem violation: {err}", file=sys.stderr)
        return 3
    except StructuralError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if config.as_json:
        print(json.dumps(payload, indent=2))
    else:
        _render_text(args.command, payload, sys.stdout)
    if args.command == "reproduce-paper" and any(
            not row["passed"] and not row["skipped"] for row in payload):
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
