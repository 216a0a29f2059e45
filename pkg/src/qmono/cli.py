"""Command-line entry point.

Subcommands: specialize, verify, expand, positivity, eigencheck, selftest.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
cap exceeded.  Set QMONO_THREADS to a positive integer to let sweep
commands dispatch independent instances to a worker pool; output order is
by instance descriptor, never by completion time.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import acceptance
from .algebra import FactoredFraction, Polynomial, frac_eq
from .errors import QmonoError, ResourceLimitError, UsageError
from .identities import (
    SIDE_CYCLE,
    SIDE_LEFT,
    SIDE_RIGHT,
    appendix_step,
    constant_identity,
    prop5_expected,
    symmetrized_constant,
    symmetrized_side,
    x_only_universe,
)
from .macdonald import eigencheck, row_expansion_table
from .partitions import Partition, partitions_up_to, z_of
from .positivity import positivity_report
from .specialize import UNIVERSE_ABQ, monomial_spec, spec_oracle

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_CLI_BASES = {
    "power": "power",
    "monomial": "monomial",
    "complete": "complete",
    "elementary": "elementary",
    "deformed-h": "deformed-complete",
    "deformed-e": "deformed-elementary",
}


@dataclass
class RunReport:
    """Outcome of one CLI invocation: instance count, failures, timing."""

    command: str
    instances_checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return EXIT_OK if not self.failures else EXIT_VERIFY_FAILED

    def record(self, instance: str, ok: bool, expected="identity holds", actual="it does not"):
        self.instances_checked += 1
        if not ok:
            self.failures.append(
                {"instance": instance, "expected": str(expected), "actual": str(actual)}
            )

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def dumps(obj) -> str:
    """The one JSON serialization used everywhere (stable key order)."""
    return json.dumps(obj, sort_keys=True)


def thread_count() -> int:
    raw = os.environ.get("QMONO_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QMONO_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"QMONO_THREADS must be a positive integer, got {raw!r}")
    return n


def _parallel_map(fn, items: list) -> list:
    threads = thread_count()
    items = list(items)
    if threads > 1 and len(items) > 1:
        import multiprocessing

        with multiprocessing.Pool(min(threads, len(items))) as pool:
            return pool.map(fn, items)
    return [fn(item) for item in items]


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}; expected e.g. 2,1")
    try:
        return Partition(parts)
    except UsageError:
        raise UsageError(f"{text!r} is not weakly decreasing positive")


def parse_substitutions(text: str) -> dict:
    """Parse bindings like a=1,b=q^4 into polynomial values over {a,b,q}."""
    out = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise UsageError(f"bad substitution {piece!r}; expected var=value")
        name, value = piece.split("=", 1)
        name = name.strip()
        value = value.strip()
        if name not in UNIVERSE_ABQ:
            raise UsageError(f"unknown substitution variable {name!r}")
        try:
            out[name] = Polynomial.constant(UNIVERSE_ABQ, int(value))
            continue
        except ValueError:
            pass
        base, _, power = value.partition("^")
        if base not in UNIVERSE_ABQ:
            raise UsageError(f"cannot parse substitution value {value!r}")
        exponent = 1
        if power:
            try:
                exponent = int(power)
            except ValueError:
                raise UsageError(f"cannot parse exponent in {value!r}")
        out[name] = Polynomial.variable(UNIVERSE_ABQ, base, exponent)
    return out


# -- specialize --------------------------------------------------------------


def cmd_specialize(args) -> RunReport:
    report = RunReport("specialize")
    t0 = time.time()
    mu = parse_partition(args.mu)
    if args.form == "oracle-powersum":
        result = spec_oracle(mu, "powersum")
    elif args.form == "oracle-direct":
        if args.oracle_N is None:
            raise UsageError("--form oracle-direct needs --oracle-N")
        result = spec_oracle(mu, "direct", N=args.oracle_N)
    else:
        result = monomial_spec(mu, args.form)
    value = result.value
    if args.subst:
        value = value.substitute(parse_substitutions(args.subst))
    print(value.text())
    record = {"partition": mu.to_json(), **value.to_json()}
    print(dumps(record))
    report.instances_checked = 1
    report.elapsed = time.time() - t0
    return report


# -- verify ------------------------------------------------------------------


def _verify_thm6(task):
    n, cap = task
    left = symmetrized_side(n, SIDE_LEFT, cap=cap).value
    right = symmetrized_side(n, SIDE_RIGHT, cap=cap).value
    return {"instance": f"n={n}", "ok": frac_eq(left, right)}


def _verify_thm7(task):
    n, cap = task
    left = symmetrized_side(n, SIDE_LEFT, cap=cap).value
    cycle = symmetrized_side(n, SIDE_CYCLE, cap=cap).value
    return {"instance": f"n={n}", "ok": frac_eq(left, cycle)}


def _verify_prop5(task):
    parts = task
    mu = Partition(parts)
    ok = frac_eq(constant_identity(mu, "prop5"), prop5_expected(mu))
    return {"instance": f"mu={list(parts)}", "ok": ok}


def _verify_prop6(task):
    parts = task
    mu = Partition(parts)
    got = constant_identity(mu, "littlewood")
    ok = got.numerator.constant_value() == Fraction(1, z_of(mu))
    return {"instance": f"mu={list(parts)}", "ok": ok}


def _verify_prop7(task):
    n, cap = task
    got = symmetrized_constant(n, "prop7", cap=cap)
    expected = FactoredFraction.constant(x_only_universe(n), math.factorial(n))
    return {"instance": f"n={n}", "ok": frac_eq(got, expected)}


def _verify_prop8(task):
    n, cap = task
    got = symmetrized_constant(n, "prop8", cap=cap)
    uni = x_only_universe(n)
    expected = FactoredFraction(
        Polynomial.one(uni),
        [Polynomial.variable(uni, f"x{i}") for i in range(1, n + 1)],
    )
    return {"instance": f"n={n}", "ok": frac_eq(got, expected)}


def _verify_appendix(task):
    n, relation, side, cap = task
    ok = appendix_step(n, relation, side, cap=cap)
    return {"instance": f"n={n} relation={relation} side={side}", "ok": ok}


_VERIFY_DISPATCH = {
    "thm6": _verify_thm6,
    "thm7": _verify_thm7,
    "prop5": _verify_prop5,
    "prop6": _verify_prop6,
    "prop7": _verify_prop7,
    "prop8": _verify_prop8,
    "appendix": _verify_appendix,
}


def _verify_tasks(identity: str, args) -> list:
    from .identities import SYMMETRIZED_CAP

    cap = args.max_n if args.max_n is not None else SYMMETRIZED_CAP
    if identity in ("thm6", "thm7", "prop7", "prop8"):
        return [(n, cap) for n in range(1, args.n + 1)]
    if identity == "appendix":
        return [
            (n, relation, side, cap)
            for n in range(2, args.n + 1)
            for relation in (13, 14)
            for side in ("L", "R")
        ]
    if identity in ("prop5", "prop6"):
        max_length = 6 if identity == "prop5" else 7
        return [
            tuple(mu.parts)
            for mu in partitions_up_to(args.max_weight)
            if mu.length <= max_length
        ]
    raise UsageError(f"unknown identity {identity!r}")


def cmd_verify(args) -> RunReport:
    report = RunReport("verify")
    t0 = time.time()
    fn = _VERIFY_DISPATCH.get(args.identity)
    if fn is None:
        raise UsageError(f"unknown identity {args.identity!r}")
    tasks = _verify_tasks(args.identity, args)
    results = _parallel_map(fn, tasks)
    for res in results:
        report.record(res["instance"], res["ok"])
    report.elapsed = time.time() - t0
    doc = {
        "identity": args.identity,
        "results": results,
        **report.to_json(),
    }
    if args.format == "json":
        print(dumps(doc))
    else:
        for res in results:
            print(f"{'ok' if res['ok'] else 'FAIL'}  {res['instance']}")
        print(
            f"verify {args.identity}: {report.instances_checked} instances, "
            f"{len(report.failures)} failures, {report.elapsed:.1f}s"
        )
    return report


# -- expand ------------------------------------------------------------------


def cmd_expand(args) -> RunReport:
    report = RunReport("expand")
    t0 = time.time()
    basis = _CLI_BASES.get(args.basis)
    if basis is None:
        raise UsageError(f"unknown basis {args.basis!r}")
    table = row_expansion_table(args.n, basis)
    report.instances_checked = len(table.entries)
    report.elapsed = time.time() - t0
    if args.format == "json":
        doc = {
            "n": args.n,
            "basis": args.basis,
            "entries": [
                {"mu": mu.to_json(), "coefficient": coeff.to_json()}
                for mu, coeff in table.entries
            ],
        }
        print(dumps(doc))
    else:
        for mu, coeff in table.entries:
            print(f"{mu}  {coeff.text()}")
    return report


# -- positivity --------------------------------------------------------------


def _positivity_instance(task):
    parts = task
    mu = Partition(parts)
    rep = positivity_report(mu)
    return {
        "mu": list(parts),
        "P": rep.P.text(),
        "H": rep.H.text(),
        "Hbar": rep.Hbar.text() if rep.Hbar is not None else None,
        "all_coefficients_nonnegative_integers": rep.all_coefficients_nonnegative_integers,
        "identity_holds": rep.identity_holds,
        "ok": rep.passed(),
    }


def cmd_positivity(args) -> RunReport:
    report = RunReport("positivity")
    t0 = time.time()
    if args.mu:
        partitions = [parse_partition(args.mu)]
    else:
        partitions = partitions_up_to(args.max_weight)
    tasks = [tuple(mu.parts) for mu in partitions]
    results = _parallel_map(_positivity_instance, tasks)
    for res in results:
        report.record(f"mu={res['mu']}", res["ok"])
    report.elapsed = time.time() - t0
    if args.format == "json":
        print(dumps({"results": results, **report.to_json()}))
    else:
        for res in results:
            status = "ok" if res["ok"] else "FAIL"
            print(f"{status}  mu={res['mu']}  H = {res['H']}")
        print(
            f"positivity: {report.instances_checked} instances, "
            f"{len(report.failures)} failures, {report.elapsed:.1f}s"
        )
    return report


# -- eigencheck --------------------------------------------------------------


def cmd_eigencheck(args) -> RunReport:
    report = RunReport("eigencheck")
    t0 = time.time()
    from .macdonald import OPERATOR_N_CAP

    cap = args.max_N if args.max_N is not None else OPERATOR_N_CAP
    ok = eigencheck(args.n, args.N, cap=cap)
    report.record(f"n={args.n} N={args.N}", ok)
    report.elapsed = time.time() - t0
    doc = {"n": args.n, "N": args.N, "ok": ok, **report.to_json()}
    if args.format == "json":
        print(dumps(doc))
    else:
        print(f"{'ok' if ok else 'FAIL'}  eigen-equation n={args.n} N={args.N}")
    return report


# -- selftest ----------------------------------------------------------------


def cmd_selftest(args) -> RunReport:
    report = RunReport("selftest")
    t0 = time.time()
    results = []
    for criterion in acceptance.ALL_CRITERIA:
        res = criterion()
        results.append(res)
        if args.format != "json":
            print(res.line(), flush=True)
        report.instances_checked += res.instances
        for failure in res.failures:
            report.failures.append(
                {"instance": f"criterion {res.number}: {failure}",
                 "expected": "pass", "actual": "fail"}
            )
    report.elapsed = time.time() - t0
    if args.format == "json":
        print(dumps({"criteria": [r.to_json() for r in results], **report.to_json()}))
    else:
        overall = "PASS" if report.exit_code == EXIT_OK else "FAIL"
        print(
            f"selftest {overall}: {report.instances_checked} instances, "
            f"{len(report.failures)} failures, {report.elapsed:.1f}s"
        )
    return report


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmono",
        description=(
            "Exact verification engine for q-specializations of monomial "
            "symmetric functions and the row Macdonald polynomial."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("specialize", help="closed forms on the (a-b)/(1-q) alphabet")
    p.add_argument("--mu", required=True, help="partition, e.g. 2,1")
    p.add_argument(
        "--form",
        default="theorem1",
        choices=["theorem1", "theorem3", "oracle-powersum", "oracle-direct"],
    )
    p.add_argument("--oracle-N", type=int, default=None, help="alphabet size for oracle-direct")
    p.add_argument("--subst", default=None, help="bindings, e.g. a=1,b=q^4")
    p.set_defaults(fn=cmd_specialize)

    p = sub.add_parser("verify", help="verify a named identity family")
    p.add_argument(
        "--identity",
        required=True,
        choices=sorted(_VERIFY_DISPATCH),
    )
    p.add_argument("--n", type=int, default=4, help="largest alphabet/sum size")
    p.add_argument("--max-weight", type=int, default=9, help="partition sweep bound")
    p.add_argument("--max-n", type=int, default=None, help="override the symmetrized-sum cap")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("expand", help="basis expansions of the row polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", required=True, choices=sorted(_CLI_BASES))
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("positivity", help="positivity polynomial reports")
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--mu", default=None, help="single partition instead of a sweep")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_positivity)

    p = sub.add_parser("eigencheck", help="difference-operator eigen-equation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-N", type=int, default=None, help="override the operator cap")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_eigencheck)

    p = sub.add_parser("selftest", help="run the full acceptance suite at default caps")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(fn=cmd_selftest)

    return parser


def execute(argv) -> RunReport:
    """Parse argv, run the named command, print its output, and return the
    run report.  Raises QmonoError subclasses for usage and resource
    problems; argparse itself exits with code 2 on unknown flags."""
    args = build_parser().parse_args(argv)
    return args.fn(args)


def main(argv=None) -> int:
    try:
        report = execute(sys.argv[1:] if argv is None else argv)
    except ResourceLimitError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except QmonoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
