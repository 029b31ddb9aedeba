"""Command-line front end.

Exit codes: 0 success, 1 identity mismatch, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .identities import (IDENTITY_IDS, MAX_BOUND, MAX_DEGREE, MAX_M, MAX_N, T_MODES,
                         IdentityReport, ParameterError, make_context, worked_example_table,
                         verify)
from .partitions import format_partition, parse_partition
from .poly import NotDivisible, Poly, parse_poly
from .symfunc import FAMILY_KINDS, SCHUR_METHODS, Family, schur

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    identity: str | None = None
    n: int = 2
    m: int = 2
    degree: int = 4
    bounds: tuple[int, ...] | None = None
    family: str = "h"
    family_file: str | None = None
    t_mode: str | None = None
    shape: tuple[int, ...] | None = None
    method: str = "bialternant"
    table: str | None = None
    box: int = 4
    format: str = "text"
    threads: int = 1

    def to_argv(self) -> list[str]:
        """Flags that :func:`parse_config` maps back to this config."""
        if self.command == "table":
            return ["table", self.table]
        if self.command == "schur":
            return ["schur", "--shape", format_partition(self.shape), "--n", str(self.n),
                    "--method", self.method]
        argv = ["verify", self.identity, "--n", str(self.n), "--m", str(self.m),
                "--degree", str(self.degree), "--family", self.family, "--box", str(self.box),
                "--format", self.format, "--threads", str(self.threads)]
        if self.bounds is not None:
            argv += ["--bounds", format_partition(self.bounds)]
        if self.family_file is not None:
            argv += ["--family-file", self.family_file]
        if self.t_mode is not None:
            argv += ["--t-mode", self.t_mode]
        if self.shape is not None:
            argv += ["--shape", format_partition(self.shape)]
        return argv


def _partition_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cauchyschur",
                     description="Schur polynomials and generalized Cauchy identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify one identity at fixed parameters")
    v.add_argument("identity", choices=IDENTITY_IDS)
    v.add_argument("--n", type=int, default=2, help="number of x variables")
    v.add_argument("--m", type=int, default=2, help="number of y variables")
    v.add_argument("--degree", type=int, default=4, help="truncation degree D")
    v.add_argument("--bounds", type=_partition_arg, help="bound a as k1,k2,...")
    v.add_argument("--family", choices=FAMILY_KINDS, default="h")
    v.add_argument("--family-file", help="custom family, one polynomial f_k per line")
    v.add_argument("--t-mode", choices=T_MODES)
    v.add_argument("--shape", type=_partition_arg, help="partition for lemma2")
    v.add_argument("--box", type=int, default=4, help="composition box for lemma1")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--threads", type=int, default=1)

    s = sub.add_parser("schur", help="print a Schur polynomial")
    s.add_argument("--shape", type=_partition_arg, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=SCHUR_METHODS, default="bialternant")

    t = sub.add_parser("table", help="reproduce a worked example")
    t.add_argument("table", choices=("paper-example",))
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    """Parse and guardrail-check ``argv``; raises :class:`UsageError`."""
    args = build_parser().parse_args(list(argv))
    if args.command == "table":
        return RunConfig("table", table=args.table)
    if args.command == "schur":
        if not 1 <= args.n <= MAX_N:
            raise UsageError(f"--n must be in 1..{MAX_N}")
        return RunConfig("schur", n=args.n, shape=args.shape, method=args.method)
    if not 1 <= args.n <= MAX_N:
        raise UsageError(f"--n must be in 1..{MAX_N}")
    if not 1 <= args.m <= MAX_M:
        raise UsageError(f"--m must be in 1..{MAX_M}")
    if not 0 <= args.degree <= MAX_DEGREE:
        raise UsageError(f"--degree must be in 0..{MAX_DEGREE}")
    if args.bounds is not None:
        if len(args.bounds) != args.n:
            raise UsageError(f"--bounds needs exactly {args.n} entries")
        if max(args.bounds) > MAX_BOUND:
            raise UsageError(f"--bounds entries must be at most {MAX_BOUND}")
    if (args.family == "custom") != (args.family_file is not None):
        raise UsageError("--family custom and --family-file go together")
    if args.threads < 1:
        raise UsageError("--threads must be positive")
    return RunConfig("verify", identity=args.identity, n=args.n, m=args.m, degree=args.degree,
                     bounds=args.bounds, family=args.family, family_file=args.family_file,
                     t_mode=args.t_mode, shape=args.shape, box=args.box, format=args.format,
                     threads=args.threads)


def load_family(path: str, m: int) -> Family:
    """Read a custom family: line ``k`` (blank lines skipped) is ``f_k`` in ``y1..ym``.

    Indices past the last line are zero.
    """
    ctx = make_context(0, m)
    members = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                try:
                    members.append(parse_poly(line, ctx))
                except (ValueError, KeyError) as exc:
                    raise UsageError(f"{path}: bad polynomial {line!r}: {exc}") from None
    if not members:
        raise UsageError(f"{path}: empty family")
    return Family("custom", m, tuple(members), zero_tail=True)


def emit_report(report: IdentityReport, fmt: str = "text") -> str:
    """Render a report as an aligned table (ending in OK/FAIL) or as JSON."""
    if fmt == "json":
        return json.dumps(report.to_dict(), separators=(",", ":"))
    rows = [("identity", report.identity)]
    rows += [(key, _plain(value)) for key, value in report.params.items()]
    rows += [("verdict", report.verdict), ("lhs_terms", str(report.lhs_terms)),
             ("elapsed_ms", f"{report.elapsed_ms:.3f}")]
    if report.witness is not None:
        rows += [(f"witness.{key}", str(value)) for key, value in report.witness.items()]
    width = max(len(key) for key, _ in rows)
    lines = [f"{key.ljust(width)}  {value}" for key, value in rows]
    lines.append("OK" if report.ok else "FAIL")
    return "\n".join(lines)


def _plain(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def render_worked_table() -> tuple[str, bool]:
    """The n = 2, a = (2, 2) worked example; returns (text, sum == product)."""
    rows = worked_example_table(2)
    ctx = rows[0][1].ctx
    t = Poly.var(ctx, "t")
    lines = [f"{'lambda':<8}{'det(t^(lambda_i+j-i))':<24}s_lambda"]
    total = Poly.zero(ctx)
    for lam, det, s in rows:
        lines.append(f"{format_partition(lam):<8}{str(det):<24}{s}")
        total = total + s * det
    factors = []
    for i in (1, 2):
        x = Poly.var(ctx, f"x{i}")
        factors.append(1 + t * x + (t * x) ** 2)
    product = factors[0] * factors[1]
    lines.append(f"sum     = {total}")
    lines.append("product = " + "*".join(f"({f})" for f in factors))
    ok = total == product
    lines.append("OK" if ok else "FAIL")
    return "\n".join(lines), ok


def run(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
        if config.command == "table":
            text, ok = render_worked_table()
            print(text)
            return EXIT_OK if ok else EXIT_MISMATCH
        if config.command == "schur":
            print(schur(config.shape, config.n, config.method))
            return EXIT_OK
        family = (load_family(config.family_file, config.m) if config.family_file
                  else config.family)
        report = verify(config.identity, n=config.n, m=config.m, degree=config.degree,
                        bounds=config.bounds, family=family, t_mode=config.t_mode,
                        shape=config.shape, box=config.box, workers=config.threads)
    except UsageError as exc:
        print(f"cauchyschur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, ValueError, IndexError) as exc:
        print(f"cauchyschur: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotDivisible as exc:
        print(f"cauchyschur: right-hand side is not a polynomial: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(emit_report(report, config.format))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
