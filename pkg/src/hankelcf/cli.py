"""Command-line front end: ``hankelcf {expand,hankel,verify,tau-trace,oeis-check}``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 degenerate input.
The default seed for ``verify`` is :data:`hankelcf.verify.DEFAULT_SEED`; the
environment variable ``HANKELCF_SEED`` overrides it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cfrac import DegenerateChainError, qfe_to_dict, run_shifts, step_to_dict
from .exactnum import NotPowerSeriesError, Polynomial, RationalFunction, format_rational
from .hankel import hankel_table
from .reports import REPORT_SCHEMA_VERSION, jsonable
from .series import (EParams, G2kParams, InvalidQfeError, Qfe, build_e_qfe, build_g_qfe,
                     qfe_solve)
from .verify import DEFAULT_SEED, SUITES, ResampleLimit, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3
SEED_ENV = "HANKELCF_SEED"
FAMILIES = ("e", "g24", "g2k", "custom")


class DegenerateInput(ValueError):
    pass


class BFileError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# --- argument types ---------------------------------------------------------

def rational_list(text: str) -> list[Fraction]:
    """Parse ``"1,-1/2,3"``."""
    out = []
    for item in text.split(","):
        item = item.strip()
        try:
            out.append(Fraction(item))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"not a rational 'p/q': {item!r}") from None
    return out


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def pos_int(text: str) -> int:
    value = nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def parse_ratfunc(text: str) -> RationalFunction:
    """Read a rational function of ``x`` with rational coefficients."""
    import sympy
    from sympy.parsing.sympy_parser import convert_xor, standard_transformations

    x = sympy.Symbol("x")
    try:
        expr = sympy.parse_expr(text, local_dict={"x": x},
                                transformations=standard_transformations + (convert_xor,))
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r}: {exc}") from None
    num, den = sympy.fraction(sympy.together(expr))

    def to_poly(e) -> Polynomial:
        try:
            p = sympy.Poly(e, x, domain=sympy.QQ)
        except (sympy.PolynomialError, sympy.CoercionFailed):
            raise argparse.ArgumentTypeError(
                f"{text!r} is not a rational function of x over Q") from None
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(p.all_coeffs())]
        return Polynomial(coeffs)

    try:
        return RationalFunction(to_poly(num), to_poly(den))
    except (NotPowerSeriesError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc}") from None


# --- configuration ----------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    family: str = "e"
    params: list[Fraction] = field(default_factory=list)
    k: int | None = None
    d: int | None = None
    u: RationalFunction | None = None
    v: RationalFunction | None = None
    order: int = 10
    max_n: int = 10
    steps: int = 4
    trials: int = 20
    seed: int = DEFAULT_SEED
    format: str = "table"
    suite: str | None = None
    max_p: int = 3
    jobs: int = 1
    sign_table: str = "printed"
    report: Path | None = None
    bfile_path: Path | None = None
    offset: int = 0

    def family_dict(self) -> dict:
        out = {"family": self.family}
        if self.family == "custom":
            out.update(d=self.d, k=self.k, u=str(self.u), v=str(self.v))
        else:
            out["params"] = list(self.params)
            if self.family == "g2k":
                out["k"] = self.k
        return out


def build_qfe(cfg: RunConfig) -> Qfe:
    """The equation selected by the family flags."""
    try:
        if cfg.family == "custom":
            return Qfe(cfg.d, cfg.k, cfg.u, cfg.v)
        if cfg.family == "e":
            return build_e_qfe(EParams(*cfg.params))
        k = 4 if cfg.family == "g24" else cfg.k
        return build_g_qfe(G2kParams(*cfg.params, k))
    except InvalidQfeError as exc:
        raise DegenerateInput(str(exc)) from exc


def _seed_default() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}") from None


# --- rendering --------------------------------------------------------------

def render_values(values: list[Fraction], fmt: str, label: str, meta: dict) -> str:
    if fmt == "json":
        doc = {"schema_version": REPORT_SCHEMA_VERSION, label: list(values), **meta}
        return json.dumps(jsonable(doc), indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", label])
        for n, v in enumerate(values):
            w.writerow([n, format_rational(v)])
        return buf.getvalue().rstrip("\n")
    cells = [format_rational(v) for v in values]
    width = max(len(str(len(values) - 1)), 1)
    return "\n".join(f"{n:>{width}}  {c}" for n, c in enumerate(cells))


# --- commands ---------------------------------------------------------------

def cmd_expand(cfg: RunConfig) -> int:
    series = qfe_solve(build_qfe(cfg), cfg.order)
    meta = {"command": "expand", "order": cfg.order, **cfg.family_dict()}
    print(render_values(list(series.coeffs[: cfg.order + 1]), cfg.format, "coefficients", meta))
    return EXIT_OK


def cmd_hankel(cfg: RunConfig) -> int:
    q = build_qfe(cfg)
    table = hankel_table(qfe_solve(q, max(2 * cfg.max_n - 2, 0)), cfg.max_n)
    meta = {"command": "hankel", "max_n": cfg.max_n, **cfg.family_dict()}
    print(render_values(table, cfg.format, "hankel", meta))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    scfg = SuiteConfig(trials=cfg.trials, max_n=cfg.max_n, seed=cfg.seed,
                       k=cfg.k if cfg.k is not None else 5, max_p=cfg.max_p,
                       sign_table=cfg.sign_table)
    try:
        rep = run_suite(cfg.suite, scfg, jobs=cfg.jobs)
    except ResampleLimit as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    text = rep.to_json(scfg.as_dict())
    summary = (f"{cfg.suite}: {'PASS' if rep.passed else 'FAIL'} "
               f"({len(rep.checks) - len(rep.failures)}/{len(rep.checks)} checks, "
               f"{len(rep.discrepancies)} printed-formula discrepancies)")
    if cfg.report is not None:
        cfg.report.write_text(text + "\n")
        print(summary)
    else:
        print(text)
        print(summary, file=sys.stderr)
    first = rep.first_failure()
    if first is not None:
        print(f"first failure: {first.name} {json.dumps(jsonable(first.inputs), sort_keys=True)}",
              file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def step_verified(before: Qfe, after: Qfe, step, max_n: int) -> bool:
    """Does the recorded determinant relation hold against brute force up to ``max_n``?"""
    order = max(2 * max_n - 2, 0)
    h1 = hankel_table(qfe_solve(before, order), max_n)
    h2 = hankel_table(qfe_solve(after, order), max_n)
    for n in range(max_n + 1):
        res = step.apply(n)
        if res is not None and h1[n] != res[1] * h2[res[0]]:
            return False
    return True


def cmd_tau_trace(cfg: RunConfig) -> int:
    q0 = build_qfe(cfg)
    degenerate = None
    try:
        trace, ledger = run_shifts(q0, cfg.steps)
    except DegenerateChainError as exc:
        trace, ledger = exc.trace, exc.ledger
        degenerate = {"step_index": exc.step_index, "message": str(exc)}
    check_n = min(cfg.max_n, 8)
    steps = []
    for i, step in enumerate(ledger.steps):
        entry = step_to_dict(step)
        entry["verified"] = step_verified(trace[i], trace[i + 1], step, check_n)
        steps.append(entry)
    doc = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "command": "tau-trace",
        **jsonable(cfg.family_dict()),
        "verify_max_n": check_n,
        "trace": [qfe_to_dict(q) for q in trace],
        "steps": steps,
        "total_shift": ledger.total_shift,
        "degenerate": degenerate,
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if cfg.report is not None:
        cfg.report.write_text(text + "\n")
    else:
        print(text)
    if degenerate is not None:
        return EXIT_DEGENERATE
    return EXIT_OK if all(s["verified"] for s in steps) else EXIT_FAIL


def read_bfile(path: Path) -> list[tuple[int, int]]:
    """Parse an OEIS b-file: ``index value`` per line, ``#`` comments and blanks skipped."""
    rows = []
    for line_no, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(line_no, f"expected 'index value', got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BFileError(line_no, f"non-integer field in {raw!r}") from None
    return rows


def compare_bfile(table: list[Fraction], rows: list[tuple[int, int]], offset: int) -> dict:
    """Match b-file entry ``i`` against ``H_{i - offset}`` where both exist."""
    compared = 0
    first = None
    for i, value in rows:
        n = i - offset
        if not 0 <= n < len(table):
            continue
        compared += 1
        if first is None and table[n] != value:
            first = {"n": n, "bfile_index": i, "expected": value, "actual": table[n]}
    return {"compared": compared, "agree": first is None, "first_mismatch": first}


def cmd_oeis_check(cfg: RunConfig) -> int:
    try:
        rows = read_bfile(cfg.bfile_path)
    except OSError as exc:
        print(f"error: --bfile: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BFileError as exc:
        print(f"error: --bfile {cfg.bfile_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    top = cfg.max_n
    if rows:
        top = min(top, max(i for i, _ in rows) - cfg.offset)
    top = max(top, 0)
    q = build_qfe(cfg)
    table = hankel_table(qfe_solve(q, max(2 * top - 2, 0)), top)
    result = compare_bfile(table, rows, cfg.offset)
    if result["compared"] == 0:
        print("warning: no overlapping indices; agreement is vacuous", file=sys.stderr)
    doc = {"schema_version": REPORT_SCHEMA_VERSION, "command": "oeis-check",
           "bfile": str(cfg.bfile_path), "offset": cfg.offset, **cfg.family_dict(), **result}
    if cfg.format == "json":
        print(json.dumps(jsonable(doc), indent=2, sort_keys=True))
    elif result["agree"]:
        print(f"agree on {result['compared']} terms")
    else:
        m = result["first_mismatch"]
        print(f"first mismatch at n={m['n']} (b-file index {m['bfile_index']}): "
              f"b-file {m['expected']}, computed {format_rational(m['actual'])}")
    return EXIT_OK if result["agree"] else EXIT_FAIL


COMMANDS = {"expand": cmd_expand, "hankel": cmd_hankel, "verify": cmd_verify,
            "tau-trace": cmd_tau_trace, "oeis-check": cmd_oeis_check}


# --- parser -----------------------------------------------------------------

def _add_family(p: argparse.ArgumentParser, default_params: str | None = None) -> None:
    g = p.add_argument_group("equation")
    g.add_argument("--family", choices=FAMILIES, default="e")
    g.add_argument("--params", type=rational_list, default=default_params,
                   help="comma separated p/q values: e takes a,b,c,d; g24 and g2k take a,b1,b2,c")
    g.add_argument("--k", type=pos_int, help="x-power of the quadratic term (g2k, custom)")
    g.add_argument("--d", type=nonneg_int, help="numerator power (custom)")
    g.add_argument("--u", type=parse_ratfunc, help="rational function of x (custom)")
    g.add_argument("--v", type=parse_ratfunc, help="rational function of x (custom)")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelcf",
        description="Exact Hankel determinants of series defined by quadratic functional equations.",
        epilog=f"verify seed: --seed, else ${SEED_ENV}, else {DEFAULT_SEED}.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="series coefficients a_0..a_order")
    _add_family(p)
    p.add_argument("--order", type=nonneg_int, default=10)
    _add_format(p)

    p = sub.add_parser("hankel", help="Hankel determinants H_0..H_max_n")
    _add_family(p)
    p.add_argument("--max-n", type=nonneg_int, default=10)
    _add_format(p)

    p = sub.add_parser("verify", help="randomised closed-form checks against brute force")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--trials", type=pos_int, default=20)
    p.add_argument("--max-n", type=nonneg_int, default=12)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--k", type=pos_int, default=5)
    p.add_argument("--max-p", type=pos_int, default=3)
    p.add_argument("--sign-table", choices=("printed", "chain"), default="printed",
                   help="sign convention for the k >= 5 closed form")
    p.add_argument("--jobs", type=pos_int, default=1)
    p.add_argument("--report", type=Path, help="write the JSON report here instead of stdout")

    p = sub.add_parser("tau-trace", help="JSON trace of repeated transformation steps")
    _add_family(p)
    p.add_argument("--steps", type=nonneg_int, default=4,
                   help="index-shifting steps to take; rescaling steps are added as needed")
    p.add_argument("--max-n", type=nonneg_int, default=6,
                   help="brute-force depth for the per-step check (capped at 8)")
    p.add_argument("--report", type=Path)

    p = sub.add_parser("oeis-check", help="compare H_n against an OEIS b-file")
    _add_family(p, default_params="1,1,-1,1")
    p.add_argument("--bfile", type=Path, required=True)
    p.add_argument("--offset", type=int, default=0,
                   help="b-file index of H_0 (default 0)")
    p.add_argument("--max-n", type=nonneg_int, default=20)
    p.add_argument("--format", choices=("table", "json"), default="table")
    return parser


_PARAM_COUNT = {"e": 4, "g24": 4, "g2k": 4}


def config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("family", "params", "k", "d", "u", "v", "order", "max_n", "steps",
                 "trials", "format", "suite", "max_p", "jobs", "sign_table", "report", "offset"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "bfile"):
        cfg.bfile_path = args.bfile
    if args.command == "verify":
        cfg.seed = args.seed if args.seed is not None else _seed_default()
        return cfg
    if not hasattr(args, "family"):
        return cfg
    if cfg.family == "custom":
        missing = [f"--{n}" for n in ("d", "k", "u", "v") if getattr(args, n) is None]
        if missing:
            parser.error(f"--family custom needs {', '.join(missing)}")
        return cfg
    want = _PARAM_COUNT[cfg.family]
    if args.params is None:
        parser.error(f"--params is required for --family {cfg.family}")
    if len(cfg.params) != want:
        parser.error(f"argument --params: --family {cfg.family} takes {want} values, "
                     f"got {len(cfg.params)}")
    if cfg.family == "g2k":
        if args.k is None:
            parser.error("--family g2k needs --k")
        if args.k < 4:
            parser.error(f"argument --k: must be >= 4 for g2k, got {args.k}")
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = config_from_args(args, parser)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[cfg.command](cfg)
    except DegenerateInput as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
