"""``romankit`` command line.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import csv
import functools
import io
import json
import re
import sys

import click

from .coefficients import parse_scheme, scheme_coeff
from .errors import RomanKitError, UsageError
from .factorials import roman_factorial_real
from .identities import IDENTITIES, verify_grid
from .ledger import discrepancy_ledger, render_ledger
from .multinomial import MultiIndex, multinomial_coeff
from .numerics import parse_rational, render
from .tables import build_table, render_table

EXIT_FAILED = 1
EXIT_DOMAIN = 3

# negative numbers and ranges such as -30..30 are positional, not options
_ARGS = {"ignore_unknown_options": True}

_format_option = click.option(
    "--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain",
    show_default=True, help="Output format.",
)
_out_option = click.option(
    "--out", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write output to this file instead of stdout.",
)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except UsageError as exc:
            raise click.UsageError(str(exc)) from exc
        except RomanKitError as exc:
            click.echo(f"romankit: domain error: {exc}", err=True)
            sys.exit(EXIT_DOMAIN)
    return wrapper


def _int(text: str) -> int:
    try:
        value = parse_rational(text)
    except RomanKitError:
        raise UsageError(f"expected an integer, got {text!r}") from None
    if value.denominator != 1:
        raise UsageError(f"expected an integer, got {text!r}")
    return value.numerator


def _csv_text(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Exact Roman, Knuth, Gamma and q-analog binomial coefficients."""


@cli.command("eval", context_settings=_ARGS)
@click.argument("scheme")
@click.argument("n")
@click.argument("k")
@_format_option
@_out_option
@_handle_errors
def eval_cmd(scheme, n, k, fmt, out):
    """Evaluate [N choose K] under SCHEME (roman, knuth, gamma, trivial, q:<rational>).

    K may be a comma-separated multi-index such as 2,2,-1.
    """
    s = parse_scheme(scheme)
    n_val = _int(n)
    if "," in k:
        beta = MultiIndex.parse(k)
        value = multinomial_coeff(s, n_val, beta)
        k_text = str(beta)
    else:
        value = scheme_coeff(s, n_val, _int(k))
        k_text = str(_int(k))
    if s.name != "knuth":
        value = value.coefficient(0)
    text = render(value)
    if fmt == "plain":
        _emit(text + "\n", out)
    elif fmt == "csv":
        _emit(_csv_text([["scheme", "n", "k", "value"], [s.name, n_val, k_text, text]]), out)
    else:
        _emit(json.dumps({"scheme": s.name, "n": n_val, "k": k_text, "value": text}) + "\n", out)


@cli.command("table")
@click.argument("which")
@_format_option
@_out_option
@_handle_errors
def table_cmd(which, fmt, out):
    """Print a reference table: roman-factorials, roman-coefficients,
    gamma-coefficients, region-1 .. region-6, resistance."""
    _emit(render_table(build_table(which), fmt), out)


def _parse_bounds(text: str) -> list[tuple[int, int]]:
    ranges = []
    for part in text.replace("−", "-").split(","):
        m = re.fullmatch(r"\s*([+-]?\d+)\.\.([+-]?\d+)\s*", part)
        if m is None:
            raise UsageError(f"bounds must look like LO..HI, got {part!r}")
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise UsageError(f"empty range {part!r}")
        ranges.append((lo, hi))
    return ranges


def _report_line(r) -> str:
    status = "PASS" if r.ok else "FAIL"
    box = " x ".join(f"{lo}..{hi}" for lo, hi in r.bounds)
    line = (
        f"{status} {r.identity} scheme={r.scheme} bounds={box} applicable={r.applicable} "
        f"held={r.held} failed={r.failed} inapplicable={r.inapplicable}"
    )
    for f in r.failures[:10]:
        line += f"\n    args={tuple(f['args'])} lhs={f['lhs']} rhs={f['rhs']}"
    return line


@cli.command("verify", context_settings=_ARGS)
@click.argument("identity")
@click.argument("bounds", required=False, default="-10..10")
@click.argument("scheme", required=False, default="roman")
@_format_option
@_out_option
@_handle_errors
def verify_cmd(identity, bounds, scheme, fmt, out):
    """Sweep IDENTITY (or 'all') over BOUNDS (LO..HI, or one range per argument
    separated by commas) under SCHEME.  Exits 1 if any applicable tuple fails."""
    names = sorted(IDENTITIES) if identity == "all" else [identity]
    for name in names:
        if name not in IDENTITIES:
            raise UsageError(f"unknown identity {name!r}; choose from all, {', '.join(sorted(IDENTITIES))}")
    box = _parse_bounds(bounds)
    s = parse_scheme(scheme)
    reports = [verify_grid(name, box, s) for name in names]
    if fmt == "json":
        payload = [r.to_dict() for r in reports] if identity == "all" else reports[0].to_dict()
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        rows = [["identity", "scheme", "bounds", "applicable", "held", "failed", "inapplicable"]]
        for r in reports:
            box_text = " ".join(f"{lo}..{hi}" for lo, hi in r.bounds)
            rows.append([r.identity, r.scheme, box_text, r.applicable, r.held, r.failed, r.inapplicable])
        text = _csv_text(rows)
    else:
        text = "".join(_report_line(r) + "\n" for r in reports)
    _emit(text, out)
    if not all(r.ok for r in reports):
        sys.exit(EXIT_FAILED)


@cli.command("ledger")
@_format_option
@_out_option
@_handle_errors
def ledger_cmd(fmt, out):
    """List places where printed values disagree with the definitions."""
    _emit(render_ledger(discrepancy_ledger(), fmt), out)


@cli.command("real", context_settings=_ARGS)
@click.argument("a", type=float)
@click.argument("b", type=float, required=False)
@_handle_errors
def real_cmd(a, b):
    """Floating Roman factorial [A]!, or with B the Gamma quotient [A]!/([B]![A-B]!)."""
    if b is None:
        value = roman_factorial_real(a)
    else:
        value = roman_factorial_real(a) / (roman_factorial_real(b) * roman_factorial_real(a - b))
    click.echo(repr(value))


def main(argv=None):
    cli.main(args=argv, prog_name="romankit")


if __name__ == "__main__":
    main()
