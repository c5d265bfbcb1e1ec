"""Command-line interface: dynsu2 verify | normalize | table."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from fractions import Fraction

import click

from .scalars import DISPLAY, Evaluator, Point, PoleAtPoint, pretty
from .suites import SUITES, all_report, suite_report

SUITE_NAMES = list(SUITES) + ["all"]
TABLES = ("matelem", "tfun", "cg", "moments")
_VAR = {v: k for k, v in DISPLAY.items()}


def default_seed():
    return int(os.environ.get("DYNSU2_SEED", "0"))


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@click.group()
def main():
    """Symbolic verification for the SU(2) dynamical quantum group."""


@main.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--bound", type=int, default=None, help="Index bound (suite default if omitted).")
@click.option("--points", type=click.IntRange(min=1), default=20, show_default=True,
              help="Random sample points per identity.")
@click.option("--seed", type=int, default=None, help="Sampling seed (default: $DYNSU2_SEED or 0).")
@click.option("--exhaustive", is_flag=True, help="Check every index combination where a suite samples.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")
def verify(suite, bound, points, seed, exhaustive, out):
    """Run a verification suite and emit a JSON report."""
    seed = default_seed() if seed is None else seed
    if suite == "all":
        rep = all_report(bound, points, seed, exhaustive)
    else:
        rep = suite_report(suite, bound, points, seed, exhaustive)
    text = _dump(rep)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        click.echo(f"{suite}: {rep['status']} ({rep['counts']['pass']} pass, "
                   f"{rep['counts']['fail']} fail)", err=True)
    else:
        click.echo(text, nl=False)
    sys.exit(0 if rep["status"] == "pass" else 1)


@main.command()
@click.argument("expr")
def normalize(expr):
    """Print the normal form of an algebra expression."""
    from .grammar import ParseError, parse

    try:
        x = parse(expr)
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(2)
    click.echo(str(x))


def parse_point(text):
    """'q=1/3,lambda=2/5' -> Point; a dynamical variable v is given through q^v."""
    u = {}
    qv = None
    for item in text.split(","):
        if not item.strip():
            continue
        key, _, val = item.partition("=")
        key = key.strip()
        try:
            value = Fraction(val.strip())
        except ValueError:
            raise click.BadParameter(f"bad value in {item!r}", param_hint="--point")
        if key == "q":
            qv = value
        else:
            u[_VAR.get(key, key)] = value
    if qv is None:
        raise click.BadParameter("q is required", param_hint="--point")
    try:
        return Point(qv, u=u)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--point")


def _value(f, point, ev):
    if point is None:
        return pretty(f)
    v = ev.value(f, point)
    return str(Fraction(int(v.numerator), int(v.denominator)))


def _rows(kind, opts, point):
    from . import corep, dynrep, haar
    from .algebra import _word_display

    ev = Evaluator()
    rows = []
    if kind == "matelem":
        N = opts["N"]
        for k in range(N + 1):
            for j in range(N + 1):
                t = corep.matelem(N, k, j).pruned()
                for w, f in sorted(t.terms.items()):
                    rows.append({"N": N, "k": k, "j": j, "word": _word_display(w), "value": _value(f, point, ev)})
    elif kind == "tfun":
        N, m = opts["N"], opts["m"]
        for k in range(N + 1):
            for j in range(N + 1):
                rows.append({"N": N, "k": k, "j": j, "m": m,
                             "value": _value(dynrep.tfun(N, k, j, m), point, ev)})
    elif kind == "cg":
        M, N, s = opts["M"], opts["N"], opts["s"]
        for j in range(M + 1):
            for k in range(N + 1):
                if corep.cg_admissible(M, N, s, j, k):
                    rows.append({"M": M, "N": N, "s": s, "j": j, "k": k,
                                 "value": _value(corep.cg(M, N, s, j, k), point, ev)})
    else:
        d = opts["d"]
        if point is None:
            vals = [pretty(m) for m in haar.moments(d)]
        else:
            vals = [str(Fraction(int(v.numerator), int(v.denominator))) for v in haar.moment_values(d, point)]
        rows = [{"k": k, "value": v} for k, v in enumerate(vals)]
    return rows


@main.command()
@click.argument("kind", type=click.Choice(TABLES))
@click.option("--N", "N", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--M", "M", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--s", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--m", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--d", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--point", default=None, help="Evaluate at q=..,lambda=..,mu=..; dynamical values are q^v.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
def table(kind, N, M, s, m, d, point, fmt):
    """Tables of matrix elements, T-functions, CG coefficients or moments."""
    from .corep import IndexOutOfRange
    from .haar import MAX_MOMENT, LeadingCoefficientPole

    pt = parse_point(point) if point else None
    if kind == "cg" and s > min(M, N):
        raise click.BadParameter(f"s must be at most min(M, N) = {min(M, N)}", param_hint="--s")
    if kind == "moments" and d > MAX_MOMENT:
        raise click.BadParameter(f"d must be at most {MAX_MOMENT}", param_hint="--d")
    try:
        rows = _rows(kind, {"N": N, "M": M, "s": s, "m": m, "d": d}, pt)
    except (PoleAtPoint, LeadingCoefficientPole) as exc:
        click.echo(f"error: pole at the given point ({exc})", err=True)
        sys.exit(1)
    except IndexOutOfRange as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except KeyError as exc:
        click.echo(f"error: {exc.args[0]}; give it with --point", err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(_dump({"table": kind, "point": point, "rows": rows}), nl=False)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["value"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)


if __name__ == "__main__":
    main()
