"""Command-line front end: load spec files, run computations and
verification suites, emit line-oriented reports.

Exit codes: 0 pass, 1 check failure, 2 parse error, 3 invariant violation,
4 unsupported combination, 5 degenerate parameter."""

from __future__ import annotations

import sys

import click
import sympy

from . import __version__
from .connections import UnsupportedCombination, levi_civita, ssnm
from .curvature import CurvatureCache, ricci_frame
from .einstein import (DegenerateParameter, EinsteinProblem,
                       UnsupportedProblem, classify)
from .geometry import InvariantViolation, VectorField
from .report import VerificationReport
from .scalars import DEFAULT_SEED
from .specfile import SpecError, load_spec
from .suite import PAPER_SECTIONS, run_paper_suite
from .warped import STATEMENTS, HypothesisError, verify_statement

EXIT_CHECK_FAIL = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_UNSUPPORTED = 4
EXIT_DEGENERATE = 5


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _load(spec_path):
    try:
        return load_spec(spec_path)
    except SpecError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except InvariantViolation as exc:
        click.echo(f"invariant violation: {exc}", err=True)
        sys.exit(EXIT_INVARIANT)


def _pick_connection(spec, connection, p_name):
    """Manifold plus the requested connection for a loaded spec."""
    if spec["kind"] == "warped":
        wp = spec["product"]
        man = wp.product
        if connection == "lc":
            return man, wp.product_lc
        try:
            return man, wp.product_ssnm
        except (UnsupportedCombination, HypothesisError) as exc:
            click.echo(f"unsupported: {exc}", err=True)
            sys.exit(EXIT_UNSUPPORTED)
    man = spec["manifold"]
    if connection == "lc":
        return man, levi_civita(man)
    P = spec.get("P")
    if p_name:
        try:
            P = VectorField.frame(man.chart, man.chart.index(p_name))
        except KeyError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
    if P is None:
        click.echo("unsupported: the non-metric connection needs a "
                   "distinguished vector field (spec [P] table or --P NAME)",
                   err=True)
        sys.exit(EXIT_UNSUPPORTED)
    try:
        return man, ssnm(man, P)
    except UnsupportedCombination as exc:
        click.echo(f"unsupported: {exc}", err=True)
        sys.exit(EXIT_UNSUPPORTED)


@click.group()
@click.version_option(__version__)
def main():
    """Symbolic tensor calculus on Z2-graded manifolds and warped products."""


@main.command()
@click.option("--spec", "spec_path", required=True,
              type=click.Path(exists=False), help="spec file (TOML)")
@click.option("--connection", type=click.Choice(["lc", "ssnm"]), default="lc",
              show_default=True)
@click.option("--P", "p_name", default=None,
              help="coordinate name whose frame field is the distinguished P")
@click.option("--out", default=None, type=click.Path(), help="output file")
def compute(spec_path, connection, p_name, out):
    """Christoffel, curvature and Ricci tables for a spec."""
    spec = _load(spec_path)
    man, conn = _pick_connection(spec, connection, p_name)
    chart = man.chart
    names = [c.name for c in chart.coords]
    d = chart.dim
    lines = [f"# compute: {man.name or spec_path}",
             f"# version: {__version__}",
             f"# connection: {connection}"]
    nz = 0
    for i in range(d):
        for j in range(d):
            for k in range(d):
                g = conn.gamma[(i, j)][k].canonical()
                if not g.is_zero():
                    nz += 1
                    lines.append(
                        f"GAMMA\t({names[i]},{names[j]})^{names[k]}\t{g!r}")
    lines.append(f"# nonzero christoffel entries: {nz}")
    cache = CurvatureCache(conn)
    nz = 0
    for i in range(d):
        for j in range(d):
            for k in range(d):
                r = cache.frame(i, j, k)
                if not r.is_zero():
                    nz += 1
                    lines.append("RIEMANN\t({},{},{})\t{!r}".format(
                        names[i], names[j], names[k], r))
    lines.append(f"# nonzero curvature triples: {nz}")
    nz = 0
    for i in range(d):
        for j in range(d):
            r = ricci_frame(conn, i, j, cache=cache)
            if not r.is_zero():
                nz += 1
                lines.append(f"RICCI\t({names[i]},{names[j]})\t{r!r}")
    lines.append(f"# nonzero ricci entries: {nz}")
    _emit("\n".join(lines) + "\n", out)


@main.command()
@click.option("--scope", default="paper", show_default=True,
              help="'paper', a suite section, or a statement id")
@click.option("--spec", "spec_path", default=None, type=click.Path(),
              help="warped spec to verify a single statement against")
@click.option("--out", default=None, type=click.Path(), help="output file")
@click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int)
def verify(scope, spec_path, out, seed):
    """Run verification checks and report pass/fail per check."""
    sections = dict(PAPER_SECTIONS)
    if scope == "paper":
        report = run_paper_suite(seed=seed)
    elif scope in sections:
        report = VerificationReport(title=scope, seed=seed,
                                    version=__version__)
        sections[scope](report, seed)
    elif scope in STATEMENTS:
        report = VerificationReport(title=scope, seed=seed,
                                    version=__version__)
        targets = []
        if spec_path:
            spec = _load(spec_path)
            if spec["kind"] != "warped":
                click.echo("parse error: statement scopes need a warped spec",
                           err=True)
                sys.exit(EXIT_PARSE)
            targets.append(spec["product"])
        else:
            from .bundled import bundled_warped
            from .suite import WARPED_SPECS
            req = STATEMENTS[scope].get("requires_p")
            for name in WARPED_SPECS:
                wp = bundled_warped(name)
                if req is None or req == wp.p_location:
                    targets.append(wp)
        try:
            for wp in targets:
                verify_statement(wp, scope, report=report)
        except HypothesisError as exc:
            click.echo(f"unsupported: {exc}", err=True)
            sys.exit(EXIT_UNSUPPORTED)
    else:
        click.echo(f"parse error: unknown scope {scope!r}; statement ids: "
                   + ", ".join(sorted(STATEMENTS)), err=True)
        sys.exit(EXIT_PARSE)
    _emit(report.render(), out)
    sys.exit(0 if report.all_passed else EXIT_CHECK_FAIL)


@main.command("classify")
@click.option("--base", type=click.Choice(["R10", "R12"]), required=True)
@click.option("--conn", type=click.Choice(["lc", "ssnm"]), required=True)
@click.option("--l", "l", type=int, required=True,
              help="fiber super-dimension difference q - n")
@click.option("--lambda0", default=None, help="Einstein constant (negated)")
@click.option("--c0", default=None, help="fiber Einstein constant")
@click.option("--out", default=None, type=click.Path(), help="output file")
def classify_cmd(base, conn, l, lambda0, c0, out):
    """Closed-form warping-function families for a base/connection pair."""
    def parse_rat(s):
        if s is None or s == "symbolic":
            return None
        try:
            return sympy.Rational(s)
        except (TypeError, ValueError, sympy.SympifyError):
            click.echo(f"parse error: bad rational {s!r}", err=True)
            sys.exit(EXIT_PARSE)
    try:
        problem = EinsteinProblem(base, conn, l, parse_rat(lambda0),
                                  parse_rat(c0))
        families = classify(problem)
    except UnsupportedProblem as exc:
        click.echo(f"unsupported: {exc}", err=True)
        sys.exit(EXIT_UNSUPPORTED)
    except DegenerateParameter as exc:
        click.echo(f"degenerate: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    lines = [f"# classify: base={base} connection={conn} l={l} "
             f"lambda0={lambda0} c0={c0}",
             f"# families: {len(families)}"]
    for f in families:
        lines.append(f"FAMILY\t{f.tag}\th={f.h}")
        for c in f.side_conditions:
            lines.append(f"SIDE\t{c}")
        for n in f.notes:
            lines.append(f"NOTE\t{n}")
    if not families and base == "R12" and conn == "ssnm":
        lines.append("NOTE\tq - n + 2 != 0: no family exists")
    _emit("\n".join(lines) + "\n", out)
    sys.exit(0)


if __name__ == "__main__":
    main()
