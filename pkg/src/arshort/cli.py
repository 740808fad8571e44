"""Command-line interface.

Exit codes: 0 definitive result, 1 internal verification failure, 2 input
error, 3 bounded (non-definitive) result.
"""

from __future__ import annotations

import os
import sys

import click

from . import artrans as at
from . import corpus
from . import reports
from . import shortchain as sc
from .errors import (
    DeskScaleExceeded,
    InfiniteDimensional,
    InternalInconsistency,
    InvalidRelation,
    NotApplicable,
    RelationViolated,
    ShapeMismatch,
)
from .formats import FormatError, algebra_from_dict, algebra_to_dict, dumps, module_from_dict, module_to_dict
from .formats import read_json, write_text_atomic

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_BOUNDED = 3

_INPUT_ERRORS = (FormatError, InfiniteDimensional, InvalidRelation, RelationViolated, ShapeMismatch)


def _emit(text: str, output: str | None) -> None:
    if output:
        write_text_atomic(output, text)
    else:
        click.echo(text, nl=False)


def _load(algebra_file: str, module_file: str | None, nilpotency_bound: int | None):
    try:
        a = algebra_from_dict(read_json(algebra_file), nilpotency_bound)
        m = module_from_dict(a, read_json(module_file)) if module_file else None
    except _INPUT_ERRORS as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    return a, m


def _limits(f):
    f = click.option("--nilpotency-bound", type=click.IntRange(min=1), default=None,
                     help="Path length bound for finite-dimensionality (default 30).")(f)
    f = click.option("--max-total-dim", type=click.IntRange(min=1), default=at.DEFAULT_MAX_TOTAL_DIM,
                     show_default=True, help="Knitting stops beyond this module dimension.")(f)
    f = click.option("--max-modules", type=click.IntRange(min=1), default=at.DEFAULT_MAX_MODULES,
                     show_default=True, help="Knitting stops beyond this many modules.")(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Auslander-Reiten computations, short chains and tilting certificates."""


@main.command()
@click.argument("algebra_file", type=click.Path(dir_okay=False))
@_limits
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the fragment JSON here.")
@click.option("--dot", type=click.Path(dir_okay=False), help="Also write a DOT drawing.")
def knit(algebra_file, max_modules, max_total_dim, nilpotency_bound, output, dot):
    """Knit the AR quiver of an algebra from its projectives."""
    a, _ = _load(algebra_file, None, nilpotency_bound)
    frag = at.knit(a, max_modules=max_modules, max_total_dim=max_total_dim)
    state = "complete" if frag.complete else f"truncated ({frag.reason})"
    click.echo(f"{len(frag.vertices)} indecomposables, {state}, {len(frag.tau_orbits())} tau-orbits", err=True)
    _emit(frag.to_json() + "\n", output)
    if dot:
        write_text_atomic(dot, frag.to_dot())


@main.command("short-chain")
@click.argument("algebra_file", type=click.Path(dir_okay=False))
@click.argument("module_file", type=click.Path(dir_okay=False))
@click.option("--bound", type=click.IntRange(min=1), default=sc.DEFAULT_SEARCH_BOUND, show_default=True,
              help="Dimension bound of the candidate search when the AR quiver is not complete.")
@_limits
@click.option("-o", "--output", type=click.Path(dir_okay=False))
def short_chain(algebra_file, module_file, bound, max_modules, max_total_dim, nilpotency_bound, output):
    """Decide whether a module is the middle of a short chain."""
    a, m = _load(algebra_file, module_file, nilpotency_bound)
    v = sc.is_middle_of_short_chain(a, m, bound=bound, max_modules=max_modules, max_total_dim=max_total_dim)
    if v.is_middle and not v.verify():
        click.echo("verification failure: middle witness does not re-verify", err=True)
        sys.exit(EXIT_VERIFY)
    click.echo(v.answer, err=True)
    _emit(dumps(reports.verdict_to_dict(v)), output)
    sys.exit(EXIT_BOUNDED if v.answer == sc.NOT_MIDDLE_UP_TO_BOUND else EXIT_OK)


@main.command()
@click.argument("algebra_file", type=click.Path(dir_okay=False))
@click.argument("module_file", type=click.Path(dir_okay=False))
@click.option("--bound", type=click.IntRange(min=1), default=sc.DEFAULT_SEARCH_BOUND, show_default=True)
@_limits
@click.option("-o", "--output", type=click.Path(dir_okay=False))
def theorem1(algebra_file, module_file, bound, max_modules, max_total_dim, nilpotency_bound, output):
    """Reconstruct (H, T, I) for a module that is not the middle of a short chain."""
    a, m = _load(algebra_file, module_file, nilpotency_bound)
    try:
        cert = sc.theorem1_certificate(a, m, bound=bound, max_modules=max_modules, max_total_dim=max_total_dim)
    except NotApplicable as exc:
        click.echo("not applicable: the module is the middle of a short chain", err=True)
        _emit(dumps(reports.not_applicable_to_dict(exc.verdict)), output)
        sys.exit(EXIT_OK)
    except DeskScaleExceeded as exc:
        click.echo(f"bounded: {exc}", err=True)
        _emit(dumps({"format": 1, "kind": "desk_scale_exceeded", "reason": str(exc)}), output)
        sys.exit(EXIT_BOUNDED)
    except InternalInconsistency as exc:
        click.echo(f"verification failure: {exc}", err=True)
        sys.exit(EXIT_VERIFY)
    checks = cert.verify()
    _emit(dumps(reports.certificate_to_dict(cert, checks)), output)
    if not all(checks.values()):
        failed = ", ".join(k for k, ok in checks.items() if not ok)
        click.echo(f"verification failure: {failed}", err=True)
        sys.exit(EXIT_VERIFY)
    click.echo("certificate verified", err=True)


@main.command()
@click.argument("algebra_file", type=click.Path(dir_okay=False))
@click.argument("module_file", type=click.Path(dir_okay=False))
@click.option("--bound", type=click.IntRange(min=1), default=sc.DEFAULT_SEARCH_BOUND, show_default=True)
@_limits
@click.option("-o", "--output", type=click.Path(dir_okay=False))
def corollary12(algebra_file, module_file, bound, max_modules, max_total_dim, nilpotency_bound, output):
    """Check that End(M) is hereditary for a module that is not a short-chain middle."""
    a, m = _load(algebra_file, module_file, nilpotency_bound)
    try:
        rep = sc.corollary12_check(a, m, bound=bound, max_modules=max_modules, max_total_dim=max_total_dim)
    except NotApplicable as exc:
        click.echo("not applicable: the module is the middle of a short chain", err=True)
        _emit(dumps(reports.not_applicable_to_dict(exc.verdict)), output)
        sys.exit(EXIT_OK)
    _emit(dumps(reports.corollary12_to_dict(rep)), output)
    if not rep.hereditary:
        click.echo("verification failure: End(M) is not hereditary", err=True)
        sys.exit(EXIT_VERIFY)
    click.echo(f"End(M) hereditary ({rep.strength} premise)", err=True)
    sys.exit(EXIT_BOUNDED if rep.strength == "bounded" else EXIT_OK)


def _parse_part(text: str):
    kind, _, idx = text.partition(":")
    try:
        return kind, int(idx or 0)
    except ValueError as exc:
        raise click.BadParameter(f"expected TYPE:INDEX, got {text!r}") from exc


@main.command()
@click.argument("example_id")
@click.option("--n", "n", type=int, default=3, show_default=True, help="Number of arms (example 5.1).")
@click.option("--part", "parts", multiple=True,
              help="Factor TYPE:INDEX for example 5.2, e.g. A3:0 (repeatable; default A1:0 twice).")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), required=True)
def examples(example_id, n, parts, out_dir):
    """Write algebra and module files reproducing example 5.1 or 5.2."""
    if example_id == "5.1":
        if n < 1:
            click.echo("input error: n must be at least 1", err=True)
            sys.exit(EXIT_INPUT)
        a, m = corpus.example_5_1(n)
        files = {"algebra.json": algebra_to_dict(a), "module.json": module_to_dict(m)}
    elif example_id == "5.2":
        try:
            factors = [_parse_part(p) for p in parts] or [("A1", 0), ("A1", 0)]
            data = corpus.example_5_2(factors)
        except (ValueError, click.BadParameter) as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(EXIT_INPUT)
        files = {"algebra.json": algebra_to_dict(data["A"]), "module.json": module_to_dict(data["M"]),
                 "base_algebra.json": algebra_to_dict(data["B"]), "extending_module.json": module_to_dict(data["S"])}
    else:
        click.echo(f"input error: unknown example {example_id!r} (use 5.1 or 5.2)", err=True)
        sys.exit(EXIT_INPUT)
    for name, payload in files.items():
        write_text_atomic(os.path.join(out_dir, name), dumps(payload))
    click.echo(f"wrote {', '.join(sorted(files))} to {out_dir}", err=True)


if __name__ == "__main__":  # pragma: no cover
    main()
