"""Batch command-line front end.

Subcommands: discount, temporal, combine, inspect, paper. Exit codes:
0 success, 1 golden-table mismatch (`paper`), 2 document/configuration
validation failure, 3 scheme error (e.g. an infeasible discount-rate
solve).
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click

from . import golden
from .decompose import generalized_contextual_discount
from .discount import (
    SCHEME_DISCOUNTS,
    ContextVector,
    classical_discount,
    contextual_discount,
)
from .documents import (
    load_json,
    load_mass_document,
    mass_to_document,
    parse_context_document,
    parse_decay_document,
)
from .errors import CredalError, DocumentError
from .frame import Subset
from .mass import MassFunction, drc_combine
from .render import (
    format_vector,
    mass_column,
    render_table,
    table_row_bits,
)
from .temporal import (
    ALPHA_MODES,
    contextual_alphas_from_kappa,
    kappa_at,
    scheme_alphas_from_kappa,
)

SCHEME_ALIASES = {"c": "conservative", "p": "proportional", "o": "optimistic"}
DISCOUNT_SCHEMES = (
    "classical",
    "contextual",
    "generalized",
    "conservative",
    "proportional",
    "optimistic",
)
TEMPORAL_SCHEMES = ("contextual", "conservative", "proportional", "optimistic")

INSPECT_MAX_SIZE = 12


class CommandError(CredalError):
    """Configuration problem detected before any scheme ran (exit 2)."""


@dataclass
class RunConfig:
    mass_paths: tuple[Path, ...] = ()
    context_path: Path | None = None
    decay_path: Path | None = None
    schemes: tuple[str, ...] = ()
    alpha_mode: str = "postulate"
    time: float | None = None
    fmt: str = "text"
    out: Path | None = None
    compare: bool = False
    tolerance: float = field(default=golden.DEFAULT_TOLERANCE)


def parse_schemes(raw: str, allowed: tuple[str, ...]) -> tuple[str, ...]:
    names = []
    for token in raw.split(","):
        token = token.strip()
        name = SCHEME_ALIASES.get(token, token)
        if name == "":
            continue
        if name not in allowed:
            raise CommandError(f"unknown scheme {token!r} (choose from {allowed})")
        names.append(name)
    if not names:
        raise CommandError("at least one scheme is required")
    return tuple(names)


def _json_masses(m: MassFunction) -> list[dict]:
    return mass_to_document(m)["masses"]


def _result_payload(frame, results: list[tuple[str, MassFunction]]) -> dict:
    payload: dict = {"frame": list(frame.labels)}
    if len(results) == 1:
        payload["scheme"] = results[0][0]
        payload["masses"] = _json_masses(results[0][1])
    else:
        payload["results"] = [
            {"scheme": name, "masses": _json_masses(m)} for name, m in results
        ]
    return payload


def _render_results(
    cfg: RunConfig,
    m: MassFunction,
    results: list[tuple[str, MassFunction]],
    payload_extra: dict | None = None,
    text_head: list[str] | None = None,
) -> str:
    if cfg.fmt == "json":
        payload = _result_payload(m.frame, results)
        if payload_extra:
            payload.update(payload_extra)
        return json.dumps(payload, indent=2) + "\n"
    columns = [(name, mass_column(res)) for name, res in results]
    if cfg.compare:
        columns.insert(0, ("m", mass_column(m)))
    rows = table_row_bits(m.frame, [values for _, values in columns])
    table = render_table(m.frame, rows, columns, cfg.fmt)
    if cfg.fmt == "text" and text_head:
        return "\n".join(text_head) + "\n" + table
    return table


def run_discount(cfg: RunConfig) -> str:
    m = load_mass_document(cfg.mass_paths[0])
    ctx = parse_context_document(
        load_json(cfg.context_path), m.frame, str(cfg.context_path)
    )
    results = []
    for scheme in cfg.schemes:
        if scheme == "classical":
            if len(ctx) != 1 or not ctx.contexts[0].is_full:
                raise CommandError(
                    "classical discounting needs a single context covering"
                    ' the whole frame ("*")'
                )
            results.append((scheme, classical_discount(m, ctx.alphas[0])))
        elif scheme == "contextual":
            results.append((scheme, contextual_discount(m, ctx)))
        elif scheme == "generalized":
            results.append((scheme, generalized_contextual_discount(m, ctx)))
        else:
            results.append((scheme, SCHEME_DISCOUNTS[scheme](m, ctx)))
    return _render_results(cfg, m, results)


def run_temporal(cfg: RunConfig) -> str:
    m = load_mass_document(cfg.mass_paths[0])
    spec = parse_decay_document(load_json(cfg.decay_path), m.frame, str(cfg.decay_path))
    if cfg.time is None or cfg.time < 0.0:
        raise CommandError("temporal discounting needs a non-negative --time")
    kv = kappa_at(spec, cfg.time)
    head = [
        "contexts: ["
        + ", ".join(str(Subset(m.frame, s.bits)) for s in spec.contexts)
        + "]",
        f"lambda: {format_vector(spec.rates)}",
        f"kappa(t={cfg.time:g}): {format_vector(kv.kappas)}",
    ]
    extra: dict = {
        "t": cfg.time,
        "contexts": [list(s.labels) for s in spec.contexts],
        "lambda": list(spec.rates),
        "kappa": list(kv.kappas),
        "alpha": {},
    }
    results = []
    for scheme in cfg.schemes:
        if scheme == "contextual":
            ctx = contextual_alphas_from_kappa(kv)
            head.append(f"alpha[contextual]: {format_vector(ctx.alphas)}")
            extra["alpha"]["contextual"] = list(ctx.alphas)
            results.append((scheme, contextual_discount(m, ctx)))
        else:
            if cfg.alpha_mode == "postulate":
                ctx = scheme_alphas_from_kappa(kv)
            else:
                ctx = ContextVector(kv.frame, kv.contexts, kv.kappas)
            if cfg.alpha_mode not in extra["alpha"]:
                head.append(f"alpha[{cfg.alpha_mode}]: {format_vector(ctx.alphas)}")
                extra["alpha"][cfg.alpha_mode] = list(ctx.alphas)
            results.append((scheme, SCHEME_DISCOUNTS[scheme](m, ctx)))
    return _render_results(cfg, m, results, payload_extra=extra, text_head=head)


def run_combine(cfg: RunConfig) -> str:
    if len(cfg.mass_paths) != 2:
        raise CommandError("combine needs exactly two --mass documents")
    m1 = load_mass_document(cfg.mass_paths[0])
    m2 = load_mass_document(cfg.mass_paths[1])
    if m1.frame != m2.frame:
        raise CommandError("the two mass documents use different frames")
    combined = drc_combine(m1, m2)
    if cfg.fmt == "json":
        return json.dumps(mass_to_document(combined), indent=2) + "\n"
    columns = [("combined", mass_column(combined))]
    if cfg.compare:
        columns = [("m1", mass_column(m1)), ("m2", mass_column(m2))] + columns
    rows = table_row_bits(m1.frame, [v for _, v in columns])
    return render_table(m1.frame, rows, columns, cfg.fmt)


def run_inspect(cfg: RunConfig) -> str:
    m = load_mass_document(cfg.mass_paths[0])
    if m.frame.size > INSPECT_MAX_SIZE:
        raise CommandError(
            f"inspect enumerates the full lattice; limited to"
            f" {INSPECT_MAX_SIZE} labels"
        )
    rows = list(range(1 << m.frame.size))
    if cfg.fmt == "json":
        payload = {
            "frame": list(m.frame.labels),
            "rows": [
                {
                    "set": list(Subset(m.frame, bits).labels),
                    "mass": m.mass_bits(bits),
                    "belief": m.belief(Subset(m.frame, bits)),
                    "implicability": m.implicability(Subset(m.frame, bits)),
                }
                for bits in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    columns = [
        ("mass", {b: m.mass_bits(b) for b in rows}),
        ("belief", {b: m.belief(Subset(m.frame, b)) for b in rows}),
        ("implicability", {b: m.implicability(Subset(m.frame, b)) for b in rows}),
    ]
    return render_table(m.frame, rows, columns, cfg.fmt)


def run_paper(cfg: RunConfig) -> tuple[str, int]:
    results = golden.check(cfg.tolerance)
    failures = [r for r in results if not r.ok]
    if cfg.fmt == "json":
        payload = {
            "tolerance": cfg.tolerance,
            "passed": len(results) - len(failures),
            "failed": len(failures),
            "cells": [
                {
                    "cell": r.name,
                    "expected": r.expected,
                    "actual": r.actual,
                    "status": "PASS" if r.ok else "FAIL",
                }
                for r in results
            ],
        }
        return json.dumps(payload, indent=2) + "\n", 1 if failures else 0
    lines = []
    if cfg.fmt == "csv":
        lines.append("cell,expected,actual,diff,status")
        for r in results:
            lines.append(
                f"{r.name},{r.expected:.10g},{r.actual:.10g},"
                f"{r.diff:.3e},{'PASS' if r.ok else 'FAIL'}"
            )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            line = (
                f"{status}  {r.name.ljust(width)}  expected {r.expected: .6f}"
                f"  actual {r.actual: .6f}"
            )
            if not r.ok:
                line += f"  diff {r.diff:+.3e} > tol {cfg.tolerance:g}"
            lines.append(line)
        lines.append(
            f"{len(results) - len(failures)}/{len(results)} cells within"
            f" {cfg.tolerance:g}"
        )
    return "\n".join(lines) + "\n", 1 if failures else 0


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _execute(runner, cfg: RunConfig) -> None:
    try:
        text = runner(cfg)
    except (DocumentError, CommandError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except CredalError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    _emit(text, cfg.out)


_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
    help="Output rendering.",
)
_out_option = click.option(
    "--out", type=click.Path(path_type=Path), default=None, help="Write output here."
)


@click.group()
@click.version_option(package_name="credal")
def main():
    """Belief-function discounting toolbox."""


@main.command("discount")
@click.option("--mass", "mass_path", type=click.Path(path_type=Path), required=True)
@click.option("--context", "context_path", type=click.Path(path_type=Path), required=True)
@click.option("--scheme", "schemes", required=True, help="Comma-separated scheme names.")
@_format_option
@_out_option
@click.option("--compare", is_flag=True, help="Include the input masses as a column.")
def discount_cmd(mass_path, context_path, schemes, fmt, out, compare):
    """Discount a mass document with a context document."""
    try:
        scheme_names = parse_schemes(schemes, DISCOUNT_SCHEMES)
    except CommandError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    cfg = RunConfig(
        mass_paths=(mass_path,),
        context_path=context_path,
        schemes=scheme_names,
        fmt=fmt,
        out=out,
        compare=compare,
    )
    _execute(run_discount, cfg)


@main.command("temporal")
@click.option("--mass", "mass_path", type=click.Path(path_type=Path), required=True)
@click.option("--decay", "decay_path", type=click.Path(path_type=Path), required=True)
@click.option("--time", "time_s", type=float, required=True, help="Age in seconds.")
@click.option("--scheme", "schemes", required=True, help="Comma-separated scheme names.")
@click.option(
    "--alpha-mode",
    type=click.Choice(list(ALPHA_MODES)),
    default="postulate",
    show_default=True,
    help="How retention fractions map to discount rates for c/p/o schemes.",
)
@_format_option
@_out_option
@click.option("--compare", is_flag=True, help="Include the input masses as a column.")
def temporal_cmd(mass_path, decay_path, time_s, schemes, alpha_mode, fmt, out, compare):
    """Age a mass document according to a decay document."""
    try:
        scheme_names = parse_schemes(schemes, TEMPORAL_SCHEMES)
    except CommandError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    cfg = RunConfig(
        mass_paths=(mass_path,),
        decay_path=decay_path,
        schemes=scheme_names,
        alpha_mode=alpha_mode,
        time=time_s,
        fmt=fmt,
        out=out,
        compare=compare,
    )
    _execute(run_temporal, cfg)


@main.command("combine")
@click.option(
    "--mass",
    "mass_paths",
    type=click.Path(path_type=Path),
    multiple=True,
    required=True,
    help="Give twice: the two documents to combine disjunctively.",
)
@_format_option
@_out_option
@click.option("--compare", is_flag=True, help="Include both inputs as columns.")
def combine_cmd(mass_paths, fmt, out, compare):
    """Disjunctively combine two mass documents."""
    cfg = RunConfig(mass_paths=tuple(mass_paths), fmt=fmt, out=out, compare=compare)
    _execute(run_combine, cfg)


@main.command("inspect")
@click.option("--mass", "mass_path", type=click.Path(path_type=Path), required=True)
@_format_option
@_out_option
def inspect_cmd(mass_path, fmt, out):
    """Dump mass, belief, and implicability over the whole lattice."""
    cfg = RunConfig(mass_paths=(mass_path,), fmt=fmt, out=out)
    _execute(run_inspect, cfg)


@main.command("paper")
@_format_option
@_out_option
def paper_cmd(fmt, out):
    """Recompute the built-in golden tables and verify every cell.

    Tolerance defaults to 5e-4 and can be overridden with CREDAL_TOL.
    """
    try:
        tolerance = float(os.environ.get("CREDAL_TOL", golden.DEFAULT_TOLERANCE))
    except ValueError:
        click.echo("error: CREDAL_TOL must be a number", err=True)
        sys.exit(2)
    cfg = RunConfig(fmt=fmt, out=out, tolerance=tolerance)
    try:
        text, code = run_paper(cfg)
    except CredalError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    _emit(text, cfg.out)
    sys.exit(code)


if __name__ == "__main__":
    main()
