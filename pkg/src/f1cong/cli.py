"""Command line interface: f1cong <command> FILE ...

Exit codes: 0 verdict computed, 1 a check found a counterexample, 2 error.
"""
from __future__ import annotations

import sys

import click

from . import congruence as cg
from . import corpus
from . import dsl
from . import properties as pr
from . import scheme as sc
from . import spectra as sp
from . import valuation as va
from .monoid import MonoidError


class Counterexample(Exception):
    pass


def _load(path) -> dsl.Document:
    return dsl.parse_file(path)


def _pick(doc, kind, name):
    table = doc.of_kind(kind)
    if name is None:
        if not table:
            raise click.UsageError(f"no {kind} declared")
        return list(table.items())
    if name not in table:
        raise click.UsageError(f"no {kind} named {name!r}")
    return [(name, table[name])]


def _out(ctx, value, text):
    if ctx.obj["json"]:
        click.echo(dsl.emit_json(value))
    else:
        click.echo(text)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Print JSON (format 1).")
@click.option("--dot", "as_dot", is_flag=True, help="Print Graphviz DOT for spaces.")
@click.option("--cap", default=cg.DEFAULT_CAP, show_default=True, help="Largest monoid for exhaustive congruence enumeration.")
@click.option("--radius", default=va.DEFAULT_RADIUS, show_default=True, help="Exponent radius for generated test diagrams and symbolic windows.")
@click.option("--family", type=click.Path(exists=True, dir_okay=False), default=None,
              help="DSL file with extra test diagrams.")
@click.pass_context
def cli(ctx, as_json, as_dot, cap, radius, family):
    ctx.obj = {"json": as_json, "dot": as_dot, "cap": cap, "radius": radius, "family": family}


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def parse(ctx, file):
    """Parse a file and list its declarations."""
    doc = _load(file)
    if ctx.obj["json"]:
        data = {"declarations": [{"kind": d.kind, "name": d.name, "line": d.line} for d in doc.declarations]}
        click.echo(dsl.emit_json(data))
        return
    for d in doc.declarations:
        val = d.value if d.kind != "check" else f"{d.value[0]} {d.name}"
        click.echo(f"{d.line}:{d.column}  {d.kind:9s} {d.name:12s} {val}")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("name", required=False)
@click.pass_context
def mspec(ctx, file, name):
    """Prime spectrum of each (or the named) monoid."""
    for n, A in _pick(_load(file), "monoid", name):
        X = sp.mspec(A) if A.is_finite else sp.symbolic_mspec(A)
        _space_out(ctx, n, X)


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("name", required=False)
@click.option("--all", "show_all", is_flag=True, help="List every congruence, not only the primes.")
@click.pass_context
def cong(ctx, file, name, show_all):
    """Congruence space of each (or the named) monoid."""
    for n, A in _pick(_load(file), "monoid", name):
        if not A.is_finite:
            bound = min(ctx.obj["radius"], 2)
            if ctx.obj["dot"]:
                click.echo(dsl.emit_symbolic_dot(A, bound, n), nl=False)
            else:
                pts = cg.enumerate_symbolic_primes(A, bound)
                _out(ctx, pts, f"Cong({n}), points with lattice generators up to {bound}:\n  "
                     + "\n  ".join(dsl.point_label(p) for p in pts))
            continue
        if show_all:
            cs = cg.enumerate_congruences(A, ctx.obj["cap"])
            _out(ctx, cs, f"{n}: {len(cs)} congruences\n  " + "\n  ".join(sp.congruence_label(c) for c in cs))
            continue
        _space_out(ctx, n, sp.cong_space(A))


def _space_out(ctx, name, X):
    if ctx.obj["dot"]:
        click.echo(dsl.emit_dot(X, name), nl=False)
        return
    lines = [f"{name}: {len(X)} points"]
    closed = set(X.closed_points())
    for i, lab in enumerate(X.labels):
        spec = sorted(X.labels[j] for j in X.spec[i] if j != i)
        lines.append(f"  {lab}{' (closed)' if i in closed else ''}" + (f" -> {', '.join(spec)}" if spec else ""))
    _out(ctx, X, "\n".join(lines))


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("name", required=False)
@click.pass_context
def sred(ctx, file, name):
    """Strong reduction of each (or the named) finite monoid."""
    for n, A in _pick(_load(file), "monoid", name):
        if not A.is_finite:
            _out(ctx, A, f"{n}: free monomial monoids are integral, so {n}^sred = {n}")
            continue
        R, q = cg.sred(A)
        _out(ctx, R, f"{n}^sred = {dsl.emit_monoid(R)}")


def run_check(prop, phi, radius=va.DEFAULT_RADIUS, family=None) -> dict:
    """Evaluate one property; `holds` is the verdict."""
    if prop == "closed_immersion":
        d = pr.is_closed_immersion_def(phi)
        rep = pr.closed_immersion_report(phi)
        if rep["verdict"] is not None and rep["verdict"] != d:
            raise pr.CharacterizationMismatch(f"closed immersion checks disagree: {d} vs {rep}")
        return {"property": prop, "holds": d, "definition": d, "topological": rep}
    if prop == "separated":
        rep = pr.separated_report(phi)
        if rep["definition"] != rep["topological"]:
            raise pr.CharacterizationMismatch(f"separatedness checks disagree: {rep}")
        return {"property": prop, "holds": rep["definition"], **rep}
    if prop in ("universally_closed", "proper"):
        fn = va.check_universally_closed if prop == "universally_closed" else va.check_proper
        rep = fn(phi, family, radius)
        return {**rep, "holds": rep["verdict"] != "counterexample"}
    if prop == "dominant":
        return {"property": prop, "holds": pr.is_dominant(phi)}
    if prop == "closed_map":
        w = pr.closed_map_witness(phi) if pr.is_closed_map(phi) is False else None
        return {"property": prop, "holds": w is None, "witness": w}
    if prop == "affine":
        return {"property": prop, "holds": sc.is_affine_morphism(phi)}
    raise MonoidError(f"unknown property {prop!r}")


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("prop", metavar="PROPERTY", required=False, type=click.Choice(dsl.PROPERTIES))
@click.argument("morphism", required=False)
@click.pass_context
def check(ctx, file, prop, morphism):
    """Decide PROPERTY for MORPHISM, or run the file's check directives."""
    doc = _load(file)
    family = _family(ctx, doc)
    if prop is None:
        jobs = [(p, phi) for p, phi in doc.checks]
    else:
        if morphism is None:
            raise click.UsageError("give a morphism name")
        jobs = [(prop, phi) for _, phi in _pick(doc, "morphism", morphism)]
    failed = False
    reports = []
    for p, phi in jobs:
        fam = [d for d in family if d.phi is phi]
        rep = run_check(p, phi, ctx.obj["radius"], fam)
        reports.append({"morphism": phi.name, **rep})
        failed |= not rep["holds"]
        if not ctx.obj["json"]:
            extra = f" ({rep['verdict']}, {rep['diagrams']} diagrams)" if "verdict" in rep else ""
            click.echo(f"{p} {phi.name}: {'yes' if rep['holds'] else 'no'}{extra}")
    if ctx.obj["json"]:
        click.echo(dsl.emit_json(reports))
    if failed:
        raise Counterexample()


def _family(ctx, doc):
    out = list(doc.of_kind("diagram").values())
    if ctx.obj["family"]:
        out += list(_load(ctx.obj["family"]).of_kind("diagram").values())
    return out


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.argument("diagram")
@click.pass_context
def lift(ctx, file, diagram):
    """Solve a test diagram: list every lift."""
    (name, d), = _pick(_load(file), "diagram", diagram)
    lifts = va.solve_lifts(d)
    G = d.valuation.group
    Y = d.phi.source
    if ctx.obj["json"]:
        data = {"diagram": d.to_dict(), "lifts": [
            {"chart": Y.names[m.chart], "images": {k: G.fmt(v) for k, v in m.images()}} for m in lifts]}
        click.echo(dsl.emit_json(data))
    else:
        click.echo(f"{name}: {len(lifts)} lift(s)")
        for m in lifts:
            imgs = ", ".join(f"{k} -> {G.fmt(v)}" for k, v in m.images())
            click.echo(f"  via chart {Y.names[m.chart]}: {imgs}")


@cli.command("corpus-verify")
@click.pass_context
def corpus_verify(ctx):
    """Run the dual characterizations over the shipped morphism suite."""
    bad = 0
    rows = []
    for s in corpus.morphism_suite():
        ci = run_check("closed_immersion", s.phi)
        se = run_check("separated", s.phi)
        ok = ci["holds"] == s.closed_immersion and se["holds"] == s.separated
        bad += not ok
        rows.append({"morphism": s.name, "closed_immersion": ci["holds"], "separated": se["holds"], "ok": ok})
        if not ctx.obj["json"]:
            click.echo(f"{'ok ' if ok else 'BAD'} {s.name}: closed immersion {ci['holds']}, separated {se['holds']}")
    if ctx.obj["json"]:
        click.echo(dsl.emit_json(rows))
    if bad:
        raise Counterexample()


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="f1cong", standalone_mode=False)
    except Counterexample:
        return 1
    except click.exceptions.Abort:
        return 2
    except click.ClickException as e:
        e.show()
        return 2
    except (MonoidError, pr.CharacterizationMismatch, OSError) as e:
        click.echo(f"error: {e}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
