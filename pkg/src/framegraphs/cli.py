"""Command-line surface for graph generation, frame construction, checks,
classification, and exhaustive sweeps.

Exit codes: 0 for a positive verdict or plain success, 1 for a negative
verdict, 2 for usage or internal errors.  Graphs and frames are piped
between commands in the text formats of :mod:`framegraphs.graphs` and
:mod:`framegraphs.matio`.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import click

from . import constructions, graphs, matio, verify
from .frames import (
    FrameError,
    erasure_robustness,
    represents,
    tightness,
)
from .graphs import GraphError, gen_named, from_text, to_text
from .linegraph import is_line_graph, line_graph, root_graph
from .spectral import SpectralError, TolerancePolicy


@dataclass
class RunConfig:
    tol: TolerancePolicy
    seed: int
    fmt: str


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _load_graph(source: str) -> graphs.Graph:
    return from_text(_read(source))


def _load_frame(source: str):
    return matio.frame_from_text(_read(source))


@click.group()
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="Relative zero threshold for all pattern/rank decisions.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Seed recorded for randomized property tests.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
              default="structured", show_default=True,
              help="Report style for classify/sweep output.")
@click.pass_context
def cli(ctx, tol, seed, fmt):
    try:
        policy = TolerancePolicy(tau_rel=tol)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    ctx.obj = RunConfig(tol=policy, seed=seed, fmt=fmt)


# ---------------------------------------------------------------------------
# Graph commands
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@click.option("--out", type=click.Path(), help="Write the graph here instead of stdout.")
def gen(family, params, out):
    """Generate a named graph family member (e.g. `gen cycle 5`)."""
    _emit(to_text(gen_named(family, *params)), out)


@cli.command()
@click.argument("graph", default="-")
@click.option("--out", type=click.Path())
def linegraph(graph, out):
    """Line graph of GRAPH (file or '-' for stdin)."""
    _emit(to_text(line_graph(_load_graph(graph)).line), out)


@cli.command()
@click.argument("graph", default="-")
@click.option("--out", type=click.Path())
def rootgraph(graph, out):
    """Root graph(s) of a connected line graph; K_3 yields two."""
    roots = root_graph(_load_graph(graph))
    _emit("\n".join(to_text(r) for r in roots), out)


# ---------------------------------------------------------------------------
# Frame constructions
# ---------------------------------------------------------------------------

@cli.group()
def frame():
    """Build frames for graph families."""


def _emit_frame(f, out):
    _emit(matio.frame_to_text(f), out)


@frame.command("laplacian")
@click.argument("graph", default="-")
@click.option("--out", type=click.Path())
def frame_laplacian(graph, out):
    """Laplacian-eigenbasis frame for the line graph of GRAPH."""
    _emit_frame(constructions.laplacian_method(_load_graph(graph)), out)


@frame.command("lkn")
@click.argument("n", type=int)
@click.option("--out", type=click.Path())
def frame_lkn(n, out):
    """Tight frame for the line graph of K_n in dimension n-1."""
    _emit_frame(constructions.laplacian_method(graphs.complete(n)), out)


@frame.command("lkn-small")
@click.argument("n", type=int)
@click.option("--out", type=click.Path())
def frame_lkn_small(n, out):
    """Tight frame for the line graph of K_n in dimension n-2."""
    _emit_frame(constructions.lkn_small_frame(n), out)


@frame.command("star")
@click.argument("n", type=int)
@click.argument("d", type=int)
@click.option("--keep", help="Comma-separated 1-based columns to keep (must include 1).")
@click.option("--out", type=click.Path())
def frame_star(n, d, keep, out):
    """Parseval frame for K_n in dimension d via the star construction."""
    keep_set = [int(x) for x in keep.split(",")] if keep else None
    _emit_frame(constructions.star_frame(n, d, keep_set), out)


@frame.command("k2kn")
@click.argument("n", type=int)
@click.option("--out", type=click.Path())
def frame_k2kn(n, out):
    """Tight frame for the product of K_2 and K_n."""
    _emit_frame(constructions.k2kn_frame(n), out)


@frame.command("diamond")
@click.option("--out", type=click.Path())
def frame_diamond(out):
    """The 2 x 4 Parseval frame for the diamond graph."""
    _emit_frame(constructions.diamond_frame(), out)


@frame.command("kn-minus-e")
@click.argument("n", type=int)
@click.option("--out", type=click.Path())
def frame_kn_minus_e(n, out):
    """Parseval frame for K_n minus an edge (n >= 4)."""
    _emit_frame(constructions.kn_minus_e_frame(n), out)


@frame.command("dup-chain")
@click.argument("name", required=False)
@click.option("--out", type=click.Path())
def frame_dup_chain(name, out):
    """Duplication-chain catalog; without NAME, list the entry names."""
    catalog = constructions.dup_chain_frames()
    if name is None:
        click.echo("\n".join(catalog))
        return
    if name not in catalog:
        raise click.UsageError(f"unknown catalog entry {name!r}; one of {', '.join(catalog)}")
    _emit_frame(catalog[name], out)


# ---------------------------------------------------------------------------
# Completions
# ---------------------------------------------------------------------------

@cli.group()
def complete():
    """Complete a frame to a tight frame."""


def _emit_completion(result, out):
    header = f"# added {len(result.added)} bound {result.bound:.17g}\n"
    _emit(header + matio.frame_to_text(result.frame), out)


@complete.command("minimal")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.option("--out", type=click.Path())
@click.pass_obj
def complete_minimal(cfg, frame_src, out):
    """Minimal tight completion (eigenvalue-deficit vectors)."""
    _emit_completion(
        constructions.minimal_tight_completion(_load_frame(frame_src), cfg.tol), out
    )


@complete.command("twostep")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.option("--out", type=click.Path())
@click.pass_obj
def complete_twostep(cfg, frame_src, out):
    """Generic two-step completion (orthogonalize rows, then equalize norms)."""
    _emit_completion(
        constructions.two_step_completion(_load_frame(frame_src), cfg.tol), out
    )


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

@cli.group()
def check():
    """Predicates on frames and graphs; exit 0 when the verdict is positive."""


@check.command("tight")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.pass_obj
def check_tight(cfg, frame_src):
    """Exit 0 iff the frame is tight (Parseval counts as tight)."""
    t = tightness(_load_frame(frame_src), cfg.tol)
    click.echo(f"{t.kind} lower {t.lower:.17g} upper {t.upper:.17g}")
    sys.exit(0 if t.kind in ("tight", "parseval") else 1)


@check.command("parseval")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.pass_obj
def check_parseval(cfg, frame_src):
    """Exit 0 iff the frame is Parseval."""
    t = tightness(_load_frame(frame_src), cfg.tol)
    click.echo(f"{t.kind} lower {t.lower:.17g} upper {t.upper:.17g}")
    sys.exit(0 if t.kind == "parseval" else 1)


@check.command("pattern")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.option("--graph", "graph_src", required=True, help="Graph file to compare against.")
@click.pass_obj
def check_pattern(cfg, frame_src, graph_src):
    """Exit 0 iff the frame's Gram pattern equals the graph (labeled)."""
    ok = represents(_load_frame(frame_src), _load_graph(graph_src), cfg.tol)
    click.echo("match" if ok else "mismatch")
    sys.exit(0 if ok else 1)


@check.command("neighbor")
@click.argument("graph", default="-")
def check_neighbor(graph):
    """Common-neighbor obstruction; exit 0 when a witness is found."""
    w = verify.neighbor_obstruction(_load_graph(graph))
    if w is None:
        click.echo("none")
        sys.exit(1)
    click.echo(f"witness {w[0]} {w[1]} common {w[2]}")
    sys.exit(0)


@check.command("cycles")
@click.argument("graph", default="-")
def check_cycles(graph):
    """Edge on no 3- or 4-cycle; exit 0 when an offending edge is found."""
    e = verify.edge_cycle_check(_load_graph(graph))
    if e is None:
        click.echo("none")
        sys.exit(1)
    click.echo(f"offending-edge {e[0]} {e[1]}")
    sys.exit(0)


@check.command("linegraph")
@click.argument("graph", default="-")
def check_linegraph(graph):
    """Exit 0 iff GRAPH is a line graph; otherwise print the forbidden witness."""
    verdict = is_line_graph(_load_graph(graph))
    if verdict is True:
        click.echo("line-graph")
        sys.exit(0)
    _, idx, embedding = verdict
    mapped = " ".join(str(embedding[k]) for k in sorted(embedding))
    click.echo(f"forbidden G{idx} vertices {mapped}")
    sys.exit(1)


@check.command("erasure")
@click.argument("frame_src", metavar="FRAME", default="-")
@click.option("-e", "--erasures", type=int, required=True)
@click.pass_obj
def check_erasure(cfg, frame_src, erasures):
    """Exit 0 iff the frame survives every erasure of the given size."""
    ok = erasure_robustness(_load_frame(frame_src), erasures, cfg.tol)
    click.echo("robust" if ok else "not-robust")
    sys.exit(0 if ok else 1)


# ---------------------------------------------------------------------------
# Classification and sweeps
# ---------------------------------------------------------------------------

@cli.command()
@click.argument("graph", default="-")
@click.option("--out", type=click.Path(), help="Write the certificate frame here.")
@click.pass_obj
def classify(cfg, graph, out):
    """Classify GRAPH; exit 0 only for a machine-verified tight certificate."""
    cert = verify.classify(_load_graph(graph), cfg.tol)
    if cfg.fmt == "text":
        bits = [f"The graph is {cert.verdict.replace('_', ' ')}"]
        if cert.detail:
            bits.append(f"({cert.detail})")
        click.echo(" ".join(bits))
    else:
        click.echo(f"verdict {cert.verdict}")
        if cert.detail:
            click.echo(f"detail {cert.detail}")
        if cert.dimension is not None:
            click.echo(f"dimension {cert.dimension}")
        if cert.witness is not None:
            kind, data = cert.witness
            click.echo(f"witness {kind} " + " ".join(str(x) for x in data))
    if out and cert.frame is not None:
        Path(out).write_text(matio.frame_to_text(cert.frame))
        click.echo(f"certificate {out}")
    sys.exit(0 if cert.verdict == "tight" else 1)


@cli.group()
def sweep():
    """Exhaustive small-graph sweeps; exit 0 when no counterexample is found."""


def _emit_report(cfg, report):
    if cfg.fmt == "text":
        click.echo(
            f"Checked {report.checked} cases, "
            f"{len(report.counterexamples)} counterexample(s)."
        )
    else:
        click.echo(f"checked {report.checked}")
        click.echo(f"counterexamples {len(report.counterexamples)}")
    sys.exit(0 if report.ok else 1)


@sweep.command("root-order")
@click.option("--max-n", type=int, default=6, show_default=True)
@click.pass_obj
def sweep_root_order(cfg, max_n):
    """Root-order classification sweep."""
    _emit_report(cfg, verify.root_order_theorem_check(max_n))


@sweep.command("join-line")
@click.option("--max-n", type=int, default=4, show_default=True)
@click.pass_obj
def sweep_join_line(cfg, max_n):
    """Joins of connected graphs are not line graphs."""
    _emit_report(cfg, verify.join_line_check(max_n))


@sweep.command("lemma-p4")
@click.option("--max-n", type=int, default=6, show_default=True)
@click.pass_obj
def sweep_lemma_p4(cfg, max_n):
    """Induced 4-paths in the root force an obstruction in the line graph."""
    _emit_report(cfg, verify.induced_path_sweep(max_n))


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=True)
    except (GraphError, FrameError, SpectralError, matio.MatrixFormatError,
            OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)


if __name__ == "__main__":
    main()
