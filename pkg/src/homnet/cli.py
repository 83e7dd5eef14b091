"""Command-line pipeline: generate, build, filter, reduce, report.

Stages communicate through files so every intermediate stays inspectable.
Every output embeds the run configuration (no timestamps), so identical
configurations produce byte-identical artifacts. ``HOMNET_THREADS`` caps
the worker count used for clique enumeration.
"""

from __future__ import annotations

import functools
import json
import os
from pathlib import Path

import click

from . import barcode as barcode_io
from . import complexes, filtration as filtration_mod, generators, persistence
from .graph import Graph, GraphFormatError, load_edge_list, save_edge_list
from .oracle import betti_bruteforce

__all__ = ["main"]


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("HOMNET_THREADS", "1")))
    except ValueError:
        return 1


def _config_line(config: dict) -> str:
    return "config " + json.dumps(config, sort_keys=True)


def _guarded(fn):
    """Map validation failures to exit code 2 and runtime failures to 1."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (GraphFormatError, ValueError) as e:
            raise click.UsageError(str(e)) from e
        except (OSError, RuntimeError) as e:
            raise click.ClickException(str(e)) from e

    return wrapper


@click.group()
def main() -> None:
    """Build simplicial complexes from networks and report persistent homology."""


@main.group()
def gen() -> None:
    """Generate a seeded random network as an edge list."""


def _emit_graph(g: Graph, config: dict, out: str | None,
                extra_comments: tuple[str, ...] = ()) -> None:
    text = save_edge_list(g, header_comments=(_config_line(config), *extra_comments))
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)
        click.echo(f"wrote {out}: {g.node_count} nodes, {g.edge_count} edges")


@gen.command("er")
@click.option("--n", type=int, required=True, help="node count")
@click.option("--p", type=float, required=True, help="link probability")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="output edge list (default: stdout)")
@_guarded
def gen_er(n: int, p: float, seed: int, out: str | None) -> None:
    """Uniform random network."""
    g = generators.gen_er(n, p, seed)
    config = {"command": "gen er", "n": n, "p": p, "seed": seed}
    _emit_graph(g, config, out)


@gen.command("exp")
@click.option("--n", type=int, required=True, help="node count")
@click.option("--kstar", type=float, required=True, help="exponential degree scale")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def gen_exp(n: int, kstar: float, seed: int, out: str | None) -> None:
    """Network with exponential degree distribution (configuration model)."""
    g = generators.gen_exponential(n, kstar, seed)
    config = {"command": "gen exp", "n": n, "kstar": kstar, "seed": seed}
    _emit_graph(g, config, out)


@gen.command("sfm")
@click.option("--n", type=int, required=True, help="node count")
@click.option("--m", type=int, required=True, help="links per arriving node")
@click.option("--p0", type=float, required=True, help="new-module probability")
@click.option("--alpha", type=float, required=True, help="attractiveness in (0, 1]")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def gen_sfm(n: int, m: int, p0: float, alpha: float, seed: int, out: str | None) -> None:
    """Scale-free modular network with tunable clustering."""
    g, module_of = generators.gen_sf_modular_with_modules(n, m, p0, alpha, seed)
    config = {"command": "gen sfm", "n": n, "m": m, "p0": p0, "alpha": alpha, "seed": seed}
    modules = len(set(module_of))
    _emit_graph(g, config, out, extra_comments=(f"modules {modules}",))


def _build_complex(g: Graph, kind: str, max_dim: int) -> complexes.SimplicialComplex:
    if kind == "clique":
        return complexes.clique_complex(g, max_dim=max_dim, workers=_workers())
    return complexes.neighborhood_complex(g, closed=(kind != "neighborhood-open"))


def _build_filtration(k: complexes.SimplicialComplex, kind: str,
                      max_dim: int) -> filtration_mod.Filtration:
    limit = max_dim if k.dimension > max_dim else None
    if kind == "skeleton":
        return filtration_mod.skeleton_filtration(k, up_to_dim=limit)
    return filtration_mod.simplexwise_filtration(k, up_to_dim=limit)


def _summary_lines(g: Graph, k: complexes.SimplicialComplex,
                   f: filtration_mod.Filtration, b: persistence.Barcode) -> list[str]:
    final = f.level_count - 1
    betti = persistence.betti_at(b, final) if f.level_count else ()
    essential = persistence.essential_counts(b)
    zero = sum(1 for iv in b.intervals if iv.zero_length)
    counts: dict[int, int] = {}
    for s in f.simplices:
        counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
    f_vec = " ".join(str(counts.get(d, 0)) for d in range(max(counts, default=0) + 1))
    return [
        f"graph: {g.node_count} nodes, {g.edge_count} edges",
        f"complex: {len(f.simplices)} simplices, f = ({f_vec})",
        f"filtration: {f.level_count} levels",
        f"betti at final level: {' '.join(map(str, betti))}",
        "essential intervals: "
        + (" ".join(f"H{d}={c}" for d, c in enumerate(essential) if c) or "none"),
        f"intervals: {len(b.intervals)} total, {zero} zero-length",
    ]


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--complex", "complex_kind", type=click.Choice(["clique", "neighborhood", "neighborhood-open"]),
              default="clique", show_default=True)
@click.option("--max-dim", type=int, default=5, show_default=True,
              help="simplex dimension cap; homology is reliable up to max-dim - 1")
@click.option("--filtration", "filtration_kind",
              type=click.Choice(["skeleton", "simplexwise"]),
              default="skeleton", show_default=True)
@click.option("--directed", is_flag=True, help="read the edge list as directed")
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="intervals JSON output")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="also write intervals as CSV")
@click.option("--figure", "figure_path", type=click.Path(dir_okay=False), default=None,
              help="barcode figure (default: alongside --out as .png)")
@click.option("--no-figure", is_flag=True, help="skip the barcode figure")
@click.option("--dump-complex", type=click.Path(dir_okay=False), default=None,
              help="write the complex's maximal simplices")
@click.option("--dump-filtration", type=click.Path(dir_okay=False), default=None,
              help="write the filtration sequence")
@_guarded
def persist(graph_file: str, complex_kind: str, max_dim: int, filtration_kind: str,
            directed: bool, out: str, csv_path: str | None, figure_path: str | None,
            no_figure: bool, dump_complex: str | None, dump_filtration: str | None) -> None:
    """Full pipeline: graph -> complex -> filtration -> reduction -> intervals."""
    if max_dim < 1:
        raise ValueError("--max-dim must be at least 1")
    config = {
        "command": "persist",
        "graph": graph_file,
        "complex": complex_kind,
        "max_dim": max_dim,
        "filtration": filtration_kind,
        "directed": directed,
    }
    g = load_edge_list(Path(graph_file).read_text(),
                       directed=True if directed else None)
    k = _build_complex(g, complex_kind, max_dim)
    f = _build_filtration(k, filtration_kind, max_dim)
    pairing = persistence.reduce(persistence.boundary_matrix(f))
    b = persistence.intervals(pairing, f, metadata={"config": config})

    Path(out).write_text(barcode_io.export_json(b))
    if csv_path:
        Path(csv_path).write_text(barcode_io.export_csv(b))
    if dump_complex:
        Path(dump_complex).write_text(
            complexes.save_complex(k, header_comments=(_config_line(config),)))
    if dump_filtration:
        Path(dump_filtration).write_text(filtration_mod.save_filtration(f))
    if not no_figure:
        from .plotting import render_figure

        target = figure_path or str(Path(out).with_suffix(".png"))
        render_figure(b, target, title=f"{complex_kind} complex barcode")
    for line in _summary_lines(g, k, f, b):
        click.echo(line)


@main.command("barcode")
@click.argument("intervals_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg", "png"]),
              default="ascii", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="output path (default: stdout for ascii)")
@click.option("--cursor", type=int, default=None,
              help="dashed cursor level for svg/png")
@click.option("--width", type=int, default=80, show_default=True,
              help="ascii output width in columns")
@_guarded
def barcode_cmd(intervals_file: str, fmt: str, out: str | None, cursor: int | None,
                width: int) -> None:
    """Render an intervals JSON file as ascii, svg, or png."""
    b = barcode_io.import_json(Path(intervals_file).read_text())
    if fmt == "ascii":
        text = barcode_io.render_ascii(b, width=width)
        if out is None:
            click.echo(text, nl=False)
        else:
            Path(out).write_text(text)
    elif fmt == "svg":
        if out is None:
            raise ValueError("--out is required for svg output")
        Path(out).write_text(barcode_io.render_svg(b, cursor=cursor))
    else:
        if out is None:
            raise ValueError("--out is required for png output")
        from .plotting import render_figure

        render_figure(b, out, cursor=cursor)
    if out is not None:
        click.echo(f"wrote {out}")


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--complex", "complex_kind", type=click.Choice(["clique", "neighborhood", "neighborhood-open"]),
              default="clique", show_default=True)
@click.option("--max-dim", type=int, default=5, show_default=True)
@click.option("--engine", type=click.Choice(["persistence", "oracle"]),
              default="persistence", show_default=True)
@click.option("--directed", is_flag=True)
@_guarded
def betti(graph_file: str, complex_kind: str, max_dim: int, engine: str,
          directed: bool) -> None:
    """Betti numbers of the graph's complex, by either engine."""
    if max_dim < 1:
        raise ValueError("--max-dim must be at least 1")
    g = load_edge_list(Path(graph_file).read_text(),
                       directed=True if directed else None)
    k = _build_complex(g, complex_kind, max_dim)
    up_to = max_dim - 1
    if engine == "oracle":
        values = betti_bruteforce(k, up_to).betti
    else:
        f = _build_filtration(k, "skeleton", max_dim)
        pairing = persistence.reduce(persistence.boundary_matrix(f))
        b = persistence.intervals(pairing, f)
        values = persistence.betti_at(b, f.level_count - 1) if f.level_count else ()
        values = tuple(values) + (0,) * (up_to + 1 - len(values))
        values = values[: up_to + 1]
    click.echo(" ".join(str(v) for v in values))


if __name__ == "__main__":
    main()
