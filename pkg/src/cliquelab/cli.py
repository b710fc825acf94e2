"""Command line interface for the clique laboratory."""

from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

import click

from . import __version__
from .colouring import (
    find_all_misleading_vertices,
    find_misleading_vertex,
    forced_members,
    greedy_colour_vertexwise,
)
from .config import ConfigManager
from .dimacs import read_dimacs, to_dimacs
from .errors import CliqueLabError, ConfigError, DimacsParseError, OracleLimitError
from .experiment import (
    Instance,
    load_instances,
    parse_seed_range,
    random_suite,
    run_suite,
    write_csv,
)
from .figures import write_figures
from .graph import make_ordering, random_graph
from .run_logger import RunLogger
from .search import brute_force_omega, compare_variants, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2

ORDER_CHOICE = click.Choice(["natural", "degree"])
VARIANT_CHOICE = click.Choice(["baseline", "inherited"])
INHERITANCE_CHOICE = click.Choice(["colour-class", "parent-total"])


@dataclass
class CliState:
    config: ConfigManager
    run_logger: RunLogger


def _braces(labels: Sequence[int]) -> str:
    return "{" + ",".join(str(label) for label in labels) + "}"


def _brackets(labels: Sequence[int]) -> str:
    return "[" + ",".join(str(label) for label in labels) + "]"


def _emit_json(payload: Any) -> None:
    click.echo(json.dumps(payload, sort_keys=True))


@click.group()
@click.version_option(version=__version__, prog_name="cliquelab")
@click.option(
    "--config-file",
    type=click.Path(path_type=Path),
    help="Configuration file with CLIQUELAB_* keys (default: ./cliquelab.env).",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging and run log on stderr.")
@click.pass_context
def cli(ctx: click.Context, config_file: Optional[Path], verbose: bool) -> None:
    """Maximum clique laboratory: colouring bounds and branch and bound variants."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    manager = ConfigManager(config_file)
    ctx.obj = CliState(manager, RunLogger(manager.log_file(), echo=verbose))


@cli.command("solve")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--variant", type=VARIANT_CHOICE, help="Bound variant (default from config).")
@click.option("--order", type=ORDER_CHOICE, help="Initial vertex ordering.")
@click.option("--threads", type=click.IntRange(min=1), help="Worker threads; >1 runs in parallel.")
@click.option("--inheritance", type=INHERITANCE_CHOICE, help="What a child inherits.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
@click.pass_obj
def solve_command(
    state: CliState,
    file: Path,
    variant: Optional[str],
    order: Optional[str],
    threads: Optional[int],
    inheritance: Optional[str],
    as_json: bool,
) -> None:
    """Find a maximum clique."""
    g = read_dimacs(file)
    cfg = state.config.search_config(
        variant=variant, order=order, threads=threads, inheritance=inheritance
    )
    state.run_logger.start_run(file.name)
    state.run_logger.log_config(cfg)
    outcome = solve(g, cfg)
    state.run_logger.log_outcome(g, outcome)
    state.run_logger.end_run()

    if as_json:
        payload = outcome.to_dict(g)
        payload["instance"] = file.name
        _emit_json(payload)
    else:
        click.echo(
            f"omega={outcome.omega} clique={_braces(g.labels_of(outcome.clique))} "
            f"nodes={outcome.nodes} events={outcome.misleading_events}"
        )


@cli.command("colour")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--order", type=ORDER_CHOICE, help="Scan order for the greedy colouring.")
@click.option("--remove", "remove", type=int, help="Colour with this 1-based vertex removed.")
@click.option(
    "--forced",
    "forced_k",
    type=click.IntRange(min=0),
    help="Report vertices forced into a clique of this size.",
)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
@click.pass_obj
def colour_command(
    state: CliState,
    file: Path,
    order: Optional[str],
    remove: Optional[int],
    forced_k: Optional[int],
    as_json: bool,
) -> None:
    """Greedily colour a graph in the chosen order."""
    g = read_dimacs(file)
    cfg = state.config.search_config(order=order)
    ordering = make_ordering(g, cfg.ordering_policy)
    domain = set(range(g.n))
    if remove is not None:
        try:
            domain.discard(g.index_of_label(remove))
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--remove") from None
    colouring = greedy_colour_vertexwise(g, domain, ordering)

    forced = forced_members(colouring, forced_k) if forced_k is not None else None
    if as_json:
        payload = colouring.to_dict(g)
        payload["order"] = cfg.ordering_policy.value
        if forced is not None:
            payload["forced"] = {
                "k": forced_k,
                "impossible": forced.impossible,
                "vertices": g.labels_of(forced.vertices),
            }
        _emit_json(payload)
        return

    classes = " ".join(_brackets(cls) for cls in colouring.labelled_classes(g))
    click.echo(f"{colouring.num_colours} colours: {classes}")
    if forced is not None:
        if forced.impossible:
            click.echo(f"forced k={forced_k}: impossible")
        else:
            click.echo(f"forced k={forced_k}: {_braces(g.labels_of(forced.vertices))}")


@cli.command("compare")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--order", type=ORDER_CHOICE, help="Initial vertex ordering.")
@click.option("--inheritance", type=INHERITANCE_CHOICE, help="What a child inherits.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
@click.pass_obj
def compare_command(
    state: CliState,
    file: Path,
    order: Optional[str],
    inheritance: Optional[str],
    as_json: bool,
) -> None:
    """Run baseline and inherited variants side by side."""
    g = read_dimacs(file)
    cfg = state.config.search_config(order=order, threads=1, inheritance=inheritance)
    state.run_logger.start_run(file.name)
    report = compare_variants(g, cfg, file.name)
    state.run_logger.log_comparison(report)
    state.run_logger.end_run()

    if as_json:
        _emit_json(report.to_dict(g))
        return
    for outcome in (report.baseline, report.inherited):
        click.echo(
            f"{outcome.variant.value}: omega={outcome.omega} "
            f"clique={_braces(g.labels_of(outcome.clique))} nodes={outcome.nodes} "
            f"events={outcome.misleading_events} latent={outcome.latent_events}"
        )
    click.echo(
        f"omega_equal={str(report.omega_equal).lower()} "
        f"nodes_equal={str(report.nodes_equal).lower()} nodes_delta={report.nodes_delta}"
    )


@cli.command("detect")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--order", type=ORDER_CHOICE, help="Scan order for the greedy colouring.")
@click.option("--all", "show_all", is_flag=True, help="List every misleading vertex.")
@click.pass_obj
def detect_command(state: CliState, file: Path, order: Optional[str], show_all: bool) -> None:
    """Find vertices whose removal increases the greedy colour count."""
    g = read_dimacs(file)
    ordering = make_ordering(g, state.config.search_config(order=order).ordering_policy)
    if show_all:
        witnesses = find_all_misleading_vertices(g, ordering)
    else:
        first = find_misleading_vertex(g, ordering)
        witnesses = [first] if first is not None else []

    if not witnesses:
        click.echo("no misleading vertex")
    for hit in witnesses:
        click.echo(
            f"vertex {g.label(hit.vertex)}: {hit.colours_before} -> {hit.colours_after} colours"
        )


@cli.command("gen")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Vertex count.")
@click.option("--p", "p", type=click.FloatRange(0.0, 1.0), required=True, help="Edge probability.")
@click.option("--seed", type=int, required=True, help="Generator seed.")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Write to this file.")
def gen_command(n: int, p: float, seed: int, output: Optional[Path]) -> None:
    """Generate a seeded G(n, p) instance in DIMACS format."""
    text = to_dimacs(random_graph(n, p, seed))
    if output is None:
        click.echo(text)
    else:
        output.write_text(text + "\n", encoding="ascii")


@cli.command("oracle")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--limit", type=click.IntRange(min=1), help="Largest n the oracle accepts.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
@click.pass_obj
def oracle_command(state: CliState, file: Path, limit: Optional[int], as_json: bool) -> None:
    """Exhaustive clique number for small graphs."""
    g = read_dimacs(file)
    cfg = state.config.search_config(oracle_limit=limit)
    size, clique = brute_force_omega(g, cfg.oracle_limit)
    if as_json:
        _emit_json({"omega": size, "clique": g.labels_of(clique)})
    else:
        click.echo(f"omega={size} clique={_braces(g.labels_of(clique))}")


@cli.command("experiment")
@click.argument("files", nargs=-1, type=click.Path(path_type=Path))
@click.option("--random-n", type=click.IntRange(min=0), help="Add a G(n, p) suite of this size.")
@click.option("--p", "p", type=click.FloatRange(0.0, 1.0), default=0.5, show_default=True)
@click.option("--seeds", default="0..199", show_default=True, help="Seed range A..B.")
@click.option("--order", type=ORDER_CHOICE, help="Initial vertex ordering.")
@click.option("--inheritance", type=INHERITANCE_CHOICE, help="What a child inherits.")
@click.option("--timings", is_flag=True, help="Fill the elapsed_ms column.")
@click.option("-o", "--output", type=click.Path(path_type=Path), help="Write CSV here.")
@click.option("--json-summary", type=click.Path(path_type=Path), help="Write the summary as JSON.")
@click.pass_obj
def experiment_command(
    state: CliState,
    files: tuple[Path, ...],
    random_n: Optional[int],
    p: float,
    seeds: str,
    order: Optional[str],
    inheritance: Optional[str],
    timings: bool,
    output: Optional[Path],
    json_summary: Optional[Path],
) -> None:
    """Compare both variants over instance files and/or a random suite, as CSV."""
    cfg = state.config.search_config(order=order, threads=1, inheritance=inheritance)
    instances: list[Instance] = load_instances(files)
    if random_n is not None:
        instances.extend(random_suite(random_n, p, parse_seed_range(seeds)))

    result = run_suite(instances, cfg, state.run_logger)

    if output is None:
        write_csv(result.rows, sys.stdout, timings)
    else:
        with open(output, "w", encoding="ascii", newline="") as handle:
            write_csv(result.rows, handle, timings)

    summary = result.summary
    if json_summary is not None:
        json_summary.write_text(json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n")
    click.echo(
        f"{summary.instances} instances, {summary.instances_with_events} with events "
        f"({summary.events_total} total), {summary.instances_with_delta} with fewer nodes, "
        f"nodes equal on {summary.nodes_equal_fraction:.1%}",
        err=True,
    )


@cli.command("figures")
@click.argument("directory", type=click.Path(path_type=Path), default=Path("instances"))
def figures_command(directory: Path) -> None:
    """Write fig1.clq and fig2.clq."""
    for path in write_figures(directory):
        click.echo(f"wrote {path}")


@cli.command("init")
@click.option("--order", type=ORDER_CHOICE, help="Default ordering.")
@click.option("--variant", type=VARIANT_CHOICE, help="Default variant.")
@click.option("--threads", type=click.IntRange(min=1), help="Default thread count.")
@click.option("--oracle-limit", type=click.IntRange(min=1), help="Default oracle size guard.")
@click.option("--log-file", help="Append run logs to this file.")
@click.pass_obj
def init_command(
    state: CliState,
    order: Optional[str],
    variant: Optional[str],
    threads: Optional[int],
    oracle_limit: Optional[int],
    log_file: Optional[str],
) -> None:
    """Create or update the configuration file."""
    state.config.setup_env_file(
        order=order,
        variant=variant,
        threads=threads,
        oracle_limit=oracle_limit,
        log_file=log_file,
    )
    click.echo(f"Configuration saved to {state.config.config_file}")


@cli.command("status")
@click.pass_obj
def status_command(state: CliState) -> None:
    """Show current configuration status."""
    click.echo(state.config.get_config_summary())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and map failures to exit statuses (1 usage, 2 input)."""
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="cliquelab",
            standalone_mode=False,
        )
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except ConfigError as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    except (DimacsParseError, OracleLimitError, OSError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_INPUT
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except CliqueLabError as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    run()
