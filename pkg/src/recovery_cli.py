#!/usr/bin/env python
"""
Network Recovery CLI - Recover, benchmark, sample and inspect damaged networks

Machine-readable output (JSON, CSV) goes to stdout or --out; progress and
diagnostics go to stderr. Exit codes: 0 success, 2 input error, 3
algorithm failure.
"""
import asyncio
import json
import logging
import sys
from contextlib import contextmanager
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Tuple

import click
import yaml

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from network_recovery.config.config import Config
from network_recovery.exceptions import ConfigurationError, NetworkFileError, RecoveryError
from network_recovery.models import (
    CSV_HEADER,
    GREEDY,
    ComplexKind,
    GreedyConfig,
    NetworkFile,
    RecoveryConfig,
    Scenario,
    StrategyKind,
)
from network_recovery.providers import ResultStore
from network_recovery.providers.storage import render_csv
from network_recovery.services import (
    BenchmarkHarness,
    StrategyFactory,
    betti,
    boundary_points,
    build_complex,
    coverage_fraction,
    greedy_cover,
    run_recovery,
    sample_conditioned,
)
from network_recovery.services.harness import robustness_rows

logger = logging.getLogger("network_recovery.cli")

STRATEGIES = [kind.value for kind in StrategyKind] + [GREEDY]
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _fail(error: Exception, code: int):
    click.echo(f"❌ {error}", err=True)
    sys.exit(code)


@contextmanager
def _exit_codes():
    """Map package errors onto the stable exit codes"""
    try:
        yield
    except RecoveryError as e:
        _fail(e, e.exit_code)


@contextmanager
def _settings(command: str):
    """Report models rejecting config values or flags as input errors"""
    try:
        yield
    except ValueError as e:
        raise ConfigurationError(f"{command}: {e}") from e


def _result_store(config: Config, out: str) -> Tuple[ResultStore, str]:
    """Configured store rooted at the directory of --out, plus the file key"""
    target = Path(out)
    rooted = replace(config, storage=config.storage.rooted_at(str(target.parent)))
    return StrategyFactory.create_result_store(rooted), target.name


def _load_network(
    path: str,
    side: Optional[float] = None,
    radius: Optional[float] = None,
    complex_kind: Optional[str] = None
) -> NetworkFile:
    """Read a network file and apply command-line overrides"""
    network = NetworkFile.load(path)
    if side is not None:
        network = replace(network, a=side)
        for key in ("existing", "boundary"):
            for i, p in enumerate(getattr(network, key) or []):
                if not network.domain.contains(p):
                    raise NetworkFileError(f"{key}[{i}]", f"point ({p.x}, {p.y}) lies outside [0, {side}]^2")
    if radius is not None:
        network = replace(network, r=radius)
    if complex_kind is not None:
        network = replace(network, kind=ComplexKind(complex_kind))
    return network


def _split_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_targets(value: str) -> List[float]:
    """'20,40' or '0.2,0.4' -> [0.2, 0.4]"""
    targets = []
    for item in _split_list(value):
        try:
            number = float(item.rstrip("%"))
        except ValueError:
            raise click.BadParameter(f"not a number: {item!r}", param_hint="--scenarios") from None
        target = number / 100 if number > 1 else number
        if not 0 < target < 1:
            raise click.BadParameter(f"coverage target out of range: {item!r}", param_hint="--scenarios")
        targets.append(target)
    if not targets:
        raise click.BadParameter("no scenario given", param_hint="--scenarios")
    return targets


def _parse_strategies(value: str) -> List[str]:
    names = [name.lower() for name in _split_list(value)]
    unknown = [name for name in names if name not in STRATEGIES]
    if unknown or not names:
        raise click.BadParameter(
            f"expected a comma-separated subset of {', '.join(STRATEGIES)}, got {value!r}",
            param_hint="--strategies",
        )
    return names


@click.group()
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None, help='YAML configuration file')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
@click.pass_context
def cli(ctx, config_path: Optional[str], verbose: bool):
    """Network Recovery - Restore coverage of damaged wireless networks"""
    ctx.ensure_object(dict)
    try:
        config = Config.load(config_path)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--config')

    level = logging.DEBUG if verbose else getattr(logging, config.app.log_level.upper(), logging.INFO)
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)
    ctx.obj['config'] = config


@cli.command()
@click.argument('input_path', type=click.Path(dir_okay=False))
@click.option('--strategy', '-s', type=click.Choice(STRATEGIES), default=None, help='Addition method')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Random seed')
@click.option('--radius', type=click.FloatRange(min=0, min_open=True), default=None, help='Override the file radius')
@click.option('--side', type=click.FloatRange(min=0, min_open=True), default=None, help='Override the file domain side')
@click.option('--complex', 'complex_kind', type=click.Choice(['rips', 'cech']), default=None, help='Override the file complex kind')
@click.option('--max-iterations', type=click.IntRange(min=1), default=None, help='Addition loop cap')
@click.option('--stop-radius', type=click.FloatRange(min=0, min_open=True), default=None, help='Greedy stop radius (default: r)')
@click.option('--trace/--no-trace', default=False, help='Include the addition and reduction trace')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='Output file (default: stdout)')
@click.pass_context
def recover(ctx, input_path: str, strategy: Optional[str], seed: Optional[int], radius: Optional[float],
            side: Optional[float], complex_kind: Optional[str], max_iterations: Optional[int],
            stop_radius: Optional[float], trace: bool, out: Optional[str]):
    """Add and prune vertices until the network is connected and hole-free"""

    config = ctx.obj['config']
    strategy = strategy or config.placement.strategy
    seed = config.placement.seed if seed is None else seed

    with _exit_codes():
        network = _load_network(input_path, side, radius, complex_kind)
        with _settings("recover"):
            if strategy == GREEDY:
                greedy_config = GreedyConfig(
                    domain=network.domain,
                    radius=network.r,
                    stop_radius=stop_radius,
                )
            else:
                recovery_config = RecoveryConfig(
                    radius=network.r,
                    domain=network.domain,
                    strategy=StrategyFactory.parse_strategy(strategy, network.kind),
                    seed=seed,
                    max_iterations=max_iterations or config.loop.max_iterations,
                    boundary=network.boundary_points(),
                    sampler=config.placement.sampler_settings(),
                )
            destination = _result_store(config, out) if out else None

        if strategy == GREEDY:
            kept = greedy_cover(network.existing, greedy_config)
            data = {"kept": [p.to_list() for p in kept]}
        else:
            result = run_recovery(network.existing_points(), recovery_config)
            click.echo(
                f"✅ {result.n_kept} of {result.n_added} added vertices kept, betti {result.betti.to_list()}",
                err=True,
            )
            data = result.to_dict(include_trace=trace)

    if destination:
        store, key = destination
        path = asyncio.run(store.save_recovery(data, key))
        click.echo(f"💾 Saved {path}", err=True)
    else:
        click.echo(json.dumps(data, indent=2))


@cli.command()
@click.option('--scenarios', default=None, help='Coverage targets, e.g. 20,40,60,80')
@click.option('--strategies', default=None, help='Comma-separated strategies')
@click.option('--reps', type=click.IntRange(min=1), default=None, help='Replications per scenario')
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Base seed')
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=None, help='Worker processes')
@click.option('--radius', type=click.FloatRange(min=0, min_open=True), default=None, help='Coverage radius')
@click.option('--side', type=click.FloatRange(min=0, min_open=True), default=None, help='Domain side')
@click.option('--complex', 'complex_kind', type=click.Choice(['rips', 'cech']), default=None, help='Complex kind')
@click.option('--band', type=click.FloatRange(min=0, min_open=True), default=None, help='Scenario coverage tolerance')
@click.option('--jitter', type=click.FloatRange(min=0), default=None, help='Also measure robustness to Gaussian jitter of this sigma')
@click.option('--jitter-trials', type=click.IntRange(min=1), default=20, help='Jittered copies per run')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='CSV file (default: stdout)')
@click.pass_context
def bench(ctx, scenarios: Optional[str], strategies: Optional[str], reps: Optional[int], seed: Optional[int],
          jobs: Optional[int], radius: Optional[float], side: Optional[float], complex_kind: Optional[str],
          band: Optional[float], jitter: Optional[float], jitter_trials: int, out: Optional[str]):
    """Compare strategies over damaged-network scenarios"""

    config = ctx.obj['config']
    if jitter is not None and not out:
        raise click.UsageError("--jitter needs --out for the robustness table")

    flags = {
        'targets': _parse_targets(scenarios) if scenarios else None,
        'strategies': _parse_strategies(strategies) if strategies else None,
        'replications': reps,
        'base_seed': seed,
        'band': band,
        'jobs': jobs,
    }
    bench_config = replace(config.bench, **{k: v for k, v in flags.items() if v is not None})
    network = replace(
        config.network,
        side_length=config.network.side_length if side is None else side,
        radius=config.network.radius if radius is None else radius,
        complex_kind=complex_kind or config.network.complex_kind,
    )

    with _exit_codes():
        with _settings("bench"):
            unknown = [name for name in bench_config.strategies if name not in STRATEGIES]
            if unknown or not bench_config.strategies:
                raise ValueError(f"strategies must be a non-empty subset of {', '.join(STRATEGIES)}")
            if bench_config.replications < 1:
                raise ValueError(f"replications must be >= 1, got {bench_config.replications}")
            scenario_list = bench_config.scenarios(network)
            harness = BenchmarkHarness(
                complex_kind=network.kind,
                sampler=config.placement.sampler_settings(),
                max_iterations=config.loop.max_iterations,
                greedy_stop_factor=bench_config.greedy_stop_factor,
                jobs=bench_config.jobs,
                verify_kind=bench_config.verify,
                greedy_added_factor=bench_config.greedy_added_factor,
            )
            destination = _result_store(config, out) if out else None
        asyncio.run(_run_bench(
            harness, scenario_list, list(bench_config.strategies), bench_config.replications,
            jitter, jitter_trials, destination,
        ))


async def _run_bench(
    harness: BenchmarkHarness,
    scenarios: List[Scenario],
    strategies: List[str],
    reps: int,
    jitter: Optional[float],
    jitter_trials: int,
    destination: Optional[Tuple[ResultStore, str]]
):
    """Async function to run the benchmark and store its outputs"""

    rows = await harness.run(
        scenarios,
        strategies,
        reps,
        jitter_sigma=jitter or 0.0,
        jitter_trials=jitter_trials if jitter is not None else 0,
    )

    if destination is None:
        click.echo(render_csv(CSV_HEADER, [row.to_csv_row() for row in rows]), nl=False)
        return

    store, key = destination
    stem = Path(key).stem
    csv_path = await store.save_bench_table(rows, key)
    runs_path = await store.save_run_records(
        harness.records,
        f"{stem}_runs.json",
        metadata={
            'rows': [row.to_dict() for row in rows],
            'replications': reps,
            'strategies': strategies,
        },
    )
    plots = await store.save_plot_data(rows)
    click.echo(f"💾 Table: {csv_path}", err=True)
    click.echo(f"💾 Runs: {runs_path}", err=True)
    for strategy, path in plots.items():
        click.echo(f"💾 Plot data ({strategy}): {path}", err=True)

    if jitter is not None:
        robustness = robustness_rows(harness.records, scenarios, strategies, jitter)
        path = await store.save_robustness_table(robustness, f"{stem}_robustness.csv")
        click.echo(f"💾 Robustness: {path}", err=True)


@cli.command()
@click.argument('n', type=click.IntRange(min=0))
@click.option('--seed', type=click.IntRange(min=0), default=None, help='Random seed')
@click.option('--condition', 'condition_path', type=click.Path(dir_okay=False), default=None,
              help='Network file whose existing vertices condition the draw')
@click.option('--side', type=click.FloatRange(min=0, min_open=True), default=None, help='Domain side')
@click.option('--out', '-o', type=click.Path(dir_okay=False), default=None, help='JSON file (default: stdout)')
@click.pass_context
def sample(ctx, n: int, seed: Optional[int], condition_path: Optional[str], side: Optional[float],
           out: Optional[str]):
    """Draw N determinantal points as a JSON list of [x, y]"""

    config = ctx.obj['config']
    seed = config.placement.seed if seed is None else seed

    with _exit_codes():
        if condition_path:
            network = _load_network(condition_path, side)
            domain, existing = network.domain, network.existing
        with _settings("sample"):
            if not condition_path:
                domain = replace(config.network, side_length=side or config.network.side_length).domain
                existing = []
            settings = config.placement.sampler_settings()
            destination = _result_store(config, out) if out else None
        points = sample_conditioned(n, existing, domain, seed, settings)

    if destination:
        store, key = destination
        path = asyncio.run(store.save_points(points, key))
        click.echo(f"💾 Saved {len(points)} points to {path}", err=True)
    else:
        click.echo(json.dumps([p.to_list() for p in points]))


@cli.command()
@click.argument('input_path', type=click.Path(dir_okay=False))
@click.option('--boundary/--no-boundary', default=True, help='Include boundary vertices in the complex')
@click.option('--radius', type=click.FloatRange(min=0, min_open=True), default=None, help='Override the file radius')
@click.option('--complex', 'complex_kind', type=click.Choice(['rips', 'cech']), default=None, help='Override the file complex kind')
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON')
@click.pass_context
def inspect(ctx, input_path: str, boundary: bool, radius: Optional[float], complex_kind: Optional[str], as_json: bool):
    """Report Betti numbers, simplex counts and coverage of a network file"""

    config = ctx.obj['config']

    with _exit_codes():
        network = _load_network(input_path, radius=radius, complex_kind=complex_kind)
        points = network.existing_points()
        if boundary:
            override = network.boundary_points()
            points += override if override is not None else boundary_points(network.domain, network.r)
        if not network.existing:
            logger.warning("Network %s has no existing vertices", input_path)
            click.echo("⚠️  Empty network", err=True)

        complex_ = build_complex(points, network.r, network.kind)
        numbers = betti(complex_)
        report = {
            'betti': numbers.to_list(),
            **complex_.summary(),
            'coverage': coverage_fraction(network.existing, network.r, network.domain, config.bench.resolution),
        }

    if as_json:
        click.echo(json.dumps(report, indent=2))
        return

    click.echo(f"beta0: {numbers.beta0}")
    click.echo(f"beta1: {numbers.beta1}")
    click.echo(f"complex: {report['kind']} (r={network.r:g})")
    click.echo(f"vertices: {report['vertices']}")
    click.echo(f"edges: {report['edges']}")
    click.echo(f"triangles: {report['triangles']}")
    click.echo(f"coverage: {report['coverage']:.4f}")


@cli.command()
@click.pass_context
def show_config(ctx):
    """Show current configuration"""

    config = ctx.obj['config']

    click.echo("\n⚙️  Current Configuration:", err=True)
    click.echo("=" * 50, err=True)
    click.echo(yaml.safe_dump(config.to_dict(), default_flow_style=False, sort_keys=False), nl=False)


if __name__ == '__main__':
    cli()
