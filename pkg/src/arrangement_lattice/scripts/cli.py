#!/usr/bin/env python3
"""Command-line interface for arrangement-lattice.

Usage:
    arrangement-lattice analyze triangle.txt --json
    arrangement-lattice analyze six.txt --orientation "+,-,+,+,+,+,+,+,+,+" --oracle
    arrangement-lattice generate 6 3 --seed 7 --out six_p3.txt
    arrangement-lattice predict 24 10
    arrangement-lattice check six_p3.txt
    arrangement-lattice render six.txt --out six.svg
    arrangement-lattice survey 6 0 --trials 30
    arrangement-lattice schema

Exit codes: 0 success, 1 usage or parse error, 2 validation failure
(not nodal, or a parallel class of three or more lines), 3 cross-check failure.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

import click

from arrangement_lattice import __version__
from arrangement_lattice.analysis import analyze as run_analysis
from arrangement_lattice.chambers.complex import build
from arrangement_lattice.config import get_settings, load_survey_plan
from arrangement_lattice.errors import ConditionViolationError, CrossCheckError, NotNodalError
from arrangement_lattice.generator import GenSpec, random_arrangement
from arrangement_lattice.infinity import predict as closed_form_prediction
from arrangement_lattice.io.arrangement_file import read_arrangement, serialize_arrangement, write_arrangement
from arrangement_lattice.io.render import render_svg, write_svg
from arrangement_lattice.io.report import PredictionBlock, Report, build_report, export_report, report_schema
from arrangement_lattice.survey import SurveyResult, survey
from arrangement_lattice.validation.engine import format_validation_report, require_lattice_ready, validate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CROSS_CHECK = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LatticeGroup(click.Group):
    """Click group that maps usage errors to exit code 1."""

    def main(  # type: ignore[override]
        self,
        args: list[str] | None = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(
                args=args, prog_name=prog_name, complete_var=complete_var, standalone_mode=False, **extra
            )
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, NotNodalError | ConditionViolationError):
        return EXIT_VALIDATION
    if isinstance(exc, CrossCheckError):
        return EXIT_CROSS_CHECK
    return EXIT_USAGE


def _fail(ctx: click.Context, exc: Exception) -> NoReturn:
    click.echo(f"Error: {exc}", err=True)
    ctx.exit(_exit_code(exc))


def _summary(report: Report) -> str:
    inv = report.invariants
    cx = report.complex
    out = [
        f"Lines: {cx.n_lines}  nodal: {report.validation.nodal}  p: {report.validation.parallel_pairs}",
        f"Vertices: {cx.vertex_count}  bounded chambers: {cx.bounded_chamber_count}  "
        f"unbounded chambers: {cx.unbounded_chamber_count}",
        f"n-gon profile: {cx.ngon_profile}",
        f"Orientation: {report.orientation.mode}",
        f"Gram: {len(report.gram)}x{len(report.gram)}",
        f"Rank {inv.ambient_rank}, kernel {inv.kernel_rank}, quotient rank {inv.nondeg_rank}, "
        f"signature {tuple(inv.signature)}, disc {inv.disc_label}, |det| {inv.det_abs}",
    ]
    if report.prediction is not None:
        pred = report.prediction
        out.append(
            f"Predicted: quotient rank {pred.perp_rank}, signature {tuple(pred.perp_signature)}, "
            f"disc(H_inf) {pred.h_inf_disc_label}"
        )
    if report.cross_check is not None:
        cc = report.cross_check
        out.append(
            f"Cross-check: {'PASS' if cc.passed else 'FAIL'} (rank/signature {cc.rank_signature_ok}, "
            f"sub-quotient {cc.subquotient_ok}, disc isomorphic {cc.disc_isomorphic})"
        )
        out.extend(f"  {m}" for m in cc.messages)
    if report.oracle is not None:
        oracle = report.oracle
        out.append(
            f"Flip oracle: {'PASS' if oracle.passed else 'FAIL'} over {oracle.assignments_checked} assignments "
            f"({'exhaustive' if oracle.exhaustive else 'random'})"
        )
    out.extend(report.notes)
    return "\n".join(out)


def _emit(report: Report, as_json: bool, out: Path | None) -> None:
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(_summary(report))
    if out is not None:
        export_report(report, out)
        click.echo(f"Exported report to {out}", err=True)


@click.group(cls=LatticeGroup)
@click.version_option(__version__, prog_name="arrangement-lattice")
@click.option("--debug", is_flag=True, help="Enable debug logging")
def main(debug: bool) -> None:
    """Chamber complexes, intersection forms and lattice invariants of nodal line arrangements."""
    level = logging.DEBUG if debug else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)


input_argument = click.argument("input_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
json_option = click.option("--json", "as_json", is_flag=True, help="Print the full JSON report")
out_option = click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the JSON report to this file",
)
oracle_option = click.option("--oracle", is_flag=True, help="Also run the flip base-change oracle")
seed_option = click.option("--seed", type=int, default=0, show_default=True, help="Random seed")


@main.command()
@input_argument
@click.option(
    "--orientation",
    default="standard",
    show_default=True,
    help='"standard" or one sign per bounded chamber, e.g. "+,-,+"',
)
@oracle_option
@seed_option
@out_option
@json_option
@click.pass_context
def analyze(
    ctx: click.Context,
    input_file: Path,
    orientation: str,
    oracle: bool,
    seed: int,
    out: Path | None,
    as_json: bool,
) -> None:
    """Build the chamber complex, Gram matrix and invariants of INPUT_FILE."""
    try:
        result = run_analysis(read_arrangement(input_file), orientation=orientation, run_oracle=oracle, seed=seed)
        report = build_report(result)
    except ValueError as exc:
        _fail(ctx, exc)
    _emit(report, as_json, out)
    if result.oracle is not None and not result.oracle.passed:
        ctx.exit(EXIT_CROSS_CHECK)


@main.command()
@input_argument
@oracle_option
@seed_option
@out_option
@json_option
@click.pass_context
def check(ctx: click.Context, input_file: Path, oracle: bool, seed: int, out: Path | None, as_json: bool) -> None:
    """Compare the invariants of INPUT_FILE with the closed-form predictions.

    Exits 0 only if the rank/signature and sub-quotient verdicts pass; the
    discriminant isomorphism is reported but never fails the run.
    """
    try:
        arr = read_arrangement(input_file)
        validation = validate(arr)
        try:
            require_lattice_ready(validation)
        except ValueError:
            click.echo(format_validation_report(validation), err=True)
            raise
        result = run_analysis(arr, run_oracle=oracle, seed=seed)
        report = build_report(result)
    except ValueError as exc:
        _fail(ctx, exc)
    _emit(report, as_json, out)
    if result.check is None or not result.check.passed:
        ctx.exit(EXIT_CROSS_CHECK)
    if result.oracle is not None and not result.oracle.passed:
        ctx.exit(EXIT_CROSS_CHECK)


@main.command()
@click.argument("n_lines", type=int)
@click.argument("parallel_pairs", type=int)
@seed_option
@click.option("--bound", type=int, default=None, help="Bound on numerators and denominators")
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Output file")
@click.pass_context
def generate(
    ctx: click.Context, n_lines: int, parallel_pairs: int, seed: int, bound: int | None, out: Path | None
) -> None:
    """Write a random nodal arrangement with N_LINES lines and PARALLEL_PAIRS parallel pairs."""
    try:
        request = GenSpec(
            n_lines=n_lines,
            parallel_pairs=parallel_pairs,
            seed=seed,
            coefficient_bound=bound or get_settings().coefficient_bound,
        )
        arr = random_arrangement(request)
    except ValueError as exc:
        _fail(ctx, exc)
    comment = f"N={n_lines} p={parallel_pairs} seed={seed} bound={request.coefficient_bound}"
    if out is None:
        click.echo(serialize_arrangement(arr, comment), nl=False)
    else:
        write_arrangement(arr, out, comment)
        click.echo(f"Wrote {arr.size} lines to {out}", err=True)


@main.command()
@click.argument("n_lines", type=int)
@click.argument("parallel_pairs", type=int)
@json_option
@click.pass_context
def predict(ctx: click.Context, n_lines: int, parallel_pairs: int, as_json: bool) -> None:
    """Print the closed-form predictions for N_LINES lines with PARALLEL_PAIRS parallel pairs."""
    try:
        block = PredictionBlock.from_prediction(closed_form_prediction(n_lines, parallel_pairs))
    except ValueError as exc:
        _fail(ctx, exc)
    if as_json:
        click.echo(block.model_dump_json(indent=2))
        return
    click.echo(f"N={block.n_lines} p={block.parallel_pairs} (N~={block.n_tilde})")
    click.echo(f"Bounded chambers: {block.cham_b_count}  vertices: {block.node_count}  H2 rank: {block.h2_rank}")
    click.echo(f"Ambient: rank {block.ambient_rank}, signature {tuple(block.ambient_signature)}")
    click.echo(
        f"H_inf: rank {block.h_inf_rank}, signature {tuple(block.h_inf_signature)}, disc {block.h_inf_disc_label}"
    )
    click.echo(f"Complement: rank {block.perp_rank}, signature {tuple(block.perp_signature)}")


@main.command()
@input_argument
@click.option(
    "--out", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None, help="SVG file (stdout if omitted)"
)
@click.pass_context
def render(ctx: click.Context, input_file: Path, out: Path | None) -> None:
    """Draw INPUT_FILE as SVG with labeled bounded chambers."""
    try:
        cc = build(read_arrangement(input_file))
    except ValueError as exc:
        _fail(ctx, exc)
    if out is None:
        click.echo(render_svg(cc), nl=False)
        return
    try:
        write_svg(cc, out)
    except OSError as exc:
        raise click.FileError(str(out), hint=str(exc)) from exc
    click.echo(f"Wrote SVG to {out}", err=True)


def _survey_summary(result: SurveyResult) -> str:
    lines = [
        f"N={result.n_lines} p={result.parallel_pairs}: {result.passed}/{result.trials} passed, "
        f"disc isomorphic in {result.disc_isomorphic}, kernel 0 in {result.nondegenerate}",
    ]
    for profile, count in sorted(result.profiles.items()):
        lines.append(f"  profile {dict(profile)}: {count}")
    lines.extend(f"  FAIL {f}" for f in result.failures)
    return "\n".join(lines)


@main.command(name="survey")
@click.argument("n_lines", type=int, required=False)
@click.argument("parallel_pairs", type=int, required=False)
@click.option("--trials", type=int, default=10, show_default=True, help="Arrangements per case")
@seed_option
@click.option(
    "--plan",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML survey plan (default config/survey_plan.yaml) used when N and P are omitted",
)
@json_option
@click.pass_context
def survey_command(
    ctx: click.Context,
    n_lines: int | None,
    parallel_pairs: int | None,
    trials: int,
    seed: int,
    plan: Path | None,
    as_json: bool,
) -> None:
    """Cross-check many random arrangements and tally their n-gon profiles."""
    if (n_lines is None) != (parallel_pairs is None):
        raise click.UsageError("give both N_LINES and PARALLEL_PAIRS, or neither")
    try:
        if n_lines is not None and parallel_pairs is not None:
            cases = [(n_lines, parallel_pairs, trials)]
        else:
            cases = [(c.n_lines, c.parallel_pairs, c.trials) for c in load_survey_plan(plan)]
        results = [survey(n, p, t, seed=seed, progress=not as_json) for n, p, t in cases]
    except (ValueError, OSError) as exc:
        _fail(ctx, exc)
    if as_json:
        payload = [
            {
                "n_lines": r.n_lines,
                "parallel_pairs": r.parallel_pairs,
                "trials": r.trials,
                "passed": r.passed,
                "failed": r.failed,
                "disc_isomorphic": r.disc_isomorphic,
                "nondegenerate": r.nondegenerate,
                "profiles": [{"profile": dict(k), "count": v} for k, v in sorted(r.profiles.items())],
                "failures": r.failures,
            }
            for r in results
        ]
        click.echo(json.dumps(payload, indent=2))
    else:
        for r in results:
            click.echo(_survey_summary(r))
    if not all(r.ok for r in results):
        ctx.exit(EXIT_CROSS_CHECK)


@main.command()
def schema() -> None:
    """Print the JSON Schema of the analysis report."""
    click.echo(report_schema())


if __name__ == "__main__":
    main()
