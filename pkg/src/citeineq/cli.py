"""Command-line surface: analyze, fit, batch, plotdata, synth.

Every failure path exits nonzero after printing a single diagnostic line
of the form ``error: <ErrorType>: <message>`` to stderr.  Exit codes:
0 success, 1 input error, 2 computation error, 3 partial batch failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import INPUT_ERRORS, CiteIneqError, ValidationError
from .ingest import SynthSpec, load_manifest, load_profile, synth_profile, write_profile
from .report import (
    BatchResult,
    RunConfig,
    analyze_profile,
    cohort_to_csv,
    cohort_to_json,
    cohort_to_markdown,
    fit_series,
    fit_to_dict,
    inset_csv,
    read_series_csv,
    run_batch,
    series_to_csv,
    summary_to_dict,
    timepanel_csv,
    write_json,
    write_text,
)
from .soc import SocConfig
from .windows import WindowConfig

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COMPUTE = 2
EXIT_PARTIAL = 3


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window-width", type=int, default=5, help="window width in years")
    parser.add_argument("--stride", type=int, default=1, help="window stride in years")
    parser.add_argument("--end-year", type=int, default=2022, help="last data year (inclusive)")
    parser.add_argument("--min-pubs", type=int, default=2, help="minimum publications per window")
    parser.add_argument("--soc-mark", type=float, default=0.82, help="g = k precursor level")
    parser.add_argument("--soc-band", type=float, default=0.02, help="band half-width around the mark")
    parser.add_argument("--marginal-tol", type=float, default=0.01, help="max k - g gap still called marginal")
    parser.add_argument("--r-threshold", type=float, default=40.0, help="peak-ratio flag threshold")
    parser.add_argument("--format", choices=["csv", "json", "markdown"], default="csv", dest="fmt")
    parser.add_argument("--out", type=Path, default=Path("."), help="output directory")


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        window=WindowConfig(
            width_years=args.window_width,
            stride_years=args.stride,
            end_year=args.end_year,
            min_pubs=args.min_pubs,
        ),
        soc=SocConfig(
            soc_mark=args.soc_mark,
            soc_band=args.soc_band,
            marginal_tolerance=args.marginal_tol,
            r_threshold=args.r_threshold,
        ),
        out_dir=args.out,
        fmt=args.fmt,
    )


def _slug(name: str) -> str:
    cleaned = "".join(ch if ch.isalnum() else "-" for ch in name.lower())
    return "-".join(filter(None, cleaned.split("-"))) or "profile"


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = _run_config(args)
    profile = load_profile(args.profile)
    series, summary = analyze_profile(profile, config)
    stem = _slug(profile.name)
    series_path = write_text(series_to_csv(series), config.out_dir / f"{stem}_series.csv")
    summary_path = write_json(summary_to_dict(summary), config.out_dir / f"{stem}_summary.json")
    print(series_path)
    print(summary_path)
    if config.fmt == "markdown":
        md = cohort_to_markdown(BatchResult([summary], []), {summary.name: list(profile.tags)})
        print(write_text(md, config.out_dir / f"{stem}_summary.md"))
    return EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    config = _run_config(args)
    series = read_series_csv(args.series)
    fit = fit_series(series)
    stem = Path(args.series).stem
    print(write_json(fit_to_dict(fit), config.out_dir / f"{stem}_fit.json"))
    return EXIT_OK


def _cmd_plotdata(args: argparse.Namespace) -> int:
    config = _run_config(args)
    series = read_series_csv(args.series)
    fit = fit_series(series)
    stem = Path(args.series).stem
    print(write_text(timepanel_csv(series, config.soc.soc_mark), config.out_dir / f"{stem}_timepanel.csv"))
    print(write_text(inset_csv(series, fit), config.out_dir / f"{stem}_inset.csv"))
    return EXIT_OK


def _cmd_batch(args: argparse.Namespace) -> int:
    config = _run_config(args)
    entries = load_manifest(args.manifest)
    if not entries:
        raise ValidationError("manifest lists no profiles")
    batch = run_batch(entries, config)
    tags_by_name = {e.name: list(e.tags) for e in entries}
    for name, exc in batch.failures:
        print(f"error: {type(exc).__name__}: profile {name!r}: {exc}", file=sys.stderr)
    if not batch.summaries:
        print("error: BatchFailed: every profile in the batch failed", file=sys.stderr)
        return EXIT_COMPUTE

    for summary in batch.summaries:
        stem = _slug(summary.name)
        series = batch.series_by_name[summary.name]
        write_text(series_to_csv(series), config.out_dir / "profiles" / f"{stem}_series.csv")
        write_json(summary_to_dict(summary), config.out_dir / "profiles" / f"{stem}_summary.json")

    print(write_text(cohort_to_csv(batch, tags_by_name), config.out_dir / "cohort.csv"))
    print(write_json(cohort_to_json(batch, tags_by_name), config.out_dir / "cohort.json"))
    if config.fmt == "markdown":
        print(write_text(cohort_to_markdown(batch, tags_by_name), config.out_dir / "cohort.md"))
    return EXIT_PARTIAL if batch.failures else EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    spec = SynthSpec(
        model=args.model,
        n_papers=args.n_papers,
        exponent=args.exponent,
        span_years=(args.first_year, args.last_year),
        seed=args.seed,
        value=args.value,
    )
    profile = synth_profile(spec, name=args.name)
    suffix = args.out.suffix.lower()
    if suffix in (".csv", ".json"):
        out, fmt = args.out, suffix[1:]
    else:
        fmt = "csv" if args.fmt == "csv" else "json"
        out = args.out / f"{_slug(profile.name)}.{fmt}"
    print(write_profile(profile, out, fmt=fmt))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citeineq",
        description="Citation inequality indices over sliding career windows",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="window series + career summary for one profile")
    p.add_argument("profile", type=Path, help="profile file (.csv or .json)")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("fit", help="fit k = 1/2 + c*g over a series file")
    p.add_argument("series", type=Path, help="series CSV written by analyze")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("plotdata", help="plot-ready panels for a series file")
    p.add_argument("series", type=Path, help="series CSV written by analyze")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_plotdata)

    p = sub.add_parser("batch", help="cohort tables for a manifest of profiles")
    p.add_argument("manifest", type=Path, help="JSON array of {name, path, tags}")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("synth", help="generate a deterministic synthetic profile")
    p.add_argument("--model", choices=["powerlaw", "uniform", "equal"], default="powerlaw")
    p.add_argument("--n-papers", type=int, default=200)
    p.add_argument("--exponent", type=float, default=2.5)
    p.add_argument("--first-year", type=int, default=1990)
    p.add_argument("--last-year", type=int, default=2020)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--value", type=int, default=100, help="equal/uniform citation level")
    p.add_argument("--name", default=None)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CiteIneqError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
