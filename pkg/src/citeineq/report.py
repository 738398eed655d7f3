"""Reproducible report artifacts: series/summary/fit files and cohort tables.

All machine-readable outputs (CSV, JSON) carry full float precision via the
shortest round-trip representation and are byte-deterministic for identical
inputs; rounding to 2 decimals happens only in the Markdown rendering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DegenerateFit, ParseError
from .ingest import ManifestEntry, load_profile
from .landau import FitResult, fit_k_vs_g
from .soc import CareerSummary, SocConfig, career_summary
from .windows import IndexSeries, WindowConfig, WindowEntry, window_series

SERIES_HEADER = "central_year,g,k,n_pubs,n_cites,skipped"

#: Number of samples of the fitted line in the inset panel, endpoints included.
INSET_LINE_SAMPLES = 50


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by all CLI commands; defaults reproduce the
    5-year/2022 windowing, the 0.82 +- 0.02 mark and the R >= 40 flag."""

    window: WindowConfig = field(default_factory=WindowConfig)
    soc: SocConfig = field(default_factory=SocConfig)
    out_dir: Path = Path(".")
    fmt: str = "csv"


def _fnum(value: float | None) -> str:
    return "" if value is None else repr(float(value))


# --- index series ----------------------------------------------------------

def series_to_csv(series: IndexSeries) -> str:
    lines = [SERIES_HEADER]
    for e in series.entries:
        skipped = e.reason or "" if e.skipped else ""
        lines.append(
            f"{e.central_year},{_fnum(e.g)},{_fnum(e.k)},{e.n_pubs},{e.n_cites},{skipped}"
        )
    return "\n".join(lines) + "\n"


def series_from_csv(text: str, source: str = "<series>") -> IndexSeries:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != SERIES_HEADER:
        raise ParseError(f"{source}: first line must be {SERIES_HEADER!r}", line=1)
    entries = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 6:
            raise ParseError(f"{source}: expected 6 fields, got {len(parts)}", line=lineno)
        year_s, g_s, k_s, n_pubs_s, n_cites_s, skipped_s = (p.strip() for p in parts)
        try:
            year = int(year_s)
            n_pubs = int(n_pubs_s)
            n_cites = int(n_cites_s)
            g = float(g_s) if g_s else None
            k = float(k_s) if k_s else None
        except ValueError as exc:
            raise ParseError(f"{source}: {exc}", line=lineno) from None
        if skipped_s:
            entries.append(WindowEntry(year, None, None, n_pubs, n_cites, True, skipped_s))
        elif g is None or k is None:
            raise ParseError(f"{source}: non-skipped row missing g or k", line=lineno)
        else:
            entries.append(WindowEntry(year, g, k, n_pubs, n_cites, False))
    return IndexSeries(entries=entries)


def read_series_csv(path) -> IndexSeries:
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"series file not found: {path}")
    return series_from_csv(path.read_text(encoding="utf-8"), source=str(path))


# --- career summary --------------------------------------------------------

def summary_to_dict(summary: CareerSummary) -> dict:
    return {
        "name": summary.name,
        "n_pubs": summary.n_pubs,
        "n_cites": summary.n_cites,
        "h_index": summary.h_index,
        "g_overall": summary.g_overall,
        "k_overall": summary.k_overall,
        "g_yearly_mean": summary.yearly.mean_g,
        "g_yearly_sd": summary.yearly.sd_g,
        "k_yearly_mean": summary.yearly.mean_k,
        "k_yearly_sd": summary.yearly.sd_k,
        "n_windows": summary.yearly.n_windows,
        "max_citations": summary.max_citations,
        "cites_per_paper": summary.cites_per_paper,
        "peak_ratio": summary.peak_ratio,
        "crossing": summary.crossing.classification,
        "crossing_years": list(summary.crossing.crossing_years),
        "crossing_levels": list(summary.crossing.crossing_levels),
        "min_gap": summary.crossing.min_gap,
        "soc_flagged": summary.soc_flagged,
    }


def fit_to_dict(fit: FitResult) -> dict:
    return {
        "c": fit.c,
        "intercept_fixed": fit.intercept_fixed,
        "residual_rms": fit.residual_rms,
        "g_star": fit.g_star,
        "n_points": fit.n_points,
    }


def write_json(payload: dict, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


# --- analyze / fit / plotdata ---------------------------------------------

def analyze_profile(profile, config: RunConfig) -> tuple[IndexSeries, CareerSummary]:
    """Window series plus career summary; batch rows go through this too."""
    series = window_series(profile, config.window)
    return series, career_summary(profile, series, config.soc)


def fit_series(series: IndexSeries) -> FitResult:
    """Fit k = 1/2 + c*g over the non-skipped entries of a series."""
    pairs = series.pairs()
    if len(pairs) < 2:
        raise DegenerateFit(f"series has {len(pairs)} usable row(s); need at least 2")
    return fit_k_vs_g(pairs)


def timepanel_csv(series: IndexSeries, soc_mark: float) -> str:
    """Plot-ready year panel; skipped rows keep the year axis contiguous."""
    lines = ["year,g,k,soc_mark"]
    for e in series.entries:
        lines.append(f"{e.central_year},{_fnum(e.g)},{_fnum(e.k)},{_fnum(soc_mark)}")
    return "\n".join(lines) + "\n"


def inset_csv(series: IndexSeries, fit: FitResult) -> str:
    """Plot-ready k-vs-g panel: observed points plus sampled fitted line."""
    lines = ["kind,g,k"]
    for pair in series.pairs():
        lines.append(f"point,{_fnum(pair.g)},{_fnum(pair.k)}")
    for g in np.linspace(0.0, 1.0, INSET_LINE_SAMPLES):
        lines.append(f"line,{_fnum(g)},{_fnum(0.5 + fit.c * g)}")
    return "\n".join(lines) + "\n"


# --- cohort tables ---------------------------------------------------------

COHORT_COLUMNS = [
    "name",
    "tags",
    "n_pubs",
    "n_cites",
    "h_index",
    "g_overall",
    "k_overall",
    "g_yearly_mean",
    "g_yearly_sd",
    "k_yearly_mean",
    "k_yearly_sd",
    "crossing",
    "crossing_years",
    "max_citations",
    "cites_per_paper",
    "peak_ratio",
    "soc_flagged",
]


@dataclass
class BatchResult:
    summaries: list[CareerSummary]
    failures: list[tuple[str, Exception]]
    series_by_name: dict[str, IndexSeries] = field(default_factory=dict)

    @property
    def aggregates(self) -> dict:
        n = len(self.summaries)
        agg: dict = {"n_profiles": n, "n_failures": len(self.failures)}
        if n == 0:
            return agg
        yes = [s.crossing.classification == "Yes" for s in self.summaries]
        flagged = [s.soc_flagged for s in self.summaries]
        agg["fraction_crossing_yes"] = sum(yes) / n
        agg["flag_crossing_agreement"] = sum(y == f for y, f in zip(yes, flagged)) / n
        n_flagged = sum(flagged)
        agg["flagged_success_rate"] = (
            sum(y for y, f in zip(yes, flagged) if f) / n_flagged if n_flagged else None
        )
        return agg


def run_batch(entries: list[ManifestEntry], config: RunConfig) -> BatchResult:
    """Analyze every manifest entry, collecting failures without stopping."""
    summaries, failures, series_by_name = [], [], {}
    for entry in entries:
        try:
            profile = load_profile(entry.path)
            profile.name = entry.name
            profile.tags = list(entry.tags)
            series, summary = analyze_profile(profile, config)
            summaries.append(summary)
            series_by_name[entry.name] = series
        except Exception as exc:  # noqa: BLE001 - reported per profile
            failures.append((entry.name, exc))
    return BatchResult(summaries=summaries, failures=failures, series_by_name=series_by_name)


def _cohort_row(summary: CareerSummary, tags: list[str]) -> dict:
    row = summary_to_dict(summary)
    row["tags"] = ";".join(tags)
    row["crossing_years"] = ";".join(str(y) for y in summary.crossing.crossing_years)
    return row


def cohort_to_csv(batch: BatchResult, tags_by_name: dict[str, list[str]]) -> str:
    lines = [",".join(COHORT_COLUMNS)]
    for s in batch.summaries:
        row = _cohort_row(s, tags_by_name.get(s.name, []))
        cells = []
        for col in COHORT_COLUMNS:
            value = row[col]
            if isinstance(value, bool):
                cells.append("true" if value else "false")
            elif isinstance(value, float):
                cells.append(repr(value))
            else:
                cells.append(str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cohort_to_json(batch: BatchResult, tags_by_name: dict[str, list[str]]) -> dict:
    return {
        "rows": [_cohort_row(s, tags_by_name.get(s.name, [])) for s in batch.summaries],
        "failures": [{"name": n, "error": f"{type(e).__name__}: {e}"} for n, e in batch.failures],
        "aggregates": batch.aggregates,
    }


def cohort_to_markdown(batch: BatchResult, tags_by_name: dict[str, list[str]]) -> str:
    """Two display tables (career indices, crossing proxy), 2-decimal floats."""

    def f2(x: float) -> str:
        return f"{x:.2f}"

    out = ["# Cohort inequality indices", ""]
    out.append(
        "| Researcher | Tags | N_pubs | N_cites | h | g (overall) | k (overall) "
        "| g (yearly av.) | k (yearly av.) | Crossed |"
    )
    out.append("|---|---|---|---|---|---|---|---|---|---|")
    for s in batch.summaries:
        tags = ";".join(tags_by_name.get(s.name, []))
        out.append(
            f"| {s.name} | {tags} | {s.n_pubs} | {s.n_cites} | {s.h_index} "
            f"| {f2(s.g_overall)} | {f2(s.k_overall)} "
            f"| {f2(s.yearly.mean_g)} ± {f2(s.yearly.sd_g)} "
            f"| {f2(s.yearly.mean_k)} ± {f2(s.yearly.sd_k)} "
            f"| {s.crossing.classification} |"
        )
    out += ["", "# Peak-citation ratio indicator", ""]
    out.append("| Researcher | max citations | cites/paper | peak ratio | flagged | Crossed |")
    out.append("|---|---|---|---|---|---|")
    for s in batch.summaries:
        out.append(
            f"| {s.name} | {s.max_citations} | {f2(s.cites_per_paper)} "
            f"| {f2(s.peak_ratio)} | {'yes' if s.soc_flagged else 'no'} "
            f"| {s.crossing.classification} |"
        )
    agg = batch.aggregates
    out += ["", "## Aggregates", ""]
    n_flagged_rate = agg.get("flagged_success_rate")
    out.append(f"- profiles analyzed: {agg.get('n_profiles', 0)} (failures: {agg.get('n_failures', 0)})")
    if "fraction_crossing_yes" in agg:
        out.append(f"- fraction with crossing = Yes: {f2(agg['fraction_crossing_yes'])}")
        out.append(f"- flag/crossing agreement: {f2(agg['flag_crossing_agreement'])}")
        out.append(
            "- crossing rate among flagged: "
            + (f2(n_flagged_rate) if n_flagged_rate is not None else "n/a")
        )
    return "\n".join(out) + "\n"


def write_text(text: str, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
