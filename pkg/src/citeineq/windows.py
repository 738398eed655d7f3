"""Sliding-window (g, k) series over a researcher's publication record.

Fixed-width year windows start at the first publication year and advance
by a fixed stride until the window's last year passes the configured end
year.  Each window that holds enough publications and at least one citation
contributes a (gini, kolkata) entry at the window's central year; every
other window is kept as a skipped entry so the time axis stays contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AllSkipped, EmptyProfile, NoWindows, ValidationError
from .lorenz import IndexPair, build_lorenz, gini, kolkata
from .profiles import ResearcherProfile

SKIP_NO_PUBS = "no_publications"
SKIP_TOO_FEW = "too_few_publications"
SKIP_ZERO_CITES = "zero_citations"


@dataclass(frozen=True)
class WindowConfig:
    """Window geometry; defaults give 5-year windows sliding by one year."""

    width_years: int = 5
    stride_years: int = 1
    end_year: int = 2022
    min_pubs: int = 2

    def __post_init__(self):
        for name in ("width_years", "stride_years", "min_pubs"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be a positive integer")


@dataclass(frozen=True)
class WindowEntry:
    """One window of the series; g and k are None when skipped."""

    central_year: int
    g: float | None
    k: float | None
    n_pubs: int
    n_cites: int
    skipped: bool
    reason: str | None = None


@dataclass
class IndexSeries:
    """Ordered per-window entries; central years ascend by the stride."""

    entries: list[WindowEntry] = field(default_factory=list)

    def valid_entries(self) -> list[WindowEntry]:
        return [e for e in self.entries if not e.skipped]

    def pairs(self) -> list[IndexPair]:
        """The (g, k) pairs of the non-skipped entries, in year order."""
        return [IndexPair(e.g, e.k) for e in self.valid_entries()]


@dataclass(frozen=True)
class YearlyAverage:
    """Mean and population standard deviation of g and k over valid windows."""

    mean_g: float
    sd_g: float
    mean_k: float
    sd_k: float
    n_windows: int


def window_series(profile: ResearcherProfile, config: WindowConfig = WindowConfig()) -> IndexSeries:
    """Compute the per-window (g, k) series of a profile.

    Windows [y, y + width - 1] start at the first publication year and
    step by the stride while they end at or before ``config.end_year``.
    A window is skipped (with a reason) when it holds no publications,
    fewer than ``min_pubs`` publications, or zero total citations.

    Raises
    ------
    EmptyProfile
        If the profile has no publications.
    NoWindows
        If even the first window would end past ``config.end_year``.
    """
    if not profile.publications:
        raise EmptyProfile(f"profile {profile.name!r} has no publications")
    first = profile.first_year
    width, stride = config.width_years, config.stride_years
    if first + width - 1 > config.end_year:
        raise NoWindows(
            f"first window [{first}, {first + width - 1}] ends past {config.end_year}"
        )

    by_year: dict[int, list[int]] = {}
    for pub in profile.publications:
        by_year.setdefault(pub.year, []).append(pub.citations)

    entries = []
    for start in range(first, config.end_year - width + 2, stride):
        cites = [c for y in range(start, start + width) for c in by_year.get(y, [])]
        central = start + width // 2
        n_pubs = len(cites)
        n_cites = sum(cites)
        if n_pubs == 0:
            entry = WindowEntry(central, None, None, 0, 0, True, SKIP_NO_PUBS)
        elif n_pubs < config.min_pubs:
            entry = WindowEntry(central, None, None, n_pubs, n_cites, True, SKIP_TOO_FEW)
        elif n_cites == 0:
            entry = WindowEntry(central, None, None, n_pubs, 0, True, SKIP_ZERO_CITES)
        else:
            curve = build_lorenz(cites)
            entry = WindowEntry(central, gini(curve), kolkata(curve), n_pubs, n_cites, False)
        entries.append(entry)
    return IndexSeries(entries=entries)


def yearly_average(series: IndexSeries) -> YearlyAverage:
    """Mean +- population sd of g and k over the non-skipped entries.

    Raises
    ------
    AllSkipped
        If the series has no non-skipped entry.
    """
    valid = series.valid_entries()
    if not valid:
        raise AllSkipped("every window in the series was skipped")
    g = np.array([e.g for e in valid])
    k = np.array([e.k for e in valid])
    return YearlyAverage(
        mean_g=float(np.mean(g)),
        sd_g=float(np.std(g)),
        mean_k=float(np.mean(k)),
        sd_k=float(np.std(k)),
        n_windows=len(valid),
    )
