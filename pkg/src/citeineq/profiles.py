"""Researcher profiles: named publication lists with per-paper citation counts.

Citation counts are present-day totals attributed to the publication year;
no accrual history is modelled.  Profiles canonicalize on construction:
publications are validated and sorted by (year, pub_id) so that every
downstream result is independent of input file order.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field

from .errors import EmptyProfile, ValidationError

MIN_YEAR = 1800


def _max_year() -> int:
    return datetime.date.today().year


@dataclass(frozen=True)
class Publication:
    pub_id: str
    year: int
    citations: int


@dataclass
class ResearcherProfile:
    name: str
    tags: list[str] = field(default_factory=list)
    publications: list[Publication] = field(default_factory=list)

    def __post_init__(self):
        if not self.publications:
            raise EmptyProfile(f"profile {self.name!r} has no publications")
        max_year = _max_year()
        seen: set[str] = set()
        for pub in self.publications:
            if not isinstance(pub.year, int) or not MIN_YEAR <= pub.year <= max_year:
                raise ValidationError(
                    f"publication {pub.pub_id!r}: year {pub.year!r} outside "
                    f"[{MIN_YEAR}, {max_year}]"
                )
            if not isinstance(pub.citations, int) or pub.citations < 0:
                raise ValidationError(
                    f"publication {pub.pub_id!r}: citations must be a "
                    f"nonnegative integer, got {pub.citations!r}"
                )
            if pub.pub_id in seen:
                raise ValidationError(f"duplicate pub_id {pub.pub_id!r}")
            seen.add(pub.pub_id)
        self.publications.sort(key=lambda p: (p.year, p.pub_id))

    @property
    def first_year(self) -> int:
        return self.publications[0].year

    @property
    def citations(self) -> list[int]:
        """All citation counts, in canonical publication order."""
        return [p.citations for p in self.publications]

    def citations_in(self, start_year: int, end_year: int) -> list[int]:
        """Citation counts of publications dated within [start, end]."""
        return [p.citations for p in self.publications if start_year <= p.year <= end_year]
