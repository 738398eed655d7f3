"""File-based profile ingestion, canonical export, and synthetic profiles.

Two on-disk profile formats are accepted:

* CSV with the exact header ``pub_id,year,citations`` (UTF-8, LF or CRLF,
  no quoting; pub_id must not contain commas);
* a JSON document with ``schema_version`` (= 1), ``name``, ``tags`` and a
  ``publications`` array of ``{id, year, citations}`` objects.

A batch manifest is a JSON array of ``{name, path, tags}`` records whose
paths resolve relative to the manifest file.  There is deliberately no
network ingestion; snapshots must be exported to files first.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadSpec, ParseError, SchemaError, ValidationError
from .profiles import Publication, ResearcherProfile

SCHEMA_VERSION = 1
CSV_HEADER = ["pub_id", "year", "citations"]

#: Hard ceiling on synthetic heavy-tail draws, to keep counts integral.
SYNTH_CITATION_CAP = 10**9


def load_profile(path) -> ResearcherProfile:
    """Load a researcher profile from a CSV or JSON file.

    The format is chosen by file extension.  Rows are validated (4-digit
    year, nonnegative integer citations, unique pub_id) and the resulting
    profile is in canonical (year, pub_id) order.
    """
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"profile file not found: {path}")
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return _load_csv(path)
    if suffix == ".json":
        return _load_json(path)
    raise ParseError(f"unrecognized profile format {suffix!r} (expected .csv or .json): {path}")


def _parse_int(text: str, what: str, line: int) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"{what} {text!r} is not an integer", line=line) from None


def _check_year(year: int, line: int | None = None) -> int:
    if not 1000 <= year <= 9999:
        msg = f"year {year} is not a 4-digit calendar year"
        raise ValidationError(msg if line is None else f"line {line}: {msg}")
    return year


def _check_citations(citations: int, line: int | None = None) -> int:
    if citations < 0:
        msg = f"citations must be nonnegative, got {citations}"
        raise ValidationError(msg if line is None else f"line {line}: {msg}")
    return citations


def _load_csv(path: Path) -> ResearcherProfile:
    pubs = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file", line=1) from None
        if header != CSV_HEADER:
            raise ParseError(
                f"header must be exactly {','.join(CSV_HEADER)!r}, got {','.join(header)!r}",
                line=1,
            )
        for row in reader:
            if not row:
                continue
            line = reader.line_num
            if len(row) != 3:
                raise ParseError(f"expected 3 fields, got {len(row)}", line=line)
            pub_id = row[0].strip()
            if not pub_id:
                raise ParseError("empty pub_id", line=line)
            year = _check_year(_parse_int(row[1], "year", line), line)
            citations = _check_citations(_parse_int(row[2], "citations", line), line)
            pubs.append(Publication(pub_id=pub_id, year=year, citations=citations))
    return ResearcherProfile(name=path.stem, tags=[], publications=pubs)


def _load_json(path: Path) -> ResearcherProfile:
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("profile document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION})")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ValidationError("profile 'name' must be a nonempty string")
    tags = doc.get("tags", [])
    if not isinstance(tags, list) or any(not isinstance(t, str) for t in tags):
        raise ValidationError("profile 'tags' must be an array of strings")
    raw_pubs = doc.get("publications")
    if not isinstance(raw_pubs, list):
        raise ParseError("profile 'publications' must be an array")
    pubs = []
    for i, rec in enumerate(raw_pubs):
        if not isinstance(rec, dict) or not {"id", "year", "citations"} <= rec.keys():
            raise ParseError(f"publications[{i}] must have id, year and citations")
        pub_id, year, citations = rec["id"], rec["year"], rec["citations"]
        if not isinstance(pub_id, str) or not pub_id:
            raise ValidationError(f"publications[{i}]: id must be a nonempty string")
        if not isinstance(year, int) or not isinstance(citations, int):
            raise ValidationError(f"publications[{i}]: year and citations must be integers")
        _check_year(year)
        _check_citations(citations)
        pubs.append(Publication(pub_id=pub_id, year=year, citations=citations))
    return ResearcherProfile(name=name, tags=list(tags), publications=pubs)


def write_profile(profile: ResearcherProfile, path, fmt: str = "json") -> Path:
    """Write a profile in canonical form; reloading yields an equal profile."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for pub in profile.publications:
                writer.writerow([pub.pub_id, pub.year, pub.citations])
    elif fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "name": profile.name,
            "tags": list(profile.tags),
            "publications": [
                {"id": p.pub_id, "year": p.year, "citations": p.citations}
                for p in profile.publications
            ],
        }
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    else:
        raise ValidationError(f"unknown profile format {fmt!r} (expected csv or json)")
    return path


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    path: Path
    tags: tuple[str, ...] = ()


def load_manifest(path) -> list[ManifestEntry]:
    """Load a cohort manifest; entry paths resolve relative to the manifest."""
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"manifest file not found: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, list):
        raise ParseError("manifest must be a JSON array of {name, path, tags}")
    entries = []
    for i, rec in enumerate(doc):
        if not isinstance(rec, dict) or "name" not in rec or "path" not in rec:
            raise ParseError(f"manifest[{i}] must have name and path")
        tags = rec.get("tags", [])
        if not isinstance(tags, list) or any(not isinstance(t, str) for t in tags):
            raise ValidationError(f"manifest[{i}]: tags must be an array of strings")
        entries.append(
            ManifestEntry(
                name=str(rec["name"]),
                path=(path.parent / rec["path"]).resolve(),
                tags=tuple(tags),
            )
        )
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise ValidationError("manifest names must be unique")
    return entries


@dataclass(frozen=True)
class SynthSpec:
    """Recipe for a deterministic synthetic profile.

    Models: ``powerlaw`` draws counts with survival function proportional
    to c^(1 - exponent); ``uniform`` draws integers in [0, value];
    ``equal`` gives every paper exactly ``value`` citations.
    """

    model: str
    n_papers: int
    exponent: float = 2.5
    span_years: tuple[int, int] = (1990, 2020)
    seed: int = 0
    value: int = 100

    def __post_init__(self):
        if self.model not in ("powerlaw", "uniform", "equal"):
            raise BadSpec(f"unknown model {self.model!r}")
        if self.n_papers < 1:
            raise BadSpec("n_papers must be >= 1")
        if self.model == "powerlaw" and self.exponent <= 1.0:
            raise BadSpec("powerlaw exponent must be > 1")
        if self.span_years[0] > self.span_years[1]:
            raise BadSpec("span_years must satisfy first <= last")
        if self.value < 0:
            raise BadSpec("value must be nonnegative")


def synth_profile(spec: SynthSpec, name: str | None = None) -> ResearcherProfile:
    """Generate a synthetic profile; identical specs yield identical profiles."""
    rng = np.random.default_rng(spec.seed)
    first, last = spec.span_years
    years = rng.integers(first, last + 1, size=spec.n_papers)
    if spec.model == "equal":
        counts = np.full(spec.n_papers, spec.value)
    elif spec.model == "uniform":
        counts = rng.integers(0, spec.value + 1, size=spec.n_papers)
    else:
        u = rng.random(spec.n_papers)
        counts = np.minimum(np.floor(u ** (-1.0 / (spec.exponent - 1.0))), SYNTH_CITATION_CAP)
    width = len(str(spec.n_papers))
    pubs = [
        Publication(pub_id=f"p{i + 1:0{width}d}", year=int(years[i]), citations=int(counts[i]))
        for i in range(spec.n_papers)
    ]
    if name is None:
        name = f"{spec.model}-n{spec.n_papers}-seed{spec.seed}"
    return ResearcherProfile(name=name, tags=["synthetic", spec.model], publications=pubs)
