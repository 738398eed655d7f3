import csv
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def cohort_snapshot():
    """Published career statistics of the 30-researcher reference cohort."""
    with open(DATA_DIR / "cohort_snapshot_2023.csv", encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))
