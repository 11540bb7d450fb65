"""Session-wide fixtures shared across test modules."""

import time

import pytest

from stabdb.db import build_records
from stabdb.search import enumerate_classes


@pytest.fixture(scope="session")
def full_enumeration():
    """Classes, database records, and wall seconds for every n up to 6.

    Computed once per session; the per-n timing covers enumeration plus
    invariant computation, which is what the runtime budgets constrain.
    """
    data = {}
    for n in range(1, 7):
        start = time.perf_counter()
        classes = enumerate_classes(n)
        records = build_records(classes)
        data[n] = {
            "classes": classes,
            "records": records,
            "seconds": time.perf_counter() - start,
        }
    return data
