import sys
from pathlib import Path

import pytest

from condchrom import build

sys.path.insert(0, str(Path(__file__).parent))

# Connected desk-scale instances exercised by the property and acceptance
# suites. All have at most 12 vertices so exact solves stay cheap.
CORPUS_SPECS = [
    "wd:3,1",
    "wd:3,2",
    "wd:3,3",
    "wd:4,1",
    "wd:4,2",
    "cyc:4",
    "cyc:5",
    "cyc:6",
    "cyc:7",
    "kpart:1,2",
    "kpart:2,2",
    "kpart:1,1,1",
    "kpart:1,1,2",
    "L(wd:3,1)",
    "L(wd:3,2)",
    "L(wd:3,3)",
    "L(wd:4,2)",
    "M(cyc:4)",
    "M(cyc:5)",
    "M(fr:1)",
    "M(fr:2)",
    "M(kpart:1,2)",
    "M(kpart:2,2)",
    "M(kpart:1,1,1)",
    "M(kpart:1,1,2)",
]


@pytest.fixture(scope="session")
def corpus():
    return [(spec, build(spec)[0]) for spec in CORPUS_SPECS]
