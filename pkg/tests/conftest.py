import numpy as np
import pytest

from sdiskyline import Dataset

# Sample database with d = 6, n = 10; smaller is better everywhere.
SAMPLE = [
    [7.5, 1.3, 7.5, 4.5, 5.3, 2.1],
    [4.7, 6.7, 6.7, 9.3, 3.8, 5.1],
    [8.4, 9.4, 5.3, 5.8, 6.7, 7.5],
    [5.3, 6.6, 6.7, 6.8, 5.8, 9.3],
    [8.4, 5.2, 5.1, 5.5, 4.1, 7.5],
    [9.1, 7.6, 2.6, 4.7, 7.3, 6.2],
    [5.3, 7.5, 1.9, 5.9, 3.4, 1.8],
    [5.3, 7.5, 6.7, 7.2, 6.3, 8.8],
    [6.7, 7.3, 7.6, 9.7, 5.3, 8.7],
    [7.5, 9.6, 4.8, 8.9, 9.5, 6.5],
]
SAMPLE_SKYLINE = frozenset({0, 1, 3, 4, 5, 6})

# Dimensional indexes of SAMPLE, one column per dimension, as "value:id".
SAMPLE_INDEXES = [
    "4.7:1 5.3:3 5.3:6 5.3:7 6.7:8 7.5:0 7.5:9 8.4:2 8.4:4 9.1:5",
    "1.3:0 5.2:4 6.6:3 6.7:1 7.3:8 7.5:6 7.5:7 7.6:5 9.4:2 9.6:9",
    "1.9:6 2.6:5 4.8:9 5.1:4 5.3:2 6.7:1 6.7:3 6.7:7 7.5:0 7.6:8",
    "4.5:0 4.7:5 5.5:4 5.8:2 5.9:6 6.8:3 7.2:7 8.9:9 9.3:1 9.7:8",
    "3.4:6 3.8:1 4.1:4 5.3:0 5.3:8 5.8:3 6.3:7 6.7:2 7.3:5 9.5:9",
    "1.8:6 2.1:0 5.1:1 6.2:5 6.5:9 7.5:2 7.5:4 8.7:8 8.8:7 9.3:3",
]


@pytest.fixture
def sample():
    return Dataset(SAMPLE)


def random_dataset(rng, n, d, dup=None):
    v = rng.random((n, d))
    if dup:
        v = np.round(v / dup) * dup
    return Dataset(v)


# PASS/FAIL lines recorded by the acceptance suite, echoed after the run.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
