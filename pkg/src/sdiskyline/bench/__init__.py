"""Benchmark harness: dataset files, algorithm suites, oracle verification, CLI."""

from .io import DatasetParseError, load_dataset, parse_order, write_dataset, write_reports
from .suite import ALGORITHMS, CrossCheckError, RunConfig, SuiteResult, VerifyReport, run_suite, verify

__all__ = [
    "ALGORITHMS",
    "CrossCheckError",
    "DatasetParseError",
    "RunConfig",
    "SuiteResult",
    "VerifyReport",
    "load_dataset",
    "parse_order",
    "run_suite",
    "verify",
    "write_dataset",
    "write_reports",
]
