from __future__ import annotations

import dataclasses
import functools
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from ..baselines import SALSA_KEYS, SFS_KEYS, run_bnl, run_oracle, run_salsa, run_sfs
from ..core import Dataset, OrderSpec, SkylineResult, StructuralError
from ..datagen import GenSpec, generate
from ..report import RunReport, now_us
from ..sdi import Switching, run_sdi_rs
from .io import load_dataset, write_members, write_reports

log = logging.getLogger(__name__)

Runner = Callable[[Dataset], "tuple[SkylineResult, RunReport]"]

ALGORITHMS = ("sdi-rs", "bnl", "sfs", "salsa")


class CrossCheckError(RuntimeError):
    pass


@dataclass
class RunConfig:
    input: Optional[Path] = None
    gen: Optional[GenSpec] = None
    algorithms: tuple[str, ...] = ALGORITHMS
    strategies: tuple[Switching, ...] = (Switching.BFS, Switching.DFS)
    order: OrderSpec | str | None = None
    trace: Optional[Path] = None
    out: Optional[Path] = None
    members_out: Optional[Path] = None
    sfs_key: str = "entropy"
    salsa_key: str = "min"

    def __post_init__(self):
        if (self.input is None) == (self.gen is None):
            raise StructuralError("give exactly one of an input file or a generator spec")
        if not self.algorithms:
            raise StructuralError("select at least one algorithm")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise StructuralError(f"unknown algorithm(s): {', '.join(sorted(unknown))}")
        if self.sfs_key not in SFS_KEYS or self.salsa_key not in SALSA_KEYS:
            raise StructuralError(f"unknown sort key: sfs={self.sfs_key!r} salsa={self.salsa_key!r}")
        self.strategies = tuple(Switching(s) for s in self.strategies)
        if "sdi-rs" in self.algorithms and not self.strategies:
            raise StructuralError("sdi-rs needs at least one switching strategy")


@dataclass
class SuiteResult:
    reports: list[RunReport]
    results: dict[str, SkylineResult] = field(default_factory=dict)

    @property
    def members(self) -> frozenset[int]:
        return next(iter(self.results.values())).members


@dataclass
class VerifyReport:
    passed: bool
    oracle_size: int
    mismatches: dict[str, tuple[int, int]]  # label -> (missing, extra)

    def lines(self) -> list[str]:
        out = [f"oracle skyline size {self.oracle_size}"]
        for label, (missing, extra) in self.mismatches.items():
            out.append(f"MISMATCH {label}: {missing} missing, {extra} extra")
        out.append("PASS" if self.passed else "FAIL")
        return out


def runners(config: RunConfig, trace_sink=None) -> list[tuple[str, Runner]]:
    out: list[tuple[str, Runner]] = []
    for name in config.algorithms:
        if name == "sdi-rs":
            for s in config.strategies:
                out.append((f"sdi-rs-{s.value}", _sdi_runner(s, trace_sink)))
        else:
            run = {
                "bnl": run_bnl,
                "sfs": functools.partial(run_sfs, key=config.sfs_key),
                "salsa": functools.partial(run_salsa, key=config.salsa_key),
            }[name]
            out.append((name, run))
    return out


def _sdi_runner(strategy: Switching, trace_sink) -> Runner:
    def run(data: Dataset):
        sink = None
        if trace_sink is not None:
            def sink(rec, _s=strategy.value):
                trace_sink({"strategy": _s, **rec})
        return run_sdi_rs(data, strategy, trace=sink)
    return run


def load(config: RunConfig) -> tuple[Dataset, int]:
    """Dataset plus the microseconds spent reading or generating it."""
    t0 = now_us()
    if config.input is not None:
        data = load_dataset(config.input, config.order)
    else:
        data = generate(config.gen)
    return data, now_us() - t0


def _context(config: RunConfig) -> dict:
    if config.gen is not None:
        return {"distribution": config.gen.distribution.value, "seed": config.gen.seed}
    return {"distribution": "file", "seed": None}


def cross_check(results: dict[str, SkylineResult]) -> None:
    labels = list(results)
    ref = results[labels[0]].members
    bad = [lab for lab in labels[1:] if results[lab].members != ref]
    if bad:
        raise CrossCheckError(
            f"skyline mismatch: {', '.join(bad)} disagree with {labels[0]}"
        )


def run_suite(config: RunConfig, *, extra_runners: Optional[list[tuple[str, Runner]]] = None) -> SuiteResult:
    """Run every selected algorithm on one in-memory dataset and cross-check them."""
    data, load_us = load(config)
    ctx = _context(config)
    trace_file = open(config.trace, "w", encoding="utf-8") if config.trace else None
    sink = None
    if trace_file is not None:
        def sink(rec):
            trace_file.write(json.dumps(rec, sort_keys=True) + "\n")
    try:
        suite = SuiteResult([])
        for label, run in runners(config, sink) + list(extra_runners or []):
            result, report = run(data)
            report = dataclasses.replace(
                report, total_time_us=report.total_time_us + load_us, **ctx
            )
            log.info("%s: m=%d comparisons=%d", label, result.size, report.dominance_comparisons)
            suite.reports.append(report)
            suite.results[label] = result
    finally:
        if trace_file is not None:
            trace_file.close()
    cross_check(suite.results)
    if config.out is not None:
        write_reports(config.out, suite.reports)
    if config.members_out is not None:
        write_members(config.members_out, suite.members)
    return suite


def verify(config: RunConfig, *, runner_overrides: Optional[dict[str, Runner]] = None) -> VerifyReport:
    """Compare every selected algorithm with the all-pairs oracle.

    ``runner_overrides`` swaps in replacement runners by label, which is how
    the harness itself is mutation-tested.
    """
    data, _ = load(config)
    truth = run_oracle(data).members
    mismatches = {}
    for label, run in runners(config):
        run = (runner_overrides or {}).get(label, run)
        got = run(data)[0].members
        if got != truth:
            mismatches[label] = (len(truth - got), len(got - truth))
    return VerifyReport(not mismatches, len(truth), mismatches)
