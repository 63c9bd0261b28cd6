"""Dataset and report files.

Datasets are header-less CSV, one tuple per row, UTF-8, LF line endings.
Reports are CSV with a fixed header (see ``REPORT_COLUMNS``).
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Optional, Sequence

from ..core import Dataset, Direction, OrderSpec, StructuralError
from ..report import REPORT_COLUMNS, RunReport


class DatasetParseError(StructuralError):
    def __init__(self, path, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.line = line


def load_rank_map(path: str | Path) -> dict[str, int]:
    """Read a JSON object mapping category tokens to integer ranks (0 is best)."""
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    if not isinstance(raw, dict) or not all(isinstance(v, int) for v in raw.values()):
        raise StructuralError(f"{path}: rank map must be a JSON object of integer ranks")
    return {str(k): int(v) for k, v in raw.items()}


def parse_order(text: Optional[str], d: int) -> OrderSpec:
    """Build an OrderSpec from ``min``, ``max`` or ``rankmap:<file>`` tokens.

    One token applies to every dimension; otherwise give exactly ``d``
    comma-separated tokens.
    """
    if not text:
        return OrderSpec.uniform(d)
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) == 1:
        tokens = tokens * d
    if len(tokens) != d:
        raise StructuralError(f"--order names {len(tokens)} dimensions, data has {d}")
    directions, rank_maps = [], {}
    for i, tok in enumerate(tokens):
        if tok.startswith("rankmap:"):
            rank_maps[i] = load_rank_map(tok[len("rankmap:"):])
            directions.append(Direction.MIN)
        elif tok in ("min", "max"):
            directions.append(Direction(tok))
        else:
            raise StructuralError(f"bad order token {tok!r}; use min, max or rankmap:<file>")
    return OrderSpec(tuple(directions), rank_maps)


def _first_width(path: Path) -> int:
    with open(path, newline="", encoding="utf-8") as f:
        for row in csv.reader(f):
            return len(row)
    raise DatasetParseError(path, 1, "empty dataset file")


def load_dataset(path: str | Path, order: OrderSpec | str | None = None) -> Dataset:
    """Parse a dataset file; tuple ids follow row order starting at 0.

    ``order`` may be an OrderSpec or an ``--order`` string.
    """
    path = Path(path)
    if order is None or isinstance(order, str):
        order = parse_order(order, _first_width(path))
    d = order.d
    rows: list[list[float]] = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        for row in reader:
            line = reader.line_num
            if len(row) != d:
                what = "blank line" if not row else f"{len(row)} values, expected {d}"
                raise DatasetParseError(path, line, what)
            try:
                rows.append([order.resolve(i, tok.strip()) for i, tok in enumerate(row)])
            except ValueError as exc:
                raise DatasetParseError(path, line, str(exc)) from None
    if not rows:
        raise DatasetParseError(path, 1, "empty dataset file")
    return Dataset(rows, order)


def write_dataset(path: str | Path, data: Dataset | Sequence[Sequence[float]]) -> None:
    values = data.values if isinstance(data, Dataset) else data
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for row in values:
            f.write(",".join(repr(float(v)) for v in row))
            f.write("\n")


def write_reports(path: str | Path, reports: Iterable[RunReport]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow(r.row())


def write_members(path: str | Path, members: Iterable[int]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for t in sorted(members):
            f.write(f"{t}\n")
