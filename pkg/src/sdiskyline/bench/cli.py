"""Command-line harness: ``generate``, ``run``, ``verify`` and ``trace``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from ..baselines import SALSA_KEYS, SFS_KEYS, OracleBoundError
from ..core import StructuralError
from ..datagen import Distribution, GenSpec, generate
from ..report import REPORT_COLUMNS
from ..sdi import Switching
from .io import write_dataset
from .suite import ALGORITHMS, CrossCheckError, RunConfig, run_suite, verify


def _add_gen_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--dist", choices=[x.value for x in Distribution], required=required,
                   help="synthetic distribution")
    p.add_argument("-n", type=int, help="cardinality")
    p.add_argument("-d", type=int, help="dimensionality")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dup", type=float, default=None, metavar="Q",
                   help="round values to multiples of Q to force duplicates")


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", type=Path, help="dataset CSV (or use --dist/-n/-d)")
    _add_gen_args(p, required=False)
    p.add_argument("--order", default=None,
                   help="min|max|rankmap:<file>, one for all or comma-separated per dimension")


def _add_algo_args(p: argparse.ArgumentParser, default_strategy: str = "both") -> None:
    p.add_argument("--algo", default="all",
                   help=f"comma-separated subset of {','.join(ALGORITHMS)} or 'all'")
    p.add_argument("--strategy", choices=["bfs", "dfs", "both"], default=default_strategy)
    p.add_argument("--sfs-key", choices=SFS_KEYS, default="entropy", help="SFS presort key")
    p.add_argument("--salsa-key", choices=SALSA_KEYS, default="min",
                   help="SaLSa presort key (min stops early, sum prunes per tuple)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdiskyline", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a synthetic dataset")
    _add_gen_args(g, required=True)
    g.add_argument("--out", type=Path, required=True)

    r = sub.add_parser("run", help="run algorithms and write a report CSV")
    _add_input_args(r)
    _add_algo_args(r)
    r.add_argument("--out", type=Path, help="report CSV (default: stdout)")
    r.add_argument("--members", type=Path, help="write skyline tuple ids here")
    r.add_argument("--trace", type=Path, help="write SDI-RS trace records (JSON lines)")

    v = sub.add_parser("verify", help="check algorithms against the brute-force oracle")
    _add_input_args(v)
    _add_algo_args(v)

    t = sub.add_parser("trace", help="run SDI-RS and write its event trace")
    _add_input_args(t)
    t.add_argument("--strategy", choices=["bfs", "dfs", "both"], default="bfs")
    t.add_argument("--out", type=Path, required=True, help="trace file (JSON lines)")
    return parser


def _gen_spec(args) -> GenSpec:
    if args.n is None or args.d is None:
        raise StructuralError("generated input needs --dist, -n and -d")
    return GenSpec(args.dist, args.n, args.d, args.seed, args.dup)


def _config(args, **kw) -> RunConfig:
    if args.input is not None and args.dist is not None:
        raise StructuralError("give either an input file or --dist, not both")
    if args.input is None and args.dist is None:
        raise StructuralError("no input: give a dataset file or --dist/-n/-d")
    algos = getattr(args, "algo", "all")
    algorithms = ALGORITHMS if algos == "all" else tuple(a.strip() for a in algos.split(","))
    strategies = ("bfs", "dfs") if args.strategy == "both" else (args.strategy,)
    fields = dict(
        input=args.input,
        gen=_gen_spec(args) if args.input is None else None,
        algorithms=tuple(algorithms),
        strategies=tuple(Switching(s) for s in strategies),
        order=args.order,
        sfs_key=getattr(args, "sfs_key", "entropy"),
        salsa_key=getattr(args, "salsa_key", "min"),
    )
    fields.update(kw)
    return RunConfig(**fields)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "generate":
            write_dataset(args.out, generate(_gen_spec(args)))
            return 0
        if args.command == "run":
            suite = run_suite(_config(args, out=args.out, members_out=args.members, trace=args.trace))
            if args.out is None:
                writer = csv.DictWriter(sys.stdout, fieldnames=REPORT_COLUMNS, lineterminator="\n")
                writer.writeheader()
                for rep in suite.reports:
                    writer.writerow(rep.row())
            return 0
        if args.command == "verify":
            rep = verify(_config(args))
            print("\n".join(rep.lines()))
            return 0 if rep.passed else 1
        if args.command == "trace":
            run_suite(_config(args, trace=args.out, algorithms=("sdi-rs",)))
            return 0
    except (StructuralError, OracleBoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
