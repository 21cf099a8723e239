#!/usr/bin/env python3
"""dpham CLI - Hamilton cycles in double generalized Petersen graphs.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
3 invalid a-sequence, 4 internal construction-integrity failure.
"""
import argparse
import logging
import random
import sys
from pathlib import Path
from typing import Optional

from core import (
    ASequenceError,
    CertificateSyntaxError,
    CertificateVerificationError,
    ConstructionIntegrityError,
    ParameterError,
    make_graph,
    parse_label,
)
from construct import build_cycle, construction_name, random_a_sequence
from formats import decode_certificate, encode_certificate, encode_dot, encode_edge_list
from oracle import SearchBudget
from services.settings import default_db_path, default_workers, load_settings
from services.sweep_service import SweepService, SweepSpec, format_failures, format_summary
from verify import check_proof_partitions, verify_hamilton, verify_serial

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_A_SEQUENCE = 3
EXIT_INTEGRITY = 4

logger = logging.getLogger("dpham")


def _parse_int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def _user_a_sequence(args: argparse.Namespace, g) -> Optional[list[int]]:
    if args.a is None and args.random_a is None:
        return None
    if not g.params.is_odd:
        raise ASequenceError(f"{g}: a-sequences apply to odd n only")
    if args.a is not None:
        return args.a
    return random_a_sequence(g.params, random.Random(args.random_a)).as_list()


def cmd_cycle(args: argparse.Namespace) -> int:
    g = make_graph(args.n, args.t)
    cycle, a = build_cycle(g, _user_a_sequence(args, g))
    report = verify_serial(g, cycle.serial_ids())
    if not report.ok:
        raise ConstructionIntegrityError(f"{g}: constructed cycle fails verification: {report.summary()}")
    if args.format == "list":
        print(" ".join(cycle.labels()))
    elif args.format == "serial":
        print(" ".join(str(sid) for sid in cycle.serial_ids()))
    elif args.format == "cert":
        sys.stdout.write(encode_certificate(cycle, construction_name(g), a))
    else:
        sys.stdout.write(encode_dot(g, cycle))
    return EXIT_OK


def _verify_label_list(args: argparse.Namespace, text: str) -> int:
    """A whitespace-separated label list, as printed by `cycle --format list`."""
    if args.n is None or args.t is None:
        print("A label list needs --n and --t.", file=sys.stderr)
        return EXIT_USAGE
    g = make_graph(args.n, args.t)
    seq = [parse_label(token, g.n) for token in text.split()]
    report = verify_hamilton(g, seq)
    if not report.ok:
        print(f"Cycle rejected for {g}")
        print(report.summary())
        return EXIT_VERIFY_FAILED
    print(f"ok: Hamilton cycle of {g}, {len(seq)} vertices")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"Cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not text.strip():
        print(f"{path} is empty.", file=sys.stderr)
        return EXIT_USAGE
    if not text.lstrip().startswith("{"):
        return _verify_label_list(args, text)
    try:
        cert = decode_certificate(text)
    except CertificateSyntaxError as exc:
        print(f"Ill-formed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateVerificationError as exc:
        print(f"Certificate rejected: {exc}")
        print(exc.report.summary())
        return EXIT_VERIFY_FAILED
    print(f"ok: Hamilton cycle of DP({cert.n},{cert.t}) via {cert.construction.value}, {len(cert.cycle)} vertices")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    settings = load_settings()
    defaults = settings["sweep"]
    oracle_defaults = settings["oracle"]
    t_values = None
    if args.t:
        t_values = tuple(args.t)
    elif defaults.get("t", "all") != "all":
        t_values = tuple(defaults["t"])
    spec = SweepSpec(
        n_min=args.n_min if args.n_min is not None else defaults["n_min"],
        n_max=args.n_max if args.n_max is not None else defaults["n_max"],
        t_values=t_values,
        workers=args.workers if args.workers is not None else default_workers(settings),
        oracle=args.oracle or bool(defaults.get("oracle", False)),
        budget=SearchBudget(
            max_vertices=args.max_vertices or oracle_defaults["max_vertices"],
            max_steps=args.max_steps or oracle_defaults["max_steps"],
        ),
        partitions=args.partitions,
    )
    db_path = None
    if args.db:
        db_path = Path(args.db)
    elif args.record:
        db_path = default_db_path(settings)
    summary, run_id = SweepService(db_path).run(spec)
    sys.stdout.write(format_summary(summary))
    if run_id is not None:
        print(f"recorded as run {run_id}")
    return EXIT_OK if summary.ok else EXIT_VERIFY_FAILED


def cmd_export(args: argparse.Namespace) -> int:
    g = make_graph(args.n, args.t)
    if args.format == "edges":
        sys.stdout.write(encode_edge_list(g))
    else:
        sys.stdout.write(encode_dot(g))
    return EXIT_OK


def cmd_proof(args: argparse.Namespace) -> int:
    g = make_graph(args.n, args.t)
    if not g.params.is_odd:
        print(f"{g}: the inner-cycle partition argument applies to odd n only.", file=sys.stderr)
        return EXIT_USAGE
    _, a = build_cycle(g, _user_a_sequence(args, g))
    report = check_proof_partitions(g, a)
    print(f"{g}, gcd {g.params.g}, p {g.params.p}, a = {a.as_list()}")
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _run_line(run) -> str:
    status = "ok" if run.failed == 0 else f"{run.failed} failed"
    oracle = " +oracle" if run.oracle else ""
    return (
        f"[{run.id}] {run.created_at} n in [{run.n_min}, {run.n_max}] t {run.t_policy}{oracle}: "
        f"{run.passed}/{run.total} passed ({status})"
    )


def cmd_history(args: argparse.Namespace) -> int:
    db_path = Path(args.db) if args.db else default_db_path(load_settings())
    service = SweepService(db_path)
    if args.run is not None:
        run, failed = service.run_details(args.run)
        if run is None:
            print(f"No recorded sweep with id {args.run}.", file=sys.stderr)
            return EXIT_USAGE
        print(_run_line(run))
        lines = format_failures(failed)
        print("\n".join(lines) if lines else "all pairs passed")
        return EXIT_OK
    runs = service.history(limit=args.limit)
    if not runs:
        print("No recorded sweeps.")
        return EXIT_OK
    for run in runs:
        print(_run_line(run))
    return EXIT_OK


def _add_a_options(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--a", type=_parse_int_list, help="Comma-separated a-sequence a_0,...,a_2k (odd n).")
    group.add_argument("--random-a", type=int, metavar="SEED", help="Use a random valid a-sequence (odd n).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpham", description="Hamilton cycles in double generalized Petersen graphs.")
    parser.add_argument("--log-level", default="WARNING", help="Logging level for stderr diagnostics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cycle = sub.add_parser("cycle", help="Construct the Hamilton cycle of DP(n,t).")
    p_cycle.add_argument("n", type=int)
    p_cycle.add_argument("t", type=int)
    p_cycle.add_argument("--format", choices=["list", "serial", "cert", "dot"], default="list")
    _add_a_options(p_cycle)
    p_cycle.set_defaults(func=cmd_cycle)

    p_verify = sub.add_parser("verify", help="Verify a cycle certificate file.")
    p_verify.add_argument("file", help="Certificate path, or a file of vertex labels.")
    p_verify.add_argument("--n", type=int, default=None, help="n for a label-list file.")
    p_verify.add_argument("--t", type=int, default=None, help="t for a label-list file.")
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="Construct and verify every DP(n,t) in a range.")
    p_sweep.add_argument("--n-min", type=int, default=None, help="Smallest n (default from settings).")
    p_sweep.add_argument("--n-max", type=int, default=None, help="Largest n (default from settings).")
    p_sweep.add_argument("--t", type=_parse_int_list, default=None, help="Explicit t values; default all valid t.")
    p_sweep.add_argument("--workers", type=int, default=None, help="Parallel worker processes.")
    p_sweep.add_argument("--oracle", action="store_true", help="Cross-check small graphs by brute force.")
    p_sweep.add_argument("--max-vertices", type=int, default=None, help="Oracle cap on 4n.")
    p_sweep.add_argument("--max-steps", type=int, default=None, help="Oracle cap on search steps.")
    p_sweep.add_argument("--partitions", action="store_true", help="Also run the odd-n partition checks and the path-level cross-check.")
    p_sweep.add_argument("--db", default="", help="Record the run in this sqlite ledger.")
    p_sweep.add_argument("--record", action="store_true", help="Record the run in the default ledger.")
    p_sweep.set_defaults(func=cmd_sweep)

    p_export = sub.add_parser("export", help="Export DP(n,t) without a cycle.")
    p_export.add_argument("n", type=int)
    p_export.add_argument("t", type=int)
    p_export.add_argument("--format", choices=["edges", "dot"], default="edges")
    p_export.set_defaults(func=cmd_export)

    p_proof = sub.add_parser("proof", help="Run the odd-n coverage and inner-cycle checks.")
    p_proof.add_argument("n", type=int)
    p_proof.add_argument("t", type=int)
    _add_a_options(p_proof)
    p_proof.set_defaults(func=cmd_proof)

    p_history = sub.add_parser("history", help="List recorded sweeps.")
    p_history.add_argument("--db", default="", help="Ledger path (default from settings or DPHAM_DB).")
    p_history.add_argument("--limit", type=int, default=20, help="Max runs.")
    p_history.add_argument("--run", type=int, default=None, metavar="ID", help="Show one run and its failed pairs.")
    p_history.set_defaults(func=cmd_history)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ASequenceError as exc:
        print(f"Invalid a-sequence: {exc}", file=sys.stderr)
        return EXIT_BAD_A_SEQUENCE
    except ParameterError as exc:
        print(f"Invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionIntegrityError as exc:
        print(f"Internal construction failure (this is a bug): {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
