import argparse
import csv
import json
import logging
import math
import os
import sys
from typing import List, Optional, Sequence

from config import (
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    LEMMA_INSTANCES,
    LOG_FILE,
    RANKING_ALPHAS,
    REPORT_FILE,
    ROOT_TOLERANCE,
    SUMMARY_FILE,
    TREE_ALPHAS,
    UNICYCLIC_ALPHAS,
)
from enumeration import run_request, write_graph6_file
from families import build
from graph_core import max_degree, read_graphs, write_graph6
from indices import chi_alpha, edge_weight_profile, randic_alpha, sum_connectivity
from numerics import alpha1
from runner import VerificationRunner, format_real
from transforms import run_lemma1_suite, run_lemma2_suite
from type.errors import ChiError, FamilyDomainError
from type.family import FamilyKind, FamilySpec
from type.graph import EnumerationRequest, StructureTag
from type.report import Theorem
from type.utils import FAMILY_KIND_MAPPING

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# flags whose value may start with '-' (negative alphas)
VALUE_FLAGS = ("--alpha", "--n", "--delta")

DEFAULT_N_RANGES = {
    Theorem.TREES: range(4, 12),
    Theorem.UNICYCLIC: range(4, 11),
    Theorem.UNICYCLIC_RANKING: range(4, 11),
}
DEFAULT_ALPHAS = {
    Theorem.TREES: TREE_ALPHAS,
    Theorem.UNICYCLIC: UNICYCLIC_ALPHAS,
    Theorem.UNICYCLIC_RANKING: RANKING_ALPHAS,
}


def setup_logging(log_file_path: Optional[str] = None, debug: bool = False) -> str:
    """Root logger writing to standard error and to a log file, as every subcommand expects."""
    log_level = logging.DEBUG if debug else logging.INFO
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    file_path = log_file_path or LOG_FILE
    ensure_parent(file_path)

    # Clear any existing handlers to avoid duplicates
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        handler.close()
    root_logger.handlers.clear()

    file_handler = logging.FileHandler(file_path, mode='w')
    file_handler.setLevel(log_level)
    file_handler.setFormatter(formatter)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)

    root_logger.setLevel(log_level)
    root_logger.addHandler(file_handler)
    root_logger.addHandler(console_handler)
    return file_path


def ensure_parent(path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)


# --- Argument parsing ---

def normalise_argv(argv: Sequence[str]) -> List[str]:
    """Joins `--alpha -1,-0.5` into `--alpha=-1,-0.5` so argparse does not read the value as a flag."""
    result: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in VALUE_FLAGS and index + 1 < len(argv):
            result.append(f"{token}={argv[index + 1]}")
            index += 2
            continue
        result.append(token)
        index += 1
    return result


def parse_alphas(text: str) -> List[float]:
    values = []
    for item in text.split(","):
        item = item.strip()
        if item.lower() == "alpha1":
            values.append(alpha1().value)
            continue
        try:
            value = float(item)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid alpha value: {item!r}")
        if not math.isfinite(value):
            raise argparse.ArgumentTypeError(f"alpha must be finite, got {item!r}")
        values.append(value)
    return values


def parse_int_range(text: str) -> List[int]:
    """Accepts "a", "a..b" (inclusive) or "a,b,c"."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            if high < low:
                raise argparse.ArgumentTypeError(f"empty range: {text!r}")
            return list(range(low, high + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer range: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-file', type=str, default=None, help='Log file path')
    common.add_argument('--debug', default=False, action='store_true', help='Enable debug logging')

    parser = argparse.ArgumentParser(
        description="General sum-connectivity index: computation, extremal families and brute-force certification"
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('index', parents=[common], help='Compute indices of input graphs')
    p.add_argument('input', nargs='?', default=None, help="graph6 or edge-list file, '-' for standard input")
    p.add_argument('--graph6', action='append', default=[], help='Inline graph6 string (repeatable)')
    p.add_argument('--alpha', type=parse_alphas, default=[-0.5], help='Comma-separated exponents')
    p.add_argument('--format', choices=['table', 'json', 'csv'], default='table')

    p = sub.add_parser('construct', parents=[common], help='Print the graph6 of a named family member')
    p.add_argument('family', choices=list(FAMILY_KIND_MAPPING))
    p.add_argument('params', type=int, nargs='*',
                   help='path/cycle: n; T/U: n delta; spider: legs...; cycle_with_paths: cycle_len legs...')
    p.add_argument('--describe', default=False, action='store_true',
                   help='Also print the degree sequence and edge-weight profile')

    p = sub.add_parser('enumerate', parents=[common], help='List trees or unicyclic graphs as graph6')
    p.add_argument('graph_class', choices=['tree', 'trees', 'unicyclic'])
    p.add_argument('n', type=int)
    p.add_argument('--max-degree', type=int, default=None)
    p.add_argument('--ceiling', type=int, default=None)
    p.add_argument('--out', type=str, default=None, help='Write to this file instead of standard output')

    p = sub.add_parser('verify', parents=[common], help='Certify a maximum statement over a grid')
    p.add_argument('theorem', type=int, choices=[1, 2, 3],
                   help='1: trees, 2: unicyclic with fixed delta, 3: unicyclic ranking')
    p.add_argument('--n', type=parse_int_range, default=None, help='e.g. 4..10')
    p.add_argument('--delta', type=parse_int_range, default=None, help='Defaults to 2..n-1')
    p.add_argument('--alpha', type=parse_alphas, default=None, help="Comma-separated, 'alpha1' allowed")
    p.add_argument('--format', choices=['table', 'json', 'csv'], default='table')
    p.add_argument('--out', type=str, default=REPORT_FILE, help='JSON-lines report path')
    p.add_argument('--ceiling', type=int, default=None)
    p.add_argument('--workers', type=int, default=DEFAULT_WORKERS)
    p.add_argument('--timing', default=False, action='store_true', help='Include runtimes in reports')

    p = sub.add_parser('alpha1', parents=[common], help='Locate alpha_1 by bisection')
    p.add_argument('--tolerance', type=float, default=ROOT_TOLERANCE)
    p.add_argument('--format', choices=['table', 'json'], default='table')

    p = sub.add_parser('lemmas', parents=[common], help='Seeded random suites for the two rewrites')
    p.add_argument('--lemma', choices=['1', '2', 'both'], default='both')
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--count', type=int, default=LEMMA_INSTANCES)
    p.add_argument('--alpha', type=parse_alphas, default=None)
    p.add_argument('--format', choices=['table', 'json'], default='table')
    return parser


# --- Subcommands ---

def cmd_index(args, out) -> int:
    graphs = []
    if args.input is not None:
        if args.input == '-':
            text = sys.stdin.read()
        else:
            with open(args.input) as f:
                text = f.read()
        graphs.extend(read_graphs(text))
    for position, code in enumerate(args.graph6, start=1):
        graphs.extend((position, g) for _, g in read_graphs(code))
    if not graphs:
        raise FamilyDomainError("no input graphs: give a file, '-' or --graph6")

    if args.format == 'csv':
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(["line", "graph6", "n", "edges", "max_degree", "alpha", "chi", "randic", "sum_connectivity"])

    for line, g in graphs:
        code = write_graph6(g)
        sc = sum_connectivity(g)
        chi = [(alpha, chi_alpha(g, alpha), randic_alpha(g, alpha)) for alpha in args.alpha]
        if args.format == 'json':
            out.write(json.dumps({
                "line": line,
                "graph6": code,
                "n": g.n,
                "edges": g.edge_count,
                "max_degree": max_degree(g),
                "chi": {repr(a): float(format_real(c)) for a, c, _ in chi},
                "randic": {repr(a): float(format_real(r)) for a, _, r in chi},
                "sum_connectivity": float(format_real(sc)),
            }) + "\n")
        elif args.format == 'csv':
            for alpha, c, r in chi:
                writer.writerow([line, code, g.n, g.edge_count, max_degree(g),
                                 format_real(alpha), format_real(c), format_real(r), format_real(sc)])
        else:
            values = "  ".join(f"chi[{a:g}]={format_real(c)}  R[{a:g}]={format_real(r)}" for a, c, r in chi)
            out.write(f"{code}  n={g.n}  m={g.edge_count}  max_degree={max_degree(g)}  "
                      f"{values}  sum_connectivity={format_real(sc)}\n")
    logger.info(f"Computed indices for {len(graphs)} graph(s)")
    return EXIT_OK


def family_spec(family: str, params: List[int]) -> FamilySpec:
    kind = FamilyKind(family)
    if kind in (FamilyKind.PATH, FamilyKind.CYCLE):
        if len(params) != 1:
            raise FamilyDomainError(f"{family} takes exactly one parameter n, got {params}")
        return FamilySpec(kind, n=params[0])
    if kind in (FamilyKind.T_STAR, FamilyKind.U_STAR):
        if len(params) != 2:
            raise FamilyDomainError(f"{family} takes the parameters n delta, got {params}")
        return FamilySpec(kind, n=params[0], delta=params[1])
    if kind is FamilyKind.SPIDER:
        return FamilySpec(kind, legs=tuple(params))
    if not params:
        raise FamilyDomainError("cycle_with_paths takes cycle_len followed by the leg lengths")
    return FamilySpec(kind, cycle_len=params[0], legs=tuple(params[1:]))


def cmd_construct(args, out) -> int:
    spec = family_spec(args.family, args.params)
    g = build(spec)
    out.write(write_graph6(g) + "\n")
    if args.describe:
        out.write(f"family: {spec.describe()}\n")
        out.write(f"n: {g.n}  edges: {g.edge_count}  max_degree: {max_degree(g)}\n")
        out.write(f"degrees: {sorted(g.degrees(), reverse=True)}\n")
        out.write(f"edge_weight_profile: {list(edge_weight_profile(g))}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    graph_class = StructureTag.UNICYCLIC if args.graph_class == 'unicyclic' else StructureTag.TREE
    request = EnumerationRequest(args.n, graph_class, args.max_degree, args.ceiling)
    stream = run_request(request)
    if args.out:
        ensure_parent(args.out)
        count = write_graph6_file(stream, args.out)
    else:
        count = 0
        for g in stream:
            out.write(write_graph6(g) + "\n")
            count += 1
    print(f"{count} graphs", file=sys.stderr)
    return EXIT_OK


def summary_path_for(report_path: str) -> str:
    """CSV summary written next to the report; never the report file itself."""
    if report_path == REPORT_FILE:
        return SUMMARY_FILE
    root, ext = os.path.splitext(report_path)
    if ext.lower() == ".csv":
        return root + ".summary.csv"
    return root + ".csv"


def cmd_verify(args, out) -> int:
    theorem = Theorem(args.theorem)
    n_range = args.n if args.n is not None else list(DEFAULT_N_RANGES[theorem])
    alphas = args.alpha if args.alpha is not None else list(DEFAULT_ALPHAS[theorem])

    ensure_parent(args.out)
    runner = VerificationRunner(args.out, summary_path_for(args.out), args.workers, args.ceiling, args.timing)
    runner.reset()
    runner.run(theorem, n_range, alphas, args.delta)
    logger.info(f"Collected {len(runner.get_reports())} report(s) for theorem {theorem.value}")

    out.write(runner.render(args.format))
    print(runner.summary_line(), file=sys.stderr)
    return EXIT_OK if runner.all_passed() else EXIT_FAILED


def cmd_alpha1(args, out) -> int:
    result = alpha1(args.tolerance)
    if args.format == 'json':
        out.write(json.dumps({
            "value": result.value,
            "bracket": list(result.bracket),
            "residual": result.residual,
            "iterations": result.iterations,
        }) + "\n")
    else:
        out.write(f"value: {result.value!r}\n")
        out.write(f"bracket: [{result.bracket[0]!r}, {result.bracket[1]!r}]\n")
        out.write(f"residual: {result.residual:.3e}\n")
        out.write(f"iterations: {result.iterations}\n")
    return EXIT_OK


def cmd_lemmas(args, out) -> int:
    suites = []
    if args.lemma in ('1', 'both'):
        suites.append(run_lemma1_suite(args.seed, args.count, args.alpha))
    if args.lemma in ('2', 'both'):
        suites.append(run_lemma2_suite(args.seed, args.count, args.alpha))

    for suite in suites:
        if args.format == 'json':
            out.write(json.dumps({
                "lemma": suite.lemma,
                "seed": suite.seed,
                "instances": suite.instances,
                "alphas": [float(format_real(a)) for a in suite.alphas],
                "checks": suite.checks,
                "min_delta": float(format_real(suite.min_delta)) if suite.min_delta is not None else None,
                "failures": suite.failures,
                "passed": suite.passed,
            }) + "\n")
        else:
            out.write(f"{suite.lemma}: {'passed' if suite.passed else 'FAILED'}  seed={suite.seed}  "
                      f"instances={suite.instances}  checks={suite.checks}  "
                      f"min_delta={format_real(suite.min_delta, 6)}  failures={len(suite.failures)}\n")
    return EXIT_OK if all(suite.passed for suite in suites) else EXIT_FAILED


COMMANDS = {
    'index': cmd_index,
    'construct': cmd_construct,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'alpha1': cmd_alpha1,
    'lemmas': cmd_lemmas,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Entry point; returns the process exit code (0 success, 1 verification failure, 2 input error)."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(normalise_argv(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        setup_logging(args.log_file, args.debug)
        logger.debug(f"Running {args.command} with {vars(args)}")
        return COMMANDS[args.command](args, out)
    except ChiError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nExiting...", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
