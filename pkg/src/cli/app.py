"""
Command-line entry point.

    arbor fk <graph> --k K [--exact | --bound-only]
    arbor cover <graph> --k K --method tw2|tw|td|acyclic|main [--t T] [--d D] [--route R]
    arbor stats <graph> [--k-max K]
    arbor gen <family> [params ...] [--out FILE] [--check]
    arbor verify <graph> <cover.json>

<graph> is an edge-list file or a family spec such as @wheel:7.
Exit codes: 0 ok, 2 input, 3 precondition, 4 budget, 5 verification.
"""
import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from ..config import load_config
from ..enhanced_logging import setup_enhanced_logging
from ..families.registry import family_names
from ..logger import get_logger
from ..acyclic.pipeline import ROUTES
from .commands import METHODS, cmd_cover, cmd_fk, cmd_gen, cmd_stats, cmd_verify

logger = get_logger(__name__)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive, metavar="MS",
                        help="wall-clock budget per exact search (default: $ARBOR_BUDGET_MS, else unlimited)")
    common.add_argument("--max-nodes", type=_positive, metavar="N", help="search-node budget per exact search")
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--log-level", default=None, help="console log level (default: $ARBOR_LOG_LEVEL)")
    common.add_argument("--env-file", default=".env", help="optional .env file with ARBOR_* settings")

    parser = argparse.ArgumentParser(
        prog="arbor",
        description="k-strong induced arboricity: exact values and certified forest covers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fk = sub.add_parser("fk", parents=[common], help="exact f_k with an optimal cover")
    fk.add_argument("input", help="edge-list file or @family:params")
    fk.add_argument("--k", type=_positive, required=True)
    mode = fk.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True, help="exact search (default)")
    mode.add_argument("--bound-only", action="store_true", help="conflict lower bound and greedy upper bound only")
    fk.add_argument("--out", help="write the cover JSON here")
    fk.add_argument("--dot", help="write Graphviz source with the cover's forests here")
    fk.set_defaults(handler=cmd_fk)

    cover = sub.add_parser("cover", parents=[common], help="constructive cover with its bound")
    cover.add_argument("input", help="edge-list file or @family:params")
    cover.add_argument("--k", type=_positive, required=True)
    cover.add_argument("--method", choices=METHODS, required=True)
    cover.add_argument("--t", type=_positive, help="tree-width bound for --method tw (default: exact tree-width)")
    cover.add_argument("--d", type=_positive, help="depth bound for --method td (default: exact tree-depth)")
    cover.add_argument("--levels", action="store_true", help="td: compose over (k+1)-subsets of tree levels")
    cover.add_argument("--route", choices=ROUTES, default="best", help="acyclic, k=2: matching route")
    cover.add_argument("--no-compare", dest="compare", action="store_false",
                       help="skip the exact f_k comparison on small graphs")
    cover.add_argument("--out", help="write the cover JSON here")
    cover.add_argument("--dot", help="write Graphviz source with the cover's forests here")
    cover.set_defaults(handler=cmd_cover)

    stats = sub.add_parser("stats", parents=[common], help="tw, td, χ_acyc, a', twin edges, k-valid profile")
    stats.add_argument("input", help="edge-list file or @family:params")
    stats.add_argument("--k-max", type=_positive, default=8, help="largest k in the k-valid profile")
    stats.set_defaults(handler=cmd_stats)

    gen = sub.add_parser("gen", parents=[common], help="write a family instance as an edge list")
    gen.add_argument("family", choices=family_names())
    gen.add_argument("params", nargs="*", help="integer parameters")
    gen.add_argument("--out", help="output file (default: stdout)")
    gen.add_argument("--dot", help="write Graphviz source with the family's reference cover here")
    gen.add_argument("--check", action="store_true", help="re-check the family's claims with the exact solvers")
    gen.set_defaults(handler=cmd_gen)

    verify = sub.add_parser("verify", parents=[common], help="check a cover JSON against a graph")
    verify.add_argument("input", help="edge-list file or @family:params")
    verify.add_argument("cover", help="cover JSON file")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(args.env_file)
    except (ValidationError, ValueError) as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return 2
    config = config.with_overrides(budget_ms=args.budget, max_nodes=args.max_nodes)

    setup_enhanced_logging(
        log_dir=config.logging.log_dir,
        console_level=args.log_level or config.logging.level,
        file_level="DEBUG",
        structured=config.logging.structured,
    )
    args.config = config
    logger.debug(f"command {args.command} with {vars(args)}")
    return args.handler(args)
