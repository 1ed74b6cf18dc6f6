"""
Command-line front end for critical pairs of compositions.

    python hookpairs.py construct 0,3,5,6,6,1 --node 4,4
    python hookpairs.py verify 9,8,8,7,4,3,3,2,2 0,2,2,1,7,6,6,5,5,3,3,3,3 --factor 4,3 --json
    python hookpairs.py scan uniqueness --max-weight 6 --max-length 3 --partitions
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import argparse

from loguru import logger

from src.core import YAMLConfig, yaml_utils
from src.misc import setup_logger
from src.solver import VERBS, Command, dispatch

GLOBAL_FLAGS = ("config", "update", "json", "log_level", "verb")
DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "configs", "hookpairs.yml")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookpairs", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("-c", "--config", type=str, default=DEFAULT_CONFIG)
    parser.add_argument(
        "-u", "--update", action="append", metavar="KEY=VALUE", help="override a yaml entry, repeatable: -u closure_depth=3"
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--log-level", type=str, help="loguru level (DEBUG, INFO, WARNING, ...)")

    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("hooks", help="diagram and hook-length factors")
    p.add_argument("alpha")
    p.add_argument("--node", help="i,j")
    p.add_argument("--t", help="a,b for t = aκ+b (default κ+1)")

    p = verbs.add_parser("construct", help="build a critical partner from a hook factor")
    p.add_argument("alpha")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--node", help="i,j")
    group.add_argument("--factor", help="m,n; runs every node with a proportional factor")

    p = verbs.add_parser("verify", help="check a (−n/m)-critical pair")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--factor", required=True, help="m,n")
    p.add_argument("--extended", action="store_true", help="accept m = 0")

    p = verbs.add_parser("enumerate", help="all partners by brute force")
    p.add_argument("alpha")
    p.add_argument("--factor", required=True, help="m,n")
    p.add_argument("--nmax", type=int, help="ambient length cap")
    p.add_argument("--mode", choices=("rank", "naive"))
    p.add_argument("--extended", action="store_true", help="accept m = 0")

    p = verbs.add_parser("closure", help="transitive closure of the construction")
    p.add_argument("alpha")
    p.add_argument("--factor", required=True, help="m,n")
    p.add_argument("--depth", type=int)

    p = verbs.add_parser("jack", help="ζ_α with poles and checks")
    p.add_argument("alpha")
    p.add_argument("--nvars", type=int, help="number of variables (default: ambient length of ALPHA)")

    p = verbs.add_parser("scan", help="conjecture scans over a corpus")
    p.add_argument("kind", choices=("uniqueness", "negative"))
    p.add_argument("--max-weight", type=int)
    p.add_argument("--max-length", type=int)
    p.add_argument("--partitions", action="store_true", default=None)
    p.add_argument("--nmax", type=int)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    update_dict = yaml_utils.parse_cli(args.update)
    if args.log_level:
        update_dict["log_level"] = args.log_level

    try:
        cfg = YAMLConfig(args.config, **update_dict)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    setup_logger(cfg.log_level)
    logger.debug(f"cfg: {cfg}")

    options = {k: v for k, v in vars(args).items() if k not in GLOBAL_FLAGS}
    command = Command(args.verb, options, json=args.json)
    assert command.verb in VERBS

    document = dispatch(command, cfg)
    print(document.body, file=sys.stderr if document.error else sys.stdout)
    return document.exit_code


if __name__ == "__main__":
    sys.exit(main())
