from __future__ import annotations

import argparse
from pathlib import Path

from src import config
from src.cli.enums import Command, OutputFormat
from src.lie.enums import SymmetricSpace
from src.models import RunConfig
from src.utils import parse_cartan_label, parse_csv_rationals


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="cartan_type", help="Cartan type, e.g. A2 or B (with --rank)")
    common.add_argument("--rank", type=int)
    common.add_argument("--custom", type=Path, help="JSON file with custom root data")
    common.add_argument("--space", choices=list(SymmetricSpace), help="symmetric space with uniform multiplicity")
    common.add_argument("--m", type=int, help="uniform root multiplicity")
    common.add_argument("--mult-table", type=Path, help="JSON file with per-root multiplicities")
    common.add_argument("--x0", help="simple-root values of x0, e.g. 0,1")
    common.add_argument("--cap", type=int, help=f"degree cap (default N + {config.DEGREE_CAP_MARGIN})")
    common.add_argument("--format", dest="output_format", choices=list(OutputFormat), default=OutputFormat.TEXT)
    common.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    common.add_argument("--repeat-cosets", action="store_true", help="sum over all of W instead of distinct points")

    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="flagcohom", description="Exact cohomology of real flag manifolds via Morse theory and coinvariants."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser(Command.ROOTS, parents=[common], help="root system data")
    commands.add_parser(Command.WEYL, parents=[common], help="Weyl group census")

    divdiff = commands.add_parser(Command.DIVDIFF, help="divided differences")
    divdiff_actions = divdiff.add_subparsers(dest="action", required=True)
    apply = divdiff_actions.add_parser("apply", parents=[common])
    apply.add_argument("--word", required=True, help="1-based generator word, e.g. 1,2,1")
    apply.add_argument("--poly", required=True, help='polynomial, e.g. "g1^2*g2 + 1/2*g2"')
    divdiff_actions.add_parser("check", parents=[common])

    coinv = commands.add_parser(Command.COINV, help="coinvariant algebra")
    coinv_actions = coinv.add_subparsers(dest="action", required=True)
    coinv_actions.add_parser("series", parents=[common])
    basis = coinv_actions.add_parser("basis", parents=[common])
    basis.add_argument("--degree", type=int, required=True)
    invariants = coinv_actions.add_parser("invariants", parents=[common])
    invariants.add_argument("--stabilizer", default="", help="1-based indices of vanishing simple roots")
    hiller = coinv_actions.add_parser("hiller", parents=[common])
    hiller.add_argument("--gens", default="", help='extra generators separated by ";"')

    morse = commands.add_parser(Command.MORSE, help="Morse indices and Betti numbers")
    morse_actions = morse.add_subparsers(dest="action", required=True)
    for action in ("betti", "verify", "perfect"):
        morse_actions.add_parser(action, parents=[common])

    verify = commands.add_parser(Command.VERIFY, help="full verification suite")
    verify_actions = verify.add_subparsers(dest="action", required=True)
    verify_actions.add_parser("all", parents=[common])

    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    cartan_type = args.cartan_type
    rank = args.rank
    if cartan_type is not None:
        letter, rank = parse_cartan_label(cartan_type, rank)
        cartan_type = str(letter)

    return RunConfig(
        command=args.command,
        action=getattr(args, "action", None),
        cartan_type=cartan_type,
        rank=rank,
        custom=args.custom,
        space=args.space,
        m=args.m,
        mult_table=args.mult_table,
        x0=parse_csv_rationals(args.x0) if args.x0 else None,
        cap=args.cap,
        output_format=args.output_format,
        seed=args.seed,
        repeat_cosets=args.repeat_cosets,
    )
