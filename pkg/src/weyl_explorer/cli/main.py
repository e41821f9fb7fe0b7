"""Command-line entry point of weyl_explorer."""
import argparse
import logging
import sys
from typing import List, Optional, Tuple

from weyl_explorer.cli import commands
from weyl_explorer.cli.config import FORMATS, CliConfig
from weyl_explorer.cli.demo import render_demo, run_sl4_demo
from weyl_explorer.utils.errors import WeylExplorerError

logger = logging.getLogger(__name__)


def _common_options(inherit: bool = False) -> argparse.ArgumentParser:
    # subcommand copies leave unset options to the top-level parser
    def default(value: object) -> object:
        return argparse.SUPPRESS if inherit else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=FORMATS,
        default=default("text"),
        help="Output format (default: text)",
    )
    common.add_argument(
        "--char",
        default=default("0"),
        help="Characteristic: 0, p or a prime (default: 0)",
    )
    common.add_argument(
        "--no-cap",
        action="store_true",
        default=default(False),
        help="Enumerate groups of any order",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=default(0),
        help="Log progress on stderr (-vv for debug)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="weyl-explorer",
        description=(
            "Weyl groups, Bruhat order, Kazhdan-Lusztig polynomials and "
            "Grothendieck group decompositions of equivariant D-modules"
        ),
        parents=[_common_options()],
    )
    parser.add_argument(
        "--demo",
        choices=["paper"],
        help="Run the SL_4 reproduction and report pass/fail",
    )
    subparsers = parser.add_subparsers(dest="command")
    common = _common_options(inherit=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text, parents=[common])

    group = add("group", "Summarize a Weyl group")
    group.add_argument("type", help="Cartan type, e.g. A3")

    kl = add("kl", "Kazhdan-Lusztig polynomial P_{v,w}")
    kl.add_argument("type")
    kl.add_argument("v", help="Word of v, e.g. '1 3'")
    kl.add_argument("w", help="Word of w, e.g. '1 2 3 2 1'")
    kl.add_argument(
        "--all", action="store_true", help="Print P_{u,w} for every u <= w"
    )

    decompose = add("decompose", "Grothendieck group decomposition")
    decompose.add_argument("type")
    decompose.add_argument("w")
    decompose.add_argument(
        "--object",
        choices=commands.OBJECTS,
        default="simple",
        help="simple: [L(w)] in M; dualverma: [M(w)] in L; "
        "localcoh: local cohomology of X(w) in L",
    )

    smoothness = add("smoothness", "Smoothness and singular locus of X(w)")
    smoothness.add_argument("type")
    smoothness.add_argument("w")

    gc = add("gc", "Terms of the Grothendieck-Cousin complex of X(w)")
    gc.add_argument("type")
    gc.add_argument("w")

    verma = add("verma", "Check Verma's identity on [x, y]")
    verma.add_argument("type")
    verma.add_argument("x")
    verma.add_argument("y")

    interval = add("interval", "List the Bruhat interval [v, w]")
    interval.add_argument("type")
    interval.add_argument("v")
    interval.add_argument("w")

    coset = add("coset", "Minimal representative of the coset w W_J")
    coset.add_argument("type")
    coset.add_argument("w")
    coset.add_argument("J", help="Generators of W_J, e.g. '2' or '1 3'")

    scan = add("scan", "Schubert data of every element")
    scan.add_argument("type")

    demo = add("demo", "Reproduce the SL_4 computations")
    demo.add_argument("name", choices=["paper"])
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _dispatch(args: argparse.Namespace) -> Tuple[str, int]:
    if args.demo or args.command == "demo":
        results = run_sl4_demo()
        code = 0 if all(result.passed for result in results) else 1
        return render_demo(results, args.format), code

    config = CliConfig(
        group=args.type,
        format=args.format,
        char=args.char,
        allow_large=args.no_cap,
        verbosity=args.verbose,
    )
    if args.command == "group":
        output = commands.cmd_group(config)
    elif args.command == "kl":
        output = commands.cmd_kl(config, args.v, args.w, column=args.all)
    elif args.command == "decompose":
        output = commands.cmd_decompose(config, args.w, args.object)
    elif args.command == "smoothness":
        output = commands.cmd_smoothness(config, args.w)
    elif args.command == "gc":
        output = commands.cmd_gc(config, args.w)
    elif args.command == "verma":
        output = commands.cmd_verma(config, args.x, args.y)
    elif args.command == "interval":
        output = commands.cmd_interval(config, args.v, args.w)
    elif args.command == "coset":
        output = commands.cmd_coset(config, args.w, args.J)
    else:
        output = commands.cmd_scan(config)
    return output, 0


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv.

    Returns:
        int: Exit code, 0 on success.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None and not args.demo:
        parser.print_help(sys.stderr)
        return 2

    _configure_logging(args.verbose)
    try:
        output, code = _dispatch(args)
    except WeylExplorerError as error:
        message = " ".join(str(error).split())
        print(f"error: {message}", file=sys.stderr)
        return 1

    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
