"""Batch front end: spin-isometry <command> [options].

Exit codes: 0 ok, 2 usage error, 3 resource cap exceeded, 4 verification
failure (oracle diffs, isometry violations or failed self-checks).
"""
import argparse
import logging
import sys

from pymongo.errors import PyMongoError

from config import ResourceCapExceeded, VerificationError, configure_logging
from models.jobs import JobSpec
from services.jobs import failed, render, run_job
from services.reports import create_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPPED = 3
EXIT_VERIFICATION = 4

STORED_KINDS = {"verify-isometry": "isometry", "chartable": "table"}


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--cover", choices=("+", "-"), default="+", help="t_j^2 = 1 (+) or t_j^2 = z (-)")
    common.add_argument("--decimals", type=int, help="add decimal approximations with this many digits")
    common.add_argument("--parallelism", type=int, default=1)
    common.add_argument("--max-group-order", type=int, help="override SPIN_MAX_GROUP_ORDER")
    common.add_argument("--max-conductor", type=int, help="override SPIN_MAX_CONDUCTOR")
    common.add_argument("--timing", action="store_true", help="keep the runtime field in reports")
    common.add_argument("--log-level", help="override SPIN_LOG_LEVEL")
    common.add_argument("--store", action="store_true", help="save the result in the MongoDB report corpus")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="spin-isometry", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("classes", "conjugacy classes"), ("chartable", "spin character table")):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("group", choices=("sym", "alt", "wreath", "ntilde"),
                         help="wreath tables are built on the enumerated double cover of N_p wr S_t, "
                              "so p and t are bounded by --max-group-order")
        cmd.add_argument("--n", type=int)
        cmd.add_argument("--p", type=int)
        cmd.add_argument("--t", type=int)
        cmd.add_argument("--side", choices=("sym", "alt"), default="sym")
        if name == "chartable":
            cmd.add_argument("--oracle", action="store_true", help="compare with the Dixon/matrix oracle")

    for name, help_text in (("barcore", "p-bar core and weight"), ("barquot", "p-bar core and quotient"),
                            ("core", "ordinary q-core and q-quotient")):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("--partition", required=True, help="comma separated parts")
        cmd.add_argument("--q", "--p", dest="p", type=int, required=True)

    cmd = sub.add_parser("blocks", parents=[common], help="blocks of spin characters")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--side", choices=("sym", "alt"), default="sym")
    cmd.add_argument("--oracle", action="store_true", help="check C-blocks against bar-core blocks")

    cmd = sub.add_parser("verify-isometry", parents=[common], help="check the perfect isometry of a block")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--core", required=True, help="p-bar core, comma separated; \"\" for the empty core")
    cmd.add_argument("--side", choices=("sym", "alt"), default="sym")
    cmd.add_argument("--brauer", action="store_true", help="compose with the Brauer correspondent")
    cmd.add_argument("--mutate", action="store_true", help="flip each sign and swap each pair")
    cmd.add_argument("--oracle", action="store_true", help="add the I_A against I coherence check")

    sub.add_parser("selftest", parents=[common], help="internal cross-checks")

    cmd = sub.add_parser("golden", parents=[common], help="check or regenerate the golden reports")
    cmd.add_argument("--write", action="store_true", help="regenerate instead of checking")
    cmd.add_argument("--dir", dest="directory", help="report directory (default SPIN_CACHE_DIR/golden)")
    cmd.add_argument("--only", help="comma separated golden job names")
    return parser


def spec_from_args(args: argparse.Namespace) -> JobSpec:
    fields = {k: v for k, v in vars(args).items() if k not in ("log_level", "store") and v is not None}
    return JobSpec(**fields)


def _store(command: str, result: dict) -> None:
    stored = create_report(result, STORED_KINDS.get(command, "table"))
    logger.info("stored report %s", stored["report_id"])


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        spec = spec_from_args(args)
        result = run_job(spec)
    except ResourceCapExceeded as e:
        print(f"capped: {e}", file=sys.stderr)
        return EXIT_CAPPED
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ValueError as e:
        print(f"usage: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(render(result, spec.format))
    if args.store:
        try:
            _store(spec.command, result)
        except PyMongoError as e:
            logger.error("could not store report: %s", e)
    return EXIT_VERIFICATION if failed(result) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
