import argparse
import dataclasses
import json
import os
import sys

from teleportsim.harness import report, runners, scenario, sweep
from teleportsim.harness.report import Report
from teleportsim.utils import environment
from teleportsim.utils import logger as logger_module
from teleportsim.utils.errors import TeleportSimError, UnrecoverableOutcomeError
from teleportsim.utils.logger import logger


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(report.EXIT_USAGE, f'{self.prog}: error: {message}\n')


def parse_dims(text):
    try:
        dims = [int(d) for d in text.split(',') if d.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {text!r}')
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError('dimensions must be positive')
    return dims


def positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError('must be positive')
    return value


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be positive')
    return value


def handle_args(argv=None):
    parser = ArgumentParser(prog='teleportsim', description='Closed-form general quantum teleportation.')
    parser._action_groups.pop()
    optional = parser.add_argument_group('optional arguments')
    optional.add_argument(
        "-t",
        "--tolerance",
        type=positive_float,
        help=f"Tolerance of the faithfulness and unitarity predicates (default {environment.DEFAULT_TOLERANCE}).",
        default=None,
    )
    optional.add_argument(
        "-r",
        "--raw",
        help="Do not Hilbert-Schmidt normalize the channel and measurement.",
        action='store_true',
    )
    optional.add_argument(
        "-o",
        "--output",
        type=str,
        help="Write the report to this file instead of standard output.",
        default=None,
    )
    optional.add_argument(
        "-v",
        "--verbose",
        help="Log every step.",
        action='store_true',
    )

    commands = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)
    analyze = commands.add_parser('analyze', help='Decompose the composed map and build the correction.')
    analyze.add_argument('scenario_file', type=str)
    teleport = commands.add_parser('teleport', help='Teleport the scenario state and cross-check with the oracle.')
    teleport.add_argument('scenario_file', type=str)
    commands.add_parser('table1', help='Reproduce the Bell-channel correction table.')
    sweep_parser = commands.add_parser('sweep', help='Seeded randomized oracle and invariant checks.')
    sweep_parser.add_argument('--seed', type=int, default=42)
    sweep_parser.add_argument('--trials', type=positive_int, default=100)
    sweep_parser.add_argument('--dims', type=parse_dims, default=[2, 3, 4])
    sweep_parser.add_argument('--workers', type=positive_int, default=1)

    return parser.parse_args(argv)


def load_scenario(args):
    with open(args.scenario_file, 'rb') as f:
        s = scenario.parse_scenario(f.read())
    overrides = {}
    if args.raw:
        overrides['normalize'] = False
    if args.tolerance is not None:
        overrides['tolerance'] = args.tolerance
    return dataclasses.replace(s, **overrides)


def run_command(args):
    tolerance = environment.get_default_tolerance()
    try:
        if args.command == 'table1':
            return runners.run_table1()
        if args.command == 'sweep':
            return sweep.run_sweep(args.seed, args.trials, args.dims, tolerance, args.workers)
        s = load_scenario(args)
        if args.command == 'analyze':
            return runners.run_analyze(s)
        return runners.run_teleport(s)
    except UnrecoverableOutcomeError as e:
        logger.error(str(e))
        return Report.from_status(args.command, report.UNRECOVERABLE, tolerance=tolerance, diagnostic=str(e))
    except (TeleportSimError, OSError) as e:
        logger.error(str(e))
        return Report.from_status(args.command, report.ERROR, tolerance=tolerance, diagnostic=str(e))


def write_report(rep, output):
    text = rep.to_json()
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, 'w') as f:
            f.write(text)


def main(argv=None):
    args = handle_args(argv)

    if args.tolerance is not None:
        os.environ['TELEPORTSIM_TOLERANCE'] = json.dumps(args.tolerance)
    if args.verbose:
        os.environ['TELEPORTSIM_LOG_LEVEL'] = 'DEBUG'
    logger_module.set_level(environment.get_log_level())

    rep = run_command(args)
    try:
        write_report(rep, args.output)
    except OSError as e:
        logger.error(f'cannot write the report: {e}')
        return report.EXIT_USAGE
    return rep.exit_code


if __name__ == '__main__':
    sys.exit(main())
