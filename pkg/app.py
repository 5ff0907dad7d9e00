import argparse
import logging
import sys
import traceback
from typing import Dict, List, Optional

from config import Config
from dependency_injection import container
from models.report import Report
from models.run_config import OBSERVABLE_KINDS, STATE_KINDS, RunConfig
from utils.errors import HiqecError, ValidationError
from utils.report_formatter import ReportFormatter

logger = logging.getLogger(__name__)


class CommandLineParser(argparse.ArgumentParser):
    """argparse reports usage errors through ValidationError so they exit with code 1"""

    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON run config; flags override its values')
    common.add_argument('--n', type=int, help='number of qubits')
    common.add_argument('--state', choices=STATE_KINDS, help='wavefunction kind')
    common.add_argument('--mu', type=float, help='Gaussian centre on the grid 0..2^n-1')
    common.add_argument('--sigma', type=float, help='Gaussian width')
    common.add_argument('--seed', type=int, help='random seed')
    common.add_argument('--index', type=int, help='basis-state index for --state basis')
    common.add_argument('--state-file', help='state amplitudes as a JSON array or one number per line')
    common.add_argument('--observable', choices=OBSERVABLE_KINDS, help='diagonal observable kind')
    common.add_argument('--power', type=int, help='p in phi^p')
    common.add_argument('--observable-file', help='observable diagonal, same formats as --state-file')
    common.add_argument('--eta', type=_float_list, help='per-qubit depolarizing probabilities, qubit 0 first')
    common.add_argument('--gammas-ir-first', type=_float_list,
                        help='use this sensitivity listing (IR qubit first) instead of computing it')
    common.add_argument('--p', type=float, help='physical error rate per step')
    common.add_argument('--p-th', type=float, help='surface-code threshold')
    common.add_argument('--c0', type=float, help='logical error prefactor')
    common.add_argument('--n-cycles', type=int, help='number of code cycles')
    common.add_argument('--epsilon', type=float, help='target fractional error over all cycles')
    common.add_argument('--eps-per-cycle', type=float, help='target fractional error per cycle')
    common.add_argument('--d-min', type=int, help='smallest odd code distance')
    common.add_argument('--d-max', type=int, help='largest odd code distance')
    common.add_argument('--format', choices=Config.OUTPUT_FORMATS, help='output format (default json)')
    common.add_argument('--output', help='write the report here instead of stdout')
    common.add_argument('--log-level', help=f'logging level (default {Config.LOG_LEVEL})')

    parser = CommandLineParser(
        prog='hiqec',
        description='Hierarchical noise sensitivities and surface-code distance allocation for digitized fields'
    )
    commands = parser.add_subparsers(dest='command', required=True, parser_class=CommandLineParser)

    expectations = commands.add_parser('expectations', parents=[common], help='<O_j> table')
    expectations.add_argument('--sort-magnitude', action='store_true', help='order rows by descending |<O_j>|')

    commands.add_parser('gammas', parents=[common], help='noise sensitivities and decay fit')

    decompose = commands.add_parser('decompose', parents=[common], help='observable coefficients beta_j')
    decompose.add_argument('--all', action='store_true', help='keep zero coefficients')
    decompose.add_argument('--powers', type=_int_list, help='table of phi^p for several p, e.g. 2,4,6')

    polynomial = commands.add_parser('polynomial', parents=[common], help='noise polynomials in eta')
    polynomial.add_argument('--j', type=_int_list, default=[], help='basis indices, comma-separated')
    polynomial.add_argument('--observable-total', action='store_true', help='polynomial of the whole observable')

    commands.add_parser('optimize', parents=[common], help='surface-code distances per logical qubit')

    sweep = commands.add_parser('sweep', parents=[common], help='qubit reductions over per-cycle targets')
    sweep.add_argument('--eps-min', type=float, default=1e-16)
    sweep.add_argument('--eps-max', type=float, default=1e-3)
    sweep.add_argument('--points-per-decade', type=int, default=4)

    verify = commands.add_parser('verify', parents=[common], help='density-matrix oracle check')
    verify.add_argument('--trials', type=int, default=50, help='random (state, observable, eta) triples')

    profiles = commands.add_parser('profiles', parents=[common], help='sensitivities across Gaussian widths')
    profiles.add_argument('--sigmas', type=_float_list, required=True, help='Gaussian widths, comma-separated')

    layout = commands.add_parser('layout', parents=[common], help='place qubits on devices of unequal quality')
    layout.add_argument('--device-eta', type=_float_list, required=True, help='device error rates')

    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, object]:
    """Command-line values keyed by their dotted path in the run config"""
    return {
        'n': args.n,
        'state.kind': args.state,
        'state.mu': args.mu,
        'state.sigma': args.sigma,
        'state.seed': args.seed,
        'state.index': args.index,
        'state.path': args.state_file,
        'observable.kind': args.observable,
        'observable.power': args.power,
        'observable.path': args.observable_file,
        'eta': args.eta,
        'gammas_ir_first': args.gammas_ir_first,
        'surface_code.p': args.p,
        'surface_code.p_th': args.p_th,
        'surface_code.c0': args.c0,
        'surface_code.n_cycles': args.n_cycles,
        'surface_code.epsilon': args.epsilon,
        'surface_code.eps_per_cycle': args.eps_per_cycle,
        'surface_code.d_min': args.d_min,
        'surface_code.d_max': args.d_max,
        'format': args.format,
        'output': args.output
    }


def dispatch(args: argparse.Namespace, config: RunConfig):
    analysis = container.get_analysis_controller()
    qec = container.get_qec_controller()
    command = args.command
    if command == 'expectations':
        return analysis.expectations(config, sort_magnitude=args.sort_magnitude)
    if command == 'gammas':
        return analysis.gammas(config)
    if command == 'decompose':
        return analysis.decompose(config, include_zero=args.all, powers=args.powers)
    if command == 'polynomial':
        return analysis.polynomial(config, indices=args.j, observable_total=args.observable_total)
    if command == 'optimize':
        return qec.optimize(config)
    if command == 'sweep':
        return qec.sweep(config, args.eps_min, args.eps_max, args.points_per_decade)
    if command == 'verify':
        return analysis.verify(config, trials=args.trials, seed=config.state.seed)
    if command == 'profiles':
        return analysis.profiles(config, args.sigmas, seed=config.state.seed)
    if command == 'layout':
        return analysis.layout(config, args.device_eta)
    raise ValidationError(f"Unknown command {command!r}")


def emit(report: Report, exit_code: int, fmt: str, output: Optional[str]) -> None:
    if exit_code != 0 and 'error' in report.data:
        if fmt == 'json':
            sys.stderr.write(ReportFormatter.to_json(report))
        else:
            sys.stderr.write(f"error: {report.data['error']}\n")
        return
    content = ReportFormatter.render(report, fmt)
    if output:
        container.get_report_repository().write_report(output, content)
    else:
        sys.stdout.write(content)


def configure_logging(level: Optional[str]) -> None:
    level = (level or Config.LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except HiqecError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code

    configure_logging(args.log_level)
    fmt = args.format or 'json'
    try:
        document = container.get_config_repository().load_config(args.config) if args.config else None
        config = RunConfig.from_sources(document, config_overrides(args))
        fmt = config.format
        report, exit_code = dispatch(args, config)
        emit(report, exit_code, fmt, config.output)
        return exit_code
    except HiqecError as e:
        logger.error(f"{args.command} error: {e}")
        logger.debug(traceback.format_exc())
        emit(Report.error(args.command, e.to_dict()), e.exit_code, fmt, None)
        return e.exit_code
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        logger.error(traceback.format_exc())
        emit(Report.error(args.command, {'error': f"internal error: {e}", 'exit_code': 3}), 3, fmt, None)
        return 3


if __name__ == '__main__':
    sys.exit(main())
