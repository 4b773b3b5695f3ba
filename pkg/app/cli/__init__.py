"""Command-line front end

Commands: constants | pure-eval | rho-concurrence | invert-e | dimer | fig.
Data goes to stdout (or --out), logs and errors to stderr. Exit code 0 on
success, 1 on a domain error, 2 on a usage error.

Amplitudes that start with a minus sign need a `--` separator:
    entanglement-fluctuations pure-eval -- -0.6,0,0,0,0,0,0.8,0
"""

import argparse
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from app.core.base_model import APIResponse
from app.core.config import DEFAULT_LANG, get_settings
from app.enums.entanglement_enums import FigureEnum
from app.exceptions.exception import BadSpecException, CustomHTTPException
from app.middleware.translation_manager import SUPPORTED_LANGS, use_language
from app.modules.figures.engine.figures import linear_grid
from app.modules.figures.engine.table_io import format_value, render_rows, write_text
from app.modules.figures.repository.figures_repo import FiguresRepo
from app.modules.figures.schemas.figures import SweepSpec
from app.modules.measures.repository.measures_repo import MeasuresRepo
from app.modules.mixed_state.repository.mixed_state_repo import MixedStateRepo
from app.modules.pure_state.repository.pure_state_repo import PureStateRepo
from app.modules.pure_state.schemas.pure_state import PureEvalRequest
from app.modules.thermal_dimer.repository.thermal_dimer_repo import ThermalDimerRepo
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerSweepRequest

logger = logging.getLogger('app.cli')

DIMER_COLUMNS = ['tau', 't_over_te', 'C', 'E', 'dE', 'relE', 'hw_flag']
DEFAULT_DIMER_RANGE = (0.05, 2.0)


def _real_list(text: str) -> list[float]:
	try:
		return [float(part) for part in text.split(',') if part.strip()]
	except ValueError:
		raise argparse.ArgumentTypeError(f'expected comma-separated reals, got {text!r}')


def _emit(response: APIResponse, as_json: bool, fields: dict[str, object]):
	if as_json:
		print(response.model_dump_json())
		return
	for key, value in fields.items():
		print(f'{key}={format_value(value)}')


def cmd_constants(args) -> int:
	response = MeasuresRepo().constants()
	_emit(response, args.json, response.data.model_dump())
	return 0


def cmd_pure_eval(args) -> int:
	request = PureEvalRequest(amplitudes=args.amplitudes, normalize=args.normalize)
	response = PureStateRepo().evaluate(request)
	result = response.data
	fields = {
		'c': result.c,
		'e': result.e,
		'delta_e': result.delta_e,
		'rel': result.rel,
		'lambda1': result.lambda1,
		'lambda2': result.lambda2,
	}
	_emit(response, args.json, fields)
	return 0


def cmd_rho_concurrence(args) -> int:
	response = MixedStateRepo().concurrence_from_file(args.path)
	result = response.data
	fields = {'c': result.c}
	fields.update({f'sqrt_lambda{i}': value for i, value in enumerate(result.sqrt_lambdas, start=1)})
	fields.update({'e': result.e, 'delta_e': result.delta_e, 'rel': result.rel})
	_emit(response, args.json, fields)
	return 0


def cmd_invert_e(args) -> int:
	response = MeasuresRepo().from_entanglement(args.e)
	_emit(response, args.json, response.data.model_dump())
	return 0


def _dimer_taus(args) -> list[float]:
	if args.tau:
		if args.start is not None or args.stop is not None or args.points is not None:
			raise BadSpecException('--tau cannot be combined with --start/--stop/--points')
		return args.tau
	spec = SweepSpec(
		start=DEFAULT_DIMER_RANGE[0] if args.start is None else args.start,
		stop=DEFAULT_DIMER_RANGE[1] if args.stop is None else args.stop,
		points=get_settings().FIG_DEFAULT_POINTS if args.points is None else args.points,
	)
	return linear_grid(spec)


def cmd_dimer(args) -> int:
	request = DimerSweepRequest(j=args.j, taus=_dimer_taus(args), cross_check=True)
	response = ThermalDimerRepo().sweep(request)
	rows = [[p.tau, p.tau_over_te, p.c, p.e, p.delta_e, p.rel, p.hw_mismatch] for p in response.data.points]
	text = render_rows(DIMER_COLUMNS, rows)
	if args.out:
		write_text(text, args.out)
		logger.info(f'Wrote {len(rows)} dimer rows to {args.out}')
	if args.json:
		print(response.model_dump_json())
	elif not args.out:
		sys.stdout.write(text)
	return 0


def cmd_fig(args) -> int:
	repo = FiguresRepo()
	which = FigureEnum(args.which)
	if args.out:
		response = repo.export(which, args.out, start=args.start, stop=args.stop, points=args.points)
		if args.json:
			print(response.model_dump_json())
	else:
		sys.stdout.write(repo.csv_text(which, start=args.start, stop=args.stop, points=args.points))
	return 0


def build_parser() -> argparse.ArgumentParser:
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument('--json', action='store_true', help='Print the APIResponse envelope as JSON')
	common.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
	common.add_argument('--lang', choices=SUPPORTED_LANGS, help=f'Message language (default: {DEFAULT_LANG})')

	parser = argparse.ArgumentParser(
		prog='entanglement-fluctuations',
		description='Entanglement and entanglement fluctuations of two-qubit states',
	)
	subparsers = parser.add_subparsers(dest='command', required=True)

	p = subparsers.add_parser('constants', parents=[common], help='C_f, tau_e, tau_f and tau_f / tau_e')
	p.set_defaults(handler=cmd_constants)

	p = subparsers.add_parser(
		'pure-eval',
		parents=[common],
		help='Evaluate a pure state',
		epilog='Put -- before amplitudes that start with a minus sign',
	)
	p.add_argument('amplitudes', type=_real_list, help='Eight comma-separated reals: re,im of a, b, c, d')
	p.add_argument('--normalize', action='store_true', help='Divide by the norm instead of requiring a unit vector')
	p.set_defaults(handler=cmd_pure_eval)

	p = subparsers.add_parser('rho-concurrence', parents=[common], help='Hill-Wootters concurrence of a density-matrix file')
	p.add_argument('path', help='JSON file {"rho": 4x4 array of [re, im] pairs}')
	p.set_defaults(handler=cmd_rho_concurrence)

	p = subparsers.add_parser('invert-e', parents=[common], help='Concurrence and Delta E implied by a measured E')
	p.add_argument('e', type=float, help='Entanglement E in [0, 1]')
	p.set_defaults(handler=cmd_invert_e)

	p = subparsers.add_parser('dimer', parents=[common], help='Thermal sweep of the Heisenberg dimer')
	p.add_argument('--j', type=float, default=-1.0, help='Exchange coupling, nonzero (default: -1)')
	p.add_argument('--tau', type=_real_list, help='Comma-separated temperatures')
	p.add_argument('--start', type=float, help=f'Grid start (default: {DEFAULT_DIMER_RANGE[0]})')
	p.add_argument('--stop', type=float, help=f'Grid stop (default: {DEFAULT_DIMER_RANGE[1]})')
	p.add_argument('--points', type=int, help='Grid points')
	p.add_argument('--out', help='CSV file (default: stdout)')
	p.set_defaults(handler=cmd_dimer)

	p = subparsers.add_parser('fig', parents=[common], help='Figure dataset as CSV')
	p.add_argument('which', choices=FigureEnum.values(), help='1: E, dE vs C; 2: relE vs C; 3: E, dE vs T/T_e; 4: relE vs T/T_e')
	p.add_argument('--start', type=float)
	p.add_argument('--stop', type=float)
	p.add_argument('--points', type=int)
	p.add_argument('--out', help='CSV file (default: stdout)')
	p.set_defaults(handler=cmd_fig)
	return parser


def main(argv: Sequence[str] | None = None) -> int:
	args = build_parser().parse_args(argv)
	level = logging.DEBUG if args.verbose else get_settings().LOG_LEVEL
	logging.basicConfig(stream=sys.stderr, level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
	use_language(args.lang)

	try:
		return args.handler(args)
	except CustomHTTPException as ex:
		logger.debug(f'{args.command} failed', exc_info=True)
		print(f'error: {ex.message}', file=sys.stderr)
		return 1
	except ValidationError as ex:
		print(f'error: {ex}', file=sys.stderr)
		return 1
