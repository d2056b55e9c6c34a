"""
This module acts as the entry point of the toolkit.
It parses the command line, configures logging and
dispatches to the quadratize, graph, device, compile,
verify and bench commands.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from qubochain.bench.harness import (
	BenchSettings,
	run_benchmark,
	write_csv,
)
from qubochain.bench.report import render_bench_report
from qubochain.circuit.serialize import (
	CircuitFormat,
	load_circuit,
	serialize_circuit,
)
from qubochain.compiler.qaoa import (
	QaoaParams,
	Strategy,
	compile_qaoa,
)
from qubochain.device.paths import longest_nn_path
from qubochain.device.presets import resolve_device
from qubochain.exceptions.base import QubochainError
from qubochain.graph.chains import (
	classify_chains,
	classify_edges,
	extract_chains,
	relation_labels,
)
from qubochain.graph.interaction import (
	build_interaction_graph,
	to_dot,
)
from qubochain.pubo.parser import (
	load_polynomial_json,
	parse_polynomial,
)
from qubochain.pubo.polynomial import Polynomial
from qubochain.quadratizer.baseline import quadratize_baseline
from qubochain.quadratizer.chain import quadratize_chain
from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.quadratizer.selection import (
	SelectionPolicy,
	TieBreak,
)
from qubochain.quadratizer.splitting import resolve_chains
from qubochain.schemas.graph import ChainReportDocument
from qubochain.static.paths import Paths
from qubochain.utils.files import read_bytes, write_file
from qubochain.utils.logging import (
	format_exception,
	level_from_env,
	setup_logging,
)
from qubochain.verify.report import build_report

red = '\033[91m'
reset = '\033[0m'

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


# --- Argument types ---


def penalty_value(text: str) -> float | None:
	if text == 'auto':
		return None
	try:
		return float(text)
	except ValueError as e:
		raise argparse.ArgumentTypeError(
			f'expected "auto" or a number, got {text!r}'
		) from e


def float_list(text: str) -> list[float]:
	try:
		return [float(v) for v in text.split(',') if v]
	except ValueError as e:
		raise argparse.ArgumentTypeError(
			f'expected comma-separated numbers, got {text!r}'
		) from e


def size_list(text: str) -> tuple[int, ...]:
	"""`8..16` (inclusive) or `8,12,16`."""
	try:
		if '..' in text:
			lo, _, hi = text.partition('..')
			return tuple(range(int(lo), int(hi) + 1))
		return tuple(int(v) for v in text.split(',') if v)
	except ValueError as e:
		raise argparse.ArgumentTypeError(
			f'expected "lo..hi" or a list of sizes, got {text!r}'
		) from e


def optional_int(text: str) -> int | None:
	if text == 'auto':
		return None
	try:
		return int(text)
	except ValueError as e:
		raise argparse.ArgumentTypeError(
			f'expected "auto" or an integer, got {text!r}'
		) from e


def coef_range(text: str) -> tuple[float, float]:
	values = float_list(text)
	if len(values) != 2:
		raise argparse.ArgumentTypeError(
			f'expected "lo,hi", got {text!r}'
		)
	return values[0], values[1]


# --- Shared helpers ---


def load_input(args: argparse.Namespace) -> Polynomial:
	"""Polynomial from `--expr` or the INPUT file."""
	if args.expr is not None:
		return parse_polynomial(args.expr)
	data = read_bytes(Path(args.input))
	if args.json_input:
		return load_polynomial_json(data)
	return parse_polynomial(data.decode('utf-8'))


def emit(content: str | bytes, out: Path | None) -> None:
	if out is not None:
		write_file(out, content)
		logger.info(f'Wrote {out}')
		return
	if isinstance(content, bytes):
		content = content.decode('utf-8')
	sys.stdout.write(content)
	if not content.endswith('\n'):
		sys.stdout.write('\n')


def quadratize_input(
	poly: Polynomial,
	args: argparse.Namespace,
) -> QuadratizedProblem:
	policy = SelectionPolicy(
		tie_break=TieBreak(args.tie_break),
		seed=args.seed,
		weighted=args.weighted,
	)
	if Strategy(args.strategy) is Strategy.BASELINE:
		return quadratize_baseline(
			poly,
			policy=policy,
			penalty_factor=args.penalty_factor,
		)

	problem = quadratize_chain(
		poly,
		policy=policy,
		penalty_factor=args.penalty_factor,
	)
	if args.split:
		problem, _ = resolve_chains(problem)
	return problem


# --- Commands ---


def cmd_quadratize(args: argparse.Namespace) -> int:
	problem = quadratize_input(load_input(args), args)
	emit(problem.to_json(), args.out)
	return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
	if args.problem is not None:
		problem = QuadratizedProblem.from_json(
			read_bytes(Path(args.problem))
		)
		qubo, substitutions = problem.qubo, problem.substitutions
	else:
		qubo, substitutions = load_input(args), ()

	graph = build_interaction_graph(qubo)
	chains = extract_chains(graph, substitutions)
	edges = classify_edges(graph, chains)

	if args.chains:
		document = ChainReportDocument(
			graph=graph.to_document(),
			chains=[c.to_document() for c in chains],
			relations=relation_labels(classify_chains(chains)),
			chain_edges=[
				(u.name, v.name) for u, v in sorted(edges.chain_edges)
			],
			extraneous_edges=[
				(u.name, v.name)
				for u, v in sorted(edges.extraneous_edges)
			],
		)
	else:
		document = graph.to_document()
	emit(document.model_dump_json(indent=2), args.out)

	if args.dot is not None:
		write_file(
			Path(args.dot),
			to_dot(graph, highlight=set(edges.chain_edges)),
		)
	return EXIT_OK


def cmd_device(args: argparse.Namespace) -> int:
	cmap = resolve_device(args.device)
	if args.action == 'show':
		emit(cmap.to_json(indent=2), args.out)
		return EXIT_OK

	path = longest_nn_path(cmap)
	emit(
		json.dumps(
			{
				'device': cmap.name,
				'length': len(path),
				'path': list(path.qubits),
			}
		),
		args.out,
	)
	return EXIT_OK


def cmd_compile(args: argparse.Namespace) -> int:
	args.split = True
	problem = quadratize_input(load_input(args), args)
	params = QaoaParams.build(args.gamma, args.beta, args.reps)
	result = compile_qaoa(
		problem,
		resolve_device(args.device),
		params,
		Strategy(args.strategy),
	)

	if args.problem_out is not None:
		write_file(Path(args.problem_out), problem.to_json())

	match args.emit:
		case 'metrics':
			content = result.metrics.model_dump_json(indent=2)
		case 'cost-json':
			content = serialize_circuit(result.cost_layer)
		case _:
			content = serialize_circuit(
				result.circuit,
				CircuitFormat(args.emit),
			)
	emit(content, args.out)
	return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
	original_data = read_bytes(Path(args.original))
	original = (
		load_polynomial_json(original_data)
		if args.json_input
		else parse_polynomial(original_data.decode('utf-8'))
	)
	problem = QuadratizedProblem.from_json(
		read_bytes(Path(args.problem))
	)
	circuit = (
		load_circuit(read_bytes(Path(args.circuit)))
		if args.circuit is not None
		else None
	)
	cmap = (
		resolve_device(args.device)
		if args.device is not None
		else None
	)

	report = build_report(
		original,
		problem,
		circuit=circuit,
		gamma=args.gamma,
		cmap=cmap,
	)
	emit(report.model_dump_json(indent=2), args.out)
	return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
	settings = BenchSettings(
		sizes=args.sizes,
		samples=args.samples,
		device=args.device,
		seed=args.seed,
		num_terms=args.terms,
		max_degree=args.max_degree,
		coef_range=args.coef_range,
		workers=args.workers,
		verify_limit=args.verify_limit,
		omit_timing=args.omit_timing,
	)
	result = run_benchmark(settings)

	out = args.out or Paths.RESULTS_DIR / 'results.csv'
	write_csv(result.records, settings, Path(out))

	if args.summary_json is not None:
		write_file(
			Path(args.summary_json),
			result.summary.model_dump_json(indent=2),
		)
	if args.report_md is not None:
		write_file(
			Path(args.report_md),
			render_bench_report(result.frame(), result.summary),
		)
	return EXIT_OK


# --- Parser ---


def _add_input(parser: argparse.ArgumentParser) -> None:
	parser.add_argument(
		'input',
		nargs='?',
		help='File holding the polynomial.',
	)
	parser.add_argument(
		'-e',
		'--expr',
		help='Polynomial text given inline.',
	)
	parser.add_argument(
		'--json-input',
		action='store_true',
		help='Read the JSON polynomial form.',
	)


def _add_quadratizer(parser: argparse.ArgumentParser) -> None:
	parser.add_argument(
		'--strategy',
		choices=[s.value for s in Strategy],
		default=Strategy.CHAIN.value,
	)
	parser.add_argument(
		'--tie-break',
		choices=[t.value for t in TieBreak],
		default=TieBreak.CANONICAL.value,
	)
	parser.add_argument('--seed', type=int, default=None)
	parser.add_argument('--weighted', action='store_true')
	parser.add_argument(
		'--penalty-factor',
		type=penalty_value,
		default=None,
		help='"auto" or an explicit c_P.',
	)


def _add_out(parser: argparse.ArgumentParser) -> None:
	parser.add_argument(
		'--out',
		type=Path,
		default=None,
		help='Output file, stdout by default.',
	)


def build_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(
		prog='qubochain',
		description=(
			'Hardware-aware quadratization and QAOA '
			'compilation.'
		),
	)
	parser.add_argument(
		'--json-log',
		action='store_true',
		help='Write the log file as JSON lines.',
	)
	commands = parser.add_subparsers(dest='command', required=True)

	quadratize = commands.add_parser(
		'quadratize',
		help='Reduce a polynomial to a QUBO.',
	)
	_add_input(quadratize)
	_add_quadratizer(quadratize)
	quadratize.add_argument(
		'--split',
		action='store_true',
		help='Split chains that share variables.',
	)
	_add_out(quadratize)
	quadratize.set_defaults(handler=cmd_quadratize)

	graph = commands.add_parser(
		'graph',
		help='Interaction graph of a QUBO.',
	)
	_add_input(graph)
	graph.add_argument(
		'--problem',
		help='Quadratized problem JSON instead of INPUT.',
	)
	graph.add_argument(
		'--chains',
		action='store_true',
		help='Include chains, relations and edge split.',
	)
	graph.add_argument('--dot', help='Also write DOT text.')
	_add_out(graph)
	graph.set_defaults(handler=cmd_graph)

	device = commands.add_parser(
		'device',
		help='Inspect a coupling map.',
	)
	device.add_argument('action', choices=['path', 'show'])
	device.add_argument(
		'--device',
		default='builtin:ibm_torino',
	)
	_add_out(device)
	device.set_defaults(handler=cmd_device)

	compile_ = commands.add_parser(
		'compile',
		help='Compile a QAOA circuit.',
	)
	_add_input(compile_)
	_add_quadratizer(compile_)
	compile_.add_argument(
		'--device',
		default='builtin:ibm_torino',
	)
	compile_.add_argument('--reps', type=int, default=None)
	compile_.add_argument(
		'--gamma',
		type=float_list,
		default=[0.1],
	)
	compile_.add_argument(
		'--beta',
		type=float_list,
		default=[0.1],
	)
	compile_.add_argument(
		'--emit',
		choices=['json', 'qasm', 'metrics', 'cost-json'],
		default='json',
	)
	compile_.add_argument(
		'--problem-out',
		help='Also write the quadratized problem JSON.',
	)
	_add_out(compile_)
	compile_.set_defaults(handler=cmd_compile)

	verify = commands.add_parser(
		'verify',
		help='Run the oracles on a compiled problem.',
	)
	verify.add_argument('--original', required=True)
	verify.add_argument('--json-input', action='store_true')
	verify.add_argument('--problem', required=True)
	verify.add_argument(
		'--circuit',
		help='Native cost layer circuit JSON.',
	)
	verify.add_argument('--gamma', type=float, default=None)
	verify.add_argument(
		'--device',
		default=None,
		help='Check connectivity against this device.',
	)
	_add_out(verify)
	verify.set_defaults(handler=cmd_verify)

	bench = commands.add_parser(
		'bench',
		help='Benchmark both strategies on random instances.',
	)
	bench.add_argument('--sizes', type=size_list, default=(8,))
	bench.add_argument('--samples', type=int, default=10)
	bench.add_argument(
		'--device',
		default='builtin:ibm_torino',
	)
	bench.add_argument('--terms', type=optional_int, default=None)
	bench.add_argument(
		'--max-degree',
		type=optional_int,
		default=None,
	)
	bench.add_argument(
		'--coef-range',
		type=coef_range,
		default=(-10.0, 10.0),
	)
	bench.add_argument('--seed', type=int, default=0)
	bench.add_argument('--workers', type=int, default=1)
	bench.add_argument('--verify-limit', type=int, default=20)
	bench.add_argument('--omit-timing', action='store_true')
	bench.add_argument('--out', type=Path, default=None)
	bench.add_argument('--summary-json', default=None)
	bench.add_argument('--report-md', default=None)
	bench.set_defaults(handler=cmd_bench)

	return parser


def main(argv: list[str] | None = None) -> int:
	args = build_parser().parse_args(argv)

	setup_logging(
		log_file=Paths.LOGS_DIR / 'qubochain.log',
		level=level_from_env(),
		json_file=args.json_log,
	)

	if getattr(args, 'input', None) is None and (
		getattr(args, 'expr', 'unset') is None
		and getattr(args, 'problem', None) is None
	):
		print('error: give INPUT or --expr', file=sys.stderr)
		return EXIT_ERROR

	try:
		return args.handler(args)
	except (QubochainError, OSError) as e:
		print(f'{red}--- Error during execution ---{reset}')
		print(format_exception(e))
		print(f'{red}-------- End of error --------{reset}')
		return EXIT_ERROR


if __name__ == '__main__':
	sys.exit(main())
