"""
This module contains the benchmark harness: random
instances are quadratized and compiled with both
strategies, verified, and collected into records that
are written as CSV and summarised with pandas.
"""

import io
import logging
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from qubochain.bench.instances import (
	InstanceConfig,
	generate_instance,
	product_instance,
)
from qubochain.circuit.connectivity import check_connectivity
from qubochain.circuit.metrics import depth
from qubochain.compiler.qaoa import (
	QaoaParams,
	Strategy,
	compile_qaoa,
)
from qubochain.device.presets import resolve_device
from qubochain.exceptions.base import QubochainError
from qubochain.pubo.polynomial import Polynomial
from qubochain.quadratizer.baseline import quadratize_baseline
from qubochain.quadratizer.chain import quadratize_chain
from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.quadratizer.splitting import resolve_chains
from qubochain.schemas.bench import (
	CSV_COLUMNS,
	BenchRecord,
	BenchSummary,
	GroupSummary,
	InstanceFailure,
)
from qubochain.utils.files import write_file
from qubochain.utils.logging import stage
from qubochain.verify.quadratization import (
	check_quadratization,
)

logger = logging.getLogger(__name__)

GENERATOR = 'numpy.random.PCG64'
BENCH_PARAMS = QaoaParams(reps=1, gammas=[0.35], betas=[0.2])


@dataclass(frozen=True)
class BenchSettings:
	sizes: tuple[int, ...]
	samples: int
	device: str = 'builtin:ibm_torino'
	seed: int = 0
	num_terms: int | None = None
	max_degree: int | None = None
	coef_range: tuple[float, float] = (-10.0, 10.0)
	workers: int = 1
	verify_limit: int = 20
	omit_timing: bool = False

	def header_lines(self) -> list[str]:
		lo, hi = self.coef_range
		sizes = ','.join(str(n) for n in self.sizes)
		return [
			f'# generator={GENERATOR} seed={self.seed}',
			f'# sizes={sizes} samples={self.samples} '
			f'device={self.device} '
			f'terms={self.num_terms or "auto"} '
			f'max_degree={self.max_degree or "auto"} '
			f'coef_range={lo:g},{hi:g}',
		]


@dataclass(frozen=True)
class InstanceTask:
	settings: BenchSettings
	num_vars: int
	sample: int


@dataclass
class InstanceOutcome:
	records: list[BenchRecord] = field(default_factory=list)
	failures: list[InstanceFailure] = field(
		default_factory=list
	)


@dataclass
class BenchResult:
	records: list[BenchRecord]
	summary: BenchSummary

	def frame(self) -> pd.DataFrame:
		return records_frame(self.records)


def instance_seed(seed: int, num_vars: int, sample: int) -> int:
	"""64-bit seed of one instance, stable across runs."""
	sequence = np.random.SeedSequence([seed, num_vars, sample])
	return int(sequence.generate_state(1, dtype=np.uint64)[0])


def quadratize(
	poly: Polynomial,
	strategy: Strategy,
) -> QuadratizedProblem:
	"""Quadratize for `strategy`, splitting chains when needed."""
	if strategy is Strategy.BASELINE:
		return quadratize_baseline(poly)
	problem, _ = resolve_chains(quadratize_chain(poly))
	return problem


def run_instance(task: InstanceTask) -> InstanceOutcome:
	"""
	Compile one instance with both strategies. Errors are
	collected per strategy and never raised.
	"""
	settings = task.settings
	seed = instance_seed(settings.seed, task.num_vars, task.sample)
	outcome = InstanceOutcome()

	try:
		cmap = resolve_device(settings.device)
		poly = generate_instance(
			InstanceConfig(
				num_vars=task.num_vars,
				num_terms=settings.num_terms,
				max_term_degree=settings.max_degree,
				coef_range=settings.coef_range,
				seed=seed,
			)
		)
	except QubochainError as e:
		for strategy in Strategy:
			outcome.failures.append(
				_failure(seed, task.num_vars, strategy, e)
			)
		return outcome

	for strategy in Strategy:
		start = time.perf_counter()
		try:
			problem = quadratize(poly, strategy)
			result = compile_qaoa(
				problem,
				cmap,
				BENCH_PARAMS,
				strategy,
			)
		except QubochainError as e:
			outcome.failures.append(
				_failure(seed, task.num_vars, strategy, e)
			)
			continue
		elapsed = (time.perf_counter() - start) * 1000.0

		quadratization_ok = None
		if problem.num_variables <= settings.verify_limit:
			quadratization_ok = check_quadratization(
				poly,
				problem,
			).passed

		metrics = result.metrics
		outcome.records.append(
			BenchRecord(
				seed=seed,
				N=task.num_vars,
				strategy=strategy.value,
				aux_count=problem.aux_count,
				depth=metrics.depth,
				width=metrics.width,
				two_qubit_count=metrics.two_qubit_count,
				swap_count=metrics.swap_count,
				compile_time_ms=(
					0.0 if settings.omit_timing else round(elapsed, 3)
				),
				cost_layer_depth=depth(result.cost_layer),
				connectivity_violations=len(
					check_connectivity(result.circuit, cmap)
				),
				quadratization_ok=quadratization_ok,
			)
		)

	return outcome


def _failure(
	seed: int,
	num_vars: int,
	strategy: Strategy,
	error: QubochainError,
) -> InstanceFailure:
	logger.warning(
		f'[BENCH] N={num_vars} seed={seed} '
		f'{strategy.value}: {error}',
		extra=stage('bench'),
	)
	return InstanceFailure(
		seed=seed,
		N=num_vars,
		strategy=strategy.value,
		error=type(error).__name__,
		message=error.message,
	)


def control_cost_depth(
	num_vars: int,
	device: str,
) -> int:
	"""Chain cost-layer depth of x1 x2 ... xN."""
	problem = quadratize_chain(product_instance(num_vars))
	result = compile_qaoa(
		problem,
		resolve_device(device),
		BENCH_PARAMS,
		Strategy.CHAIN,
	)
	return depth(result.cost_layer)


def _tasks(settings: BenchSettings) -> list[InstanceTask]:
	return [
		InstanceTask(settings, n, s)
		for n in settings.sizes
		for s in range(settings.samples)
	]


def _outcomes(
	settings: BenchSettings,
	tasks: list[InstanceTask],
) -> Iterator[InstanceOutcome]:
	if settings.workers > 1:
		with ProcessPoolExecutor(settings.workers) as pool:
			yield from pool.map(run_instance, tasks)
	else:
		yield from map(run_instance, tasks)


def run_benchmark(settings: BenchSettings) -> BenchResult:
	"""
	Run every (N, sample) instance of `settings`.

	Records are sorted by (N, seed, strategy) so the
	output does not depend on worker scheduling.
	"""
	tasks = _tasks(settings)
	records: list[BenchRecord] = []
	failures: list[InstanceFailure] = []

	logger.info(
		f'[BENCH] {len(tasks)} instances on {settings.device}, '
		f'{settings.workers} worker(s)',
		extra=stage('bench'),
	)

	progress_bar = tqdm(
		total=len(tasks),
		unit='instance',
		dynamic_ncols=True,
		colour='blue',
	)
	try:
		with logging_redirect_tqdm():
			for outcome in _outcomes(settings, tasks):
				records.extend(outcome.records)
				failures.extend(outcome.failures)
				progress_bar.update(1)
	finally:
		progress_bar.close()

	records.sort(key=lambda r: (r.N, r.seed, r.strategy))

	controls: dict[int, int] = {}
	for n in settings.sizes:
		try:
			controls[n] = control_cost_depth(n, settings.device)
		except QubochainError as e:
			failures.append(_failure(0, n, Strategy.CHAIN, e))
	failures.sort(key=lambda f: (f.N, f.seed, f.strategy))

	summary = summarize(records, settings, failures, controls)
	logger.info(
		f'[BENCH] {len(records)} records, '
		f'{len(failures)} failure(s)',
		extra=stage('bench'),
	)
	return BenchResult(records=records, summary=summary)


def records_frame(records: list[BenchRecord]) -> pd.DataFrame:
	frame = pd.DataFrame(
		[r.model_dump() for r in records],
		columns=list(BenchRecord.model_fields),
	)
	return frame


def summarize(
	records: list[BenchRecord],
	settings: BenchSettings,
	failures: list[InstanceFailure] | None = None,
	controls: dict[int, int] | None = None,
) -> BenchSummary:
	"""Means per (N, strategy) and the chain depth reduction."""
	frame = records_frame(records)
	summary = BenchSummary(
		settings={
			k: str(v) for k, v in asdict(settings).items()
		},
		failures=failures or [],
		control_cost_depth=controls or {},
	)
	if frame.empty:
		return summary

	grouped = frame.groupby(['N', 'strategy'], sort=True)
	for (n, strategy), group in grouped:
		summary.groups.append(
			GroupSummary(
				N=int(n),
				strategy=str(strategy),
				samples=len(group),
				mean_depth=float(group['depth'].mean()),
				mean_width=float(group['width'].mean()),
				mean_two_qubit_count=float(
					group['two_qubit_count'].mean()
				),
				mean_swap_count=float(group['swap_count'].mean()),
				mean_aux_count=float(group['aux_count'].mean()),
			)
		)

	depths = frame.pivot_table(
		index=['N', 'seed'],
		columns='strategy',
		values='depth',
	)
	if {'chain', 'baseline'} <= set(depths.columns):
		paired = depths.dropna(subset=['chain', 'baseline'])
		paired = paired[paired['baseline'] > 0]
		reduction = 1.0 - paired['chain'] / paired['baseline']
		by_size = reduction.groupby(level='N').mean()
		summary.depth_reduction = {
			int(n): float(v) for n, v in by_size.items()
		}
		if len(reduction):
			summary.mean_depth_reduction = float(reduction.mean())

	summary.connectivity_violations = int(
		frame['connectivity_violations'].sum()
	)
	summary.quadratization_failures = int(
		(frame['quadratization_ok'] == False).sum()  # noqa: E712
	)
	return summary


def records_to_csv(
	records: list[BenchRecord],
	settings: BenchSettings,
) -> str:
	"""CSV text: two `#` header lines, then the records."""
	buffer = io.StringIO()
	records_frame(records).to_csv(
		buffer,
		columns=CSV_COLUMNS,
		index=False,
		lineterminator='\n',
	)
	return '\n'.join(settings.header_lines()) + '\n' + (
		buffer.getvalue()
	)


def write_csv(
	records: list[BenchRecord],
	settings: BenchSettings,
	path: Path,
) -> None:
	write_file(path, records_to_csv(records, settings))
	logger.info(
		f'[BENCH] Wrote {len(records)} records to {path}',
		extra=stage('bench'),
	)
