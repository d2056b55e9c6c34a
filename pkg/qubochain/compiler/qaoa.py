"""
This module contains the QAOA compiler: initial
layout, repeated cost and mixer layers, and the
native SWAP decomposition.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from pydantic import (
	BaseModel,
	ConfigDict,
	Field,
	ValidationError,
	model_validator,
)

from qubochain.circuit.decompose import decompose_swap
from qubochain.circuit.ir import Circuit, GateKind, Layout
from qubochain.circuit.metrics import Metrics, measure
from qubochain.compiler.layout import map_chains_to_path
from qubochain.compiler.routing import (
	Coupling,
	route_extraneous,
)
from qubochain.compiler.scheduler import (
	CostLayerScheduler,
	build_segments,
	emit_fields,
	linear_fields,
)
from qubochain.device.paths import HardwarePath, longest_nn_path
from qubochain.device.topology import CouplingMap
from qubochain.exceptions.compiler import (
	CapacityExceededError,
	InvalidParamsError,
	UnsplitChainsError,
)
from qubochain.graph.chains import (
	ChainRelation,
	TriangleChain,
	classify_chains,
	classify_edges,
	extract_chains,
	relation_labels,
)
from qubochain.graph.interaction import (
	InteractionGraph,
	build_interaction_graph,
)
from qubochain.pubo.polynomial import Pair
from qubochain.quadratizer.problem import QuadratizedProblem
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)


class Strategy(str, Enum):
	CHAIN = 'chain'
	BASELINE = 'baseline'


class QaoaParams(BaseModel):
	"""Angles of a depth-`reps` QAOA circuit."""

	model_config = ConfigDict(extra='forbid')

	reps: int = Field(1, ge=1, description='Repetitions')
	gammas: list[float] = Field(
		...,
		description='Cost angles, one per repetition',
	)
	betas: list[float] = Field(
		...,
		description='Mixer angles, one per repetition',
	)

	@model_validator(mode='after')
	def _check_lengths(self) -> 'QaoaParams':
		if len(self.gammas) != self.reps or len(self.betas) != (
			self.reps
		):
			raise ValueError(
				f'Expected {self.reps} gammas and betas, got '
				f'{len(self.gammas)} and {len(self.betas)}'
			)
		return self

	@classmethod
	def build(
		cls,
		gammas: Sequence[float],
		betas: Sequence[float],
		reps: int | None = None,
	) -> 'QaoaParams':
		"""
		Validate the angles. A single gamma and beta are
		repeated `reps` times.

		Raises:
			InvalidParamsError: lengths do not match.
		"""
		reps = reps or len(gammas)
		if len(gammas) == 1 and len(betas) == 1:
			gammas, betas = list(gammas) * reps, list(betas) * reps
		try:
			return cls(
				reps=reps,
				gammas=list(gammas),
				betas=list(betas),
			)
		except ValidationError as e:
			raise InvalidParamsError(
				'Invalid QAOA parameters',
				stage='params',
				detail=str(e.errors()[0]['msg']),
			) from e


@dataclass
class CompilationResult:
	"""
	Output of `compile_qaoa`.

	`circuit` is native (SWAPs decomposed) while
	`routed` keeps the SWAP gates. `cost_layer` is the
	first-repetition cost layer alone, native.
	`layout_history` holds the initial layout followed
	by the layout after each repetition.
	"""

	strategy: Strategy
	circuit: Circuit
	routed: Circuit
	metrics: Metrics
	cost_layer: Circuit
	path: HardwarePath
	layout_history: list[Layout] = field(default_factory=list)
	chains: list[TriangleChain] = field(default_factory=list)

	@property
	def initial_layout(self) -> Layout:
		return self.circuit.initial_layout

	@property
	def final_layout(self) -> Layout:
		return self.circuit.final_layout


def mixer_layer(
	layout: Layout,
	beta: float,
	*,
	num_qubits: int,
) -> Circuit:
	"""RX(2 beta) on every qubit holding a variable."""
	circuit = Circuit(num_qubits=num_qubits, initial_layout=layout)
	for q in sorted(layout.values()):
		circuit.rx(q, 2.0 * beta)
	return circuit


def _extraneous_couplings(
	graph: InteractionGraph,
	pairs: Iterable[Pair],
) -> list[Coupling]:
	return [(u, v, graph.weight(u, v)) for u, v in sorted(pairs)]


def _check_capacity(count: int, path: HardwarePath) -> None:
	if count > len(path):
		raise CapacityExceededError(
			f'{count} variables do not fit a hardware path '
			f'of {len(path)} qubits',
			required=count,
			available=len(path),
		)


def _compile_chain(
	problem: QuadratizedProblem,
	cmap: CouplingMap,
	params: QaoaParams,
) -> CompilationResult:
	graph = build_interaction_graph(problem.qubo)
	chains = extract_chains(graph, problem.substitutions)
	relations = classify_chains(chains)
	if any(
		r is not ChainRelation.INDEPENDENT
		for r in relations.values()
	):
		raise UnsplitChainsError(
			'Chains share vertices, split them first',
			relations=relation_labels(relations),
		)

	edges = classify_edges(graph, chains)
	path = longest_nn_path(cmap)
	chained = {v for c in chains for v in c.path}
	loose = [v for v in graph.vertices if v not in chained]
	layout = map_chains_to_path(chains, path, loose=loose)

	scheduler = CostLayerScheduler(
		problem.qubo,
		build_segments(chains, layout),
		skip=edges.extraneous_edges,
	)
	extraneous = _extraneous_couplings(
		graph,
		edges.extraneous_edges,
	)

	cost = Circuit(num_qubits=cmap.num_qubits, initial_layout=layout)
	scheduler.emit(cost, params.gammas[0])
	route_extraneous(cost, extraneous, cmap, params.gammas[0])

	circuit = Circuit(
		num_qubits=cmap.num_qubits,
		initial_layout=layout,
	)
	for q in sorted(layout.values()):
		circuit.h(q)

	history = [dict(layout)]
	routing_swaps: list[tuple[int, ...]] = []
	permuted = False

	for k, (gamma, beta) in enumerate(
		zip(params.gammas, params.betas, strict=True)
	):
		for qubits in reversed(routing_swaps):
			circuit.swap(*qubits)

		unwind = permuted
		circuit.barrier(circuit.occupied_qubits())
		scheduler.emit(circuit, gamma, unwind=unwind)
		permuted = scheduler.permutes and not unwind

		start = len(circuit.gates)
		route_extraneous(circuit, extraneous, cmap, gamma)
		routing_swaps = [
			g.qubits
			for g in circuit.gates[start:]
			if g.kind is GateKind.SWAP
		]

		circuit.extend(
			mixer_layer(
				circuit.final_layout,
				beta,
				num_qubits=cmap.num_qubits,
			).gates
		)
		history.append(dict(circuit.final_layout))
		logger.debug(
			f'[CHAIN] Repetition {k + 1}: '
			f'{len(routing_swaps)} routing SWAPs'
			+ (', unwound step 4' if unwind else ''),
			extra=stage('compile'),
		)

	return CompilationResult(
		strategy=Strategy.CHAIN,
		circuit=circuit,
		routed=circuit,
		metrics=measure(circuit),
		cost_layer=cost,
		path=path,
		layout_history=history,
		chains=chains,
	)


def _compile_baseline(
	problem: QuadratizedProblem,
	cmap: CouplingMap,
	params: QaoaParams,
) -> CompilationResult:
	graph = build_interaction_graph(problem.qubo)
	path = longest_nn_path(cmap)
	_check_capacity(len(graph.vertices), path)
	layout = {v: path[i] for i, v in enumerate(graph.vertices)}

	couplings = _extraneous_couplings(graph, graph.edges)
	fields = linear_fields(problem.qubo)

	cost = Circuit(num_qubits=cmap.num_qubits, initial_layout=layout)
	route_extraneous(cost, couplings, cmap, params.gammas[0])
	emit_fields(cost, fields, params.gammas[0])

	circuit = Circuit(
		num_qubits=cmap.num_qubits,
		initial_layout=layout,
	)
	for q in sorted(layout.values()):
		circuit.h(q)
	history = [dict(layout)]

	for gamma, beta in zip(params.gammas, params.betas, strict=True):
		route_extraneous(circuit, couplings, cmap, gamma)
		emit_fields(circuit, fields, gamma)
		circuit.extend(
			mixer_layer(
				circuit.final_layout,
				beta,
				num_qubits=cmap.num_qubits,
			).gates
		)
		history.append(dict(circuit.final_layout))

	return CompilationResult(
		strategy=Strategy.BASELINE,
		circuit=circuit,
		routed=circuit,
		metrics=measure(circuit),
		cost_layer=cost,
		path=path,
		layout_history=history,
	)


def compile_qaoa(
	problem: QuadratizedProblem,
	cmap: CouplingMap,
	params: QaoaParams,
	strategy: Strategy = Strategy.CHAIN,
) -> CompilationResult:
	"""
	Compile a QAOA circuit for `problem` on `cmap`.

	The chain strategy places independent chains along
	the longest nearest-neighbour path and schedules
	chain couplings in constant depth; the remaining
	couplings are routed with SWAPs. The baseline
	places variables in canonical order and routes
	every coupling.

	Raises:
		UnsplitChainsError: chain strategy on chains that
			still share vertices.
		CapacityExceededError: the path is too short.
		RoutingError: a coupling spans two components.
	"""
	strategy = Strategy(strategy)
	if strategy is Strategy.CHAIN:
		result = _compile_chain(problem, cmap, params)
	else:
		result = _compile_baseline(problem, cmap, params)

	routed = result.circuit
	result.routed = routed
	result.circuit = decompose_swap(routed)
	result.cost_layer = decompose_swap(result.cost_layer)
	result.metrics = measure(
		result.circuit,
		swap_count=routed.count(GateKind.SWAP),
		energy_offset=problem.qubo.constant_term,
	)

	logger.info(
		f'[{strategy.value.upper()}] depth {result.metrics.depth}, '
		f'width {result.metrics.width}, '
		f'{result.metrics.two_qubit_count} two-qubit gates, '
		f'{result.metrics.swap_count} SWAPs',
		extra=stage('compile'),
	)
	return result
