"""
This module contains the constant-depth cost layer for
variables laid out chain by chain on a line of qubits.

With v_k the k-th vertex of a chain path, the layer
runs five steps separated by barriers:

1. RZZ on (v_2i, v_2i+1)
2. RZZ on (v_2i-1, v_2i)
3. (v_4i, v_4i+2): SWAP v_4i inward, RZZ, SWAP back
4. (v_4i-2, v_4i): SWAP v_4i-2 inward, RZZ, no swap back
5. RZ on every variable at its current qubit

Indices are local to each chain and clipped to its
length. Couplings use RZZ(2 c gamma) and fields
RZ(2 b gamma) with b_v = -2 c_v - sum_j c_vj. After
native decomposition the layer has depth
1 + 1 + 13 + 7 + 1 = 23 whatever the chain length.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from qubochain.circuit.ir import Circuit, Layout
from qubochain.device.paths import HardwarePath
from qubochain.exceptions.compiler import ChainLayoutError
from qubochain.graph.chains import TriangleChain
from qubochain.pubo.polynomial import Pair, Polynomial, pair
from qubochain.pubo.variables import VarId
from qubochain.utils.logging import stage

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainSegment:
	"""A chain path and the qubits it starts on."""

	variables: tuple[VarId, ...]
	qubits: tuple[int, ...]

	def __len__(self) -> int:
		return len(self.variables)


@dataclass(frozen=True)
class ScheduledPair:
	segment: ChainSegment
	low: int
	high: int
	coef: float

	@property
	def variables(self) -> Pair:
		return pair(
			self.segment.variables[self.low],
			self.segment.variables[self.high],
		)


def linear_fields(qubo: Polynomial) -> dict[VarId, float]:
	"""b_v = -2 c_v - sum_j c_vj for every variable."""
	fields = {
		v: -2.0 * c for v, c in qubo.linear_terms().items()
	}
	for (u, v), c in qubo.quadratic_terms().items():
		fields[u] = fields.get(u, 0.0) - c
		fields[v] = fields.get(v, 0.0) - c
	return dict(sorted(fields.items()))


def build_segments(
	chains: Sequence[TriangleChain],
	layout: Layout,
) -> list[ChainSegment]:
	return [
		ChainSegment(
			variables=chain.path,
			qubits=tuple(layout[v] for v in chain.path),
		)
		for chain in sorted(chains, key=lambda c: c.chain_id)
	]


def emit_fields(
	circuit: Circuit,
	fields: dict[VarId, float],
	gamma: float,
) -> None:
	"""RZ(2 b gamma) on the current qubit of each variable."""
	for v, b in fields.items():
		if b != 0.0 and v in circuit.final_layout:
			circuit.rz(circuit.final_layout[v], 2.0 * b * gamma)


class CostLayerScheduler:
	"""
	Emits the five-step cost layer for a fixed set of
	chain segments. Couplings listed in `skip` are
	left to the extraneous router.
	"""

	def __init__(
		self,
		qubo: Polynomial,
		segments: Sequence[ChainSegment],
		*,
		skip: Iterable[Pair] = (),
	) -> None:
		skipped = {pair(*p) for p in skip}
		self.couplings = {
			p: c
			for p, c in qubo.quadratic_terms().items()
			if p not in skipped
		}
		self.fields = linear_fields(qubo)
		self.segments = list(segments)

		self.step_one = self._pairs(0, 2, 1)
		self.step_two = self._pairs(1, 2, 1)
		self.step_three = self._pairs(0, 4, 2)
		self.step_four = self._pairs(2, 4, 2)

	def _pairs(
		self,
		first: int,
		stride: int,
		gap: int,
	) -> list[ScheduledPair]:
		found: list[ScheduledPair] = []
		for segment in self.segments:
			for low in range(first, len(segment) - gap, stride):
				u = segment.variables[low]
				v = segment.variables[low + gap]
				coef = self.couplings.get(pair(u, v), 0.0)
				if coef != 0.0:
					found.append(
						ScheduledPair(segment, low, low + gap, coef)
					)
		return found

	@property
	def permutes(self) -> bool:
		"""Whether a forward layer ends permuted."""
		return bool(self.step_four)

	def emit(
		self,
		circuit: Circuit,
		gamma: float,
		*,
		unwind: bool = False,
	) -> None:
		"""
		Append one cost layer to `circuit`.

		With `unwind` the circuit is expected in the
		layout left by a previous forward layer: step 4
		runs first in reverse (RZZ, then SWAP back),
		which restores the chain layout, and is not
		repeated after step 3.

		Raises:
			ChainLayoutError: a coupling outside `skip`
				is not reachable by any step.
		"""
		occupied = circuit.occupied_qubits()
		covered: set[Pair] = set()

		def angle(item: ScheduledPair) -> float:
			covered.add(item.variables)
			return 2.0 * item.coef * gamma

		def qubit(item: ScheduledPair, index: int) -> int:
			return item.segment.qubits[index]

		if unwind:
			for item in self.step_four:
				circuit.rzz(
					qubit(item, item.low + 1),
					qubit(item, item.high),
					angle(item),
				)
			for item in self.step_four:
				circuit.swap(
					qubit(item, item.low),
					qubit(item, item.low + 1),
				)
			circuit.barrier(occupied)

		for step in (self.step_one, self.step_two):
			for item in step:
				circuit.rzz(
					qubit(item, item.low),
					qubit(item, item.high),
					angle(item),
				)
			circuit.barrier(occupied)

		for item in self.step_three:
			circuit.swap(
				qubit(item, item.low),
				qubit(item, item.low + 1),
			)
		for item in self.step_three:
			circuit.rzz(
				qubit(item, item.low + 1),
				qubit(item, item.high),
				angle(item),
			)
		for item in self.step_three:
			circuit.swap(
				qubit(item, item.low),
				qubit(item, item.low + 1),
			)
		circuit.barrier(occupied)

		if not unwind:
			for item in self.step_four:
				circuit.swap(
					qubit(item, item.low),
					qubit(item, item.low + 1),
				)
			for item in self.step_four:
				circuit.rzz(
					qubit(item, item.low + 1),
					qubit(item, item.high),
					angle(item),
				)
			circuit.barrier(occupied)

		emit_fields(circuit, self.fields, gamma)

		missing = sorted(set(self.couplings) - covered)
		if missing:
			u, v = missing[0]
			raise ChainLayoutError(
				f'{len(missing)} coupling(s) are not chain '
				'edges at path distance <= 2',
				pair=f'{u}*{v}',
				distance=self._distance(u, v),
			)

		logger.debug(
			f'Cost layer: {len(covered)} couplings, '
			f'{len(self.step_three)} step-3 and '
			f'{len(self.step_four)} step-4 pairs'
			+ (' (unwound)' if unwind else ''),
			extra=stage('schedule'),
		)

	def _distance(self, u: VarId, v: VarId) -> int | None:
		for segment in self.segments:
			if u in segment.variables and v in segment.variables:
				return abs(
					segment.variables.index(u)
					- segment.variables.index(v)
				)
		return None


def schedule_cost_layer(
	qubo: Polynomial,
	layout: Layout,
	path: HardwarePath,
	gamma: float,
	*,
	chains: Sequence[TriangleChain] | None = None,
	skip: Iterable[Pair] = (),
	num_qubits: int | None = None,
) -> Circuit:
	"""
	One cost layer as a standalone circuit.

	Args:
		qubo: The QUBO.
		layout: Initial placement on `path`.
		path: Hardware path the chains were laid on.
		gamma: Cost angle.
		chains: Chains of the layout. Without them every
			placed variable is treated as one chain in
			path order.
		skip: Extraneous couplings, not scheduled here.
		num_qubits: Circuit width, by default just
			enough for the path.
	"""
	if chains is None:
		position = {q: i for i, q in enumerate(path.qubits)}
		ordered = tuple(
			sorted(layout, key=lambda v: position[layout[v]])
		)
		segments = [
			ChainSegment(ordered, tuple(layout[v] for v in ordered))
		]
	else:
		segments = build_segments(chains, layout)

	circuit = Circuit(
		num_qubits=num_qubits or max(path.qubits) + 1,
		initial_layout=layout,
	)
	CostLayerScheduler(qubo, segments, skip=skip).emit(
		circuit,
		gamma,
	)
	return circuit
