"""
This module contains the gate-level intermediate
representation. A circuit tracks the logical to
physical layout: every SWAP appended through the
circuit updates `final_layout`.

Angle convention: RZZ(t) = exp(-i t/2 Z(x)Z),
RZ(t) = exp(-i t/2 Z), RX(t) = exp(-i t/2 X).
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from qubochain.exceptions.circuit import (
	CircuitError,
	GateArityError,
)
from qubochain.pubo.variables import VarId

Layout = dict[VarId, int]


class GateKind(str, Enum):
	H = 'h'
	RZ = 'rz'
	RX = 'rx'
	RZZ = 'rzz'
	SWAP = 'swap'
	CZ = 'cz'
	SX = 'sx'
	X = 'x'
	BARRIER = 'barrier'


ONE_QUBIT = {
	GateKind.H,
	GateKind.RZ,
	GateKind.RX,
	GateKind.SX,
	GateKind.X,
}
TWO_QUBIT = {GateKind.RZZ, GateKind.SWAP, GateKind.CZ}
PARAMETRIC = {GateKind.RZ, GateKind.RX, GateKind.RZZ}


@dataclass(frozen=True)
class Gate:
	kind: GateKind
	qubits: tuple[int, ...]
	param: float | None = None

	def __post_init__(self) -> None:
		label = self.kind.value
		arity = len(self.qubits)

		if self.kind in ONE_QUBIT and arity != 1:
			raise GateArityError(
				f'{label} acts on one qubit, got {arity}',
				gate=label,
			)
		if self.kind in TWO_QUBIT and arity != 2:
			raise GateArityError(
				f'{label} acts on two qubits, got {arity}',
				gate=label,
			)
		if self.kind is GateKind.BARRIER and arity == 0:
			raise GateArityError(
				'Barrier needs at least one qubit',
				gate=label,
			)
		if len(set(self.qubits)) != arity:
			raise GateArityError(
				f'{label} repeats a qubit operand',
				gate=label,
			)
		if (self.kind in PARAMETRIC) != (self.param is not None):
			raise GateArityError(
				f'{label} parameter mismatch',
				gate=label,
			)

	@property
	def is_two_qubit(self) -> bool:
		return self.kind in TWO_QUBIT

	def __str__(self) -> str:
		param = '' if self.param is None else f'({self.param:g})'
		return f'{self.kind.value}{param} {list(self.qubits)}'


@dataclass
class Circuit:
	"""
	Ordered gate list over physical qubits.

	`initial_layout` places each variable before the
	first gate; `final_layout` is that layout permuted
	by every SWAP appended so far.
	"""

	num_qubits: int
	initial_layout: Layout = field(default_factory=dict)
	gates: list[Gate] = field(default_factory=list)
	final_layout: Layout = field(default_factory=dict)

	def __post_init__(self) -> None:
		self.initial_layout = dict(self.initial_layout)
		for q in self.initial_layout.values():
			self._check_qubit(q)
		if len(set(self.initial_layout.values())) != len(
			self.initial_layout
		):
			raise CircuitError(
				'Two variables share a physical qubit'
			)

		gates, self.gates = self.gates, []
		if not self.final_layout:
			self.final_layout = dict(self.initial_layout)
			for gate in gates:
				self.append(gate)
		else:
			self.final_layout = dict(self.final_layout)
			for gate in gates:
				self._check_gate(gate)
				self.gates.append(gate)

	def _check_qubit(self, q: int) -> None:
		if not 0 <= q < self.num_qubits:
			raise CircuitError(
				f'Qubit {q} outside a {self.num_qubits}-qubit '
				'circuit'
			)

	def _check_gate(self, gate: Gate) -> None:
		for q in gate.qubits:
			self._check_qubit(q)

	# --- Building ---

	def append(self, gate: Gate) -> None:
		self._check_gate(gate)
		self.gates.append(gate)
		if gate.kind is GateKind.SWAP:
			self._permute(*gate.qubits)

	def extend(self, gates: Iterable[Gate]) -> None:
		for gate in gates:
			self.append(gate)

	def _permute(self, a: int, b: int) -> None:
		for v, q in self.final_layout.items():
			if q == a:
				self.final_layout[v] = b
			elif q == b:
				self.final_layout[v] = a

	def h(self, q: int) -> None:
		self.append(Gate(GateKind.H, (q,)))

	def x(self, q: int) -> None:
		self.append(Gate(GateKind.X, (q,)))

	def sx(self, q: int) -> None:
		self.append(Gate(GateKind.SX, (q,)))

	def rz(self, q: int, theta: float) -> None:
		self.append(Gate(GateKind.RZ, (q,), theta))

	def rx(self, q: int, theta: float) -> None:
		self.append(Gate(GateKind.RX, (q,), theta))

	def rzz(self, a: int, b: int, theta: float) -> None:
		self.append(Gate(GateKind.RZZ, (a, b), theta))

	def cz(self, a: int, b: int) -> None:
		self.append(Gate(GateKind.CZ, (a, b)))

	def swap(self, a: int, b: int) -> None:
		self.append(Gate(GateKind.SWAP, (a, b)))

	def barrier(self, qubits: Iterable[int]) -> None:
		ordered = tuple(sorted(set(qubits)))
		if ordered:
			self.append(Gate(GateKind.BARRIER, ordered))

	# --- Inspection ---

	def occupant(self, q: int) -> VarId | None:
		"""Variable currently held by physical qubit `q`."""
		for v, held in self.final_layout.items():
			if held == q:
				return v
		return None

	def occupied_qubits(self) -> list[int]:
		return sorted(self.final_layout.values())

	def count(self, kind: GateKind) -> int:
		return sum(1 for g in self.gates if g.kind is kind)

	def __len__(self) -> int:
		return len(self.gates)


def permuted_layout(
	layout: Mapping[VarId, int],
	gates: Iterable[Gate],
) -> Layout:
	"""
	Apply the SWAP gates of `gates` to `layout`.
	Other gates leave the layout unchanged.
	"""
	position = dict(layout)
	for gate in gates:
		if gate.kind is not GateKind.SWAP:
			continue
		a, b = gate.qubits
		for v, q in position.items():
			if q == a:
				position[v] = b
			elif q == b:
				position[v] = a
	return position
